"""gradfam <command> --config PATH [--window N] [--mult-window S] [--out PATH] [--precision P]

Exit status is 0 on success or PASS, 1 on FAIL, 2 on errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from gradfam import asymptotics, reports
from gradfam.asymptotics import growth_report, multiplicity_estimate, prop42_check, volume_report, volume_vs_multiplicity
from gradfam.config import COMMANDS, ConfigError, RunConfig, parse_config
from gradfam.families import FamilyWindowError, check_axioms

log = logging.getLogger("gradfam")

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gradfam", description="Length growth of graded families of monomial ideals.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", required=True, help="family config file (key = value lines)")
    parser.add_argument("--window", type=int, help="largest n to evaluate (overrides the config)")
    parser.add_argument("--mult-window", type=int, dest="mult_window", help="largest power s for multiplicities")
    parser.add_argument("--r", type=int, help="power of m_A for check-prop42")
    parser.add_argument("--out", help="CSV output path; stdout when omitted")
    parser.add_argument("--precision", type=int, help="decimal places in ratio_decimal (default 6)")
    parser.add_argument("--figure", help="also render a figure to this path (.png, .pdf or .svg)")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def _emit(cfg: RunConfig, text: str, verdict: str | None) -> None:
    if cfg.out:
        Path(cfg.out).write_text(text)
        if verdict is None:
            print(f"wrote {cfg.out}")
    elif verdict is None:
        sys.stdout.write(text)
    if verdict is not None:
        print(verdict)


def _growth(cfg, family, figure):
    window = cfg.window
    if family.kind == "table" and window >= family.window:
        # D(W) needs I_(W+1)
        window = family.window - 1
        log.warning("table holds I_1..I_%d; growth report limited to n <= %d", family.window, window)
    report = growth_report(family, window)
    if figure:
        from gradfam.plotting import plot_growth

        plot_growth(report, figure)
    return report


def run(cfg: RunConfig, figure: str | None = None) -> int:
    family = cfg.family.build(cfg.window)
    command = cfg.command
    P = cfg.precision

    if command in ("lengths", "diffs"):
        report = _growth(cfg, family, figure)
        text = reports.growth_csv(report, P)
        if command == "lengths":
            text = reports.lengths_csv(report)
        _emit(cfg, text, None)
        return EXIT_OK

    if command == "check-bound":
        report = _growth(cfg, family, figure)
        if report.d == 0:
            n_max = max(report.ratios, key=lambda n: abs(report.ratios[n]))
            detail = (f"d=0 max|D(n)|*n={abs(report.ratios[n_max])} at n={n_max} "
                      f"(first half max {report.head_abs})")
        else:
            detail = f"gamma_window={report.gamma_window} tail_gamma={report.tail_gamma}"
        if report.negative_diffs:
            detail += f" negative_diffs={','.join(map(str, report.negative_diffs))}"
        _emit(cfg, reports.growth_csv(report, P), ("PASS " if report.passed else "FAIL ") + detail)
        return EXIT_OK if report.passed else EXIT_FAIL

    if command == "volume":
        report = volume_report(family, cfg.window)
        if figure:
            from gradfam.plotting import plot_volume

            plot_volume(report, figure)
        _emit(cfg, reports.volume_csv(report, P), None)
        log.info("last sample %s, tail spread %s", reports.to_decimal(report.last, P),
                 reports.to_decimal(report.tail_spread, P))
        return EXIT_OK

    if command == "multiplicity":
        if cfg.family.kind == "power":
            estimate = multiplicity_estimate(cfg.family.ideals[0], cfg.mult_window)
            if figure:
                from gradfam.plotting import plot_multiplicity

                plot_multiplicity(estimate, figure)
            _emit(cfg, reports.multiplicity_csv(estimate, P), None)
            return EXIT_OK
        comparison = volume_vs_multiplicity(family, cfg.window, cfg.mult_window)
        if figure:
            from gradfam.plotting import plot_volume

            plot_volume(comparison.volume, figure)
        _emit(cfg, reports.comparison_csv(comparison, P),
              f"volume_tail={reports.to_decimal(comparison.volume_tail, P)} "
              f"multiplicity_tail={reports.to_decimal(comparison.multiplicity_tail, P)} "
              f"difference={reports.to_decimal(comparison.difference, P)}")
        return EXIT_OK

    if command == "check-axioms":
        report = check_axioms(family, cfg.window)
        parts = [f"graded={str(report.graded).lower()}"]
        if report.graded_witness:
            parts.append("(m,n)=({},{})".format(*report.graded_witness))
        parts.append(f"filtration={str(report.filtration).lower()}")
        if report.filtration_witness is not None:
            parts.append(f"(n)={report.filtration_witness}")
        _emit(cfg, reports.axioms_csv(report), ("PASS " if report.passed else "FAIL ") + " ".join(parts))
        return EXIT_OK if report.passed else EXIT_FAIL

    if command == "check-prop42":
        if not cfg.family.ideals:
            raise ConfigError("check-prop42 needs an ideal on the gens line")
        report = prop42_check(cfg.family.ideals[0], cfg.r)
        verdict = ("PASS " if report.passed else "FAIL ") + f"lhs={report.lhs} rhs={report.rhs} N={report.N}"
        _emit(cfg, reports.prop42_csv(report), verdict)
        return EXIT_OK if report.passed else EXIT_FAIL

    raise ConfigError(f"no command given; expected one of {', '.join(COMMANDS)}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        cfg = parse_config(Path(args.config).read_text())
        cfg = cfg.with_overrides(command=args.command, window=args.window, mult_window=args.mult_window,
                                 r=args.r, out=args.out, precision=args.precision)
        return run(cfg, figure=args.figure)
    except asymptotics.InfiniteColengthError as exc:
        print(f"error: infinite colength at n={exc.n}: {exc}", file=sys.stderr)
    except (ConfigError, FamilyWindowError, ValueError, OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
