"""CSV rendering of growth, volume and multiplicity reports."""

from __future__ import annotations

import csv
import io
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from typing import Iterable

from gradfam.asymptotics import ComparisonReport, GrowthReport, MultiplicityEstimate, Prop42Report, VolumeReport
from gradfam.families import AxiomReport

COLUMNS = ("n", "length", "diff", "ratio_num", "ratio_den", "ratio_decimal")


def to_decimal(value: Fraction, precision: int = 6) -> str:
    """Round ``value`` to ``precision`` places after the point, half-even."""
    ctx = Context(prec=max(60, precision + 40))
    exact = ctx.divide(Decimal(value.numerator), Decimal(value.denominator))
    return str(exact.quantize(Decimal(1).scaleb(-precision), rounding=ROUND_HALF_EVEN, context=ctx))


def _rows_to_csv(header: Iterable[str], rows: Iterable[Iterable]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _ratio_cells(value: Fraction | None, precision: int):
    if value is None:
        return ["", "", ""]
    return [value.numerator, value.denominator, to_decimal(value, precision)]


def growth_csv(report: GrowthReport, precision: int = 6) -> str:
    """One row per n = 0..W; the ratio is D(n)/n^(d-1), or D(n)*n when d = 0."""
    rows = []
    for n in range(report.window + 1):
        rows.append([n, report.lengths[n], report.diffs[n], *_ratio_cells(report.ratios.get(n), precision)])
    return _rows_to_csv(COLUMNS, rows)


def volume_csv(report: VolumeReport, precision: int = 6) -> str:
    """One row per sample; the ratio is l(R/I_n) * d! / n^d."""
    lengths = report.lengths
    rows = [[0, lengths[0], lengths[1] - lengths[0] if len(lengths) > 1 else "", "", "", ""]]
    for n, value in report.samples:
        diff = lengths[n + 1] - lengths[n] if n + 1 < len(lengths) else ""
        rows.append([n, lengths[n], diff, *_ratio_cells(value, precision)])
    return _rows_to_csv(COLUMNS, rows)


def multiplicity_csv(estimate: MultiplicityEstimate, precision: int = 6) -> str:
    """n is the power s; length is l(A/q^s); the ratio is the sample e(q) estimate."""
    lengths = estimate.lengths
    rows = [[0, lengths[0], lengths[1] - lengths[0], "", "", ""]]
    for s, value in estimate.samples:
        diff = lengths[s + 1] - lengths[s] if s + 1 < len(lengths) else ""
        rows.append([s, lengths[s], diff, *_ratio_cells(value, precision)])
    return _rows_to_csv(COLUMNS, rows)


def prop42_csv(report: Prop42Report) -> str:
    return _rows_to_csv(("r", "N", "lhs", "rhs", "pass"), [[report.r, report.N, report.lhs, report.rhs, str(report.passed).lower()]])


def axioms_csv(report: AxiomReport) -> str:
    def witness(w):
        if w is None:
            return ""
        return " ".join(str(x) for x in w) if isinstance(w, tuple) else str(w)

    rows = [
        ["graded", str(report.graded).lower(), witness(report.graded_witness)],
        ["filtration", str(report.filtration).lower(), witness(report.filtration_witness)],
    ]
    return _rows_to_csv(("axiom", "holds", "witness"), rows)


def lengths_csv(report: GrowthReport) -> str:
    """Growth schema with the ratio columns left empty."""
    rows = [[n, report.lengths[n], report.diffs[n], "", "", ""] for n in range(report.window + 1)]
    return _rows_to_csv(COLUMNS, rows)


def comparison_csv(report: ComparisonReport, precision: int = 6) -> str:
    """e(I_s) and e(I_s)/s^d per s; the volume side is written by volume_csv."""
    rows = [[s, e, *_ratio_cells(v, precision)]
            for e, (s, v) in zip(report.multiplicities, report.multiplicity_samples)]
    return _rows_to_csv(("s", "multiplicity", "ratio_num", "ratio_den", "ratio_decimal"), rows)
