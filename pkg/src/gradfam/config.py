"""Plain-text run configs: ``key = value`` lines, ``#`` comments.

Family keys: kind, dim, coeff_len, scale, t, window, gens.  Table
families separate their ideals with ``|`` on the gens line; ``;``
separates generators inside one ideal.  Optional run keys: command,
mult_window, r, precision, out.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from gradfam.families import KINDS, GradedFamily, Scale, oscillating_family, power_family, scaled_power_family, table_family
from gradfam.ideals import ChainRing, MonomialIdeal, format_ideal, parse_ideal

COMMANDS = ("lengths", "diffs", "volume", "multiplicity", "check-bound", "check-axioms", "check-prop42")

FAMILY_KEYS = ("kind", "dim", "coeff_len", "scale", "t", "window", "gens")
RUN_KEYS = ("command", "mult_window", "r", "precision", "out")

REQUIRED = {
    "power": ("dim", "gens", "window"),
    "scaled-power": ("scale", "dim", "window"),
    "oscillating": ("t", "window"),
    "table": ("gens",),
}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyConfig:
    kind: str
    dim: int = 1
    coeff_len: int = 1
    scale: Scale | None = None
    t: int | None = None
    ideals: tuple[MonomialIdeal, ...] = ()

    def build(self, window: int) -> GradedFamily:
        ring = ChainRing(self.coeff_len)
        if self.kind == "power":
            return power_family(self.ideals[0], window=window)
        if self.kind == "scaled-power":
            return scaled_power_family(self.scale, self.dim, ring=ring, window=window)
        if self.kind == "oscillating":
            return oscillating_family(self.t, window)
        return table_family(self.ideals)


@dataclass(frozen=True)
class RunConfig:
    family: FamilyConfig
    window: int
    command: str | None = None
    mult_window: int = 20
    r: int = 1
    precision: int = 6
    out: str | None = None

    def __post_init__(self):
        if self.window < 1:
            raise ConfigError(f"window must be >= 1, got {self.window}")
        if not 1 <= self.precision <= 50:
            raise ConfigError(f"precision must lie in [1, 50], got {self.precision}")
        if self.mult_window < 1:
            raise ConfigError("mult_window must be >= 1")
        if self.r < 1:
            raise ConfigError("r must be >= 1")
        if self.command is not None and self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")

    def with_overrides(self, **kw) -> "RunConfig":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})


def _int(key, value, lineno):
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"line {lineno}: {key} must be an integer, got {value!r}") from None


def parse_config(text: str) -> RunConfig:
    raw: dict[str, tuple[str, int]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        key, eq, value = stripped.partition("=")
        key, value = key.strip(), value.strip()
        if not eq or not key:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {stripped!r}")
        if key not in FAMILY_KEYS and key not in RUN_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in raw:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        raw[key] = (value, lineno)

    if "kind" not in raw:
        raise ConfigError("missing required keys: kind")
    kind, kind_line = raw["kind"]
    if kind not in KINDS:
        raise ConfigError(f"line {kind_line}: unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    missing = [k for k in REQUIRED[kind] if k not in raw]
    if kind != "table" and "window" not in raw and "window" not in missing:
        missing.append("window")
    if missing:
        raise ConfigError(f"missing required keys for kind {kind}: {', '.join(missing)}")

    def get_int(key, default=None):
        if key not in raw:
            return default
        return _int(key, *raw[key])

    coeff_len = get_int("coeff_len", 1)
    if coeff_len < 1:
        raise ConfigError(f"line {raw['coeff_len'][1]}: coeff_len must be >= 1")
    ring = ChainRing(coeff_len)
    dim = get_int("dim", 1)
    if dim < 1:
        raise ConfigError(f"line {raw['dim'][1]}: dim must be >= 1")

    scale = None
    if "scale" in raw:
        value, lineno = raw["scale"]
        try:
            scale = Scale.parse(value)
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: {exc}") from None

    ideals: tuple[MonomialIdeal, ...] = ()
    if "gens" in raw:
        value, lineno = raw["gens"]
        chunks = value.split("|") if kind == "table" else [value]
        try:
            ideals = tuple(parse_ideal(chunk, ring, dim) for chunk in chunks)
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: {exc}") from None

    t = get_int("t")
    if kind == "oscillating" and t < 1:
        raise ConfigError(f"line {raw['t'][1]}: t must be >= 1")
    if kind == "oscillating":
        dim, coeff_len = 1, t + 1
    family = FamilyConfig(kind=kind, dim=dim, coeff_len=coeff_len, scale=scale, t=t, ideals=ideals)
    window = get_int("window", len(ideals) if kind == "table" else None)

    command = raw["command"][0] if "command" in raw else None
    out = raw["out"][0] if "out" in raw else None
    try:
        return RunConfig(
            family=family,
            window=window,
            command=command,
            mult_window=get_int("mult_window", 20),
            r=get_int("r", 1),
            precision=get_int("precision", 6),
            out=out,
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def render_config(cfg: RunConfig) -> str:
    """Text that :func:`parse_config` maps back to ``cfg``."""
    fam = cfg.family
    lines = [f"kind = {fam.kind}"]
    if fam.kind != "oscillating":
        lines += [f"dim = {fam.dim}", f"coeff_len = {fam.coeff_len}"]
    if fam.scale is not None:
        lines.append(f"scale = {fam.scale}")
    if fam.t is not None:
        lines.append(f"t = {fam.t}")
    if fam.ideals:
        lines.append("gens = " + " | ".join(format_ideal(J, sep="; ") for J in fam.ideals))
    lines.append(f"window = {cfg.window}")
    if cfg.command is not None:
        lines.append(f"command = {cfg.command}")
    lines += [f"mult_window = {cfg.mult_window}", f"r = {cfg.r}", f"precision = {cfg.precision}"]
    if cfg.out is not None:
        lines.append(f"out = {cfg.out}")
    return "\n".join(lines) + "\n"
