"""Command-line front end: sweeps, point evaluations, comparisons, fixtures.

Output contract: CSV rows are byte-deterministic for a given config and
tolerance (fixed 12-significant-digit formatting), every run echoes the
resolved physical parameters in a `#` preamble (CSV) or `meta` object
(JSON), and sweep reports also render a figure next to the data file.

Exit status: 0 success, 1 config/usage error, 2 numerical failure,
3 unexpected fixture failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

try:
    import tomllib
except ModuleNotFoundError:  # 3.10
    import tomli as tomllib

from . import __version__
from . import asymptotics as asym
from .constants import (
    EV_TO_RAD_S,
    GOLD_DEBYE_K,
    GOLD_GAMMA_ROOM_EV,
    GOLD_OMEGA_P_EV,
    omega_p_tilde,
)
from .fixtures import run_fixtures, unexpected_failures
from .lifshitz import (
    EngineError,
    LayeredConfig,
    ValidationError,
    free_energy,
    pressure,
)
from .materials import (
    Drude,
    DrudeTail,
    MaterialError,
    OpticalTable,
    Oscillator,
    Plasma,
    PlasmaTail,
    RelaxationLaw,
    Tabulated,
    Vacuum,
    sapphire,
)
from .quadrature import QuadratureError
from .specfun import ZETA3

COMMANDS = ("sweep-thickness", "sweep-temperature", "point", "compare", "fixtures")
APPROACHES = ("drude", "plasma", "both")
MATERIAL_TYPES = ("vacuum", "drude", "plasma", "oscillator", "tabulated")
BUILTIN_MATERIALS = ("gold", "vacuum", "sapphire")
FILM_TYPES = ("drude", "plasma", "tabulated")
NM = 1e-9

SWEEP_COLUMNS = (
    "F_drude_J_m2", "F_plasma_J_m2", "ratio_F",
    "P_drude_Pa", "P_plasma_Pa", "ratio_P",
    "log10_abs_F_plasma", "l_max_drude", "l_max_plasma", "error",
)
THICKNESS_HEADER = ("a_nm",) + SWEEP_COLUMNS
TEMPERATURE_HEADER = ("T_K", "gamma_eV") + SWEEP_COLUMNS
COMPARE_HEADER = ("quantity", "drude", "plasma", "ratio", "oracle", "flag")
FIXTURE_HEADER = ("id", "kind", "model", "expected", "measured", "band",
                  "status", "expected_fail", "note", "error")


class ConfigError(ValueError):
    """Bad configuration file, flag value, or flag combination."""


def _fmt(x: float) -> str:
    """Fixed 12-significant-digit scientific form for computed values."""
    return f"{x:.11e}"


def _fmtg(x: float) -> str:
    """Compact 12-significant-digit form for echoed parameters."""
    return format(float(x), ".12g")


# ---------------------------------------------------------------------------
# Run configuration
# ---------------------------------------------------------------------------

@dataclass
class Grid:
    lo: float
    hi: float
    count: int
    scale: str  # linear | log

    def validate(self, where: str) -> None:
        if not (self.lo < self.hi):
            raise ConfigError(f"{where}: grid min must be < max")
        if self.count < 2:
            raise ConfigError(f"{where}: grid count must be >= 2")
        if self.scale not in ("linear", "log"):
            raise ConfigError(f"{where}: grid scale must be linear or log")
        if self.scale == "log" and self.lo <= 0:
            raise ConfigError(f"{where}: log grid requires min > 0")

    def values(self) -> list:
        n = self.count
        if self.scale == "linear":
            step = (self.hi - self.lo) / (n - 1)
            return [self.lo + i * step for i in range(n)]
        la, lb = math.log10(self.lo), math.log10(self.hi)
        return [10.0 ** (la + i * (lb - la) / (n - 1)) for i in range(n)]

    def echo(self) -> str:
        return f"{_fmtg(self.lo)},{_fmtg(self.hi)},{self.count},{self.scale}"


@dataclass
class MaterialSpec:
    """One named entry from the [materials.<name>] config tables."""

    name: str
    type: str
    omega_p_eV: Optional[float] = None
    gamma_eV: Optional[float] = None
    debye_K: Optional[float] = None
    strengths: Optional[tuple] = None
    resonances_eV: Optional[tuple] = None
    data_file: Optional[str] = None


@dataclass
class RunConfig:
    command: Optional[str] = None
    approach: str = "both"
    a_nm: Optional[float] = None
    T_K: float = 300.0
    grid: Optional[Grid] = None
    out: Optional[str] = None
    fmt: str = "csv"
    tol: float = 1e-6
    log_space: bool = False
    data_file: Optional[str] = None
    omega_p_eV: float = GOLD_OMEGA_P_EV
    gamma_eV: float = GOLD_GAMMA_ROOM_EV
    debye_K: float = GOLD_DEBYE_K
    film: str = "gold"
    plate_left: str = "vacuum"
    plate_right: str = "vacuum"
    figure: bool = True
    materials: dict = field(default_factory=dict)

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError(
                f"command must be one of {', '.join(COMMANDS)} (got {self.command!r})")
        if self.approach not in APPROACHES:
            raise ConfigError(f"approach must be one of {', '.join(APPROACHES)}")
        if not (0.0 < self.tol <= 1e-2):
            raise ConfigError("tol must lie in (0, 1e-2]")
        if self.fmt not in ("csv", "json"):
            raise ConfigError("format must be csv or json")
        film = self.material(self.film)
        if film.type not in FILM_TYPES:
            raise ConfigError(
                f"film material {self.film!r} must have type in "
                f"{', '.join(FILM_TYPES)} (got {film.type})")
        self.material(self.plate_left)
        self.material(self.plate_right)
        if self.T_K <= 0:
            raise ConfigError("T-K must be positive")
        if self.a_nm is not None and self.a_nm <= 0:
            raise ConfigError("a-nm must be positive")
        if self.command in ("sweep-thickness", "sweep-temperature"):
            if self.grid is None:
                raise ConfigError(f"{self.command} requires --grid min,max,count,scale")
            self.grid.validate("grid")
        if self.command in ("sweep-temperature", "point", "compare") and self.a_nm is None:
            raise ConfigError(f"{self.command} requires --a-nm")

    def approaches(self) -> tuple:
        return ("drude", "plasma") if self.approach == "both" else (self.approach,)

    def material(self, name: str) -> MaterialSpec:
        if name in self.materials:
            return self.materials[name]
        if name == "gold":
            return MaterialSpec("gold", "drude", self.omega_p_eV,
                                self.gamma_eV, self.debye_K)
        if name == "vacuum":
            return MaterialSpec("vacuum", "vacuum")
        if name == "sapphire":
            return MaterialSpec("sapphire", "oscillator")
        raise ConfigError(
            f"unknown material {name!r}: declare [materials.{name}] or use "
            f"one of {', '.join(BUILTIN_MATERIALS)}")


def _parse_grid(text: str, where: str) -> Grid:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ConfigError(f"{where}: expected min,max,count,scale (got {text!r})")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from None
    return Grid(lo, hi, count, parts[3])


def _typed(where: str, key: str, value, want):
    if want is float and isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    if want in (str, bool, dict, list) and isinstance(value, want):
        return value
    raise ConfigError(f"{where}.{key}: expected {want.__name__}, got {value!r}")


_MATERIAL_KEYS = {
    "type": str, "omega_p_eV": float, "gamma_eV": float,
    "debye_temperature_K": float, "strengths": list,
    "resonances_eV": list, "data_file": str,
}


def _material_from_table(name: str, table: dict) -> MaterialSpec:
    where = f"[materials.{name}]"
    if not isinstance(table, dict):
        raise ConfigError(f"{where}: must be a table")
    mtype = table.get("type")
    if mtype not in MATERIAL_TYPES:
        raise ConfigError(f"{where}.type: must be one of {', '.join(MATERIAL_TYPES)}")
    spec = MaterialSpec(name, mtype)
    for key, value in table.items():
        if key not in _MATERIAL_KEYS:
            raise ConfigError(f"{where}: unknown key {key!r}")
        value = _typed(where, key, value, _MATERIAL_KEYS[key])
        if key == "omega_p_eV":
            spec.omega_p_eV = value
        elif key == "gamma_eV":
            spec.gamma_eV = value
        elif key == "debye_temperature_K":
            spec.debye_K = value
        elif key == "strengths":
            spec.strengths = tuple(float(v) for v in value)
        elif key == "resonances_eV":
            spec.resonances_eV = tuple(float(v) for v in value)
        elif key == "data_file":
            spec.data_file = value
    if mtype == "oscillator":
        if not spec.strengths or not spec.resonances_eV:
            raise ConfigError(f"{where}: oscillator needs strengths and resonances_eV")
        if len(spec.strengths) != len(spec.resonances_eV):
            raise ConfigError(f"{where}: strengths and resonances_eV lengths differ")
    if mtype == "tabulated" and not spec.data_file:
        raise ConfigError(f"{where}: tabulated needs data_file")
    return spec


_SECTION_KEYS = {
    "materials": None,  # mixed: scalar defaults plus [materials.<name>] tables
    "configuration": {"film": str, "plate_left": str, "plate_right": str,
                      "thickness_nm": float, "temperature_K": float},
    "run": {"command": str, "approach": str, "grid": dict,
            "tol": float, "log_space": bool},
    "output": {"path": str, "format": str, "figure": bool},
}

_MATERIAL_DEFAULTS = {"omega_p_eV": float, "gamma_eV": float,
                      "debye_temperature_K": float, "data_file": str}


def apply_config_file(rc: RunConfig, path: str) -> None:
    try:
        with open(path, "rb") as fh:
            doc = tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    for section, table in doc.items():
        if section not in _SECTION_KEYS:
            raise ConfigError(f"{path}: unknown section [{section}]")
        if not isinstance(table, dict):
            raise ConfigError(f"{path}: [{section}] must be a table")
        if section == "materials":
            _apply_materials(rc, table)
            continue
        known = _SECTION_KEYS[section]
        for key, value in table.items():
            if key not in known:
                raise ConfigError(f"{path}: unknown key [{section}].{key}")
            value = _typed(f"[{section}]", key, value, known[key])
            _apply_scalar(rc, section, key, value)


def _apply_materials(rc: RunConfig, table: dict) -> None:
    for key, value in table.items():
        if isinstance(value, dict):
            rc.materials[key] = _material_from_table(key, value)
        elif key in _MATERIAL_DEFAULTS:
            value = _typed("[materials]", key, value, _MATERIAL_DEFAULTS[key])
            if key == "omega_p_eV":
                rc.omega_p_eV = value
            elif key == "gamma_eV":
                rc.gamma_eV = value
            elif key == "debye_temperature_K":
                rc.debye_K = value
            else:
                rc.data_file = value
        else:
            raise ConfigError(f"unknown key [materials].{key}")


def _apply_scalar(rc: RunConfig, section: str, key: str, value) -> None:
    if section == "configuration":
        if key == "thickness_nm":
            rc.a_nm = value
        elif key == "temperature_K":
            rc.T_K = value
        elif key == "film":
            rc.film = value
        elif key == "plate_left":
            rc.plate_left = value
        else:
            rc.plate_right = value
    elif section == "run":
        if key == "grid":
            for part in ("min", "max", "count", "scale"):
                if part not in value:
                    raise ConfigError(f"[run].grid: missing {part}")
            rc.grid = Grid(float(value["min"]), float(value["max"]),
                           int(value["count"]), str(value["scale"]))
        elif key == "command":
            rc.command = value
        elif key == "approach":
            rc.approach = value
        elif key == "tol":
            rc.tol = value
        else:
            rc.log_space = value
    else:  # output
        if key == "path":
            rc.out = value
        elif key == "format":
            rc.fmt = value
        else:
            rc.figure = value


# ---------------------------------------------------------------------------
# Model resolution and point evaluation
# ---------------------------------------------------------------------------

@dataclass
class Models:
    films: dict
    plates: tuple
    relaxation: RelaxationLaw
    omega_p: float
    film_labels: dict
    plate_labels: tuple


def _film_pair(rc: RunConfig, spec: MaterialSpec) -> tuple:
    """(models-by-approach, labels-by-approach) for the film entry."""
    wp_eV = spec.omega_p_eV if spec.omega_p_eV is not None else rc.omega_p_eV
    gm_eV = spec.gamma_eV if spec.gamma_eV is not None else rc.gamma_eV
    debye = spec.debye_K if spec.debye_K is not None else rc.debye_K
    omega_p = wp_eV * EV_TO_RAD_S
    law = RelaxationLaw(gm_eV * EV_TO_RAD_S, debye)
    data = rc.data_file or spec.data_file
    if spec.type == "tabulated" or data:
        if not data:
            raise ConfigError(f"film {spec.name!r} is tabulated but has no data_file")
        table = OpticalTable.from_file(data)
        films = {"drude": Tabulated(table, DrudeTail(omega_p, law)),
                 "plasma": Tabulated(table, PlasmaTail(omega_p))}
        labels = {w: f"tabulated({data})+{w}-tail" for w in films}
    else:
        films = {"drude": Drude(omega_p, law), "plasma": Plasma(omega_p)}
        labels = {
            "drude": f"Drude(omega_p={_fmtg(wp_eV)} eV, gamma_room={_fmtg(gm_eV)} eV)",
            "plasma": f"Plasma(omega_p={_fmtg(wp_eV)} eV)",
        }
    return films, labels, law, omega_p


def _plate_model(rc: RunConfig, spec: MaterialSpec) -> tuple:
    if spec.type == "vacuum":
        return Vacuum(), "vacuum"
    if spec.name == "sapphire" and spec.strengths is None:
        return sapphire(), "sapphire"
    wp_eV = spec.omega_p_eV if spec.omega_p_eV is not None else rc.omega_p_eV
    gm_eV = spec.gamma_eV if spec.gamma_eV is not None else rc.gamma_eV
    debye = spec.debye_K if spec.debye_K is not None else rc.debye_K
    omega_p = wp_eV * EV_TO_RAD_S
    if spec.type == "oscillator":
        resonances = tuple(r * EV_TO_RAD_S for r in spec.resonances_eV)
        model = Oscillator(spec.strengths, resonances)
        return model, (f"oscillator(strengths={list(spec.strengths)}, "
                       f"resonances_eV={list(spec.resonances_eV)})")
    if spec.type == "drude":
        law = RelaxationLaw(gm_eV * EV_TO_RAD_S, debye)
        return (Drude(omega_p, law),
                f"Drude(omega_p={_fmtg(wp_eV)} eV, gamma_room={_fmtg(gm_eV)} eV)")
    if spec.type == "plasma":
        return Plasma(omega_p), f"Plasma(omega_p={_fmtg(wp_eV)} eV)"
    # tabulated plate: a relaxation entry selects the Drude-form tail
    table = OpticalTable.from_file(spec.data_file)
    if spec.gamma_eV is not None:
        tail = DrudeTail(omega_p, RelaxationLaw(gm_eV * EV_TO_RAD_S, debye))
    else:
        tail = PlasmaTail(omega_p)
    return Tabulated(table, tail), f"tabulated({spec.data_file})"


def build_models(rc: RunConfig) -> Models:
    films, labels, law, omega_p = _film_pair(rc, rc.material(rc.film))
    left, left_label = _plate_model(rc, rc.material(rc.plate_left))
    right, right_label = _plate_model(rc, rc.material(rc.plate_right))
    return Models(films, (left, right), law, omega_p, labels,
                  (left_label, right_label))


@dataclass
class PointResult:
    f: dict = field(default_factory=dict)  # approach -> FreeEnergyResult
    p: dict = field(default_factory=dict)  # approach -> PressureResult
    errors: list = field(default_factory=list)

    def log10_f(self, which: str) -> Optional[float]:
        r = self.f.get(which)
        if r is None:
            return None
        lg = r.log_magnitude.log10_abs
        return lg if math.isfinite(lg) else None

    def log10_p(self, which: str) -> Optional[float]:
        r = self.p.get(which)
        if r is None:
            return None
        if r.log_magnitude is not None and math.isfinite(r.log_magnitude.log10_abs):
            return r.log_magnitude.log10_abs
        return math.log10(abs(r.value)) if r.value else None


def eval_point(models: Models, rc: RunConfig, a_nm: float, T: float,
               capture: bool = True) -> PointResult:
    out = PointResult()
    left, right = models.plates
    for which in rc.approaches():
        cfg = LayeredConfig(models.films[which], a_nm * NM, T, left, right)
        try:
            out.f[which] = free_energy(cfg, rc.tol, log_space=rc.log_space)
            out.p[which] = pressure(cfg, rc.tol, log_space=rc.log_space)
        except Exception as exc:  # recorded per point; the sweep continues
            if not capture:
                raise
            out.errors.append(f"{which}: {type(exc).__name__}: {exc}")
    return out


def _ratio_cell(num, den) -> str:
    if num is None or den is None or den.value == 0.0 or num.value == 0.0:
        return ""
    q = num.value / den.value
    return _fmt(q) if math.isfinite(q) else ""


def sweep_row(pr: PointResult) -> list:
    fd, fp = pr.f.get("drude"), pr.f.get("plasma")
    pd, pp = pr.p.get("drude"), pr.p.get("plasma")
    lg = pr.log10_f("plasma")
    return [
        _fmt(fd.value) if fd else "",
        _fmt(fp.value) if fp else "",
        _ratio_cell(fd, fp),
        _fmt(pd.value) if pd else "",
        _fmt(pp.value) if pp else "",
        _ratio_cell(pd, pp),
        _fmt(lg) if lg is not None else "",
        str(fd.l_max_used) if fd else "",
        str(fp.l_max_used) if fp else "",
        "; ".join(pr.errors),
    ]


# ---------------------------------------------------------------------------
# Output assembly
# ---------------------------------------------------------------------------

def preamble(rc: RunConfig, models: Models) -> list:
    """Resolved-parameter echo: one (key, value) pair per line of context."""
    items = [
        ("filmcasimir", __version__),
        ("command", rc.command),
        ("approach", rc.approach),
    ]
    for which in rc.approaches():
        items.append((f"film_{which}", models.film_labels[which]))
    items += [
        ("plate_left", models.plate_labels[0]),
        ("plate_right", models.plate_labels[1]),
        ("omega_p_eV", _fmtg(models.omega_p / EV_TO_RAD_S)),
        ("gamma_room_eV", _fmtg(models.relaxation.gamma(300.0) / EV_TO_RAD_S)),
        ("debye_temperature_K", _fmtg(models.relaxation.debye_temperature)),
    ]
    if rc.command != "sweep-temperature":
        items.append(("T_K", _fmtg(rc.T_K)))
        items.append(("gamma_eV", _fmtg(models.relaxation.gamma(rc.T_K) / EV_TO_RAD_S)))
    if rc.a_nm is not None and rc.command != "sweep-thickness":
        items.append(("a_nm", _fmtg(rc.a_nm)))
    if rc.grid is not None:
        items.append(("grid", rc.grid.echo()))
    items += [("tol", _fmtg(rc.tol)), ("log_space", str(rc.log_space).lower())]
    if rc.data_file:
        items.append(("data_file", rc.data_file))
    return items


def render_csv(pairs: list, header: Sequence[str], rows: list) -> str:
    buf = io.StringIO()
    for key, value in pairs:
        buf.write(f"# {key} = {value}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render_json(pairs: list, header: Sequence[str], rows: list) -> str:
    meta = {key: value for key, value in pairs}
    meta["schema"] = list(header)
    body = [dict(zip(header, row)) for row in rows]
    return json.dumps({"meta": meta, "rows": body}, indent=2) + "\n"


def emit(rc: RunConfig, pairs: list, header: Sequence[str], rows: list) -> None:
    text = (render_csv if rc.fmt == "csv" else render_json)(pairs, header, rows)
    if rc.out:
        Path(rc.out).write_text(text)
    else:
        sys.stdout.write(text)


def _figure_path(out: str) -> str:
    return str(Path(out).with_suffix(".png"))


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _map_grid(models: Models, rc: RunConfig, points: list, fixed_a: bool) -> list:
    def one(x: float) -> PointResult:
        a = rc.a_nm if fixed_a else x
        T = x if fixed_a else rc.T_K
        return eval_point(models, rc, a, T)

    workers = min(len(points), os.cpu_count() or 2)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(one, points))


def _sweep_series(rc: RunConfig, points: list, results: list) -> list:
    from .plotting import SweepSeries

    series = {"drude": SweepSeries("Drude", "--"),
              "plasma": SweepSeries("plasma", "-")}
    for x, pr in zip(points, results):
        for which in rc.approaches():
            series[which].add(x, pr.log10_f(which), pr.log10_p(which))
    return [series[w] for w in rc.approaches()]


def cmd_sweep_thickness(rc: RunConfig) -> int:
    models = build_models(rc)
    points = rc.grid.values()
    results = _map_grid(models, rc, points, fixed_a=False)
    rows = [[_fmtg(a)] + sweep_row(pr) for a, pr in zip(points, results)]
    emit(rc, preamble(rc, models), THICKNESS_HEADER, rows)
    if rc.out and rc.figure:
        from .plotting import render_sweep
        render_sweep(_figure_path(rc.out), _sweep_series(rc, points, results),
                     "film thickness a (nm)", rc.grid.scale == "log",
                     f"T = {_fmtg(rc.T_K)} K, plates: "
                     f"{rc.plate_left}/{rc.plate_right}")
    return 0


def cmd_sweep_temperature(rc: RunConfig) -> int:
    models = build_models(rc)
    points = rc.grid.values()
    results = _map_grid(models, rc, points, fixed_a=True)
    rows = []
    for T, pr in zip(points, results):
        gamma_eV = models.relaxation.gamma(T) / EV_TO_RAD_S
        rows.append([_fmtg(T), _fmt(gamma_eV)] + sweep_row(pr))
    emit(rc, preamble(rc, models), TEMPERATURE_HEADER, rows)
    if rc.out and rc.figure:
        from .plotting import render_sweep
        render_sweep(_figure_path(rc.out), _sweep_series(rc, points, results),
                     "temperature T (K)", rc.grid.scale == "log",
                     f"a = {_fmtg(rc.a_nm)} nm, plates: "
                     f"{rc.plate_left}/{rc.plate_right}")
    return 0


def cmd_point(rc: RunConfig) -> int:
    models = build_models(rc)
    pr = eval_point(models, rc, rc.a_nm, rc.T_K, capture=False)
    rows = [[_fmtg(rc.a_nm)] + sweep_row(pr)]
    emit(rc, preamble(rc, models), THICKNESS_HEADER, rows)
    return 0


def _flag(ok: bool) -> str:
    return "pass" if ok else "fail"


def compare_rows(models: Models, rc: RunConfig, pr: PointResult) -> list:
    """Side-by-side values, decomposition, and applicable oracle checks."""
    a = rc.a_nm * NM
    fd, fp = pr.f.get("drude"), pr.f.get("plasma")
    pd, pp = pr.p.get("drude"), pr.p.get("plasma")

    def cell(r, attr="value"):
        if r is None:
            return ""
        x = getattr(r, attr)
        return _fmt(x) if isinstance(x, float) else str(x)

    def l0(r):
        return "" if r is None else _fmt(r.l0_tm + r.l0_te)

    rows = [
        ["F_J_m2", cell(fd), cell(fp), _ratio_cell(fd, fp), "", ""],
        ["F_l0_J_m2", l0(fd), l0(fp), "", "", ""],
        ["F_tail_J_m2", cell(fd, "tail_l_ge_1"), cell(fp, "tail_l_ge_1"), "", "", ""],
        ["P_Pa", cell(pd), cell(pp), _ratio_cell(pd, pp), "", ""],
        ["P_l0_Pa", cell(pd, "l0"), cell(pp, "l0"), "", "", ""],
        ["P_tail_Pa", cell(pd, "tail_l_ge_1"), cell(pp, "tail_l_ge_1"), "", "", ""],
        ["l_max", cell(fd, "l_max_used"), cell(fp, "l_max_used"), "", "", ""],
    ]
    lgf = pr.log10_f("plasma")
    if lgf is not None:
        rows.append(["log10_abs_F_plasma", "", _fmt(lgf), "", "", ""])

    gamma = models.relaxation.gamma(rc.T_K)
    if fd is not None:
        if rc.a_nm >= 150.0:
            cf = asym.classical_drude_free_energy(a, rc.T_K)
            cp = asym.classical_drude_pressure(a, rc.T_K)
            rows.append(["classical_F_J_m2", cell(fd), "", "", _fmt(cf),
                         _flag(abs(fd.value / cf - 1.0) <= 0.01)])
            rows.append(["classical_P_Pa", cell(pd), "", "", _fmt(cp),
                         _flag(abs(pd.value / cp - 1.0) <= 0.01)])
        frac = abs(fd.tail_l_ge_1) / abs(fd.l0_tm + fd.l0_te)
        margin = (asym.drude_tail_bound(a, rc.T_K, models.omega_p, gamma)
                  / (ZETA3 / 2.0))
        rows.append(["drude_tail_fraction", _fmt(frac), "", "", _fmt(margin),
                     _flag(frac <= margin)])
    w = omega_p_tilde(a, models.omega_p)
    if fp is not None and fp.value != 0.0 and asym.TAIL_MIN_OMEGA_P_TILDE <= w:
        comb = asym.plasma_l0_combined(a, rc.T_K, models.omega_p)
        tail = asym.plasma_tail_l_ge_1(a, rc.T_K, models.omega_p)
        rows.append(["plasma_l0_oracle_J_m2", "", l0(fp), "", _fmt(comb),
                     _flag(abs((fp.l0_tm + fp.l0_te) / comb - 1.0) <= 0.15)])
        rows.append(["plasma_tail_oracle_J_m2", "", cell(fp, "tail_l_ge_1"), "",
                     _fmt(tail),
                     _flag(abs(fp.tail_l_ge_1 / tail - 1.0) <= 0.30)])
    return rows


def cmd_compare(rc: RunConfig) -> int:
    models = build_models(rc)
    pr = eval_point(models, rc, rc.a_nm, rc.T_K, capture=False)
    rows = compare_rows(models, rc, pr)
    emit(rc, preamble(rc, models), COMPARE_HEADER, rows)
    if rc.out and rc.figure:
        from .plotting import render_compare
        items = []
        for which in rc.approaches():
            r = pr.f[which]
            pieces = (r.l0_tm + r.l0_te, r.tail_l_ge_1)
            items.append((which,
                          *(math.log10(abs(v)) if v else None for v in pieces)))
        render_compare(_figure_path(rc.out), items,
                       f"a = {_fmtg(rc.a_nm)} nm, T = {_fmtg(rc.T_K)} K")
    return 0


def cmd_fixtures(rc: RunConfig) -> int:
    table = OpticalTable.from_file(rc.data_file) if rc.data_file else None
    results = run_fixtures(table)
    rows = [[r.fid, r.kind, r.model, _fmt(r.expected), _fmt(r.measured),
             r.band, r.status, str(r.expected_fail).lower(), r.note, r.error]
            for r in results]
    models = build_models(rc)
    emit(rc, preamble(rc, models), FIXTURE_HEADER, rows)
    counts = {s: sum(r.status == s for r in results)
              for s in ("pass", "fail", "xfail", "xpass")}
    print(f"{len(results)} fixtures: {counts['pass']} pass, "
          f"{counts['xfail']} known-fail, {counts['xpass']} unexpected-pass, "
          f"{counts['fail']} FAIL", file=sys.stderr)
    return 3 if unexpected_failures(results) else 0


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems follow the config-error path
        raise ConfigError(message)


def build_parser() -> _Parser:
    p = _Parser(prog="filmcasimir", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--config", metavar="PATH", help="TOML run configuration")
    p.add_argument("--command", choices=COMMANDS)
    p.add_argument("--approach", choices=APPROACHES)
    p.add_argument("--a-nm", type=float, help="film thickness in nm")
    p.add_argument("--T-K", type=float, help="temperature in K")
    p.add_argument("--grid", metavar="MIN,MAX,COUNT,SCALE",
                   help="sweep grid; scale is linear or log")
    p.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), dest="fmt")
    p.add_argument("--tol", type=float, help="relative engine tolerance")
    p.add_argument("--log-space", action="store_true", default=None,
                   help="allow log-magnitude-only results for deep suppression")
    p.add_argument("--data-file", metavar="PATH",
                   help="optical table (omega_eV n k) for the film")
    return p


def resolve(argv: Optional[Sequence[str]]) -> RunConfig:
    args = build_parser().parse_args(argv)
    rc = RunConfig()
    if args.config:
        apply_config_file(rc, args.config)
    for attr in ("command", "approach", "a_nm", "T_K", "out", "fmt", "tol",
                 "log_space", "data_file"):
        value = getattr(args, attr)
        if value is not None:
            setattr(rc, attr, value)
    if args.grid is not None:
        rc.grid = _parse_grid(args.grid, "--grid")
    rc.validate()
    return rc


_DISPATCH = {
    "sweep-thickness": cmd_sweep_thickness,
    "sweep-temperature": cmd_sweep_temperature,
    "point": cmd_point,
    "compare": cmd_compare,
    "fixtures": cmd_fixtures,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        rc = resolve(argv)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return _DISPATCH[rc.command](rc)
    except (ConfigError, ValidationError, MaterialError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (EngineError, QuadratureError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
