"""Corpus scanning: one record per graph6 line, with optional inequality checks.

Checks
------
SOUNDNESS        ceil(f_best - 1e-9) <= chi(G)  (needs the exact module, n <= 64)
EDGE_ENERGY      E_p^+ + E_p^- >= 2 m^(p/2)                 for sampled 0 < p < 1
MIN_ENERGY       min(E_p^+, E_p^-) >= (n-1)^(p/2)           for sampled 0 < p < 1, connected G
MIN_ENERGY_CONJ  the same inequality for sampled 0 <= p <= 2 (open conjecture), connected G

A check whose inequality holds with equality at every sampled p is listed
in the record's ``tight`` field.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .bounds import BoundReport, OptimizerConfig, report_from_spectrum
from .eigen import N_MAX, Spectrum, spectrum
from .errors import GraphError, InputError, SizeError
from .exact import EXACT_MAX_N, chromatic_number, clique_number
from .graphio import Graph, parse_graph6
from .penergy import log_energies

CHECKS = ("SOUNDNESS", "EDGE_ENERGY", "MIN_ENERGY", "MIN_ENERGY_CONJ")
DEFAULT_PS = (0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0)
CSV_COLUMNS = (
    "id", "n", "m", "hoffman", "inertia", "ando_lin", "sum_bound",
    "p_best", "f_best", "chi", "omega", "flags", "tight", "error",
)
REL_TOL = 1e-9


@dataclass(frozen=True)
class ScanRecord:
    id: str
    n: Optional[int] = None
    m: Optional[int] = None
    bounds: Optional[BoundReport] = None
    chi: Optional[int] = None
    omega: Optional[int] = None
    flags: tuple = ()
    tight: tuple = ()
    error: Optional[str] = None
    error_kind: Optional[str] = field(default=None, compare=False)


def _inequality(lhs: np.ndarray, rhs: np.ndarray) -> tuple[bool, bool]:
    """(holds everywhere, equality everywhere) at relative tolerance REL_TOL."""
    slack = REL_TOL * np.maximum(1.0, np.abs(rhs))
    holds = bool(np.all(lhs >= rhs - slack))
    equal = bool(lhs.size > 0 and np.all(np.abs(lhs - rhs) <= slack))
    return holds, equal


def energy_checks(g: Graph, s: Spectrum, checks: Sequence[str], ps: Sequence[float]):
    """Evaluate the p-energy inequalities; returns (violated, tight) name lists."""
    violated, tight = [], []
    ps = np.asarray(ps, dtype=float)
    connected = g.is_connected()
    wanted = [
        ("EDGE_ENERGY", (ps > 0) & (ps < 1), True),
        ("MIN_ENERGY", (ps > 0) & (ps < 1), connected),
        ("MIN_ENERGY_CONJ", (ps >= 0) & (ps <= 2), connected),
    ]
    for name, mask, applicable in wanted:
        if name not in checks or not applicable or not mask.any():
            continue
        sub = ps[mask]
        lp, ln = log_energies(s, sub)
        if name == "EDGE_ENERGY":
            lhs = np.exp(lp) + np.exp(ln)
            rhs = 2.0 * g.m ** (sub / 2.0)
        else:
            lhs = np.exp(np.minimum(lp, ln))
            rhs = float(g.n - 1) ** (sub / 2.0)
        holds, equal = _inequality(lhs, rhs)
        if not holds:
            violated.append(name)
        if equal:
            tight.append(name)
    return violated, tight


def scan_graph(
    ident: str,
    g: Graph,
    checks: Sequence[str] = CHECKS,
    cfg: OptimizerConfig = OptimizerConfig(),
    exact: bool = False,
    ps: Sequence[float] = DEFAULT_PS,
    n_max: int = N_MAX,
) -> ScanRecord:
    s = spectrum(g, n_max)
    report = report_from_spectrum(s, cfg)
    flags, tight = [], []
    chi = omega = None
    if g.n <= EXACT_MAX_N and (exact or "SOUNDNESS" in checks):
        chi_exact = chromatic_number(g)
        if "SOUNDNESS" in checks and math.ceil(report.f_best - 1e-9) > chi_exact:
            flags.append("SOUNDNESS")
        if exact:
            chi, omega = chi_exact, clique_number(g)
    bad, eq = energy_checks(g, s, checks, ps)
    flags.extend(bad)
    tight.extend(eq)
    return ScanRecord(ident, g.n, g.m, report, chi, omega, tuple(flags), tuple(tight))


def scan_line(
    ident: str,
    line: str,
    checks: Sequence[str] = CHECKS,
    cfg: OptimizerConfig = OptimizerConfig(),
    exact: bool = False,
    ps: Sequence[float] = DEFAULT_PS,
    n_max: int = N_MAX,
) -> ScanRecord:
    """Scan one graph6 line; failures become error records instead of raising."""
    g = None
    try:
        g = parse_graph6(line)
        return scan_graph(ident, g, checks, cfg, exact, ps, n_max)
    except GraphError as exc:
        if isinstance(exc, InputError):
            kind = "input"
        elif isinstance(exc, SizeError):
            kind = "size"
        else:
            kind = "graph"
        return ScanRecord(
            ident,
            n=g.n if g else None,
            m=g.m if g else None,
            error=f"{type(exc).__name__}: {exc}",
            error_kind=kind,
        )


def _scan_job(args) -> ScanRecord:
    return scan_line(*args)


def scan_lines(
    lines: Iterable[str],
    checks: Sequence[str] = CHECKS,
    cfg: OptimizerConfig = OptimizerConfig(),
    exact: bool = False,
    ps: Sequence[float] = DEFAULT_PS,
    jobs: int = 1,
    n_max: int = N_MAX,
) -> Iterator[ScanRecord]:
    """Yield records in input order; ``jobs > 1`` fans out to a process pool."""
    jobs_iter = (
        (str(i), line.rstrip("\r\n"), tuple(checks), cfg, exact, tuple(ps), n_max)
        for i, line in enumerate(lines, 1)
    )
    if jobs <= 1:
        for job in jobs_iter:
            yield _scan_job(job)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_scan_job, jobs_iter, chunksize=32)


# --------------------------------------------------------------------------
# formatting
# --------------------------------------------------------------------------

def fmt_num(x) -> str:
    if x is None:
        return ""
    if isinstance(x, int):
        return str(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return "%.12g" % x


def json_num(x):
    """Round to 12 significant digits; infinity becomes the string ``"inf"``."""
    if x is None or isinstance(x, int):
        return x
    if math.isinf(x):
        return "inf"
    return float("%.12g" % x)


def report_fields(r: Optional[BoundReport]) -> dict:
    if r is None:
        return dict.fromkeys(("hoffman", "inertia", "ando_lin", "sum_bound", "p_best", "f_best"))
    return {
        "hoffman": r.hoffman,
        "inertia": r.inertia_bound,
        "ando_lin": r.ando_lin,
        "sum_bound": r.sum_bound,
        "p_best": r.p_best,
        "f_best": r.f_best,
    }


def record_row(rec: ScanRecord) -> list[str]:
    f = report_fields(rec.bounds)
    return [
        rec.id, fmt_num(rec.n), fmt_num(rec.m),
        fmt_num(f["hoffman"]), fmt_num(f["inertia"]), fmt_num(f["ando_lin"]),
        fmt_num(f["sum_bound"]), fmt_num(f["p_best"]), fmt_num(f["f_best"]),
        fmt_num(rec.chi), fmt_num(rec.omega),
        ";".join(rec.flags), ";".join(rec.tight), rec.error or "",
    ]


def record_json(rec: ScanRecord) -> str:
    f = report_fields(rec.bounds)
    obj = {"id": rec.id, "n": rec.n, "m": rec.m}
    obj.update({k: json_num(v) for k, v in f.items()})
    obj.update({
        "chi": rec.chi,
        "omega": rec.omega,
        "flags": list(rec.flags),
        "tight": list(rec.tight),
        "error": rec.error,
    })
    return json.dumps(obj, ensure_ascii=False)
