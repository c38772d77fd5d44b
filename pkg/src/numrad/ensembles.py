"""Seeded random-matrix families and ensemble studies of the bound catalog.

Families are generated from ``numpy.random.default_rng`` seeded with the
sequence ``[seed, family_code, dimension, index]``, so any single draw can be
reproduced without replaying the ones before it and two families never share
a stream.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import bounds
from .linalg import ConvergenceError, operator_norm, _hermitize
from .matio import g17, json_encode
from .radius import EnclosureNotReached, RadiusConfig

_SEED_MASK = (1 << 64) - 1

_FAMILY_CODES = {
    "ginibre": 1,
    "gue": 2,
    "nilpotent-shift-random": 3,
    "normal": 4,
    "real-gaussian": 5,
    "rank1": 6,
    "hermitian-psd": 7,
}

FAMILIES = tuple(_FAMILY_CODES)

MAX_DIMENSION = 512
MAX_COUNT = 10 ** 6

TIGHT_REL = 1e-6


@dataclass(frozen=True)
class EnsembleSpec:
    """A reproducible batch: ``count`` draws of one family at one size."""

    family: str
    dimension: int
    count: int
    seed: int = 0

    def __post_init__(self):
        if self.family not in _FAMILY_CODES:
            valid = ", ".join(FAMILIES)
            raise ValueError(f"unknown family {self.family!r}; valid families: {valid}")
        if not 1 <= int(self.dimension) <= MAX_DIMENSION:
            raise ValueError(f"dimension must be in 1..{MAX_DIMENSION}")
        if not 1 <= int(self.count) <= MAX_COUNT:
            raise ValueError(f"count must be in 1..{MAX_COUNT}")


def _complex_gaussian(rng, shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / math.sqrt(2.0)


def _haar_unitary(rng, n: int) -> np.ndarray:
    # QR of a complex Gaussian, with R's diagonal phases folded into Q so the
    # distribution is exactly Haar rather than QR-convention dependent
    q, r = np.linalg.qr(_complex_gaussian(rng, (n, n)))
    d = np.diagonal(r)
    absd = np.abs(d)
    safe = np.where(absd > 0, absd, 1.0)
    phases = np.where(absd > 0, d / safe, 1.0)
    return q * phases


def generate(spec: EnsembleSpec, index: int) -> np.ndarray:
    """Draw number ``index`` (0-based) of the batch, independent of the rest."""
    if not 0 <= index < spec.count:
        raise IndexError(f"index {index} outside 0..{spec.count - 1}")
    n = spec.dimension
    rng = np.random.default_rng(
        [spec.seed & _SEED_MASK, _FAMILY_CODES[spec.family], n, index]
    )
    if spec.family == "ginibre":
        return _complex_gaussian(rng, (n, n))
    if spec.family == "gue":
        g = _complex_gaussian(rng, (n, n))
        return 0.5 * (g + g.conj().T)
    if spec.family == "nilpotent-shift-random":
        return np.triu(_complex_gaussian(rng, (n, n)), 1)
    if spec.family == "normal":
        u = _haar_unitary(rng, n)
        vals = _complex_gaussian(rng, n)
        return (u * vals) @ u.conj().T
    if spec.family == "real-gaussian":
        return rng.standard_normal((n, n)).astype(np.complex128)
    if spec.family == "rank1":
        u = _complex_gaussian(rng, n)
        v = _complex_gaussian(rng, n)
        return np.outer(u, v.conj())
    if spec.family == "hermitian-psd":
        g = _complex_gaussian(rng, (n, n))
        return _hermitize(g.conj().T @ g)
    raise AssertionError(f"unhandled family {spec.family}")


def matrices(spec: EnsembleSpec):
    """Iterate the whole batch in index order."""
    for index in range(spec.count):
        yield generate(spec, index)


@dataclass(frozen=True)
class StudyRow:
    """One bound on one draw.  For a chain this is its binding link (the
    smallest slack); ``violated`` is true if any link failed."""

    index: int
    bound_id: str
    lhs: float
    rhs: float
    slack: float
    violated: bool


@dataclass(frozen=True)
class StudyReport:
    spec: EnsembleSpec
    bound_ids: tuple[str, ...]
    rows: tuple[StudyRow, ...]
    failures: tuple[tuple[int, str], ...]
    violations: tuple[StudyRow, ...]
    slack_stats: dict
    tight_fraction: float
    elapsed_seconds: float
    seeds_used: tuple[int, ...]
    radius_config: RadiusConfig = field(default_factory=RadiusConfig)


def _rel_slack(row: StudyRow) -> float:
    return row.slack / max(1.0, abs(row.rhs))


def _flatten(index: int, token: str, result) -> StudyRow:
    if isinstance(result, bounds.ChainReport):
        binding = min(result.links, key=lambda link: link.slack)
        return StudyRow(
            index, token, binding.lhs, binding.rhs, binding.slack, result.violated
        )
    return StudyRow(index, token, result.lhs, result.rhs, result.slack, result.violated)


def run_study(
    spec: EnsembleSpec,
    bound_ids: tuple[str, ...] | list[str],
    cfg: RadiusConfig | None = None,
) -> StudyReport:
    """Evaluate the given catalog entries on every draw of the batch.

    Draws where a decomposition fails to certify or the radius enclosure
    cannot reach its target are recorded under ``failures`` and skipped; a
    violated bound is data, not a failure.
    """
    cfg = cfg or RadiusConfig()
    tokens = tuple(bound_ids)
    if not tokens:
        raise ValueError("bound_ids must name at least one catalog entry")
    for token in tokens:
        base, _ = bounds.parse_bound_id(token)
        if bounds._ARITY[base] != 1:
            raise ValueError(f"bound {base} needs two matrices; studies draw one")

    start = time.perf_counter()
    rows: list[StudyRow] = []
    failures: list[tuple[int, str]] = []
    for index in range(spec.count):
        a = generate(spec, index)
        ctx = bounds.MatrixContext(a, cfg)
        try:
            for token in tokens:
                rows.append(_flatten(index, token, bounds.evaluate(token, ctx, cfg)))
        except (ConvergenceError, EnclosureNotReached, np.linalg.LinAlgError) as exc:
            failures.append((index, repr(exc)))
            rows = [r for r in rows if r.index != index]
    elapsed = time.perf_counter() - start

    violations = tuple(r for r in rows if r.violated)
    rels = [_rel_slack(r) for r in rows]
    if rels:
        stats = {
            "min": float(min(rels)),
            "median": float(np.median(rels)),
            "max": float(max(rels)),
        }
        tight = sum(
            1 for r in rows if abs(r.slack) <= TIGHT_REL * max(1.0, abs(r.rhs))
        ) / len(rows)
    else:
        stats = {"min": 0.0, "median": 0.0, "max": 0.0}
        tight = 0.0
    seeds = (spec.seed,)
    if cfg.oracle_samples > 0:
        seeds = (spec.seed, cfg.seed)
    return StudyReport(
        spec=spec,
        bound_ids=tokens,
        rows=tuple(rows),
        failures=tuple(failures),
        violations=violations,
        slack_stats=stats,
        tight_fraction=float(tight),
        elapsed_seconds=float(elapsed),
        seeds_used=seeds,
        radius_config=cfg,
    )


def to_csv(report: StudyReport) -> str:
    """Per-row table, fully determined by the seeds (no timing column)."""
    lines = ["index,bound_id,lhs,rhs,slack,violated"]
    for r in report.rows:
        flag = "true" if r.violated else "false"
        lines.append(
            f"{r.index},{r.bound_id},{g17(r.lhs)},{g17(r.rhs)},{g17(r.slack)},{flag}"
        )
    return "\n".join(lines) + "\n"


def to_json(report: StudyReport) -> str:
    obj = {
        "family": report.spec.family,
        "dimension": report.spec.dimension,
        "count": report.spec.count,
        "bound_ids": list(report.bound_ids),
        "rows": [
            {
                "index": r.index,
                "bound_id": r.bound_id,
                "lhs": r.lhs,
                "rhs": r.rhs,
                "slack": r.slack,
                "violated": r.violated,
            }
            for r in report.rows
        ],
        "failures": [{"index": i, "error": msg} for i, msg in report.failures],
        "violations": [
            {
                "index": r.index,
                "bound_id": r.bound_id,
                "lhs": r.lhs,
                "rhs": r.rhs,
            }
            for r in report.violations
        ],
        "slack_stats": report.slack_stats,
        "tight_fraction": report.tight_fraction,
        "elapsed_seconds": report.elapsed_seconds,
        "seeds_used": list(report.seeds_used),
    }
    return json_encode(obj) + "\n"


def tightness_compare(a, cfg: RadiusConfig | None = None) -> dict:
    """Compare every lower and upper refinement of w(A)^2 on one matrix.

    Returns the squared radius, the candidate bounds on its either side, and
    which candidate is sharpest (largest lower, smallest upper)."""
    ctx = bounds._ctx(a, cfg)
    omega_sq = ctx.omega.lower ** 2
    t1_mid = (ctx.norm_plus ** 2 + ctx.norm_minus ** 2) / 8.0
    t2_mid = 0.5 * math.sqrt(
        2.0 * ctx.omega.lower ** 4 + ctx.omega_quad.lower / 8.0
    )
    kit_rhs = 0.5 * operator_norm(ctx.abs_left + ctx.abs_right)
    lower = {
        "B0": (0.5 * ctx.norm) ** 2,
        "SQ": 0.25 * ctx.gram_norm,
        "T1": t1_mid,
        "T2": t2_mid,
    }
    upper = {
        "SQ": 0.5 * ctx.gram_norm,
        "T3": 0.5 * ctx.gram_norm - 0.25 * ctx.abs_diff_sq_min,
        "KIT": kit_rhs ** 2,
    }
    return {
        "omega_sq": omega_sq,
        "lower_bounds_sq": lower,
        "upper_bounds_sq": upper,
        "sharpest_lower": max(lower, key=lower.get),
        "sharpest_upper": min(upper, key=upper.get),
    }
