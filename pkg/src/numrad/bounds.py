"""Catalog of numerical-radius inequalities as machine-checkable reports.

Registry ids (stable, used by the CLI and the study harness):

    B0, KIT, SQ, LEM1+, LEM1-, T1, LEM-SUM, T2, LEM-POSDIFF, T3,
    T3-PRINTED, FUNC, COR

Radius values inside a report always show the certified lower endpoint of the
enclosure.  For a link whose right-hand side contains a radius, the violation
check also accepts the upper endpoint, so that one-sided enclosure
uncertainty can never manufacture a false violation; the widening is folded
into ``tolerance_used`` which keeps ``violated == (lhs - rhs >
tolerance_used)`` literally true for the reported numbers.

T3-PRINTED is a deliberately retained diagnostic: the variant of the squared
radius upper bound with both correction terms halved.  It is refuted by the
2x2 Jordan block (lhs 0.25 against rhs 0) and fails on a large fraction of
random draws; evaluating it reports the violation but never raises and never
drives a process exit code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

import numpy as np

from .linalg import (
    apply_herm_fn,
    as_square,
    herm_eigen,
    operator_norm,
    svd,
    _apply_to_values,
    _hermitize,
)
from .radius import RadiusConfig, RadiusEstimate, numerical_radius


class NotPositiveError(ValueError):
    """An operand that must be positive semidefinite is not."""


class HypothesisFailed(ValueError):
    """A function pair failed its monotonicity/convexity grid check."""


class IdentityCheckError(RuntimeError):
    """Two evaluation routes that must agree disagreed beyond tolerance."""


def default_tolerance(*scales: float) -> float:
    """1e-9 times the largest magnitude involved, floored at 1."""
    m = 1.0
    for s in scales:
        v = abs(float(s))
        if v > m:
            m = v
    return 1e-9 * m


@dataclass(frozen=True)
class BoundReport:
    """One checked inequality lhs <= rhs."""

    bound_id: str
    lhs: float
    rhs: float
    slack: float
    violated: bool
    tolerance_used: float


@dataclass(frozen=True)
class ChainReport:
    """A chain of inequalities terms[0] <= terms[1] <= ...; ``links[k]``
    reports the comparison terms[k] <= terms[k+1]."""

    chain_id: str
    terms: tuple[float, ...]
    links: tuple[BoundReport, ...]

    @property
    def violated(self) -> bool:
        return any(link.violated for link in self.links)


def _report(bound_id: str, lhs: float, rhs_low: float, rhs_high: float, tol: float) -> BoundReport:
    tol_used = tol + max(0.0, rhs_high - rhs_low)
    return BoundReport(
        bound_id=bound_id,
        lhs=float(lhs),
        rhs=float(rhs_low),
        slack=float(rhs_low - lhs),
        violated=bool(lhs - rhs_low > tol_used),
        tolerance_used=float(tol_used),
    )


def _chain(chain_id: str, lows: list[float], highs: list[float]) -> ChainReport:
    tol = default_tolerance(*highs)
    links = tuple(
        _report(f"{chain_id}[{k}]", lows[k], lows[k + 1], highs[k + 1], tol)
        for k in range(len(lows) - 1)
    )
    return ChainReport(chain_id, tuple(float(t) for t in lows), links)


@dataclass(frozen=True)
class FunctionPair:
    """Scalar functions (f, g, g^{-1}) driving the functional bound chain.

    Expected hypotheses: f continuous non-negative on [0, inf), g increasing
    concave, and g o f increasing convex.  Construction verifies the inverse
    round trip |g^{-1}(g(x)) - x| <= 1e-12 max(1, x) on a small grid; the
    monotonicity/convexity hypotheses are spot-checked on a grid at
    evaluation time (a necessary condition only).
    """

    f: Callable
    g: Callable
    g_inverse: Callable
    name: str = "custom"

    def __post_init__(self):
        for x in (0.0, 0.5, 1.0, 2.0, 10.0):
            back = float(self.g_inverse(self.g(x)))
            if abs(back - x) > 1e-12 * max(1.0, x):
                raise ValueError(
                    f"g_inverse(g({x})) = {back} is not an inverse to 1e-12"
                )


def identity_pair() -> FunctionPair:
    """f = g = g^{-1} = identity; reduces the functional chain to KIT."""
    ident = lambda x: x
    return FunctionPair(ident, ident, ident, name="identity")


def power_sqrt_pair(r: float) -> FunctionPair:
    """f(x) = x^r with g(x) = x + sqrt(x), the pair behind the COR bound."""
    if r < 2:
        raise ValueError("exponent r must be at least 2")
    return FunctionPair(
        f=lambda x, r=float(r): x ** r,
        g=lambda x: x + np.sqrt(x),
        g_inverse=lambda x: (2.0 * x + 1.0 - np.sqrt(4.0 * x + 1.0)) / 2.0,
        name=f"x^{r:g}|x+sqrt(x)",
    )


_HYPOTHESIS_GRID = np.arange(17) * 0.25  # 0, 0.25, ..., 4


def _check_pair_hypotheses(fp: FunctionPair) -> None:
    """Grid check: g o f increasing and midpoint-convex, g increasing and
    midpoint-concave, g^{-1} increasing, on {0, 0.25, ..., 4}.  Necessary
    conditions only."""
    xs = _HYPOTHESIS_GRID
    gof = np.array([float(fp.g(fp.f(x))) for x in xs])
    gv = np.array([float(fp.g(x)) for x in xs])
    gi = np.array([float(fp.g_inverse(x)) for x in xs])
    tol = 1e-9 * max(1.0, float(np.abs(gof).max()), float(np.abs(gv).max()))
    if np.any(np.diff(gof) < -tol):
        raise HypothesisFailed(f"g o f is not increasing on the check grid ({fp.name})")
    if np.any(gof[:-2] + gof[2:] - 2.0 * gof[1:-1] < -tol):
        raise HypothesisFailed(f"g o f is not midpoint-convex on the check grid ({fp.name})")
    if np.any(np.diff(gv) < -tol):
        raise HypothesisFailed(f"g is not increasing on the check grid ({fp.name})")
    if np.any(gv[:-2] + gv[2:] - 2.0 * gv[1:-1] > tol):
        raise HypothesisFailed(f"g is not midpoint-concave on the check grid ({fp.name})")
    if np.any(np.diff(gi) < -tol):
        raise HypothesisFailed(f"g_inverse is not increasing on the check grid ({fp.name})")


class MatrixContext:
    """Caches the decompositions shared by the bound evaluations of one
    matrix: adjoint, SVD, polar absolute values, Cartesian split, and the
    radius enclosures of A and of the derived fourth-order products."""

    def __init__(self, a, cfg: RadiusConfig | None = None):
        self.a = as_square(a)
        self.cfg = cfg or RadiusConfig()

    @cached_property
    def ah(self) -> np.ndarray:
        return self.a.conj().T

    @cached_property
    def norm(self) -> float:
        return float(self._svd.singular_values[0])

    @cached_property
    def _svd(self):
        return svd(self.a)

    @cached_property
    def abs_left(self) -> np.ndarray:
        v = self._svd.right_vectors
        return _hermitize((v * self._svd.singular_values) @ v.conj().T)

    @cached_property
    def abs_right(self) -> np.ndarray:
        u = self._svd.left_vectors
        return _hermitize((u * self._svd.singular_values) @ u.conj().T)

    def f_abs_left(self, f: Callable) -> np.ndarray:
        """f(|A|) through the singular spectrum."""
        v = self._svd.right_vectors
        vals = _apply_to_values(f, self._svd.singular_values)
        return _hermitize((v * vals) @ v.conj().T)

    def f_abs_right(self, f: Callable) -> np.ndarray:
        """f(|A*|) through the singular spectrum."""
        u = self._svd.left_vectors
        vals = _apply_to_values(f, self._svd.singular_values)
        return _hermitize((u * vals) @ u.conj().T)

    @cached_property
    def gram_sum(self) -> np.ndarray:
        """|A|^2 + |A*|^2 computed exactly as A*A + AA*."""
        return _hermitize(self.ah @ self.a + self.a @ self.ah)

    @cached_property
    def gram_norm(self) -> float:
        return operator_norm(self.gram_sum)

    @cached_property
    def norm_plus(self) -> float:
        return operator_norm(self.a + self.ah)

    @cached_property
    def norm_minus(self) -> float:
        return operator_norm(self.a - self.ah)

    @cached_property
    def cartesian(self) -> tuple[np.ndarray, np.ndarray]:
        b = 0.5 * (self.a + self.ah)
        c = (self.a - self.ah) / 2j
        return b, c

    @cached_property
    def omega(self) -> RadiusEstimate:
        return numerical_radius(self.a, self.cfg)

    @cached_property
    def quad_product(self) -> np.ndarray:
        """(A* - A)^2 (A* + A)^2."""
        d = self.ah - self.a
        s = self.ah + self.a
        return d @ d @ s @ s

    @cached_property
    def omega_quad(self) -> RadiusEstimate:
        return numerical_radius(self.quad_product, self.cfg)

    @cached_property
    def c2b2(self) -> np.ndarray:
        b, c = self.cartesian
        return c @ c @ b @ b

    @cached_property
    def omega_c2b2(self) -> RadiusEstimate:
        return numerical_radius(self.c2b2, self.cfg)

    @cached_property
    def abs_diff_sq_min(self) -> float:
        """m((|A| - |A*|)^2), the smallest eigenvalue of the squared gap."""
        d = self.abs_left - self.abs_right
        return float(herm_eigen(_hermitize(d @ d)).eigenvalues[0])


def _ctx(a, cfg: RadiusConfig | None) -> MatrixContext:
    if isinstance(a, MatrixContext):
        return a
    return MatrixContext(a, cfg)


def eval_chain_b0(a, cfg: RadiusConfig | None = None) -> ChainReport:
    """||A||/2 <= w(A) <= ||A||."""
    c = _ctx(a, cfg)
    e = c.omega
    lows = [0.5 * c.norm, e.lower, c.norm]
    highs = [0.5 * c.norm, e.upper, c.norm]
    return _chain("B0", lows, highs)


def eval_bound_kit(a, cfg: RadiusConfig | None = None) -> BoundReport:
    """w(A) <= || |A| + |A*| || / 2."""
    c = _ctx(a, cfg)
    rhs = 0.5 * operator_norm(c.abs_left + c.abs_right)
    tol = default_tolerance(c.omega.upper, rhs)
    return _report("KIT", c.omega.lower, rhs, rhs, tol)


def eval_chain_sq(a, cfg: RadiusConfig | None = None) -> ChainReport:
    """|| |A|^2 + |A*|^2 || / 4 <= w(A)^2 <= || |A|^2 + |A*|^2 || / 2."""
    c = _ctx(a, cfg)
    e = c.omega
    lows = [0.25 * c.gram_norm, e.lower ** 2, 0.5 * c.gram_norm]
    highs = [0.25 * c.gram_norm, e.upper ** 2, 0.5 * c.gram_norm]
    return _chain("SQ", lows, highs)


def eval_bound_lem1(a, sign: int, cfg: RadiusConfig | None = None) -> BoundReport:
    """||A + sign A*|| / 2 <= w(A) for sign in {+1, -1}."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    c = _ctx(a, cfg)
    lhs = 0.5 * (c.norm_plus if sign == 1 else c.norm_minus)
    e = c.omega
    bound_id = "LEM1+" if sign == 1 else "LEM1-"
    tol = default_tolerance(lhs, e.upper)
    return _report(bound_id, lhs, e.lower, e.upper, tol)


def eval_chain_t1(a, cfg: RadiusConfig | None = None) -> ChainReport:
    """|| |A|^2+|A*|^2 ||/4 <= (||A+A*||^2 + ||A-A*||^2)/8 <= w(A)^2."""
    c = _ctx(a, cfg)
    e = c.omega
    mid = (c.norm_plus ** 2 + c.norm_minus ** 2) / 8.0
    lows = [0.25 * c.gram_norm, mid, e.lower ** 2]
    highs = [0.25 * c.gram_norm, mid, e.upper ** 2]
    return _chain("T1", lows, highs)


def eval_lemma_norm_sum(a, b, cfg: RadiusConfig | None = None) -> BoundReport:
    """||A + B|| <= sqrt(||A*A + B*B|| + 2 w(B*A))."""
    ma = as_square(a)
    mb = as_square(b)
    if ma.shape != mb.shape:
        raise ValueError(f"operands must share a shape, got {ma.shape} and {mb.shape}")
    lhs = operator_norm(ma + mb)
    gram = operator_norm(_hermitize(ma.conj().T @ ma + mb.conj().T @ mb))
    west = numerical_radius(mb.conj().T @ ma, cfg)
    rhs_low = math.sqrt(gram + 2.0 * west.lower)
    rhs_high = math.sqrt(gram + 2.0 * west.upper)
    tol = default_tolerance(lhs, rhs_high)
    return _report("LEM-SUM", lhs, rhs_low, rhs_high, tol)


def cartesian_radius_pair(a, cfg: RadiusConfig | None = None) -> tuple[RadiusEstimate, RadiusEstimate]:
    """Enclosures of w(C^2 B^2) and w((A*-A)^2 (A*+A)^2); the first equals
    one sixteenth of the second in exact arithmetic."""
    c = _ctx(a, cfg)
    return c.omega_c2b2, c.omega_quad


def eval_chain_t2(a, cfg: RadiusConfig | None = None) -> ChainReport:
    """|| |A|^2+|A*|^2 ||/4 <= sqrt(2 w(A)^4 + w((A*-A)^2(A*+A)^2)/8)/2 <= w(A)^2.

    Also cross-checks the identity w(C^2 B^2) = w((A*-A)^2 (A*+A)^2) / 16
    through the Cartesian split, within tolerance plus enclosure widths, and
    raises :class:`IdentityCheckError` if the two routes disagree."""
    c = _ctx(a, cfg)
    e = c.omega
    eq = c.omega_quad
    ec = c.omega_c2b2
    gap = abs(ec.lower - eq.lower / 16.0)
    allow = default_tolerance(ec.upper, eq.upper / 16.0) + ec.width + eq.width / 16.0
    if gap > allow:
        raise IdentityCheckError(
            f"w(C^2B^2) = {ec.lower!r} vs w((A*-A)^2(A*+A)^2)/16 = "
            f"{eq.lower / 16.0!r}; gap {gap:.3e} above {allow:.3e}"
        )

    def mid(w_a: float, w_q: float) -> float:
        return 0.5 * math.sqrt(2.0 * w_a ** 4 + w_q / 8.0)

    lows = [0.25 * c.gram_norm, mid(e.lower, eq.lower), e.lower ** 2]
    highs = [0.25 * c.gram_norm, mid(e.upper, eq.upper), e.upper ** 2]
    return _chain("T2", lows, highs)


def eval_lemma_pos_diff(p, q, cfg: RadiusConfig | None = None) -> BoundReport:
    """||P - Q|| <= max(||P||, ||Q||) - min(m(P), m(Q)) for PSD P, Q.

    Operands must be Hermitian with smallest eigenvalue >= -tolerance; small
    negative eigenvalues inside the gate are clipped to zero."""
    ep = herm_eigen(p)
    eq = herm_eigen(q)
    if ep.eigenvalues.size != eq.eigenvalues.size:
        raise ValueError("operands must share a dimension")
    scale = max(
        float(np.abs(ep.eigenvalues).max()), float(np.abs(eq.eigenvalues).max())
    )
    tol = default_tolerance(scale)
    wmin = min(float(ep.eigenvalues[0]), float(eq.eigenvalues[0]))
    if wmin < -tol:
        raise NotPositiveError(f"smallest eigenvalue {wmin:.3e} below -{tol:.3e}")
    wp = np.maximum(ep.eigenvalues, 0.0)
    wq = np.maximum(eq.eigenvalues, 0.0)
    pc = _hermitize((ep.eigenvectors * wp) @ ep.eigenvectors.conj().T)
    qc = _hermitize((eq.eigenvectors * wq) @ eq.eigenvectors.conj().T)
    lhs = operator_norm(pc - qc)
    rhs = max(float(wp[-1]), float(wq[-1])) - min(float(wp[0]), float(wq[0]))
    return _report("LEM-POSDIFF", lhs, rhs, rhs, default_tolerance(lhs, rhs))


def eval_bound_t3(a, cfg: RadiusConfig | None = None) -> BoundReport:
    """w(A)^2 <= || (|A|^2 + |A*|^2) / 2 || - m( ((|A| - |A*|)/2)^2 ).

    The form the surrounding chain results support; tight on the 2x2 Jordan
    block (both sides 1/4)."""
    c = _ctx(a, cfg)
    rhs = 0.5 * c.gram_norm - 0.25 * c.abs_diff_sq_min
    tol = default_tolerance(c.omega.upper ** 2, rhs)
    return _report("T3", c.omega.lower ** 2, rhs, rhs, tol)


def eval_bound_t3_printed(a, cfg: RadiusConfig | None = None) -> BoundReport:
    """Diagnostic variant: w(A)^2 <= ( || |A|^2+|A*|^2 || - m((|A|-|A*|)^2) ) / 2.

    Halving the subtracted minimum together with the norm makes the statement
    false in general; the 2x2 Jordan block gives lhs 0.25 against rhs 0.
    Violations are reported normally and are exempt from process exit codes."""
    c = _ctx(a, cfg)
    rhs = 0.5 * (c.gram_norm - c.abs_diff_sq_min)
    tol = default_tolerance(c.omega.upper ** 2, rhs)
    return _report("T3-PRINTED", c.omega.lower ** 2, rhs, rhs, tol)


def eval_functional_chain(a, fp: FunctionPair, cfg: RadiusConfig | None = None) -> ChainReport:
    """f(w(A)) <= || g^{-1}( (g(f(|A|)) + g(f(|A*|))) / 2 ) || <= || f(|A|) + f(|A*|) || / 2.

    Matrix functions go through the singular spectrum of A; the midpoint
    matrix gets its own spectral decomposition for g^{-1}.  With the identity
    pair the chain collapses to KIT."""
    c = _ctx(a, cfg)
    _check_pair_hypotheses(fp)
    gof = lambda x: fp.g(fp.f(x))
    x_mid = 0.5 * (c.f_abs_left(gof) + c.f_abs_right(gof))
    mid = operator_norm(apply_herm_fn(x_mid, fp.g_inverse))
    right = 0.5 * operator_norm(c.f_abs_left(fp.f) + c.f_abs_right(fp.f))
    e = c.omega
    f_lo, f_hi = sorted((float(fp.f(e.lower)), float(fp.f(e.upper))))
    lows = [f_lo, mid, right]
    highs = [f_hi, mid, right]
    return _chain("FUNC", lows, highs)


def eval_chain_cor(a, r: float = 2.0, cfg: RadiusConfig | None = None) -> ChainReport:
    """w(A)^r <= || S + I - sqrt(2 S + I) || / 2 <= || |A|^r + |A*|^r || / 2
    with S = |A|^r + |A*|^r + |A|^{r/2} + |A*|^{r/2} and r >= 2.

    The middle term is assembled literally (matrix powers, explicit square
    root of 2S + I, matrix subtraction) and asserted equal, within tolerance,
    to the middle of the functional chain for the pair (x^r, x + sqrt(x));
    disagreement raises :class:`IdentityCheckError`."""
    if r < 2:
        raise ValueError("exponent r must be at least 2")
    c = _ctx(a, cfg)
    r = float(r)
    pw = lambda x: x ** r + x ** (r / 2.0)
    s_mat = c.f_abs_left(pw) + c.f_abs_right(pw)
    eye = np.eye(s_mat.shape[0])
    root = apply_herm_fn(2.0 * s_mat + eye, np.sqrt)
    mid = 0.5 * operator_norm(s_mat + eye - root)

    func_mid = eval_functional_chain(c, power_sqrt_pair(r), cfg).terms[1]
    tol_mid = default_tolerance(mid, func_mid)
    if abs(mid - func_mid) > tol_mid:
        raise IdentityCheckError(
            f"corollary middle {mid!r} disagrees with functional middle "
            f"{func_mid!r} beyond {tol_mid:.3e}"
        )

    right = 0.5 * operator_norm(c.f_abs_left(lambda x: x ** r) + c.f_abs_right(lambda x: x ** r))
    e = c.omega
    lows = [e.lower ** r, mid, right]
    highs = [e.upper ** r, mid, right]
    return _chain("COR", lows, highs)


@dataclass(frozen=True)
class CatalogEntry:
    bound_id: str
    description: str
    arity: int


_CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry("B0", "||A||/2 <= w(A) <= ||A||", 1),
    CatalogEntry("KIT", "w(A) <= || |A| + |A*| || / 2", 1),
    CatalogEntry("SQ", "|| |A|^2+|A*|^2 ||/4 <= w(A)^2 <= || |A|^2+|A*|^2 ||/2", 1),
    CatalogEntry("LEM1+", "||A + A*||/2 <= w(A)", 1),
    CatalogEntry("LEM1-", "||A - A*||/2 <= w(A)", 1),
    CatalogEntry(
        "T1", "|| |A|^2+|A*|^2 ||/4 <= (||A+A*||^2 + ||A-A*||^2)/8 <= w(A)^2", 1
    ),
    CatalogEntry("LEM-SUM", "||A+B|| <= sqrt(||A*A + B*B|| + 2 w(B*A))", 2),
    CatalogEntry(
        "T2",
        "|| |A|^2+|A*|^2 ||/4 <= sqrt(2 w(A)^4 + w((A*-A)^2(A*+A)^2)/8)/2 <= w(A)^2",
        1,
    ),
    CatalogEntry(
        "LEM-POSDIFF", "||P - Q|| <= max(||P||,||Q||) - min(m(P), m(Q)) for PSD P, Q", 2
    ),
    CatalogEntry("T3", "w(A)^2 <= || (|A|^2+|A*|^2)/2 || - m(((|A|-|A*|)/2)^2)", 1),
    CatalogEntry(
        "T3-PRINTED",
        "w(A)^2 <= (|| |A|^2+|A*|^2 || - m((|A|-|A*|)^2))/2  [diagnostic, fails on the Jordan block]",
        1,
    ),
    CatalogEntry(
        "FUNC",
        "f(w(A)) <= || g^{-1}((g(f(|A|)) + g(f(|A*|)))/2) || <= || f(|A|)+f(|A*|) ||/2",
        1,
    ),
    CatalogEntry(
        "COR",
        "w(A)^r <= || S + I - sqrt(2S+I) ||/2 <= || |A|^r+|A*|^r ||/2, "
        "S = |A|^r+|A*|^r+|A|^{r/2}+|A*|^{r/2}",
        1,
    ),
)

_ARITY = {entry.bound_id: entry.arity for entry in _CATALOG}


def catalog_list() -> tuple[CatalogEntry, ...]:
    """The 13 registry entries, in catalog order."""
    return _CATALOG


def parse_bound_id(token: str) -> tuple[str, float | None]:
    """Split an id token like ``COR:3`` into base id and optional exponent."""
    base, sep, suffix = token.partition(":")
    if base not in _ARITY:
        valid = ", ".join(entry.bound_id for entry in _CATALOG)
        raise ValueError(f"unknown bound id {token!r}; valid ids: {valid}")
    r = None
    if sep:
        try:
            r = float(suffix)
        except ValueError:
            raise ValueError(f"bad exponent suffix in {token!r}") from None
        if base not in ("COR", "FUNC"):
            raise ValueError(f"bound {base} takes no exponent suffix")
        if r < 2:
            raise ValueError("exponent r must be at least 2")
    return base, r


def evaluate(token: str, a, cfg: RadiusConfig | None = None, r: float = 2.0):
    """Evaluate a single-matrix catalog entry by id (``COR:3`` style suffixes
    override the exponent).  Arity-2 lemmas cannot be evaluated here."""
    base, suffix_r = parse_bound_id(token)
    if _ARITY[base] != 1:
        raise ValueError(f"bound {base} needs two matrices")
    use_r = suffix_r if suffix_r is not None else float(r)
    c = _ctx(a, cfg)
    if base == "B0":
        return eval_chain_b0(c)
    if base == "KIT":
        return eval_bound_kit(c)
    if base == "SQ":
        return eval_chain_sq(c)
    if base == "LEM1+":
        return eval_bound_lem1(c, 1)
    if base == "LEM1-":
        return eval_bound_lem1(c, -1)
    if base == "T1":
        return eval_chain_t1(c)
    if base == "T2":
        return eval_chain_t2(c)
    if base == "T3":
        return eval_bound_t3(c)
    if base == "T3-PRINTED":
        return eval_bound_t3_printed(c)
    if base == "FUNC":
        return eval_functional_chain(c, power_sqrt_pair(use_r))
    if base == "COR":
        return eval_chain_cor(c, use_r)
    raise AssertionError(f"unhandled bound id {base}")


# Catalog-cased aliases so callers can use the registry ids verbatim.
eval_chain_B0 = eval_chain_b0
eval_bound_KIT = eval_bound_kit
eval_chain_SQ = eval_chain_sq
eval_bound_LEM1 = eval_bound_lem1
eval_chain_T1 = eval_chain_t1
eval_chain_T2 = eval_chain_t2
eval_bound_T3 = eval_bound_t3
eval_bound_T3_printed = eval_bound_t3_printed
eval_chain_COR = eval_chain_cor
