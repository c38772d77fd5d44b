"""Numerical radius engine with certified enclosures.

The numerical radius w(A) = sup_{||x||=1} |<Ax, x>| equals
max_theta lambda_max(H(theta)) for the Hermitian envelope
H(theta) = (e^{i theta} A + e^{-i theta} A*) / 2.

Every envelope eigenvalue g(theta) is a valid lower bound.  The upper
certificate comes from the support-plane picture: each numerical-range point
z satisfies Re(e^{i theta_k} z) <= g(theta_k) for every grid angle, and some
grid angle lies within h/2 of -arg(z), so

    w(A) <= max_k g(theta_k) / cos(h/2),            h = 2 pi / N.

That bound is second order in h.  The first-order Lipschitz bound
max_k g + ||A|| h / 2 (g is ||A||-Lipschitz) is kept as a fallback and the
reported upper endpoint is the smaller of the two plus a kernel-accuracy
slack of RESIDUAL_FACTOR * n * eps * ||A||.

Grid refinement doubles the conceptual grid until the enclosure meets the
requested width, but only re-evaluates intervals whose local certificate
max(g_left, g_right, 0)/cos(h/2) still exceeds the best certified lower
bound; discarded intervals provably cannot contain the maximizer, so the
enclosure stays sound.  Rayleigh ascent (theta <- -arg<Ax,x>, x <- top
eigenvector of H(theta)) only ever raises the lower bound.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

from .linalg import EPS, RESIDUAL_FACTOR, adjoint, as_square, operator_norm

TWO_PI = 2.0 * np.pi

# Hard cap on the conceptual grid size during enclosure refinement.
GRID_CAP = 2 ** 20

# Batch size for vectorized envelope eigenvalue sweeps.
_SWEEP_CHUNK = 8192

# Sample batch for the randomized Rayleigh oracle.
_ORACLE_CHUNK = 20000

_SEED_MASK = (1 << 64) - 1


class EnclosureNotReached(RuntimeError):
    """Raised when the grid cap is hit before the requested width; carries
    the best estimate found so far in ``estimate``."""

    def __init__(self, message: str, estimate: "RadiusEstimate"):
        super().__init__(message)
        self.estimate = estimate


@dataclass(frozen=True)
class RadiusConfig:
    """Knobs for the enclosure engine.

    ``target_width`` is an absolute enclosure width; when ``None`` the width
    resolves to ``target_width_rel * max(1, ||A||)`` with ``target_width_rel``
    defaulting to 1e-9.  ``oracle_samples > 0`` adds a randomized Rayleigh
    lower-bound pass seeded by ``seed``.
    """

    grid_points: int = 1024
    target_width: float | None = None
    target_width_rel: float | None = None
    max_refinement_iters: int = 200
    oracle_samples: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.grid_points < 8:
            raise ValueError("grid_points must be at least 8")
        if self.target_width is not None and not self.target_width > 0:
            raise ValueError("target_width must be positive")
        if self.target_width_rel is not None and not self.target_width_rel > 0:
            raise ValueError("target_width_rel must be positive")
        if self.max_refinement_iters < 0:
            raise ValueError("max_refinement_iters must be non-negative")
        if self.oracle_samples < 0:
            raise ValueError("oracle_samples must be non-negative")

    def resolve_target(self, norm: float) -> float:
        if self.target_width is not None:
            return self.target_width
        rel = self.target_width_rel if self.target_width_rel is not None else 1e-9
        return rel * max(1.0, norm)


@dataclass(eq=False)
class RadiusEstimate:
    """Certified enclosure lower <= w(A) <= upper.

    ``witness`` is a unit vector with |<A witness, witness>| equal to
    ``lower`` (to rounding), ``theta_star`` the angle in [0, 2 pi) at which
    the maximum was located, ``grid_points`` the resolution of the grid the
    upper certificate refers to.
    """

    lower: float
    upper: float
    theta_star: float
    witness: np.ndarray
    grid_points: int
    refinement_iters: int = 0

    @property
    def width(self) -> float:
        return self.upper - self.lower


def herm_envelope(a, theta: float) -> np.ndarray:
    """H(theta) = (e^{i theta} A + e^{-i theta} A*) / 2 (exactly Hermitian)."""
    m = as_square(a)
    ph = np.exp(1j * float(theta))
    return 0.5 * (ph * m + np.conj(ph) * m.conj().T)


def _envelope_gvals(m: np.ndarray, mh: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """lambda_max(H(theta)) for a batch of angles."""
    out = np.empty(thetas.size)
    for s in range(0, thetas.size, _SWEEP_CHUNK):
        ph = np.exp(1j * thetas[s : s + _SWEEP_CHUNK])
        h = 0.5 * (ph[:, None, None] * m + np.conj(ph)[:, None, None] * mh)
        out[s : s + _SWEEP_CHUNK] = np.linalg.eigvalsh(h)[:, -1]
    return out


def _top_vector(m: np.ndarray, mh: np.ndarray, theta: float) -> tuple[float, np.ndarray]:
    ph = np.exp(1j * theta)
    w, v = np.linalg.eigh(0.5 * (ph * m + np.conj(ph) * mh))
    return float(w[-1]), v[:, -1]


def _ascend(
    m: np.ndarray,
    mh: np.ndarray,
    x: np.ndarray,
    lower: float,
    theta: float,
    max_iters: int,
    stop_delta: float,
) -> tuple[float, np.ndarray, float, int]:
    """Alternating Rayleigh ascent; monotone in the lower bound."""
    iters = 0
    for _ in range(max_iters):
        z = complex(np.vdot(x, m @ x))
        th = 0.0 if z == 0 else float(-np.angle(z))
        _, v = _top_vector(m, mh, th)
        z2 = complex(np.vdot(v, m @ v))
        cand = abs(z2)
        iters += 1
        delta = cand - lower
        if cand > lower:
            lower = cand
            x = v
            theta = float(-np.angle(z2)) % TWO_PI if z2 != 0 else th % TWO_PI
        if abs(delta) <= stop_delta:
            break
    return lower, x, theta, iters


def _oracle_max(m: np.ndarray, samples: int, seed: int) -> tuple[float, np.ndarray | None]:
    """Best |<Ax,x>| over Haar-random unit vectors; deterministic in seed."""
    n = m.shape[0]
    rng = np.random.default_rng(int(seed) & _SEED_MASK)
    best = -1.0
    best_vec = None
    left = int(samples)
    while left > 0:
        k = min(left, _ORACLE_CHUNK)
        left -= k
        x = (rng.standard_normal((k, n)) + 1j * rng.standard_normal((k, n)))
        nrm = np.linalg.norm(x, axis=1)
        nrm[nrm == 0] = 1.0
        x /= nrm[:, None]
        vals = np.abs(np.einsum("ij,ij->i", x.conj(), x @ m.T))
        j = int(np.argmax(vals))
        if float(vals[j]) > best:
            best = float(vals[j])
            best_vec = x[j].copy()
    return best, best_vec


def radius_sample_oracle(a, samples: int, seed: int = 0) -> float:
    """Randomized lower-bound estimate max_j |<A x_j, x_j>| over ``samples``
    Haar-random unit vectors.  Never exceeds w(A) beyond rounding."""
    m = as_square(a)
    if samples < 1:
        raise ValueError("samples must be at least 1")
    best, _ = _oracle_max(m, samples, seed)
    return best


def _grid_upper(lower: float, norm: float, h: float, slack: float) -> float:
    """Certified upper endpoint for a full uniform grid with max value ``lower``."""
    secant = max(lower, 0.0) / np.cos(h / 2.0)
    first_order = lower + norm * h / 2.0
    return min(secant, first_order) + slack


def radius_sweep(a, cfg: RadiusConfig | None = None) -> RadiusEstimate:
    """Single uniform-grid sweep.

    lower = max_k g(theta_k) with ties resolved to the smallest angle;
    upper = certified bound for that grid; witness = top eigenvector of
    H(theta_star).  No refinement is performed.
    """
    m = as_square(a)
    cfg = cfg or RadiusConfig()
    mh = m.conj().T
    n = m.shape[0]
    norm = operator_norm(m)
    nn = cfg.grid_points
    thetas = np.arange(nn) * (TWO_PI / nn)
    g = _envelope_gvals(m, mh, thetas)
    k = int(np.argmax(g))
    lower = float(g[k])
    slack = RESIDUAL_FACTOR * n * EPS * norm
    upper = _grid_upper(lower, norm, TWO_PI / nn, slack)
    _, witness = _top_vector(m, mh, float(thetas[k]))
    return RadiusEstimate(
        lower=lower,
        upper=float(upper),
        theta_star=float(thetas[k]),
        witness=witness,
        grid_points=nn,
        refinement_iters=0,
    )


def radius_refine(a, est: RadiusEstimate, cfg: RadiusConfig | None = None) -> RadiusEstimate:
    """Rayleigh ascent from the estimate's witness.  Monotonically raises
    ``lower``; the grid certificate ``upper`` is left untouched."""
    m = as_square(a)
    cfg = cfg or RadiusConfig()
    mh = m.conj().T
    norm = operator_norm(m)
    stop = 0.01 * cfg.resolve_target(norm)
    lower, x, theta, iters = _ascend(
        m, mh, est.witness, est.lower, est.theta_star, cfg.max_refinement_iters, stop
    )
    return dataclasses.replace(
        est,
        lower=max(est.lower, lower),
        witness=x,
        theta_star=theta % TWO_PI,
        refinement_iters=est.refinement_iters + iters,
    )


def numerical_radius(a, cfg: RadiusConfig | None = None) -> RadiusEstimate:
    """Certified enclosure of w(A): sweep, Rayleigh refinement, then grid
    doubling (with interval pruning) until upper - lower <= target width.

    Raises :class:`EnclosureNotReached` carrying the best estimate if the
    grid cap of 2**20 points is insufficient.
    """
    m = as_square(a)
    cfg = cfg or RadiusConfig()
    mh = m.conj().T
    n = m.shape[0]
    norm = operator_norm(m)
    target = cfg.resolve_target(norm)
    stop = 0.01 * target
    slack = RESIDUAL_FACTOR * n * EPS * norm

    nn = cfg.grid_points
    h = TWO_PI / nn
    lefts = np.arange(nn) * h
    gl = _envelope_gvals(m, mh, lefts)
    gr = np.roll(gl, -1)

    k = int(np.argmax(gl))
    lower = float(gl[k])
    theta = float(lefts[k])
    _, x = _top_vector(m, mh, theta)
    lower, x, theta, iters = _ascend(m, mh, x, lower, theta, cfg.max_refinement_iters, stop)

    if cfg.oracle_samples > 0:
        val, vec = _oracle_max(m, cfg.oracle_samples, cfg.seed)
        if vec is not None and val > lower:
            lower, x, theta, it2 = _ascend(
                m, mh, vec, val, theta, cfg.max_refinement_iters, stop
            )
            iters += it2

    while True:
        if lefts.size:
            peak = np.maximum(gl, gr)
            certs = np.minimum(
                np.maximum(peak, 0.0) / np.cos(h / 2.0),
                peak + norm * h / 2.0,
            ) + slack
            upper = max(lower, float(certs.max()))
        else:
            certs = np.empty(0)
            upper = lower
        if upper - lower <= target:
            break
        if 2 * nn > GRID_CAP:
            best = RadiusEstimate(lower, upper, theta % TWO_PI, x, nn, iters)
            raise EnclosureNotReached(
                f"enclosure width {upper - lower:.3e} above target {target:.3e} "
                f"at grid cap {GRID_CAP}",
                best,
            )
        keep = certs > lower
        lefts, gl, gr = lefts[keep], gl[keep], gr[keep]
        mids = lefts + h / 2.0
        gm = _envelope_gvals(m, mh, mids) if mids.size else np.empty(0)
        if gm.size:
            j = int(np.argmax(gm))
            if float(gm[j]) > lower:
                _, v = _top_vector(m, mh, float(mids[j]))
                lower, x, theta, it3 = _ascend(
                    m, mh, v, lower, theta, cfg.max_refinement_iters, stop
                )
                iters += it3
        lefts = np.concatenate([lefts, mids])
        gl, gr = np.concatenate([gl, gm]), np.concatenate([gm, gr])
        order = np.argsort(lefts, kind="stable")
        lefts, gl, gr = lefts[order], gl[order], gr[order]
        h /= 2.0
        nn *= 2

    return RadiusEstimate(
        lower=float(lower),
        upper=float(upper),
        theta_star=float(theta % TWO_PI),
        witness=x,
        grid_points=nn,
        refinement_iters=iters,
    )
