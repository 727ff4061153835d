"""Moment-corrected mollifiers, epsilon-scaled regularization, derivative
seminorms and asymptotic-order classification.

Everything is one-dimensional: the mollifier is an even bump
exp(-1/(1-t^2)) on (-1, 1) times an even polynomial correction chosen so the
moments 1..q vanish while the total mass stays one.  Regularization defects
are measured per epsilon on a compact grid and classified by the fitted
log-log slope of the ladder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import sympy as sp


# ---------------------------------------------------------------------------
# mollifier
# ---------------------------------------------------------------------------

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(200)


def _bump(t: np.ndarray) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    inside = np.abs(t) < 1.0
    ti = t[inside]
    out[inside] = np.exp(-1.0 / (1.0 - ti ** 2))
    return out


@dataclass(frozen=True)
class Mollifier:
    """Unit-mass bump with vanishing moments 1..q, supported in [-1, 1]."""

    q: int
    correction: np.ndarray = field(repr=False)   # coefficients of c(t^2)
    grid: np.ndarray = field(repr=False)         # dense sample grid
    samples: np.ndarray = field(repr=False)

    def __call__(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        c = np.polynomial.polynomial.polyval(t ** 2, self.correction)
        return _bump(t) * c

    @property
    def sup(self) -> float:
        return float(np.max(np.abs(self.samples)))

    def derivative_fn(self, order: int):
        """Callable for the order-th derivative, symbolic inside the support."""
        if order == 0:
            return self
        t = sp.Symbol("t")
        c = sum(sp.Float(cj) * t ** (2 * j) for j, cj in enumerate(self.correction))
        expr = sp.diff(sp.exp(-1 / (1 - t ** 2)) * c, t, order)
        inner = sp.lambdify(t, expr, modules="numpy")

        def deriv(x):
            x = np.asarray(x, dtype=float)
            out = np.zeros_like(x)
            inside = np.abs(x) < 1.0 - 1e-12
            out[inside] = inner(x[inside])
            return out

        return deriv


def build_mollifier(q: int, grid_points: int = 4001) -> Mollifier:
    """Solve the even-moment system so moments 2, 4, .., q vanish; mass one."""
    if q < 0 or q % 2 != 0:
        raise ValueError(f"q must be an even nonnegative integer, got {q}")
    n = q // 2 + 1
    base_even_moments = np.array([
        float(np.sum(_GL_WEIGHTS * _GL_NODES ** (2 * m) * _bump(_GL_NODES)))
        for m in range(2 * n)
    ])
    system = np.array([[base_even_moments[a + j] for j in range(n)] for a in range(n)])
    rhs = np.zeros(n)
    rhs[0] = 1.0
    cond = np.linalg.cond(system)
    if not np.isfinite(cond) or cond > 1e14:
        raise ValueError("moment system is numerically singular")
    correction = np.linalg.solve(system, rhs)
    grid = np.linspace(-1.0, 1.0, grid_points)
    c = np.polynomial.polynomial.polyval(grid ** 2, correction)
    return Mollifier(q=q, correction=correction, grid=grid, samples=_bump(grid) * c)


def mollifier_moment(m: Mollifier, a: int) -> float:
    """Quadrature moment integral of t^a against the mollifier."""
    return float(np.sum(_GL_WEIGHTS * _GL_NODES ** a * m(_GL_NODES)))


# ---------------------------------------------------------------------------
# regularization
# ---------------------------------------------------------------------------

def regularize(f, m: Mollifier, eps: float, k_grid) -> np.ndarray:
    """Samples of f_eps(t) = integral f(t + eps*y) phi(y) dy on the grid."""
    if not 0 < eps <= 1:
        raise ValueError(f"eps must lie in (0, 1], got {eps}")
    k_grid = np.asarray(k_grid, dtype=float)
    phi_vals = m(_GL_NODES) * _GL_WEIGHTS
    pts = k_grid[:, None] + eps * _GL_NODES[None, :]
    return np.asarray(f(pts), dtype=float) @ phi_vals


def regularize_derivative(f, m: Mollifier, eps: float, k_grid, order: int) -> np.ndarray:
    """Exact-route derivative: f * (phi_eps)^(order), valid for continuous f."""
    if order == 0:
        return regularize(f, m, eps, k_grid)
    k_grid = np.asarray(k_grid, dtype=float)
    dphi = m.derivative_fn(order)
    w = dphi(_GL_NODES) * _GL_WEIGHTS
    pts = k_grid[:, None] + eps * _GL_NODES[None, :]
    # sign: d/dt of integral f(t + eps y) phi(y) dy moved onto phi gives
    # (-1)^order eps^(-order) ... after integrating by parts; equivalently
    # differentiate under the integral: each t-derivative hits f, and by the
    # substitution u = t + eps y this equals the phi-derivative route below.
    return (np.asarray(f(pts), dtype=float) @ w) * (-1.0) ** order / eps ** order


# ---------------------------------------------------------------------------
# seminorms and order estimation
# ---------------------------------------------------------------------------

def _fornberg_weights(order: int, offsets: np.ndarray) -> np.ndarray:
    """Finite-difference weights for the given derivative order on unit offsets."""
    n = len(offsets)
    mat = np.vander(offsets, n, increasing=True).T   # row m: offsets^m
    rhs = np.zeros(n)
    rhs[order] = math.factorial(order)
    return np.linalg.solve(mat, rhs)


_STENCILS = {
    0: np.array([0]),
    1: np.arange(-2, 3),
    2: np.arange(-2, 3),
    3: np.arange(-3, 4),
    4: np.arange(-3, 4),
}


def seminorm(samples, k_grid, alpha: int) -> float:
    """sup over the grid of the alpha-th central finite difference (4th order)."""
    if alpha not in _STENCILS:
        raise ValueError(f"derivative order must be 0..4, got {alpha}")
    samples = np.asarray(samples, dtype=float)
    k_grid = np.asarray(k_grid, dtype=float)
    if alpha == 0:
        return float(np.max(np.abs(samples)))
    offs = _STENCILS[alpha]
    if len(samples) < 2 * len(offs):
        raise ValueError("grid too coarse for the requested derivative order")
    h = k_grid[1] - k_grid[0]
    w = _fornberg_weights(alpha, offs.astype(float)) / h ** alpha
    half = offs[-1]
    acc = sum(wi * samples[half + o: len(samples) - half + o or None]
              for wi, o in zip(w, offs))
    return float(np.max(np.abs(acc)))


def default_ladder(j_max: int = 12, j_min: int = 1) -> np.ndarray:
    return 2.0 ** -np.arange(j_min, j_max + 1)


@dataclass(frozen=True)
class EpsilonNet:
    """Geometric epsilon ladder with per-epsilon seminorm values."""

    epsilons: np.ndarray
    values: np.ndarray
    meta: dict

    def __post_init__(self):
        eps = np.asarray(self.epsilons, dtype=float)
        if np.any(np.diff(eps) >= 0):
            raise ValueError("epsilons must be strictly decreasing")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("seminorm values must be finite")


@dataclass(frozen=True)
class AsymptoticReport:
    slope: float
    kind: str           # "negligible", "moderate" or "unbounded"
    order: int


def estimate_order(net: EpsilonNet, negligible_order: int | None = None,
                   max_moderate: int = 8, noise_floor: float = 1e-13) -> AsymptoticReport:
    """Least-squares log-log slope of the last 4 usable ladder points.

    Points whose value sits below the double-precision noise floor carry no
    rate information and are skipped.  negligible(m) when the slope certifies
    O(eps^m) for the requested m; moderate(N) when values are O(eps^-N) for
    some N <= max_moderate; unbounded otherwise.
    """
    if len(net.epsilons) < 4:
        raise ValueError("need at least 4 epsilon points")
    eps = np.asarray(net.epsilons, dtype=float)
    vals = np.asarray(net.values, dtype=float)
    usable = vals > noise_floor
    if usable.sum() >= 4:
        eps, vals = eps[usable][-4:], vals[usable][-4:]
    elif usable.sum() == 0:
        # everything already annihilated: certify any requested order
        slope = float(np.inf)
        kind = "negligible" if negligible_order is not None else "moderate"
        return AsymptoticReport(slope=slope, kind=kind,
                                order=negligible_order if negligible_order is not None else 0)
    else:
        eps, vals = eps[:4], vals[:4]
    slope = float(np.polyfit(np.log(eps), np.log(vals), 1)[0])
    if negligible_order is not None and slope >= negligible_order - 1e-9:
        return AsymptoticReport(slope=slope, kind="negligible", order=negligible_order)
    if slope >= -max_moderate - 1e-9:
        return AsymptoticReport(slope=slope, kind="moderate",
                                order=max(0, math.ceil(-slope - 1e-9)))
    return AsymptoticReport(slope=slope, kind="unbounded", order=-1)


# ---------------------------------------------------------------------------
# defect experiments
# ---------------------------------------------------------------------------

def taylor_defect(f, m: Mollifier, epsilons=None, k_grid=None) -> EpsilonNet:
    """Per-epsilon sup over K of |f - f * phi_eps|."""
    epsilons = default_ladder() if epsilons is None else np.asarray(epsilons, float)
    k_grid = np.linspace(-1.0, 1.0, 801) if k_grid is None else np.asarray(k_grid, float)
    exact = np.asarray(f(k_grid), dtype=float)
    vals = np.array([
        np.max(np.abs(exact - regularize(f, m, e, k_grid))) for e in epsilons
    ])
    return EpsilonNet(epsilons=epsilons, values=vals,
                      meta={"K": (float(k_grid[0]), float(k_grid[-1])),
                            "alpha": 0, "q": m.q, "defect": "taylor"})


def product_defect(f, g, m: Mollifier, epsilons=None, k_grid=None) -> EpsilonNet:
    """Per-epsilon sup of |(f*phi_eps)(g*phi_eps) - (fg)*phi_eps|."""
    epsilons = default_ladder() if epsilons is None else np.asarray(epsilons, float)
    k_grid = np.linspace(-1.0, 1.0, 801) if k_grid is None else np.asarray(k_grid, float)

    def fg(t):
        return np.asarray(f(t), float) * np.asarray(g(t), float)

    vals = np.array([
        np.max(np.abs(regularize(f, m, e, k_grid) * regularize(g, m, e, k_grid)
                      - regularize(fg, m, e, k_grid)))
        for e in epsilons
    ])
    return EpsilonNet(epsilons=epsilons, values=vals,
                      meta={"K": (float(k_grid[0]), float(k_grid[-1])),
                            "alpha": 0, "q": m.q, "defect": "product"})


def seminorm_net(f, m: Mollifier, alpha: int, epsilons=None, k_grid=None,
                 exact_route: bool = True) -> EpsilonNet:
    """Per-epsilon derivative seminorm ladder of the regularization of f."""
    epsilons = default_ladder() if epsilons is None else np.asarray(epsilons, float)
    k_grid = np.linspace(-1.0, 1.0, 801) if k_grid is None else np.asarray(k_grid, float)
    vals = []
    for e in epsilons:
        if exact_route and alpha > 0:
            vals.append(np.max(np.abs(regularize_derivative(f, m, e, k_grid, alpha))))
        else:
            vals.append(seminorm(regularize(f, m, e, k_grid), k_grid, alpha))
    return EpsilonNet(epsilons=epsilons, values=np.array(vals),
                      meta={"K": (float(k_grid[0]), float(k_grid[-1])),
                            "alpha": alpha, "q": m.q, "defect": "seminorm"})


def l1_embedding_bound(f, m: Mollifier, eps: float, k_grid=None,
                       support=(-2.0, 2.0), n_fine: int = 20001) -> dict:
    """Check sup_K |f * phi_eps| <= c ||f||_L1 with c = sup|phi| / eps.

    Convolution and L1 norm use the same fine u-grid (midpoint rule), so the
    discrete inequality is a triangle inequality and the reported ratio
    measures how sharp the bound is.
    """
    k_grid = np.linspace(-1.0, 1.0, 201) if k_grid is None else np.asarray(k_grid, float)
    du = (support[1] - support[0]) / n_fine
    u = support[0] + du * (np.arange(n_fine) + 0.5)
    fu = np.asarray(f(u), dtype=float)
    l1_norm = float(np.sum(np.abs(fu)) * du)
    # (f * phi_eps)(x) = sum f(u) phi((x - u)/eps) / eps * du
    kernel = m((k_grid[:, None] - u[None, :]) / eps) / eps
    sup_value = float(np.max(np.abs(kernel @ fu * du)))
    c = m.sup / eps
    bound = c * l1_norm
    return {"sup_value": sup_value, "l1_norm": l1_norm, "c": c,
            "holds": bool(sup_value <= bound + 1e-12)}


# ---------------------------------------------------------------------------
# function catalog for the command line and demos
# ---------------------------------------------------------------------------

def catalog(name: str):
    """Named test functions: const, poly:k, abs, heaviside, exp, sin, spike:w."""
    if name == "const":
        return lambda t: np.ones_like(np.asarray(t, dtype=float))
    if name.startswith("poly:"):
        k = int(name.split(":", 1)[1])
        return lambda t: np.asarray(t, dtype=float) ** k
    if name == "abs":
        return lambda t: np.abs(np.asarray(t, dtype=float))
    if name == "heaviside":
        return lambda t: np.heaviside(np.asarray(t, dtype=float), 0.5)
    if name == "exp":
        return lambda t: np.exp(np.asarray(t, dtype=float))
    if name == "sin":
        return lambda t: np.sin(np.asarray(t, dtype=float))
    if name.startswith("spike:"):
        w = float(name.split(":", 1)[1])
        return lambda t: np.where(np.abs(np.asarray(t, dtype=float)) < w / 2,
                                  1.0 / w, 0.0)
    raise KeyError(f"unknown catalog function {name!r}")
