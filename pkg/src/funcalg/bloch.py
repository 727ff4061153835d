"""alpha-Bloch seminorms and norms, Mobius transforms of the disc, the
invariant gradient, little-Bloch membership and pointwise multipliers.

Suprema over the open disc are approximated on a radial-angular grid whose
resolution is doubled until the value changes by less than a refinement
tolerance; the report records the grid point attaining the maximum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .numcore import HoloPoly

REFINE_TOL = 1e-6


@dataclass(frozen=True)
class BlochReport:
    alpha: float
    seminorm: float
    norm: float
    argmax_z: complex


def _sup_on_grid(f_prime: HoloPoly, alpha: float, n_rad: int, n_ang: int):
    # closed radial grid [0, 1) biased toward the boundary is unnecessary for
    # polynomials: (1-r^2)^alpha kills the boundary, so uniform radii suffice
    r = np.linspace(0.0, 1.0, n_rad, endpoint=False)
    theta = 2.0 * np.pi * np.arange(n_ang) / n_ang
    z = r[:, None] * np.exp(1j * theta)[None, :]
    vals = (1.0 - np.abs(z) ** 2) ** alpha * np.abs(f_prime(z))
    idx = np.unravel_index(np.argmax(vals), vals.shape)
    return float(vals[idx]), complex(z[idx])


def bloch_seminorm(f: HoloPoly, alpha: float, n_rad: int = 64, n_ang: int = 64,
                   refine_tol: float = REFINE_TOL, max_refine: int = 4) -> BlochReport:
    """sup over the disc of (1-|z|^2)^alpha |f'(z)|, with certified grid refinement."""
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if n_rad < 2 or n_ang < 4:
        raise ValueError("grid too small")
    fp = f.derivative()
    best, argmax = _sup_on_grid(fp, alpha, n_rad, n_ang)
    for _ in range(max_refine):
        n_rad *= 2
        n_ang *= 2
        new, argmax = _sup_on_grid(fp, alpha, n_rad, n_ang)
        converged = abs(new - best) < refine_tol
        best = new
        if converged:
            break

    # local polish: the grid certifies the basin, Nelder-Mead pins the value
    def neg(x):
        r = min(max(x[0], 0.0), 1.0 - 1e-12)
        z = r * np.exp(1j * x[1])
        return -((1.0 - r ** 2) ** alpha * abs(fp(z)))

    res = minimize(neg, [abs(argmax), np.angle(argmax)], method="Nelder-Mead",
                   options={"xatol": 1e-10, "fatol": 1e-12})
    if -res.fun > best:
        best = float(-res.fun)
        r = min(max(res.x[0], 0.0), 1.0 - 1e-12)
        argmax = complex(r * np.exp(1j * res.x[1]))
    f0 = abs(f(0.0))
    return BlochReport(alpha=float(alpha), seminorm=best, norm=f0 + best,
                       argmax_z=argmax)


def bloch_norm(f: HoloPoly, alpha: float = 1.0, **kw) -> float:
    """|f(0)| + Bloch seminorm."""
    return bloch_seminorm(f, alpha, **kw).norm


def mobius(a: complex, z):
    """Disc automorphism phi_a(z) = (a - z) / (1 - conj(a) z); swaps 0 and a."""
    if abs(a) >= 1:
        raise ValueError(f"|a| must be < 1, got |a| = {abs(a)}")
    z = np.asarray(z, dtype=complex)
    denom = 1.0 - np.conj(a) * z
    if np.any(np.abs(denom) < 1e-14):
        raise ValueError("pole of the Mobius transform: conj(a) * z = 1")
    out = (a - z) / denom
    return out if out.shape else complex(out)


def invariant_gradient_norm(f: HoloPoly, z: complex) -> float:
    """Mobius-invariant gradient magnitude (1 - |z|^2) |f'(z)|."""
    if abs(z) >= 1:
        raise ValueError(f"|z| must be < 1, got {abs(z)}")
    return float((1.0 - abs(z) ** 2) * abs(f.derivative()(z)))


def little_bloch_test(f: HoloPoly, radii, tol: float = 1e-3, n_ang: int = 256) -> bool:
    """True iff the invariant gradient decays along the given radius ladder.

    Requires the per-radius angular maxima to be eventually decreasing and the
    value at the largest radius to fall below tol.
    """
    radii = np.asarray(radii, dtype=float)
    if not (np.all(np.diff(radii) > 0) and radii.max() < 1):
        raise ValueError("radii must be strictly increasing with max < 1")
    fp = f.derivative()
    theta = 2.0 * np.pi * np.arange(n_ang) / n_ang
    ring = np.exp(1j * theta)
    maxima = np.array([
        np.max((1.0 - r ** 2) * np.abs(fp(r * ring))) for r in radii
    ])
    tail = maxima[len(maxima) // 2:]
    eventually_decreasing = bool(np.all(np.diff(tail) <= 1e-12))
    return bool(maxima[-1] < tol and eventually_decreasing)


def multiplier_apply(phi: HoloPoly, f: HoloPoly) -> HoloPoly:
    """Pointwise multiplier: M_phi(f) = phi * f."""
    return phi * f


def multiplier_norm_report(phi: HoloPoly, test_set, alpha: float = 1.0, **kw) -> float:
    """sup over the test set of ||phi f||_B / ||f||_B."""
    ratios = []
    for f in test_set:
        denom = bloch_norm(f, alpha, **kw)
        if denom < 1e-14:
            continue
        ratios.append(bloch_norm(multiplier_apply(phi, f), alpha, **kw) / denom)
    if not ratios:
        raise ValueError("test set contains no nonzero function")
    return float(max(ratios))
