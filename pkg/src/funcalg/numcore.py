"""Shared numerical substrate: complex polynomials, disc quadrature and
boundary Fourier analysis.

The unit disc carries the normalized area measure dA = (1/pi) dx dy, so the
weighted measure (alpha+1)(1-|z|^2)^alpha dA has total mass one.  Radial
integration uses Gauss-Legendre nodes mapped to [0, 1]; the angular direction
uses equispaced points (trapezoid rule, spectrally exact for band-limited
integrands).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln


class GridError(ValueError):
    """Raised for invalid grids or mismatched sample vectors."""


# ---------------------------------------------------------------------------
# holomorphic polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HoloPoly:
    """Truncated power series sum a_k z^k; ``coeffs[k]`` is the z^k coefficient."""

    coeffs: np.ndarray

    def __init__(self, coeffs):
        arr = np.atleast_1d(np.asarray(coeffs, dtype=complex))
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coeffs must be a non-empty 1-D sequence")
        object.__setattr__(self, "coeffs", arr)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        return eval_poly(self, z)

    def __add__(self, other: "HoloPoly") -> "HoloPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = np.zeros(n, dtype=complex)
        a[: len(self.coeffs)] += self.coeffs
        a[: len(other.coeffs)] += other.coeffs
        return HoloPoly(a)

    def __mul__(self, other):
        if isinstance(other, HoloPoly):
            return HoloPoly(np.convolve(self.coeffs, other.coeffs))
        return HoloPoly(self.coeffs * other)

    __rmul__ = __mul__

    def derivative(self) -> "HoloPoly":
        if len(self.coeffs) == 1:
            return HoloPoly([0.0])
        k = np.arange(1, len(self.coeffs))
        return HoloPoly(self.coeffs[1:] * k)


def eval_poly(p: HoloPoly, z) -> complex:
    """Horner evaluation of p at z (scalar or array)."""
    z = np.asarray(z, dtype=complex)
    acc = np.full(z.shape, p.coeffs[-1], dtype=complex)
    for c in p.coeffs[-2::-1]:
        acc = acc * z + c
    return acc if acc.shape else complex(acc)


# ---------------------------------------------------------------------------
# disc quadrature for dA_alpha
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscQuadrature:
    """Tensor quadrature for the probability measure (alpha+1)(1-|z|^2)^alpha dA.

    ``nodes``/``weights`` are flat arrays of length n_rad * n_ang; the tensor
    structure (radius-major) is retained in ``radii``, ``angles`` so that
    per-radius angular operations remain possible.
    """

    alpha: float
    n_rad: int
    n_ang: int
    radii: np.ndarray = field(repr=False)
    radial_weights: np.ndarray = field(repr=False)
    angles: np.ndarray = field(repr=False)
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)


def weight_normalizer(alpha: float) -> float:
    """Normalizing constant of the weighted measure; equals alpha + 1 on the disc."""
    return alpha + 1.0


def radial_moment(alpha: float, k: int) -> float:
    """Closed form of the monomial moment: integral of |z|^(2k) against dA_alpha.

    Equals k! * Gamma(alpha+2) / Gamma(k+alpha+2); reduces to 1/(k+1) at alpha=0.
    """
    return float(np.exp(gammaln(k + 1) + gammaln(alpha + 2) - gammaln(k + alpha + 2)))


def build_disc_quadrature(alpha: float, n_rad: int, n_ang: int) -> DiscQuadrature:
    """Gauss-Legendre (radial) x trapezoid (angular) quadrature for dA_alpha."""
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    if n_rad < 4 or n_ang < 8:
        raise GridError("need n_rad >= 4 and n_ang >= 8")

    x, w = np.polynomial.legendre.leggauss(n_rad)
    r = 0.5 * (x + 1.0)              # map [-1,1] -> [0,1]
    wr = 0.5 * w
    c = weight_normalizer(alpha)
    # dA_alpha = c (1-r^2)^alpha * 2 r dr * dtheta/(2 pi)
    radial_weights = c * (1.0 - r ** 2) ** alpha * 2.0 * r * wr
    angles = 2.0 * np.pi * np.arange(n_ang) / n_ang

    nodes = (r[:, None] * np.exp(1j * angles)[None, :]).ravel()
    weights = np.repeat(radial_weights / n_ang, n_ang)
    return DiscQuadrature(alpha=float(alpha), n_rad=n_rad, n_ang=n_ang,
                          radii=r, radial_weights=radial_weights,
                          angles=angles, nodes=nodes, weights=weights)


def inner_product(f, g, q: DiscQuadrature) -> complex:
    """<f, g> = sum w_i f(z_i) conj(g(z_i)) on the quadrature nodes."""
    f = np.asarray(f, dtype=complex).ravel()
    g = np.asarray(g, dtype=complex).ravel()
    if f.shape != q.nodes.shape or g.shape != q.nodes.shape:
        raise GridError("sample vectors must match the node count")
    return complex(np.sum(q.weights * f * np.conj(g)))


def sample(func, q: DiscQuadrature) -> np.ndarray:
    """Evaluate a callable (or HoloPoly) on the quadrature nodes."""
    return np.asarray(func(q.nodes), dtype=complex)


# ---------------------------------------------------------------------------
# boundary grid and discrete Fourier analysis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundaryGrid:
    """Samples on M equispaced boundary points xi_j = exp(2 pi i j / M); M a power of two."""

    samples: np.ndarray

    def __init__(self, samples):
        arr = np.asarray(samples, dtype=complex).ravel()
        m = len(arr)
        if m < 2 or (m & (m - 1)) != 0:
            raise GridError(f"grid size must be a power of two, got {m}")
        object.__setattr__(self, "samples", arr)

    @property
    def size(self) -> int:
        return len(self.samples)

    @property
    def points(self) -> np.ndarray:
        m = self.size
        return np.exp(2j * np.pi * np.arange(m) / m)


def boundary_grid_from(func, m: int) -> BoundaryGrid:
    """Sample a callable on the m-point boundary grid."""
    pts = np.exp(2j * np.pi * np.arange(m) / m)
    return BoundaryGrid(np.asarray(func(pts), dtype=complex))


def boundary_fourier(b: BoundaryGrid) -> dict[int, complex]:
    """Discrete Fourier coefficients f_hat(k) for -M/2 < k <= M/2.

    Matches the normalized boundary integral of f(xi) xi^(-k) exactly for
    trigonometric polynomials of degree < M/2.
    """
    m = b.size
    coeffs = np.fft.fft(b.samples) / m
    out: dict[int, complex] = {}
    for bin_idx in range(m):
        k = bin_idx if bin_idx <= m // 2 else bin_idx - m
        out[k] = complex(coeffs[bin_idx])
    return out


def boundary_synthesis(coeffs: dict[int, complex], m: int) -> BoundaryGrid:
    """Inverse of :func:`boundary_fourier` on an m-point grid."""
    spec = np.zeros(m, dtype=complex)
    for k, c in coeffs.items():
        spec[k % m] += c
    return BoundaryGrid(np.fft.ifft(spec) * m)
