"""Weighted Bergman norms, kernel/projection, Toeplitz matrices and the
convolution submultiplicativity check.

Operator matrices are written in the orthonormal monomial basis
e_k(z) = z^k / sqrt(m_k) with m_k the monomial moment of dA_alpha
(m_k = 1/(k+1) for the unweighted disc).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .numcore import (
    DiscQuadrature,
    GridError,
    HoloPoly,
    BoundaryGrid,
    inner_product,
    radial_moment,
)


@dataclass(frozen=True)
class OperatorMatrix:
    """Truncated operator matrix in the orthonormal monomial basis."""

    entries: np.ndarray

    def __init__(self, entries):
        arr = np.asarray(entries, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("entries must be a square matrix")
        object.__setattr__(self, "entries", arr)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def adjoint(self) -> "OperatorMatrix":
        return OperatorMatrix(self.entries.conj().T)


def bergman_kernel(z: complex, u: complex) -> complex:
    """Reproducing kernel 1 / (1 - z * conj(u))^2 of the unweighted Bergman space."""
    w = 1.0 - z * np.conj(u)
    if abs(w) < 1e-14 or abs(z * np.conj(u)) >= 1.0:
        raise ValueError("kernel pole: |z * conj(u)| must be < 1")
    return 1.0 / w ** 2


def bergman_norm(f, p: float, q: DiscQuadrature) -> float:
    """(integral |f|^p dA_alpha)^(1/p) on the quadrature grid."""
    if p <= 0:
        raise ValueError(f"p must be positive, got {p}")
    f = np.asarray(f, dtype=complex).ravel()
    if f.shape != q.nodes.shape:
        raise GridError("sample vector must match the node count")
    return float(np.sum(q.weights * np.abs(f) ** p) ** (1.0 / p))


def _basis_powers(q: DiscQuadrature, n: int) -> np.ndarray:
    """(n+1) x nodes array of u^k on the quadrature nodes."""
    return q.nodes[None, :] ** np.arange(n + 1)[:, None]


def bergman_project(phi, q: DiscQuadrature, n: int) -> HoloPoly:
    """Orthogonal projection of grid samples onto polynomials of degree <= n.

    Coefficient b_k = <phi, z^k> / m_k, the monomial-basis expansion of the
    Bergman projection; fixes holomorphic polynomials of degree <= n.
    """
    if n >= q.n_ang // 2:
        raise GridError("cutoff exceeds the angular resolution of the grid")
    phi = np.asarray(phi, dtype=complex).ravel()
    powers = _basis_powers(q, n)
    moments = np.array([radial_moment(q.alpha, k) for k in range(n + 1)])
    coeffs = (powers.conj() * (q.weights * phi)[None, :]).sum(axis=1) / moments
    return HoloPoly(coeffs)


def toeplitz_matrix(phi, q: DiscQuadrature, n: int) -> OperatorMatrix:
    """Matrix of the Toeplitz operator with symbol phi, cutoff degree n.

    M[j, k] = <phi * e_k, e_j> with e_k = z^k / sqrt(m_k).
    """
    if n >= q.n_ang // 2:
        raise GridError("cutoff exceeds the angular resolution of the grid")
    phi = np.asarray(phi, dtype=complex).ravel()
    powers = _basis_powers(q, n)
    norms = np.sqrt(np.array([radial_moment(q.alpha, k) for k in range(n + 1)]))
    weighted = powers.conj() * q.weights[None, :]       # rows j: w * conj(u)^j
    mat = weighted @ (phi[:, None] * powers.T)          # sum w phi u^k conj(u)^j
    mat /= norms[:, None] * norms[None, :]
    return OperatorMatrix(mat)


def circle_convolution(f: BoundaryGrid, g: BoundaryGrid) -> BoundaryGrid:
    """Normalized circular convolution; Fourier coefficients multiply."""
    if f.size != g.size:
        raise GridError("grids must have equal size")
    conv = np.fft.ifft(np.fft.fft(f.samples) * np.fft.fft(g.samples)) / f.size
    return BoundaryGrid(conv)


def _angular_convolve(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Row-wise normalized circular convolution of (n_rad, n_ang) sample arrays."""
    n_ang = f.shape[1]
    return np.fft.ifft(np.fft.fft(f, axis=1) * np.fft.fft(g, axis=1), axis=1) / n_ang


def _grid_norm(h: np.ndarray, p: float, q: DiscQuadrature) -> float:
    """A^p norm of a (n_rad, n_ang) sample array via the tensor quadrature."""
    means = np.mean(np.abs(h) ** p, axis=1)
    return float(np.sum(q.radial_weights * means) ** (1.0 / p))


def check_convolution_submultiplicative(f, g, p: float, q: DiscQuadrature) -> dict:
    """Check the Banach-algebra inequality ||f*g||_{A^p} <= ||f|| ||g||.

    f, g are (n_rad, n_ang) sample arrays; the convolution acts per radius in
    the angle variable.  Returns {lhs, rhs, holds}.
    """
    if p <= 0:
        raise ValueError(f"p must be positive, got {p}")
    f = np.asarray(f, dtype=complex).reshape(q.n_rad, q.n_ang)
    g = np.asarray(g, dtype=complex).reshape(q.n_rad, q.n_ang)
    conv = _angular_convolve(f, g)
    lhs = _grid_norm(conv, p, q)
    rhs = _grid_norm(f, p, q) * _grid_norm(g, p, q)
    return {"lhs": lhs, "rhs": rhs, "holds": bool(lhs <= rhs + 1e-9)}


def sample_on_grid(func, q: DiscQuadrature) -> np.ndarray:
    """Evaluate a callable on the tensor grid, returned as (n_rad, n_ang)."""
    nodes = q.nodes.reshape(q.n_rad, q.n_ang)
    return np.asarray(func(nodes), dtype=complex)
