import numpy as np
import pytest

from funcalg import bergman
from funcalg.numcore import HoloPoly, build_disc_quadrature


@pytest.fixture(scope="module")
def quad():
    return build_disc_quadrature(0.0, 64, 256)


class TestKernel:
    def test_at_origin(self):
        assert bergman.bergman_kernel(0.0, 0.3 + 0.1j) == pytest.approx(1.0)

    def test_series_oracle(self):
        # oracle: K(z, u) = sum_k (k+1) (z conj(u))^k, 60 terms
        z, u = 0.3j, 0.4
        w = z * np.conj(u)
        series = sum((k + 1) * w ** k for k in range(60))
        assert bergman.bergman_kernel(z, u) == pytest.approx(series, abs=1e-9)

    def test_hermitian_symmetry(self):
        z, u = 0.2 + 0.5j, -0.3 + 0.1j
        assert bergman.bergman_kernel(z, u) == pytest.approx(
            np.conj(bergman.bergman_kernel(u, z)), abs=1e-14)

    def test_pole_rejected(self):
        with pytest.raises(ValueError):
            bergman.bergman_kernel(1.0, 1.0)

    def test_reproduces_polynomial(self, quad):
        # oracle: f(z) = integral f(u) K(z, u) dA(u)
        f = HoloPoly([1.0, 2.0 - 1j, 0.5])
        z = 0.4 - 0.2j
        kernel_vals = 1.0 / (1.0 - z * np.conj(quad.nodes)) ** 2
        val = np.sum(quad.weights * f(quad.nodes) * kernel_vals)
        assert val == pytest.approx(f(z), abs=1e-8)


class TestNorm:
    def test_constant(self, quad):
        ones = np.ones_like(quad.nodes)
        assert bergman.bergman_norm(ones, 2.0, quad) == pytest.approx(1.0, abs=1e-12)

    def test_monomial_p2(self, quad):
        # ||z||_{A^2} = 1/sqrt(2) on the unweighted disc
        val = bergman.bergman_norm(quad.nodes, 2.0, quad)
        assert val == pytest.approx(1.0 / np.sqrt(2.0), abs=1e-10)

    def test_monomial_p4(self, quad):
        # oracle: (integral |z|^4 dA)^{1/4} = (1/3)^{1/4}
        val = bergman.bergman_norm(quad.nodes, 4.0, quad)
        assert val == pytest.approx(3.0 ** -0.25, abs=1e-10)

    def test_homogeneity(self, quad):
        rng = np.random.default_rng(3)
        f = rng.standard_normal(len(quad.nodes)) + 1j * rng.standard_normal(len(quad.nodes))
        c = 2.5 - 1.5j
        assert bergman.bergman_norm(c * f, 2.0, quad) == pytest.approx(
            abs(c) * bergman.bergman_norm(f, 2.0, quad), rel=1e-12)


class TestProjection:
    def test_fixes_polynomial(self, quad):
        p = HoloPoly([1.0, 0.0, 3.0 - 2.0j, 0.25])
        proj = bergman.bergman_project(p(quad.nodes), quad, 8)
        np.testing.assert_allclose(proj.coeffs[:4], p.coeffs, atol=1e-10)
        np.testing.assert_allclose(proj.coeffs[4:], 0, atol=1e-10)

    def test_kills_antiholomorphic(self, quad):
        for k in range(1, 9):
            proj = bergman.bergman_project(np.conj(quad.nodes) ** k, quad, 8)
            assert np.max(np.abs(proj.coeffs)) < 1e-10

    def test_mixed_symbol(self, quad):
        # oracle: P(|z|^2) = P(z conj(z)) keeps only the constant Fourier mode;
        # <|z|^2, 1> / m_0 = 1/2
        proj = bergman.bergman_project(np.abs(quad.nodes) ** 2, quad, 8)
        assert proj.coeffs[0] == pytest.approx(0.5, abs=1e-10)
        assert np.max(np.abs(proj.coeffs[1:])) < 1e-10

    def test_cutoff_guard(self, quad):
        with pytest.raises(Exception):
            bergman.bergman_project(np.ones_like(quad.nodes), quad, quad.n_ang)


class TestToeplitz:
    def test_identity_symbol(self, quad):
        mat = bergman.toeplitz_matrix(np.ones_like(quad.nodes), quad, 6).entries
        np.testing.assert_allclose(mat, np.eye(7), atol=1e-10)

    def test_shift_symbol(self, quad):
        # symbol z in the orthonormal basis: entry (j+1, j) = sqrt(m_{j+1}/m_j)
        # = sqrt((j+1)/(j+2)) at alpha = 0
        mat = bergman.toeplitz_matrix(quad.nodes, quad, 6).entries
        j = np.arange(6)
        expected = np.sqrt((j + 1.0) / (j + 2.0))
        np.testing.assert_allclose(np.diag(mat, -1), expected, atol=1e-10)
        off = mat - np.diag(np.diag(mat, -1), -1)
        assert np.max(np.abs(off)) < 1e-10

    def test_radial_symbol_diagonal(self, quad):
        # |z|^2 is radial: the matrix is diagonal, entry m_{k+1}/m_k = (k+1)/(k+2)
        mat = bergman.toeplitz_matrix(np.abs(quad.nodes) ** 2, quad, 6).entries
        k = np.arange(7)
        np.testing.assert_allclose(np.diag(mat), (k + 1.0) / (k + 2.0), atol=1e-10)
        assert np.max(np.abs(mat - np.diag(np.diag(mat)))) < 1e-10

    def test_adjoint(self, quad):
        rng = np.random.default_rng(5)
        phi = (rng.standard_normal(len(quad.nodes))
               + 1j * rng.standard_normal(len(quad.nodes)))
        a = bergman.toeplitz_matrix(np.conj(phi), quad, 8).entries
        b = bergman.toeplitz_matrix(phi, quad, 8).entries.conj().T
        np.testing.assert_allclose(a, b, atol=1e-12)

    def test_operator_matrix_validation(self):
        with pytest.raises(ValueError):
            bergman.OperatorMatrix(np.ones((2, 3)))


class TestCircleConvolution:
    def test_direct_oracle(self):
        # oracle: O(M^2) direct normalized convolution sum
        rng = np.random.default_rng(11)
        m = 32
        f = rng.standard_normal(m) + 1j * rng.standard_normal(m)
        g = rng.standard_normal(m) + 1j * rng.standard_normal(m)
        direct = np.array([sum(f[j] * g[(i - j) % m] for j in range(m)) / m
                           for i in range(m)])
        from funcalg.numcore import BoundaryGrid
        conv = bergman.circle_convolution(BoundaryGrid(f), BoundaryGrid(g))
        np.testing.assert_allclose(conv.samples, direct, atol=1e-12)

    def test_fourier_multiplies(self):
        from funcalg.numcore import BoundaryGrid, boundary_fourier
        rng = np.random.default_rng(12)
        f = rng.standard_normal(64) + 1j * rng.standard_normal(64)
        g = rng.standard_normal(64) + 1j * rng.standard_normal(64)
        conv = bergman.circle_convolution(BoundaryGrid(f), BoundaryGrid(g))
        cf = boundary_fourier(BoundaryGrid(f))
        cg = boundary_fourier(BoundaryGrid(g))
        cc = boundary_fourier(conv)
        for k in (-5, 0, 3):
            assert cc[k] == pytest.approx(cf[k] * cg[k], abs=1e-12)


class TestSubmultiplicativity:
    def test_monomial_pair_fails_honestly(self, quad):
        # f = g = z: lhs = 1/sqrt(3) > 1/2 = rhs, so the general radius-
        # dependent inequality does NOT hold for this pair
        f = bergman.sample_on_grid(lambda z: z, quad)
        rep = bergman.check_convolution_submultiplicative(f, f, 2.0, quad)
        assert rep["lhs"] == pytest.approx(1.0 / np.sqrt(3.0), abs=1e-9)
        assert rep["rhs"] == pytest.approx(0.5, abs=1e-9)
        assert rep["holds"] is False

    def test_radius_independent_pair_holds(self, quad):
        rng = np.random.default_rng(2)
        theta = quad.angles
        ring_f = np.exp(1j * theta) + 0.5 * np.exp(-2j * theta)
        ring_g = 1.0 + 0.25j * np.exp(3j * theta)
        f = np.tile(ring_f, (quad.n_rad, 1))
        g = np.tile(ring_g, (quad.n_rad, 1))
        for p in (1.0, 2.0, 4.0):
            rep = bergman.check_convolution_submultiplicative(f, g, p, quad)
            assert rep["holds"], rep

    def test_constant_pair_sharp(self, quad):
        ones = np.ones((quad.n_rad, quad.n_ang), dtype=complex)
        rep = bergman.check_convolution_submultiplicative(ones, ones, 2.0, quad)
        assert rep["lhs"] == pytest.approx(1.0, abs=1e-12)
        assert rep["rhs"] == pytest.approx(1.0, abs=1e-12)
        assert rep["holds"]
