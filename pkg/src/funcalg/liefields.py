"""Polynomial vector fields on R^d: exact symbolic Lie brackets, numeric
flows, flow-commutator cross-validation and first-order prolongation to the
frame bundle.

Brackets and prolongations are computed with sympy so that algebraic
identities (antisymmetry, Jacobi, the prolongation morphism property) can be
verified with exact coefficient arithmetic; only the flows are numeric.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import sympy as sp


class FieldError(ValueError):
    """Raised for dimension mismatches or diverging flows."""


def coords(d: int) -> tuple[sp.Symbol, ...]:
    return sp.symbols(f"x1:{d + 1}")


@dataclass(frozen=True)
class PolyVectorField:
    """Vector field sum_i components[i] * d/dx_i with polynomial components."""

    dim: int
    components: tuple

    def __init__(self, components, dim: int | None = None):
        comps = tuple(sp.sympify(c) for c in components)
        d = dim if dim is not None else len(comps)
        if len(comps) != d:
            raise FieldError(f"expected {d} components, got {len(comps)}")
        xs = coords(d)
        for c in comps:
            extra = c.free_symbols - set(xs)
            if extra:
                raise FieldError(f"component uses unknown symbols {extra}")
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "components", tuple(sp.expand(c) for c in comps))

    def __call__(self, point) -> np.ndarray:
        xs = coords(self.dim)
        subs = dict(zip(xs, point))
        return np.array([float(c.subs(subs)) for c in self.components])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.components)

    def __add__(self, other: "PolyVectorField") -> "PolyVectorField":
        if other.dim != self.dim:
            raise FieldError("dimension mismatch")
        return PolyVectorField([a + b for a, b in zip(self.components, other.components)])

    def __mul__(self, scalar) -> "PolyVectorField":
        return PolyVectorField([sp.expand(scalar * c) for c in self.components])

    __rmul__ = __mul__


def from_coeff_map(maps: list[dict], d: int | None = None) -> PolyVectorField:
    """Build a field from one {exponent-tuple: coefficient} map per component."""
    d = d if d is not None else len(maps)
    xs = coords(d)
    comps = []
    for m in maps:
        expr = sp.Integer(0)
        for expts, coeff in m.items():
            expts = tuple(expts)
            if len(expts) != d:
                raise FieldError(f"exponent tuple {expts} has wrong length")
            term = sp.sympify(coeff)
            for x, e in zip(xs, expts):
                term *= x ** int(e)
            expr += term
        comps.append(expr)
    return PolyVectorField(comps, dim=d)


def lie_bracket(x_field: PolyVectorField, y_field: PolyVectorField) -> PolyVectorField:
    """[X, Y]_i = sum_j (X_j dY_i/dx_j - Y_j dX_i/dx_j), exact."""
    if x_field.dim != y_field.dim:
        raise FieldError("dimension mismatch")
    xs = coords(x_field.dim)
    comps = []
    for yi, xi in zip(y_field.components, x_field.components):
        expr = sum(
            xj * sp.diff(yi, v) - yj * sp.diff(xi, v)
            for xj, yj, v in zip(x_field.components, y_field.components, xs)
        )
        comps.append(sp.expand(expr))
    return PolyVectorField(comps, dim=x_field.dim)


def fields_equal(a: PolyVectorField, b: PolyVectorField) -> bool:
    """Exact coefficientwise equality."""
    if a.dim != b.dim:
        return False
    return all(sp.expand(ca - cb) == 0 for ca, cb in zip(a.components, b.components))


OVERFLOW_GUARD = 1e8


def flow(field: PolyVectorField, point, t: float, steps: int = 64) -> np.ndarray:
    """RK4 integration of the flow of the field from point over time t.

    Uses step halving for an error estimate; raises on trajectory blow-up.
    """
    if steps < 16:
        raise FieldError("steps must be >= 16")
    xs = coords(field.dim)
    rhs = sp.lambdify(xs, list(field.components), modules="numpy")

    def f(p):
        return np.asarray(rhs(*p), dtype=float)

    def integrate(nsteps):
        p = np.asarray(point, dtype=float)
        h = t / nsteps
        for _ in range(nsteps):
            k1 = f(p)
            k2 = f(p + 0.5 * h * k1)
            k3 = f(p + 0.5 * h * k2)
            k4 = f(p + h * k3)
            p = p + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
            if np.max(np.abs(p)) > OVERFLOW_GUARD:
                raise FieldError("flow diverged beyond the overflow guard")
        return p

    coarse = integrate(steps)
    fine = integrate(2 * steps)
    flow.last_error_estimate = float(np.max(np.abs(fine - coarse)) / 15.0)
    return fine


def bracket_via_flows(x_field: PolyVectorField, y_field: PolyVectorField,
                      point, t: float, steps: int = 64) -> np.ndarray:
    """Finite commutator of flows, (flow loop - identity) / t^2 -> [X, Y](p) + O(t)."""
    if t <= 0 or t > 0.1:
        raise FieldError("t must lie in (0, 0.1]")
    p = np.asarray(point, dtype=float)
    q = flow(x_field, p, t, steps)
    q = flow(y_field, q, t, steps)
    q = flow(x_field, q, -t, steps)
    q = flow(y_field, q, -t, steps)
    return (q - p) / t ** 2


# ---------------------------------------------------------------------------
# first-order prolongation (frame bundle)
# ---------------------------------------------------------------------------

def frame_symbols(d: int):
    names = [f"a{i}_{j}" for i in range(1, d + 1) for j in range(1, d + 1)]
    return sp.symbols(names)  # row-major a_ij


@dataclass(frozen=True)
class ProlongedField:
    """Order-1 prolongation: base field on x plus generator JX(x) A on frames."""

    base: PolyVectorField
    matrix_part: tuple  # d x d tuple of sympy expressions, row-major

    @property
    def dim(self) -> int:
        return self.base.dim


def prolong1(field: PolyVectorField) -> ProlongedField:
    """Lift to points-plus-frames: d/dt A = Jacobian(X)(x) . A."""
    d = field.dim
    xs = coords(d)
    a = np.array(frame_symbols(d), dtype=object).reshape(d, d)
    jac = [[sp.diff(field.components[i], xs[j]) for j in range(d)] for i in range(d)]
    mat = tuple(
        sp.expand(sum(jac[i][k] * a[k, j] for k in range(d)))
        for i in range(d) for j in range(d)
    )
    return ProlongedField(base=field, matrix_part=mat)


def _prolonged_bracket(px: ProlongedField, py: ProlongedField) -> ProlongedField:
    """Lie bracket of prolonged fields on the d + d^2 dimensional total space."""
    d = px.dim
    xs = coords(d)
    a_syms = frame_symbols(d)
    allvars = list(xs) + list(a_syms)
    fx = list(px.base.components) + list(px.matrix_part)
    fy = list(py.base.components) + list(py.matrix_part)
    out = []
    for i in range(len(allvars)):
        expr = sum(
            fx[j] * sp.diff(fy[i], v) - fy[j] * sp.diff(fx[i], v)
            for j, v in enumerate(allvars)
        )
        out.append(sp.expand(expr))
    base = PolyVectorField(out[:d], dim=d)
    return ProlongedField(base=base, matrix_part=tuple(out[d:]))


def check_lemma_prolongation(x_field: PolyVectorField, y_field: PolyVectorField) -> dict:
    """Compare [X^(1), Y^(1)] with [X, Y]^(1) symbolically; difference must be 0.

    Returns {exact, max_coeff_diff} where max_coeff_diff is the largest
    absolute coefficient in the symbolic difference.
    """
    if x_field.dim != y_field.dim:
        raise FieldError("dimension mismatch")
    lhs = _prolonged_bracket(prolong1(x_field), prolong1(y_field))
    rhs = prolong1(lie_bracket(x_field, y_field))
    diffs = [sp.expand(a - b) for a, b in
             zip(list(lhs.base.components) + list(lhs.matrix_part),
                 list(rhs.base.components) + list(rhs.matrix_part))]
    worst = 0.0
    for dexpr in diffs:
        if dexpr == 0:
            continue
        poly = sp.Poly(dexpr, *sorted(dexpr.free_symbols, key=str))
        worst = max(worst, max(abs(float(c)) for c in poly.coeffs()))
    return {"exact": worst == 0.0, "max_coeff_diff": worst}
