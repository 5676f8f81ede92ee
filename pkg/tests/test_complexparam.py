"""The complex construction: root choice, h-factorization, tubular
parametrization, lifting, the closed formula, and the cylinder route."""

import random
from fractions import Fraction

import pytest

from revolutio import (
    DegenerateProfile,
    InvalidInput,
    MultiPoly,
    NotPolynomial,
    PlaneCurveParam,
    SurfaceParam,
    UniPoly,
    choose_root_alpha,
    cylinder_case_param,
    decompose_paa,
    factor_h,
    jacobian_generic_rank,
    rotate_curve,
    sor_complex_param,
    sphere_witness,
    substitute,
    surface_implicit,
    tubular_lift,
    tubular_polynomial_param,
    tubularize,
    verify_on_surface,
)
from revolutio.verify import rational_residual

t = UniPoly.variable("t")
u = MultiPoly.variable("u", ("u", "v"))
v = MultiPoly.variable("v", ("u", "v"))


def xyz():
    return (
        MultiPoly.variable("x", ("x", "y", "z")),
        MultiPoly.variable("y", ("x", "y", "z")),
        MultiPoly.variable("z", ("x", "y", "z")),
    )


class TestChooseRoot:
    def test_rational_root(self):
        spec = choose_root_alpha(t ** 3 + 1)
        assert spec.source == "rational-root" and spec.value == -1

    def test_extension_for_i(self):
        spec = choose_root_alpha(t ** 2 + 1)
        assert spec.source == "tower-extension"
        assert (spec.value * spec.value) == -1

    def test_extension_for_sqrt2(self):
        spec = choose_root_alpha(t ** 2 - 2)
        assert spec.source == "tower-extension"
        assert spec.value * spec.value == 2

    def test_smallest_abs_tie_positive(self):
        spec = choose_root_alpha((t - 1) * (t + 1) * (t - 3))
        assert spec.value == 1
        spec = choose_root_alpha((t - 2) * (t + 1))
        assert spec.value == -1

    def test_constant_rejected(self):
        with pytest.raises(InvalidInput):
            choose_root_alpha(UniPoly.constant("t", 1))

    def test_postcondition_randomized(self):
        rng = random.Random(905)
        for _ in range(40):
            f = t + rng.randint(-4, 4)
            for _ in range(rng.randrange(0, 2)):
                f = f * (t ** 2 + rng.randrange(1, 5))
            spec = choose_root_alpha(f)
            assert f.eval_at(spec.value).is_zero()


class TestFactorH:
    def test_linear(self):
        h = factor_h(t, choose_root_alpha(t))
        assert h == u

    def test_quadratic(self):
        h = factor_h(t ** 2 - 1, choose_root_alpha(t ** 2 - 1))
        assert h == u ** 2 * v + 2 * u

    def test_cubic_expanded(self):
        h = factor_h(t ** 3 + 1, choose_root_alpha(t ** 3 + 1))
        assert h == u ** 3 * v ** 2 - 3 * u ** 2 * v + 3 * u

    def test_identity_randomized(self):
        rng = random.Random(906)
        for _ in range(40):
            f = (t - rng.randint(-3, 3)) * (t ** 2 + rng.randrange(1, 4) * t + rng.randint(-3, 5))
            if not factor_is_squarefree(f):
                continue
            alpha = choose_root_alpha(f)
            h = factor_h(f, alpha)
            image = substitute(
                f, {"t": u * v + MultiPoly.constant(alpha.value, ("u", "v"), alpha.value.tower)}
            )
            assert (v * h - image).is_zero()


def factor_is_squarefree(f):
    from revolutio import gcd_unipoly

    return gcd_unipoly(f, f.derivative()).is_constant()


class TestTubularParam:
    def test_paraboloid(self):
        x, y, z = xyz()
        T = tubularize(decompose_paa(PlaneCurveParam.polynomial(t, t)))
        s = tubular_polynomial_param(T, choose_root_alpha(T.p))
        # x^2 + y^2 = uv = z
        assert (s.x ** 2 + s.y ** 2 - s.z).is_zero()
        assert verify_on_surface(s, x ** 2 + y ** 2 - z).on_surface

    def test_one_sheet_components(self):
        T = tubularize(decompose_paa(PlaneCurveParam.polynomial(t ** 2 - 1, t)))
        s = tubular_polynomial_param(T, choose_root_alpha(T.p))
        tower = s.tower
        i = tower.gen("i")
        half = Fraction(1, 2)
        h = u ** 2 * v + 2 * u
        assert s.x == i * half * (v - h)
        assert s.y == half * (v + h)
        assert s.z == u * v + 1

    def test_cubic_z_component(self):
        T = tubularize(decompose_paa(PlaneCurveParam.polynomial(t ** 3 + 1, t)))
        s = tubular_polynomial_param(T, choose_root_alpha(T.p))
        assert s.z == u * v - 1


class TestLift:
    def test_identity_lift(self):
        T = tubularize(decompose_paa(PlaneCurveParam.polynomial(t, t)))
        s = tubular_polynomial_param(T, choose_root_alpha(T.p))
        lifted = tubular_lift(s, UniPoly.constant("t", 1), t)
        assert lifted.components == s.components

    def test_scaling_lift(self):
        x, y, z = xyz()
        T = tubularize(decompose_paa(PlaneCurveParam.polynomial(t ** 3, t)))
        s = tubular_polynomial_param(T, choose_root_alpha(T.p))
        lifted = tubular_lift(s, t, t)
        # [ (i/2) uv (v-u), (1/2) uv (v+u), uv ] against x^2 + y^2 - z^3
        tower = lifted.tower
        i = tower.gen("i")
        half = Fraction(1, 2)
        assert lifted.x == i * half * u * v * (v - u)
        assert lifted.y == half * u * v * (v + u)
        assert lifted.z == u * v
        assert verify_on_surface(lifted, x ** 2 + y ** 2 - z ** 3).on_surface

    def test_sphere_pipeline_lift_is_identity(self):
        x, y, z = xyz()
        d = decompose_paa(PlaneCurveParam.polynomial(1 - t ** 2, t))
        T = tubularize(d)
        s = tubular_polynomial_param(T, choose_root_alpha(T.p))
        lifted = tubular_lift(s, d.a, d.b)
        assert lifted.components == s.components
        assert verify_on_surface(lifted, x ** 2 + y ** 2 + z ** 2 - 1).on_surface

    def test_constant_b_rejected(self):
        T = tubularize(decompose_paa(PlaneCurveParam.polynomial(t, t)))
        s = tubular_polynomial_param(T, choose_root_alpha(T.p))
        with pytest.raises(DegenerateProfile):
            tubular_lift(s, t, UniPoly.constant("t", 2))

    def test_rotational_structure_preserved(self):
        d = decompose_paa(PlaneCurveParam.polynomial((t ** 2 + 1) ** 2 * (t - 2), t + 5))
        T = tubularize(d)
        s = tubular_polynomial_param(T, choose_root_alpha(T.p))
        lifted = tubular_lift(s, d.a, d.b)
        pa2 = d.p * d.a * d.a
        expected = substitute(pa2, {"t": s.z})
        assert (lifted.x ** 2 + lifted.y ** 2 - expected).is_zero()


class TestClosedFormula:
    def test_paraboloid(self):
        x, y, z = xyz()
        d = decompose_paa(PlaneCurveParam.polynomial(t, t))
        s = sor_complex_param(d)
        assert verify_on_surface(s, x ** 2 + y ** 2 - z).on_surface

    def test_sphere_and_paper_witness(self):
        x, y, z = xyz()
        F = x ** 2 + y ** 2 + z ** 2 - 1
        d = decompose_paa(PlaneCurveParam.polynomial(1 - t ** 2, t))
        s = sor_complex_param(d)
        rep = verify_on_surface(s, F)
        assert rep.on_surface and rep.jacobian_rank == 2
        # the published witness must independently pass
        rep = verify_on_surface(sphere_witness(), F)
        assert rep.on_surface and rep.jacobian_rank == 2

    def test_cylinder_refusal(self):
        d = decompose_paa(PlaneCurveParam.polynomial(UniPoly.constant("t", 1), t))
        with pytest.raises(NotPolynomial):
            sor_complex_param(d)
        d = decompose_paa(PlaneCurveParam.polynomial(UniPoly.constant("t", 4), t))
        with pytest.raises(NotPolynomial):
            sor_complex_param(d)

    def test_verified_against_implicitization(self):
        d = decompose_paa(PlaneCurveParam.polynomial((t ** 2 + 1) ** 2 * (t - 2), t + 5))
        s = sor_complex_param(d)
        assert verify_on_surface(s, surface_implicit(d)).on_surface

    def test_reducible_alpha_extension(self):
        # p = (t^2+2)(t^2+3): square-free, no rational roots; alpha generates
        # a reducible quotient and the whole pipeline must still verify
        d = decompose_paa(PlaneCurveParam.polynomial(t ** 4 + 5 * t ** 2 + 6, t))
        s = sor_complex_param(d)
        rep = verify_on_surface(s, surface_implicit(d))
        assert rep.on_surface and rep.jacobian_rank == 2


class TestCylinderRoute:
    def test_cone(self):
        x, y, z = xyz()
        d = decompose_paa(PlaneCurveParam.polynomial(t ** 2, t))
        s = cylinder_case_param(d)
        assert s.x == -2 * u * v and s.y == v ** 2 - u ** 2 and s.z == u ** 2 + v ** 2
        assert verify_on_surface(s, x ** 2 + y ** 2 - z ** 2).on_surface

    def test_a_squared(self):
        x, y, z = xyz()
        d = decompose_paa(PlaneCurveParam.polynomial(t ** 4, t))
        s = cylinder_case_param(d)
        w = u ** 2 + v ** 2
        assert s.x == -2 * u * v * w and s.y == (v ** 2 - u ** 2) * w and s.z == w
        assert verify_on_surface(s, x ** 2 + y ** 2 - z ** 4).on_surface

    def test_constant_a_refused(self):
        d = decompose_paa(PlaneCurveParam.polynomial(UniPoly.constant("t", 1), t))
        with pytest.raises(NotPolynomial):
            cylinder_case_param(d)

    def test_nonsquare_constant_and_irrational_shift(self):
        # p = 2, a = t^2 - 3: needs sqrt(2) and a root of t^2 - 3
        x, y, z = xyz()
        d = decompose_paa(PlaneCurveParam.polynomial(2 * (t ** 2 - 3) ** 2, t))
        s = cylinder_case_param(d)
        assert verify_on_surface(s, surface_implicit(d)).on_surface


class TestRotateCurve:
    def test_vertical_line(self):
        r = rotate_curve(UniPoly.constant("t", 1), UniPoly.zero("t"), t)
        st = ("s", "t")
        sv = MultiPoly.variable("s", st)
        tv = MultiPoly.variable("t", st)
        one = MultiPoly.constant(1, st)
        (n1, d1), (n2, d2), (n3, d3) = r.components
        assert n1 == 2 * sv and d1 == 1 + sv ** 2
        assert n2 == -(1 - sv ** 2) and d2 == 1 + sv ** 2
        assert n3 == tv and d3 == one

    def test_cone_residual(self):
        x, y, z = xyz()
        r = rotate_curve(t, UniPoly.zero("t"), t)
        assert rational_residual(x ** 2 + y ** 2 - z ** 2, r.components).is_zero()

    def test_axis_flagged_degenerate(self):
        rotate_curve(UniPoly.zero("t"), UniPoly.zero("t"), t)
        # the rotated axis is [0, 0, t]: rank 1 once seen as a (u, v) map
        zero = MultiPoly.zero(("u", "v"))
        s = SurfaceParam.make([zero, zero, MultiPoly.variable("v", ("u", "v"))])
        assert jacobian_generic_rank(s) == 1
        with pytest.raises(DegenerateProfile):
            rotate_curve(t, t, UniPoly.constant("t", 1))
