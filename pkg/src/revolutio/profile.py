"""Profile-square curves of surfaces of revolution about the z-axis.

The section of the surface with the plane y = 0, pushed through
[x, z] -> [x^2, z], gives the plane curve whose polynomiality governs
everything downstream. This module extracts that curve from an implicit
equation, normalizes its parametrization into the (p, a, b) form with p
square-free, and attaches the tubular companion surface
x^2 + y^2 - p(z) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateProfile,
    InvalidInput,
    NotAGraph,
    NotEquivalent,
    NotPolynomialCurve,
    NotSurfaceOfRevolution,
)
from .poly import (
    MultiPoly,
    UniPoly,
    gcd_unipoly,
    rational_roots,
    resultant_eliminate,
    squarefree_decompose,
    squarefree_part,
    substitute,
)
from .tower import FieldElement, join_towers


class PlaneCurveParam:
    """A parametrized plane curve [x(t), z(t)], polynomial or rational.

    Rational components are stored as coprime numerator/denominator pairs.
    At least one component must be non-constant.
    """

    def __init__(self, x_num: UniPoly, x_den: UniPoly, z_num: UniPoly, z_den: UniPoly):
        for d in (x_den, z_den):
            if d.is_zero():
                raise InvalidInput("zero denominator")
        x_num, x_den = _reduce_fraction(x_num, x_den)
        z_num, z_den = _reduce_fraction(z_num, z_den)
        if _is_constant_ratio(x_num, x_den) and _is_constant_ratio(z_num, z_den):
            raise InvalidInput("both components are constant")
        self.x_num, self.x_den = x_num, x_den
        self.z_num, self.z_den = z_num, z_den

    @classmethod
    def polynomial(cls, x: UniPoly, z: UniPoly) -> "PlaneCurveParam":
        one = UniPoly.constant(x.var, 1)
        return cls(x, one, z, one.rename(z.var))

    @property
    def kind(self) -> str:
        if self.x_den.is_constant() and self.z_den.is_constant():
            return "polynomial"
        return "rational"

    @property
    def var(self) -> str:
        return self.x_num.var if not self.x_num.is_zero() else self.z_num.var

    def poly_components(self):
        if self.kind != "polynomial":
            raise InvalidInput("not a polynomial parametrization")
        cx = self.x_den.constant_value().inverse()
        cz = self.z_den.constant_value().inverse()
        return self.x_num * cx, self.z_num * cz

    def __repr__(self):
        def frac(n, d):
            return f"({n})/({d})" if not d == 1 else f"{n}"
        return f"[{frac(self.x_num, self.x_den)}, {frac(self.z_num, self.z_den)}]"


def _is_constant_ratio(n: UniPoly, d: UniPoly) -> bool:
    return n.is_constant() and d.is_constant()


def _reduce_fraction(n: UniPoly, d: UniPoly):
    g = gcd_unipoly(n, d)
    if not g.is_constant():
        n = n.divmod(g)[0]
        d = d.divmod(g)[0]
    return n, d


@dataclass(frozen=True)
class P2Decomposition:
    """The normal form [p(t) a(t)^2, b(t)] with p square-free; the degree of
    p is the surface invariant driving the real case analysis."""

    p: UniPoly
    a: UniPoly
    b: UniPoly

    @property
    def delta(self) -> int:
        return max(int(self.p.degree), 0)

    def first_coordinate(self) -> UniPoly:
        return self.p * self.a * self.a

    def __repr__(self):
        return f"P2Decomposition(p={self.p}, a={self.a}, b={self.b}, delta={self.delta})"


@dataclass(frozen=True)
class AffineReparam:
    """t -> scale*t + shift with scale != 0; closed under compose/invert."""

    scale: FieldElement
    shift: FieldElement

    def __post_init__(self):
        if self.scale.is_zero():
            raise InvalidInput("affine reparametrization needs a nonzero scale")

    def apply_value(self, x) -> FieldElement:
        return self.scale * x + self.shift

    def apply_to_poly(self, f: UniPoly) -> UniPoly:
        t = join_towers(join_towers(f.tower, self.scale.tower), self.shift.tower)
        inner = UniPoly(f.var, {1: self.scale, 0: self.shift}, t)
        return f.compose(inner)

    def compose(self, other: "AffineReparam") -> "AffineReparam":
        # self after other: t -> self(other(t))
        return AffineReparam(self.scale * other.scale, self.scale * other.shift + self.shift)

    def inverse(self) -> "AffineReparam":
        inv = self.scale.inverse()
        return AffineReparam(inv, -(inv * self.shift))


@dataclass(frozen=True)
class TubularSurface:
    """The companion surface x^2 + y^2 - p(z) = 0 with p square-free."""

    p: UniPoly  # in the variable z

    def implicit_poly(self) -> MultiPoly:
        x = MultiPoly.variable("x", ("x", "y", "z"))
        y = MultiPoly.variable("y", ("x", "y", "z"))
        pz = self.p.to_multi(("x", "y"))
        return x * x + y * y - pz


# -- operations ---------------------------------------------------------------


def implicit_to_p2(F: MultiPoly) -> MultiPoly:
    """Rewrite F(x, y, z) = G(x^2 + y^2, z); the result is the implicit
    equation of the profile-square curve in variables (w, z)."""
    if F.is_zero():
        raise InvalidInput("zero polynomial")
    extra = [v for v in F.vars if v not in ("x", "y", "z") and F.uses(v)]
    if extra:
        raise InvalidInput(f"unexpected variables {extra}; expected x, y, z")
    xz = {
        "x": MultiPoly.variable("x", ("x", "z")),
        "y": MultiPoly.zero(("x", "z")),
        "z": MultiPoly.variable("z", ("x", "z")),
    }
    section = substitute(F, {v: xz[v] for v in F.vars})
    terms = {}
    for key, c in section.with_vars(("x", "z")).terms.items():
        ex, ez = key
        if ex % 2 != 0:
            raise NotSurfaceOfRevolution("odd power of x in the y = 0 section")
        terms[(ex // 2, ez)] = c
    G = MultiPoly(("w", "z"), terms, section.tower)
    xyz = {
        "w": _sum_of_squares(),
        "z": MultiPoly.variable("z", ("x", "y", "z")),
    }
    back = substitute(G, xyz)
    if not (back - F).is_zero():
        raise NotSurfaceOfRevolution("not expressible through x^2 + y^2 and z")
    return G


def _sum_of_squares() -> MultiPoly:
    x = MultiPoly.variable("x", ("x", "y", "z"))
    y = MultiPoly.variable("y", ("x", "y", "z"))
    return x * x + y * y


def p2_param_from_graph(G: MultiPoly) -> PlaneCurveParam:
    """Parametrize a w-linear profile-square curve c*w - g(z) as [g(t)/c, t]."""
    if G.is_zero():
        raise InvalidInput("zero polynomial")
    if G.degree_in("w") != 1:
        raise NotAGraph("degree in w is not 1")
    coeffs = G.with_vars(("w", "z")).as_unipoly_in("w")
    lead = coeffs[1]
    if not lead.is_constant():
        raise NotAGraph("leading coefficient in w depends on z")
    c = lead.constant_value()
    g = -coeffs[0]
    g_t = g.to_unipoly("z").rename("t") if not g.is_zero() else UniPoly.zero("t", g.tower)
    x = g_t * c.inverse()
    return PlaneCurveParam.polynomial(x, UniPoly.variable("t", x.tower))


def decompose_paa(c: PlaneCurveParam) -> P2Decomposition:
    """Split the first coordinate as p * a^2 with p square-free.

    The content (including sign) of the first coordinate goes into p and a
    is kept monic, so the sign of p is meaningful for the real analysis.
    """
    x, b = c.poly_components()
    if b.is_constant():
        raise DegenerateProfile("second coordinate is constant (plane perpendicular to the axis)")
    if x.is_zero():
        raise DegenerateProfile("first coordinate is identically zero (the axis)")
    if not x.is_rational_poly():
        raise InvalidInput("decomposition requires rational coefficients")
    dec = squarefree_decompose(x)
    var = x.var
    p = UniPoly.constant(var, dec.content)
    a = UniPoly.constant(var, 1)
    for f, m in dec.factors:
        if m % 2 == 1:
            p = p * f
        a = a * f ** (m // 2)
    return P2Decomposition(p=p, a=a, b=b)


def polynomialize_rational(c: PlaneCurveParam) -> PlaneCurveParam:
    """Turn a proper rational parametrization into a polynomial one when the
    curve is polynomial (single point at infinity), else NotPolynomialCurve.

    Properness of the input is assumed, not checked.
    """
    if c.kind == "polynomial":
        return c
    q = _lcm_poly(c.x_den, c.z_den)
    s = squarefree_part(q)
    if int(s.degree) != 1:
        raise NotPolynomialCurve(
            "the common denominator has several distinct roots (several points at infinity)"
        )
    r = -(s.coeff(0) * s.coeff(1).inverse())
    new = []
    for num, den in ((c.x_num, c.x_den), (c.z_num, c.z_den)):
        n_lift = _moebius_lift(num, r)
        d_lift = _moebius_lift(den, r)
        gap = int(den.degree) - int(num.degree)
        if gap >= 0:
            n_lift = n_lift * UniPoly("t", {gap: 1}, n_lift.tower)
        else:
            d_lift = d_lift * UniPoly("t", {-gap: 1}, d_lift.tower)
        n_lift, d_lift = _reduce_fraction(n_lift, d_lift)
        if not d_lift.is_constant():
            raise NotPolynomialCurve("a pole survives the reparametrization")
        new.append(n_lift * d_lift.constant_value().inverse())
    return PlaneCurveParam.polynomial(new[0], new[1])


def _lcm_poly(a: UniPoly, b: UniPoly) -> UniPoly:
    g = gcd_unipoly(a, b)
    return (a * b).divmod(g)[0].monic()


def _moebius_lift(f: UniPoly, r) -> UniPoly:
    """X^deg(f) * f(r + 1/X), a polynomial in the fresh variable t."""
    t = join_towers(f.tower, r.tower)
    d = int(f.degree) if not f.is_zero() else 0
    lin = UniPoly("t", {1: r, 0: 1}, t)  # r*X + 1
    acc = UniPoly.zero("t", t)
    for e, coeff in f.coeffs.items():
        acc = acc + UniPoly.constant("t", coeff, t) * lin ** e * UniPoly("t", {d - e: 1}, t)
    return acc


def affine_equivalent(f: PlaneCurveParam, g: PlaneCurveParam) -> AffineReparam:
    """The unique reparametrization with g(s) = f(scale*s + shift), if any.

    Both parametrizations must be polynomial with rational coefficients and
    proper (properness is a precondition, not checked).
    """
    fx, fz = f.poly_components()
    gx, gz = g.poly_components()
    for a, b in ((fx, gx), (fz, gz)):
        if a.degree != b.degree:
            raise NotEquivalent("component degrees differ")
    pairs = [(fx, gx), (fz, gz)]
    pivot = max(pairs, key=lambda ab: ab[0].degree)
    fp, gp = pivot
    if fp.is_constant():
        raise NotEquivalent("no non-constant component to match")
    if not all(h.is_rational_poly() for h in (fx, fz, gx, gz)):
        raise InvalidInput("affine matching is implemented for rational coefficients")
    d = int(fp.degree)
    ratio = gp.lc().as_rational() / fp.lc().as_rational()
    xvar = UniPoly.variable("x")
    for alpha in set(rational_roots(xvar ** d - ratio)):
        a_d = fp.lc().as_rational()
        a_d1 = fp.coeff(d - 1).as_rational() if d >= 1 else Fraction(0)
        b_d1 = gp.coeff(d - 1).as_rational() if d >= 1 else Fraction(0)
        beta = (b_d1 - a_d1 * alpha ** (d - 1)) / (d * a_d * alpha ** (d - 1))
        rep = AffineReparam(fx.tower.rational(alpha), fx.tower.rational(beta))
        if rep.apply_to_poly(fx) == gx.rename(fx.var) and rep.apply_to_poly(fz) == gz.rename(fz.var):
            return rep
    raise NotEquivalent("leading-coefficient matching found no affine reparametrization")


def tubularize(d: P2Decomposition) -> TubularSurface:
    return TubularSurface(p=d.p.rename("z"))


# -- implicit forms for verification ------------------------------------------


def p2_implicit(x: UniPoly, b: UniPoly) -> MultiPoly:
    """An implicit equation of the curve [x(t), b(t)] in (w, z), by the
    resultant eliminating t. It vanishes on the curve, which is all the
    on-surface verification needs."""
    tvar = x.var
    w = MultiPoly.variable("w", ("w", tvar))
    z = MultiPoly.variable("z", ("z", tvar))
    e1 = w - x.to_multi()
    e2 = z - b.to_multi()
    return resultant_eliminate(e1, e2, tvar)


def surface_implicit(d: P2Decomposition) -> MultiPoly:
    """Implicit form F(x, y, z) of the surface of revolution with the given
    profile-square decomposition."""
    G = p2_implicit(d.first_coordinate(), d.b)
    return substitute(
        G,
        {"w": _sum_of_squares(), "z": MultiPoly.variable("z", ("x", "y", "z"))},
    )
