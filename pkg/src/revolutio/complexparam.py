"""Polynomial parametrizations of surfaces of revolution over C.

Given the normal form [p(t) a(t)^2, b(t)] of the profile-square curve,
the construction picks a root alpha of p, factors
p(u v + alpha) = v * h(u, v), parametrizes the tubular companion
x^2 + y^2 - p(z) = 0 as

    [ (i/2)(v - h), (1/2)(v + h), u v + alpha ],

and lifts through [x, y, z] -> [a(z) x, a(z) y, b(z)]. Cylinders of
revolution are the one refusal; a constant p with non-constant a goes
through the separate degree-two substitution [s, t] -> [-u/v, u^2+v^2].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import (
    DegenerateProfile,
    InconsistentRoot,
    InternalInvariant,
    InvalidInput,
    NotDivisible,
    NotPolynomial,
)
from .poly import MultiPoly, UniPoly, exact_divide, rational_roots, squarefree_part, substitute
from .profile import P2Decomposition, TubularSurface, tubularize
from .tower import QQ, ExtensionTower, FieldElement, join_towers

UV = ("u", "v")


def _u(tower=QQ) -> MultiPoly:
    return MultiPoly.variable("u", UV, tower)


def _v(tower=QQ) -> MultiPoly:
    return MultiPoly.variable("v", UV, tower)


@dataclass(frozen=True)
class SurfaceParam:
    """Three polynomial components in (u, v) over one tower, plus the trail
    of construction steps and a properness flag."""

    components: tuple
    tower: ExtensionTower
    provenance: tuple = ()
    properness: str = "unknown"  # "proper" | "non-proper-degree-2" | "unknown"

    @staticmethod
    def make(components, provenance=(), properness="unknown") -> "SurfaceParam":
        comps = []
        t = QQ
        for c in components:
            if isinstance(c, UniPoly):
                c = c.to_multi()
            if not isinstance(c, MultiPoly):
                c = MultiPoly.constant(c)
            t = join_towers(t, c.tower)
            comps.append(c)
        comps = [MultiPoly(UV, c.with_vars(UV).terms, t) for c in comps]
        if len(comps) != 3:
            raise InvalidInput("a surface parametrization has three components")
        return SurfaceParam(tuple(comps), t, tuple(provenance), properness)

    @property
    def x(self) -> MultiPoly:
        return self.components[0]

    @property
    def y(self) -> MultiPoly:
        return self.components[1]

    @property
    def z(self) -> MultiPoly:
        return self.components[2]

    def with_properness(self, flag: str) -> "SurfaceParam":
        return SurfaceParam(self.components, self.tower, self.provenance, flag)

    def annotated(self, *labels: str) -> "SurfaceParam":
        return SurfaceParam(self.components, self.tower, self.provenance + labels, self.properness)

    def __repr__(self):
        return f"SurfaceParam([{self.x}, {self.y}, {self.z}], properness={self.properness})"


@dataclass(frozen=True)
class RationalSurfaceParam:
    """Components as numerator/denominator pairs; a comparison utility, never
    claimed polynomial."""

    components: tuple  # ((num, den), (num, den), (num, den)) MultiPoly pairs

    def __repr__(self):
        inner = ", ".join(f"({n})/({d})" for n, d in self.components)
        return f"RationalSurfaceParam([{inner}])"


@dataclass(frozen=True)
class RootSpec:
    """A chosen root of p: either a rational value or a fresh tower generator."""

    value: FieldElement
    source: str  # "rational-root" | "tower-extension"
    minpoly: UniPoly | None = None

    def __repr__(self):
        if self.source == "rational-root":
            return f"RootSpec({self.value}, rational)"
        return f"RootSpec({self.value}, extension by {self.minpoly})"


# -- tower utilities shared by the parametrization modules ---------------------


def ensure_imaginary_unit(tower: ExtensionTower) -> ExtensionTower:
    """The tower extended by i (theta^2 + 1) unless it already has it."""
    for s in tower.steps:
        if s.name == "i":
            return tower
    return tower.extend("i", [1, 0, 1])


def _is_rational_square(q: Fraction):
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def tower_sqrt(tower: ExtensionTower, q: Fraction):
    """(element, tower) with element^2 = q.

    Positive non-squares get a fresh generator with the positive root as
    the recorded embedding; negative values factor through i.
    """
    q = Fraction(q)
    if q == 0:
        return tower.zero(), tower
    if q < 0:
        tower = ensure_imaginary_unit(tower)
        root, tower = tower_sqrt(tower, -q)
        return tower.gen("i").lift_to(tower) * root, tower
    r = _is_rational_square(q)
    if r is not None:
        return tower.rational(r), tower
    name = f"sqrt({q})"
    for s in tower.steps:
        if s.name == name:
            return tower.gen(name), tower
    tower = tower.extend(name, [-q, 0, 1], embedding=(Fraction(0), q + 1))
    return tower.gen(name), tower


def pick_rational_root(p: UniPoly):
    """Smallest-|value| rational root, ties resolved to the positive one."""
    if not p.is_rational_poly():
        return None
    roots = set(rational_roots(p))
    if not roots:
        return None
    return min(roots, key=lambda r: (abs(r), 0 if r > 0 else 1))


# -- operations -----------------------------------------------------------------


def choose_root_alpha(p: UniPoly) -> RootSpec:
    """A root of p: rational when available, otherwise a generator for the
    quotient by p's monic square-free self."""
    if p.is_constant():
        raise InvalidInput("p is constant; the cylinder route handles this case")
    r = pick_rational_root(p)
    if r is not None:
        return RootSpec(value=p.tower.rational(r), source="rational-root")
    m = squarefree_part(p)
    name = "alpha"
    k = 2
    while any(s.name == name for s in p.tower.steps):
        name = f"alpha{k}"
        k += 1
    ext = p.tower.extend(name, [m.coeff(e) for e in range(int(m.degree) + 1)])
    spec = RootSpec(value=ext.gen(name), source="tower-extension", minpoly=m)
    if not p.eval_at(spec.value).is_zero():
        raise InconsistentRoot("extension generator does not annihilate p")
    return spec


def factor_h(p: UniPoly, alpha: RootSpec) -> MultiPoly:
    """h with p(u v + alpha) = v * h(u, v), verified by multiplying back."""
    t = join_towers(p.tower, alpha.value.tower)
    shift = MultiPoly(UV, {(1, 1): t.one(), (0, 0): alpha.value}, t)
    image = substitute(p, {p.var: shift})
    try:
        h = exact_divide(image, _v(t))
    except NotDivisible as exc:
        raise InconsistentRoot("p(alpha) != 0: cannot factor out v") from exc
    if not (_v(t) * h - image).is_zero():
        raise InternalInvariant("v * h does not reproduce p(u v + alpha)")
    return h


def tubular_polynomial_param(T: TubularSurface, alpha: RootSpec) -> SurfaceParam:
    """Polynomial parametrization of x^2 + y^2 - p(z) = 0 for nonconstant p."""
    p = T.p
    if p.is_constant():
        raise InvalidInput("constant p: use the cylinder route")
    tower = ensure_imaginary_unit(join_towers(p.tower, alpha.value.tower))
    h = factor_h(p.with_tower(tower), RootSpec(alpha.value.lift_to(tower), alpha.source, alpha.minpoly))
    i_half = tower.gen("i") * Fraction(1, 2)
    v = _v(tower)
    zc = MultiPoly(UV, {(1, 1): tower.one(), (0, 0): alpha.value.lift_to(tower)}, tower)
    s = SurfaceParam.make(
        [i_half * (v - h), Fraction(1, 2) * (v + h), zc],
        provenance=(f"root alpha = {alpha.value} ({alpha.source})", "tubular parametrization"),
    )
    residual = s.x * s.x + s.y * s.y - substitute(p, {p.var: s.z})
    if not residual.is_zero():
        raise InternalInvariant("tubular parametrization failed its on-surface check")
    return s


def tubular_lift(s: SurfaceParam, a: UniPoly, b: UniPoly) -> SurfaceParam:
    """Compose with [x, y, z] -> [a(z) x, a(z) y, b(z)]."""
    if b.is_constant():
        raise DegenerateProfile("constant height polynomial b")
    zc = s.z
    az = substitute(a, {a.var: zc}) if not a.is_constant() else MultiPoly.constant(
        a.constant_value(), UV, s.tower
    )
    bz = substitute(b, {b.var: zc})
    return SurfaceParam.make(
        [az * s.x, az * s.y, bz],
        provenance=s.provenance + (f"lift by a = {a}, b = {b}",),
        properness="unknown",
    )


def sor_complex_param(d: P2Decomposition) -> SurfaceParam:
    """The closed-form complex parametrization for any non-cylinder with a
    polynomial profile-square curve."""
    if d.delta == 0:
        if d.a.is_constant():
            raise NotPolynomial(
                "cylinder of revolution: the only polynomial curves on it are its rulings"
            )
        return cylinder_case_param(d)
    alpha = choose_root_alpha(d.p)
    tub = tubularize(d)
    base = tubular_polynomial_param(tub, alpha)
    lifted = tubular_lift(base, d.a, d.b)
    xx = lifted.x * lifted.x + lifted.y * lifted.y
    pa2 = (d.p * d.a * d.a)
    if not (xx - substitute(pa2, {pa2.var: base.z})).is_zero():
        raise InternalInvariant("lift broke the rotational structure")
    return lifted


def cylinder_case_param(d: P2Decomposition) -> SurfaceParam:
    """Constant p: normalize p to 1 (absorbing a square root into a), shift a
    root of a to the origin, and parametrize through [-u/v, u^2 + v^2]."""
    if not d.p.is_constant():
        raise InvalidInput("cylinder route expects constant p")
    c = d.p.constant_value().as_rational()
    if c == 0:
        raise InvalidInput("p = 0 does not define a surface")
    scale, tower = tower_sqrt(d.p.tower, c)
    a1 = d.a.with_tower(tower) * scale
    if a1.is_constant():
        raise NotPolynomial("cylinder of revolution (constant radius)")
    r = pick_rational_root(d.a)
    if r is not None:
        root = tower.rational(r)
        note = f"shift by rational root {r} of a"
    else:
        m = squarefree_part(d.a)
        name = "beta"
        k = 2
        while any(s.name == name for s in tower.steps):
            name = f"beta{k}"
            k += 1
        tower = tower.extend(name, [m.coeff(e) for e in range(int(m.degree) + 1)])
        root = tower.gen(name)
        a1 = a1.with_tower(tower)
        note = f"shift by extension root of {m}"
    var = d.a.var
    shifted = a1.compose(UniPoly(var, {1: 1, 0: root}, tower))
    atil, rem = shifted.divmod(UniPoly.variable(var, tower))
    if not rem.is_zero():
        raise InternalInvariant("shifted a is not divisible by its variable")
    bsh = d.b.with_tower(tower).compose(UniPoly(var, {1: 1, 0: root}, tower))
    u, v = _u(tower), _v(tower)
    w = u * u + v * v
    at_w = substitute(atil, {var: w}) if not atil.is_constant() else MultiPoly.constant(
        atil.constant_value(), UV, tower
    )
    comps = [
        Fraction(-2) * u * v * at_w,
        (v * v - u * u) * at_w,
        substitute(bsh, {var: w}),
    ]
    return SurfaceParam.make(
        comps,
        provenance=(f"constant p = {c} absorbed into a", note,
                    "degree-two substitution [s,t] -> [-u/v, u^2+v^2]"),
        properness="unknown",
    )


def rotate_curve(cx: UniPoly, cy: UniPoly, cz: UniPoly) -> RationalSurfaceParam:
    """The rational surface swept by rotating a space curve about the z-axis
    (denominator 1 + s^2); a comparison utility only."""
    if cz.is_constant():
        raise DegenerateProfile("constant z-component cannot sweep a surface")
    var = cz.var
    tower = join_towers(join_towers(cx.tower, cy.tower), cz.tower)
    st = ("s", "t")
    s = MultiPoly.variable("s", st, tower)
    one = MultiPoly.constant(1, st, tower)
    two_s = 2 * s
    one_minus = one - s * s
    den = one + s * s
    x_t = substitute(cx, {var: MultiPoly.variable("t", st, tower)}) if not cx.is_constant() \
        else MultiPoly.constant(cx.constant_value(), st, tower)
    y_t = substitute(cy, {var: MultiPoly.variable("t", st, tower)}) if not cy.is_constant() \
        else MultiPoly.constant(cy.constant_value(), st, tower)
    z_t = substitute(cz, {var: MultiPoly.variable("t", st, tower)})
    return RationalSurfaceParam(
        components=(
            (x_t * two_s + y_t * one_minus, den),
            (-x_t * one_minus + y_t * two_s, den),
            (z_t, one),
        )
    )
