"""Real polynomial parametrizations, decided by the degree of p.

Degrees 0, 1 and 2 are settled constructively: degree 1 reduces to the
paraboloid pattern [a(u^2+v^2)u, a(u^2+v^2)v, b(u^2+v^2)], degree 2 to a
canonical +-z^2 + lambda whose four sign cases are a hyperboloid recipe,
a double-cover recipe, a compactness refusal, or an empty real locus, and
degree 0 to the cone-style substitution or, when a has no real roots, to
the Pythagorean-style identity on the one-sheeted hyperboloid. Degree 3
has one hard-coded witness; everything else is honestly `unresolved` with
the root-count predicate as evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexparam import SurfaceParam, ensure_imaginary_unit, pick_rational_root, tower_sqrt
from .errors import InternalInvariant, InvalidInput
from .numeric import default_real_embedding, isolate_real_roots
from .poly import (
    MultiPoly,
    UniPoly,
    gcd_unipoly,
    rational_roots,
    resultant_eliminate,
    squarefree_part,
    sturm_real_root_count,
    substitute,
)
from .profile import AffineReparam, P2Decomposition, surface_implicit
from .tower import QQ, ExtensionTower
from .verify import verify_on_surface

UV = ("u", "v")


@dataclass(frozen=True)
class CanonicalQuadratic:
    """p brought to sign*z^2 + lambda by an affine change of variable."""

    sign: int
    lam: Fraction
    reparam: AffineReparam  # canonical variable -> original variable

    def __repr__(self):
        return f"CanonicalQuadratic(sign={self.sign:+d}, lambda={self.lam})"


@dataclass(frozen=True)
class RealVerdict:
    status: str  # real-proper | real-nonproper-double-cover | no-real-parametrization | empty-real-locus | unresolved
    reason: str
    witness: SurfaceParam | None = None

    def __repr__(self):
        return f"RealVerdict({self.status}: {self.reason})"


# -- canonical building blocks ---------------------------------------------------


def one_sheet_components(tower: ExtensionTower = QQ):
    """[v - u(uv+1), 2uv + 1, u(uv+1) + v]: satisfies X^2 + Y^2 - Z^2 = 1."""
    u = MultiPoly.variable("u", UV, tower)
    v = MultiPoly.variable("v", UV, tower)
    w = u * v + 1
    return (v - u * w, 2 * u * v + 1, u * w + v)


def sphere_witness() -> SurfaceParam:
    """The complex unit-sphere witness [A, B, i C] over Q(i)."""
    tower = ensure_imaginary_unit(QQ)
    A, B, C = one_sheet_components(tower)
    return SurfaceParam.make(
        [A, B, tower.gen("i") * C],
        provenance=("unit sphere witness over Q(i)",),
    )


def dioph_point(q1, q2, q3, q4):
    """The point (q1 q2 + q3 q4, (q1^2+q3^2-q2^2-q4^2)/2, (q1^2+q3^2+q2^2+q4^2)/2);
    it lies on x^2 + y^2 - z^2 = -(q1 q4 - q2 q3)^2."""
    half = Fraction(1, 2)
    x = q1 * q2 + q3 * q4
    y = (q1 * q1 + q3 * q3 - q2 * q2 - q4 * q4) * half
    z = (q1 * q1 + q3 * q3 + q2 * q2 + q4 * q4) * half
    return x, y, z


def dioph_identity_check(q1, q2, q3, q4) -> MultiPoly:
    """Residual of the four-square identity; identically zero for any inputs."""
    vals = []
    for q in (q1, q2, q3, q4):
        if isinstance(q, UniPoly):
            q = q.to_multi()
        elif not isinstance(q, MultiPoly):
            q = MultiPoly.constant(q)
        vals.append(q)
    q1, q2, q3, q4 = vals
    x, y, z = dioph_point(q1, q2, q3, q4)
    d = q1 * q4 - q2 * q3
    return x * x + y * y - z * z + d * d


def two_sheet_components(tower: ExtensionTower = QQ):
    """The double-cover parametrization of x^2 + y^2 - z^2 = -1, built by
    pushing a polynomial section of q1 q4 - q2 q3 = 1 through dioph_point."""
    u = MultiPoly.variable("u", UV, tower)
    v = MultiPoly.variable("v", UV, tower)
    w = u * (u * v + 1)
    q1 = v - w
    q2 = 1 + v + 2 * u * v + w
    q3 = -1 + v - 2 * u * v + w
    q4 = q1
    constraint = q1 * q4 - q2 * q3
    if not (constraint - MultiPoly.constant(1, UV, tower)).is_zero():
        raise InternalInvariant("section does not satisfy q1 q4 - q2 q3 = 1")
    return dioph_point(q1, q2, q3, q4)


def cubic_example() -> SurfaceParam:
    """The discovered real witness for x^2 + y^2 - z^3 - 1 = 0, over Q(sqrt 3)."""
    s3, tower = tower_sqrt(QQ, Fraction(3))
    u = MultiPoly.variable("u", UV, tower)
    v = MultiPoly.variable("v", UV, tower)
    half = Fraction(1, 2)
    x = half * u ** 3 * (v ** 3 - 2 * s3 * v * v + 4 * v - s3) - half * u * u + 1
    y = (
        half * u ** 3 * (s3 * v ** 3 - 4 * v * v + 2 * s3 * v - 1)
        + half * u * u * (2 * s3 * v * v - 4 * v + s3)
        + u
    )
    z = u * u * (v * v - s3 * v + 1) + u * v
    w = SurfaceParam.make(
        [x, y, z],
        provenance=("hard-coded cubic witness over Q(sqrt(3))",),
    )
    X = MultiPoly.variable("x", ("x", "y", "z"))
    Y = MultiPoly.variable("y", ("x", "y", "z"))
    Z = MultiPoly.variable("z", ("x", "y", "z"))
    if not verify_on_surface(w, X * X + Y * Y - Z ** 3 - 1).on_surface:
        raise InternalInvariant("cubic witness failed its residual check")
    return w


# -- canonicalization --------------------------------------------------------------


def canonicalize_quadratic(p: UniPoly) -> CanonicalQuadratic:
    """Complete the square: an affine change making p into sign*z^2 + lambda."""
    if int(p.degree) != 2:
        raise InvalidInput("canonicalization expects degree exactly 2")
    c = p.rational_coeffs()
    c2 = c[2]
    c1 = c.get(1, Fraction(0))
    c0 = c.get(0, Fraction(0))
    shift = -c1 / (2 * c2)
    lam = c0 - c1 * c1 / (4 * c2)
    if lam == 0:
        raise InvalidInput("lambda = 0 means p is a square (not square-free)")
    sign = 1 if c2 > 0 else -1
    root, tower = tower_sqrt(p.tower, abs(c2))
    rep = AffineReparam(scale=root.inverse(), shift=tower.rational(shift))
    expected = UniPoly(p.var, {2: tower.rational(sign), 0: tower.rational(lam)}, tower)
    if not (rep.apply_to_poly(p.with_tower(tower)) - expected).is_zero():
        raise InternalInvariant("square completion failed verification")
    return CanonicalQuadratic(sign=sign, lam=lam, reparam=rep)


# -- degree-by-degree verdicts -------------------------------------------------------


def _checked(witness: SurfaceParam, d: P2Decomposition) -> SurfaceParam:
    F = surface_implicit(d)
    if not verify_on_surface(witness, F).on_surface:
        raise InternalInvariant("real witness failed the implicit-surface residual check")
    default_real_embedding(witness.tower)  # every generator must embed into R
    return witness


def real_param_delta1(d: P2Decomposition) -> RealVerdict:
    """Degree-1 p: always a real proper parametrization over u^2 + v^2."""
    if d.delta != 1:
        raise InvalidInput("expects deg p = 1")
    c = d.p.rational_coeffs()
    rep = AffineReparam(
        scale=QQ.rational(1 / c[1]), shift=QQ.rational(-c.get(0, Fraction(0)) / c[1])
    )
    a1 = rep.apply_to_poly(d.a)
    b1 = rep.apply_to_poly(d.b)
    u = MultiPoly.variable("u", UV)
    v = MultiPoly.variable("v", UV)
    w = u * u + v * v
    aw = substitute(a1, {a1.var: w}) if not a1.is_constant() else MultiPoly.constant(
        a1.constant_value(), UV
    )
    bw = substitute(b1, {b1.var: w})
    witness = SurfaceParam.make(
        [aw * u, aw * v, bw],
        provenance=("normalize p to t", "paraboloid pattern [a(u^2+v^2)u, a(u^2+v^2)v, b(u^2+v^2)]"),
        properness="proper",
    )
    return RealVerdict("real-proper", "deg p = 1: paraboloid tubularization", _checked(witness, d))


def real_param_delta2(d: P2Decomposition) -> RealVerdict:
    """Degree-2 p: the four-way sign split on the canonical +-z^2 + lambda."""
    if d.delta != 2:
        raise InvalidInput("expects deg p = 2")
    cq = canonicalize_quadratic(d.p)
    if cq.sign < 0 and cq.lam < 0:
        return RealVerdict("empty-real-locus", "p < 0 everywhere: no real surface point")
    if cq.sign < 0 and cq.lam > 0:
        return RealVerdict(
            "no-real-parametrization", "compact (sphere tubularization)"
        )
    root, tower = tower_sqrt(cq.reparam.scale.tower, abs(cq.lam))
    if cq.lam > 0:
        A, B, C = one_sheet_components(tower)
        base = (root * A, root * B, root * C)
        flag = "proper"
        status = "real-proper"
        note = "one-sheeted hyperboloid recipe scaled by sqrt(lambda)"
        reason = "deg p = 2, positive leading sign, lambda > 0"
    else:
        Q1, Q2, Q3 = two_sheet_components(tower)
        base = (root * Q1, root * Q2, root * Q3)
        flag = "non-proper-degree-2"
        status = "real-nonproper-double-cover"
        note = "two-sheeted double-cover recipe scaled by sqrt(|lambda|)"
        reason = "deg p = 2, positive leading sign, lambda < 0: doubly covers one sheet"
    scale = cq.reparam.scale.lift_to(tower)
    shift = cq.reparam.shift.lift_to(tower)
    z_orig = scale * base[2] + MultiPoly.constant(shift, UV, tower)
    a_z = substitute(d.a, {d.a.var: z_orig}) if not d.a.is_constant() else MultiPoly.constant(
        d.a.constant_value(), UV, tower
    )
    b_z = substitute(d.b, {d.b.var: z_orig})
    witness = SurfaceParam.make(
        [a_z * base[0], a_z * base[1], b_z],
        provenance=("canonicalize p to sign*z^2 + lambda", note, "lift by (a, b)"),
        properness=flag,
    )
    return RealVerdict(status, reason, _checked(witness, d))


def real_param_delta0(d: P2Decomposition) -> RealVerdict:
    """Constant p: cylinder refusal, cone-style substitution at a real root
    of a, or the Pythagorean identity when a has no real roots."""
    if d.delta != 0:
        raise InvalidInput("expects constant p")
    c = d.p.constant_value().as_rational()
    if c < 0:
        return RealVerdict(
            "empty-real-locus",
            "p is a negative constant: x^2 + y^2 = p*a(z)^2 has no 2-dimensional real locus",
        )
    if d.a.is_constant():
        return RealVerdict("no-real-parametrization", "cylinder of revolution")
    asf = squarefree_part(d.a)
    n_real = sturm_real_root_count(asf)
    if n_real > 0:
        witness = _delta0_real_root_witness(d, c)
        return RealVerdict(
            "real-proper", "constant p with a real root of a: cone-style substitution", witness
        )
    pair = _smallest_disc_quadratic_factor(asf)
    if pair is None:
        return RealVerdict(
            "unresolved",
            "constant p, a without real roots, and no rational quadratic factor of a "
            "is accessible without full factorization",
        )
    witness = _delta0_no_real_root_witness(d, c, pair)
    return RealVerdict(
        "real-proper",
        "constant p, a without real roots: Pythagorean identity on C^2 + 1 = A^2 + B^2",
        witness,
    )


def _delta0_real_root_witness(d: P2Decomposition, c: Fraction) -> SurfaceParam:
    scale, tower = tower_sqrt(QQ, c)
    a1 = d.a.with_tower(tower) * scale
    r = pick_rational_root(d.a)
    if r is not None:
        root = tower.rational(r)
        note = f"shift by rational root {r} of a"
    else:
        m = squarefree_part(d.a)
        iv = isolate_real_roots(m)[-1]
        tower = tower.extend(
            "beta", [m.coeff(e) for e in range(int(m.degree) + 1)], embedding=iv
        )
        root = tower.gen("beta")
        a1 = a1.with_tower(tower)
        note = "shift by a designated real root of a (tower extension)"
    var = d.a.var
    lin = UniPoly(var, {1: 1, 0: root}, tower)
    shifted = a1.compose(lin)
    atil, rem = shifted.divmod(UniPoly.variable(var, tower))
    if not rem.is_zero():
        raise InternalInvariant("shifted a not divisible by its variable")
    bsh = d.b.with_tower(tower).compose(lin)
    u = MultiPoly.variable("u", UV, tower)
    v = MultiPoly.variable("v", UV, tower)
    w = u * u + v * v
    at_w = substitute(atil, {var: w}) if not atil.is_constant() else MultiPoly.constant(
        atil.constant_value(), UV, tower
    )
    witness = SurfaceParam.make(
        [Fraction(-2) * u * v * at_w, (v * v - u * u) * at_w, substitute(bsh, {var: w})],
        provenance=(f"absorb sqrt({c}) into a", note,
                    "degree-two substitution [s,t] -> [-u/v, u^2+v^2]"),
        properness="unknown",
    )
    return _checked(witness, d)


def _delta0_no_real_root_witness(d: P2Decomposition, c: Fraction, pair) -> SurfaceParam:
    beta, gamma = pair
    mu2 = gamma - beta * beta / 4
    if mu2 <= 0:
        raise InternalInvariant("chosen quadratic factor has real roots")
    mu, tower = tower_sqrt(QQ, mu2)
    scale, tower = tower_sqrt(tower, c)
    var = d.a.var
    # t -> mu*t - beta/2 sends t^2 + beta t + gamma to mu^2 (t^2 + 1)
    lin = UniPoly(var, {1: mu, 0: tower.rational(-beta / 2)}, tower)
    a1 = (d.a.with_tower(tower) * scale).compose(lin)
    quad = UniPoly(var, {2: 1, 0: 1}, tower)
    ahat, rem = a1.divmod(quad)
    if not rem.is_zero():
        raise InternalInvariant("normalized quadratic factor does not divide a")
    b1 = d.b.with_tower(tower).compose(lin)
    A, B, C = one_sheet_components(tower)
    ahat_C = substitute(ahat, {var: C}) if not ahat.is_constant() else MultiPoly.constant(
        ahat.constant_value(), UV, tower
    )
    witness = SurfaceParam.make(
        [2 * A * B * ahat_C, (B * B - A * A) * ahat_C, substitute(b1, {var: C})],
        provenance=(
            f"normalize quadratic factor t^2 + ({beta})t + ({gamma}) of a to t^2 + 1",
            "substitute A, B, C with C^2 + 1 = A^2 + B^2",
        ),
        properness="unknown",
    )
    return _checked(witness, d)


def _smallest_disc_quadratic_factor(f: UniPoly):
    """Rational (beta, gamma) with t^2 + beta t + gamma dividing f and
    beta^2 - 4 gamma < 0, minimizing |discriminant|; None if no rational
    quadratic factor exists."""
    found = []
    for beta, gamma in _rational_quadratic_factors(f):
        disc = beta * beta - 4 * gamma
        if disc < 0:
            found.append((abs(disc), beta, gamma))
    if not found:
        return None
    _, beta, gamma = min(found)
    return beta, gamma


def _rational_quadratic_factors(f: UniPoly):
    """All monic rational quadratic factors of f, by solving the two
    remainder coefficients of f mod (t^2 + B t + G) for rational (B, G)."""
    if int(f.degree) < 2 or not f.is_rational_poly():
        return []
    co = f.rational_coeffs()
    deg = int(f.degree)
    BG = ("B", "G")
    Bv = MultiPoly.variable("B", BG)
    Gv = MultiPoly.variable("G", BG)
    dense = [MultiPoly.constant(co.get(e, Fraction(0)), BG) for e in range(deg + 1)]
    for e in range(deg, 1, -1):
        top = dense[e]
        if top.is_zero():
            continue
        dense[e] = MultiPoly.zero(BG)
        dense[e - 1] = dense[e - 1] - top * Bv
        dense[e - 2] = dense[e - 2] - top * Gv
    R1, R0 = dense[1], dense[0]
    beta_candidates = set()
    for h in (R1, R0):
        if not h.is_zero() and not h.uses("G") and h.uses("B"):
            beta_candidates.update(rational_roots(h.to_unipoly("B")))
    if R1.uses("G") and R0.uses("G"):
        res = resultant_eliminate(R1, R0, "G")
        if not res.is_zero():
            if res.uses("B"):
                beta_candidates.update(rational_roots(res.to_unipoly("B")))
            elif not res.is_constant():
                pass  # nonzero constant: no common solution from this route
    out = []
    tvar = UniPoly.variable(f.var)
    for beta in sorted(beta_candidates):
        spec = {"B": MultiPoly.constant(beta, ()), "G": Gv}
        g1 = substitute(R1, spec)
        g0 = substitute(R0, spec)
        polys = [h.to_unipoly("G") for h in (g1, g0) if not h.is_zero()]
        if not polys:
            continue
        if all(p.is_constant() for p in polys):
            continue
        g = polys[0]
        for p in polys[1:]:
            g = gcd_unipoly(g, p)
        if g.is_constant():
            continue
        for gamma in sorted(set(rational_roots(g))):
            q = tvar ** 2 + beta * tvar + gamma
            _, rem = f.divmod(q)
            if rem.is_zero():
                out.append((beta, gamma))
    return sorted(set(out))


# -- conjecture predicate and dispatch ------------------------------------------------


@dataclass(frozen=True)
class ConjecturePredicate:
    """The testable right-hand side: at most one real root of p, and a
    two-dimensional real locus (p positive somewhere)."""

    satisfied: bool
    real_root_count: int
    two_dimensional: bool

    @property
    def status(self) -> str:
        return "satisfied" if self.satisfied else "violated"


def conjecture_predicate(d: P2Decomposition) -> ConjecturePredicate:
    p = d.p
    if p.is_constant():
        count = 0
        positive_somewhere = p.constant_value().as_rational() > 0
    else:
        count = sturm_real_root_count(squarefree_part(p))
        # a square-free p changes sign at any real root, so it is positive
        # somewhere iff it has a root or is positive at 0
        positive_somewhere = count >= 1 or p.eval_at(Fraction(0)).as_rational() > 0
    sat = count <= 1 and positive_somewhere
    return ConjecturePredicate(satisfied=sat, real_root_count=count, two_dimensional=positive_somewhere)


def real_verdict(d: P2Decomposition) -> RealVerdict:
    """Dispatch on the degree of p; degrees above 2 are unresolved except the
    one hard-coded cubic."""
    if d.delta == 0:
        return real_param_delta0(d)
    if d.delta == 1:
        return real_param_delta1(d)
    if d.delta == 2:
        return real_param_delta2(d)
    tvar = UniPoly.variable(d.p.var)
    if d.p == tvar ** 3 + 1 and d.a == 1 and d.b == tvar:
        return RealVerdict(
            "real-proper",
            "hard-coded witness for x^2 + y^2 - z^3 - 1 (properness not certified)",
            cubic_example(),
        )
    ev = conjecture_predicate(d)
    return RealVerdict(
        "unresolved",
        f"deg p = {d.delta} >= 3 is open; conjecture predicate {ev.status} "
        f"(real roots of p: {ev.real_root_count}, two-dimensional: {ev.two_dimensional})",
    )
