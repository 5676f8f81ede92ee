"""Independent symbolic verification of parametrization claims.

Nothing here trusts the construction modules: on-surface means the exact
residual of substituting the components into the implicit equation is the
zero polynomial, dominance means a 2x2 Jacobian minor is nonzero as a
polynomial, and fiber cardinality is counted by resultant elimination
plus gcd degrees over quotient towers (splitting on zero divisors, so the
count is exact even when the eliminant does not factor over Q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput, ZeroDivisor
from .poly import (
    MultiPoly,
    UniPoly,
    gcd_unipoly,
    resultant_eliminate,
    squarefree_part,
    substitute,
)
from .tower import ExtensionTower, join_towers


class _Indeterminate:
    """Sentinel: the chosen sample was non-generic; retry with another."""

    def __repr__(self):
        return "Indeterminate"

    def __bool__(self):
        return False


INDETERMINATE = _Indeterminate()

#: Deterministic retry samples for fiber counting, in order.
FIBER_SAMPLES = (
    (Fraction(1), Fraction(1)),
    (Fraction(2), Fraction(1)),
    (Fraction(1), Fraction(2)),
    (Fraction(3), Fraction(2)),
    (Fraction(2), Fraction(3)),
)


@dataclass
class VerificationReport:
    residual: MultiPoly
    on_surface: bool
    jacobian_rank: int
    fiber_count: object = None  # int | INDETERMINATE | None
    fiber_sample: tuple | None = None

    def __repr__(self):
        return (
            f"VerificationReport(on_surface={self.on_surface}, "
            f"jacobian_rank={self.jacobian_rank}, fiber_count={self.fiber_count})"
        )


def verify_on_surface(s, F: MultiPoly) -> VerificationReport:
    """Substitute the parametrization into F and reduce; on-surface iff the
    residual is identically zero."""
    comps = s.components if hasattr(s, "components") else tuple(s)
    bindings = dict(zip(("x", "y", "z"), comps))
    residual = substitute(F, {v: bindings[v] for v in F.vars if v in bindings})
    return VerificationReport(
        residual=residual,
        on_surface=residual.is_zero(),
        jacobian_rank=jacobian_generic_rank(s),
    )


def _jacobian_minors(s) -> list:
    comps = s.components if hasattr(s, "components") else tuple(s)
    du = [c.partial_derivative("u") for c in comps]
    dv = [c.partial_derivative("v") for c in comps]
    return [du[i] * dv[j] - du[j] * dv[i] for i, j in ((0, 1), (0, 2), (1, 2))]


def jacobian_generic_rank(s) -> int:
    """2 if some 2x2 minor is nonzero, 1 if the Jacobian is nonzero with all
    minors zero, 0 for a constant map."""
    comps = s.components if hasattr(s, "components") else tuple(s)
    if any(not m.is_zero() for m in _jacobian_minors(s)):
        return 2
    for c in comps:
        if not c.partial_derivative("u").is_zero() or not c.partial_derivative("v").is_zero():
            return 1
    return 0


def fiber_count(s, sample) -> object:
    """Number of complex (u, v) with s(u, v) = s(sample), or INDETERMINATE.

    Eliminates v by pairwise resultants, takes the square-free part of the
    gcd of the eliminants, and counts distinct v-roots per u-root by gcd
    degree over the quotient tower, splitting moduli on zero divisors.
    Distinct solutions only; multiplicity is not counted.
    """
    u0, v0 = (Fraction(sample[0]), Fraction(sample[1]))
    comps = s.components if hasattr(s, "components") else tuple(s)
    tower = comps[0].tower
    for c in comps[1:]:
        tower = join_towers(tower, c.tower)
    vals = [m.eval_at({"u": u0, "v": v0}) for m in _jacobian_minors(s)]
    if all(v.is_zero() for v in vals):
        raise InvalidInput("sample lies on the Jacobian's vanishing locus")
    eqs = []
    for c in comps:
        e = c - MultiPoly.constant(c.eval_at({"u": u0, "v": v0}), c.vars, tower)
        if not e.is_zero():
            eqs.append(MultiPoly(("u", "v"), e.with_vars(("u", "v")).terms, tower))
    with_v = [e for e in eqs if e.uses("v")]
    u_only = [e for e in eqs if not e.uses("v")]
    if not with_v:
        return INDETERMINATE
    candidates = [_to_unipoly_u(e, tower) for e in u_only]
    for i in range(len(with_v)):
        for j in range(i + 1, len(with_v)):
            r = resultant_eliminate(with_v[i], with_v[j], "v")
            if not r.is_zero():
                candidates.append(_to_unipoly_u(r, tower))
    if not candidates:
        return INDETERMINATE
    g = candidates[0]
    for c in candidates[1:]:
        g = gcd_unipoly(g, c)
    if g.is_zero() or g.is_constant():
        return 0 if g.is_constant() and not g.is_zero() else INDETERMINATE
    g = squarefree_part(g)

    total = 0
    stack = [g.monic()]
    while stack:
        m = stack.pop()
        deg_m = int(m.degree)
        if deg_m == 1:
            theta = -(m.coeff(0) * m.coeff(1).inverse())
            branch_tower = tower
            branch_name = None
        else:
            branch_name = _fresh_name(tower, "fiber_u")
            branch_tower = tower.extend(
                branch_name, [m.coeff(e) for e in range(deg_m + 1)]
            )
            theta = branch_tower.gen(branch_name)
        try:
            nv = _common_v_root_count(with_v, theta, branch_tower)
        except ZeroDivisor as exc:
            if branch_name is not None and exc.step_name == branch_name:
                f = UniPoly(m.var, {e: c for e, c in enumerate(exc.factor)}, tower)
                stack.append(f.monic())
                stack.append(m.divmod(f)[0].monic())
                continue
            raise
        if nv is INDETERMINATE:
            return INDETERMINATE
        total += deg_m * nv
    return total


def _fresh_name(tower: ExtensionTower, base: str) -> str:
    name = base
    k = 2
    while any(s.name == name for s in tower.steps):
        name = f"{base}{k}"
        k += 1
    return name


def _to_unipoly_u(e: MultiPoly, tower: ExtensionTower) -> UniPoly:
    coeffs = {}
    aligned = e.with_vars(("u", "v"))
    for key, c in aligned.terms.items():
        coeffs[key[0]] = coeffs.get(key[0], tower.zero()) + c
    return UniPoly("u", coeffs, tower)


def _common_v_root_count(with_v, theta, branch_tower) -> object:
    g = None
    for e in with_v:
        dense = e.as_unipoly_in("v")
        pe = UniPoly(
            "v",
            {k: c.eval_at({"u": theta}) for k, c in enumerate(dense)},
            branch_tower,
        )
        g = pe if g is None else gcd_unipoly(g, pe)
    if g is None or g.is_zero():
        return INDETERMINATE
    if g.is_constant():
        return 0
    return int(squarefree_part(g).degree)


def fiber_count_first_valid(s, samples=FIBER_SAMPLES):
    """Walk the deterministic sample list; the first sample off the Jacobian
    vanishing locus that yields a determinate count wins."""
    for sample in samples:
        try:
            n = fiber_count(s, sample)
        except InvalidInput:
            continue
        if n is not INDETERMINATE:
            return n, sample
    return INDETERMINATE, None


def rational_residual(F: MultiPoly, components) -> MultiPoly:
    """Cleared-denominator residual of F composed with a rational
    parametrization given as (numerator, denominator) pairs; zero iff the
    rational map satisfies F identically."""
    names = ("x", "y", "z")
    nums = {}
    dens = {}
    for name, (n, d) in zip(names, components):
        nums[name], dens[name] = n, d
    Fa = F.with_vars(tuple(sorted(set(F.vars) | set(names))))
    idx = {v: i for i, v in enumerate(Fa.vars)}
    maxe = {v: 0 for v in names}
    for key in Fa.terms:
        for v in names:
            maxe[v] = max(maxe[v], key[idx[v]])
    total = None
    for key, c in Fa.terms.items():
        term = MultiPoly.constant(c)
        for v in names:
            e = key[idx[v]]
            term = term * nums[v] ** e * dens[v] ** (maxe[v] - e)
        total = term if total is None else total + term
    return total if total is not None else MultiPoly.zero()
