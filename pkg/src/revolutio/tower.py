"""Exact arithmetic in towers of simple algebraic extensions of Q.

A tower is Q[g1]/(m1)[g2]/(m2)... where each minimal polynomial is monic
and square-free over the tower below it, but not necessarily irreducible.
Square-freeness makes the quotient a product of fields, so inversion by
the extended Euclidean algorithm either succeeds or exposes a proper
factor of some minimal polynomial (raised as ZeroDivisor, the dynamic
evaluation hook).

Elements are stored as multivariate polynomials in the generators with
Fraction coefficients, reduced so the exponent of each generator stays
below the degree of its minimal polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidInput, TowerMismatch, ZeroDivisor

Rat = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise InvalidInput(f"expected a rational, got {type(x).__name__}")


@dataclass(frozen=True)
class TowerStep:
    """One extension step: a generator name, its monic minimal polynomial
    (dense coefficients over the tower below), and an optional isolating
    interval designating a real root for numeric embeddings."""

    name: str
    minpoly: tuple
    embedding: tuple | None = None

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1


class ExtensionTower:
    """An ordered tuple of extension steps; the empty tower is Q."""

    __slots__ = ("steps", "_degs")

    def __init__(self, steps: tuple = ()):
        self.steps = tuple(steps)
        self._degs = tuple(s.degree for s in self.steps)

    @property
    def height(self) -> int:
        return len(self.steps)

    @property
    def parent(self) -> "ExtensionTower":
        if not self.steps:
            raise InvalidInput("the rational tower has no parent")
        return ExtensionTower(self.steps[:-1])

    def __eq__(self, other) -> bool:
        return isinstance(other, ExtensionTower) and (
            self is other or self.steps == other.steps
        )

    def __hash__(self) -> int:
        return hash(self.steps)

    def __repr__(self) -> str:
        if not self.steps:
            return "QQ"
        return "QQ[" + ", ".join(s.name for s in self.steps) + "]"

    def is_prefix_of(self, other: "ExtensionTower") -> bool:
        return self.steps == other.steps[: len(self.steps)]

    def step_index(self, name: str) -> int:
        for k, s in enumerate(self.steps):
            if s.name == name:
                return k
        raise InvalidInput(f"no tower step named {name!r}")

    # -- element constructors -------------------------------------------------

    def zero(self) -> "FieldElement":
        return FieldElement(self, {})

    def one(self) -> "FieldElement":
        return self.rational(1)

    def rational(self, q) -> "FieldElement":
        q = _as_fraction(q)
        if q == 0:
            return FieldElement(self, {})
        return FieldElement(self, {(0,) * self.height: q})

    def gen(self, which) -> "FieldElement":
        k = which if isinstance(which, int) else self.step_index(which)
        key = tuple(1 if i == k else 0 for i in range(self.height))
        return FieldElement(self, {key: Fraction(1)})

    # -- construction ---------------------------------------------------------

    def extend(self, name: str, minpoly: Sequence, embedding=None) -> "ExtensionTower":
        """Append a generator with the given monic minimal polynomial.

        ``minpoly`` is dense, constant term first; coefficients may be
        ints, Fractions, or FieldElements over this tower. The polynomial
        must be monic, of degree >= 2, and square-free over this tower.
        """
        if any(s.name == name for s in self.steps):
            raise InvalidInput(f"generator name {name!r} already in use")
        coeffs = [self._coerce_coeff(c) for c in minpoly]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if len(coeffs) < 3:
            raise InvalidInput("minimal polynomial must have degree >= 2")
        if coeffs[-1] != self.one():
            raise InvalidInput("minimal polynomial must be monic")
        if not _dense_is_squarefree(coeffs, self):
            raise InvalidInput("minimal polynomial must be square-free over the tower below")
        step = TowerStep(name=name, minpoly=tuple(coeffs), embedding=embedding)
        return ExtensionTower(self.steps + (step,))

    def _coerce_coeff(self, c) -> "FieldElement":
        if isinstance(c, FieldElement):
            if c.tower != self:
                if c.tower.is_prefix_of(self):
                    return c.lift_to(self)
                raise TowerMismatch("minimal polynomial coefficient over a foreign tower")
            return c
        return self.rational(c)


QQ = ExtensionTower(())


def join_towers(a: ExtensionTower, b: ExtensionTower) -> ExtensionTower:
    """The larger of two towers when one is a prefix of the other."""
    if a.is_prefix_of(b):
        return b
    if b.is_prefix_of(a):
        return a
    raise TowerMismatch(f"towers {a!r} and {b!r} are not nested")


class FieldElement:
    """An element of an extension tower, in reduced canonical form."""

    __slots__ = ("tower", "terms")

    def __init__(self, tower: ExtensionTower, terms: dict, reduce: bool = True):
        self.tower = tower
        if reduce:
            terms = _reduce_terms(tower, terms)
        self.terms = terms

    # -- structure ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        if not self.terms:
            return True
        zero_key = (0,) * self.tower.height
        return len(self.terms) == 1 and zero_key in self.terms

    def as_rational(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_rational():
            raise InvalidInput(f"{self} is not rational")
        return next(iter(self.terms.values()))

    def lift_to(self, tower: ExtensionTower) -> "FieldElement":
        """Reinterpret over a taller tower having this one as a prefix."""
        if tower == self.tower:
            return self
        if not self.tower.is_prefix_of(tower):
            raise TowerMismatch("cannot lift: not a prefix")
        pad = (0,) * (tower.height - self.tower.height)
        return FieldElement(tower, {k + pad: v for k, v in self.terms.items()}, reduce=False)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.tower.rational(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if self.tower != other.tower:
            try:
                t = join_towers(self.tower, other.tower)
            except TowerMismatch:
                return False
            return self.lift_to(t).terms == other.lift_to(t).terms
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.tower, frozenset(self.terms.items())))

    # -- ring operations ------------------------------------------------------

    def _coerced(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.tower.rational(other)
        if not isinstance(other, FieldElement):
            return None, None
        t = join_towers(self.tower, other.tower)
        return self.lift_to(t), other.lift_to(t)

    def __add__(self, other):
        a, b = self._coerced(other)
        if a is None:
            return NotImplemented
        terms = dict(a.terms)
        for k, v in b.terms.items():
            s = terms.get(k, Fraction(0)) + v
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return FieldElement(a.tower, terms, reduce=False)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.tower, {k: -v for k, v in self.terms.items()}, reduce=False)

    def __sub__(self, other):
        a, b = self._coerced(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        a, b = self._coerced(other)
        if a is None:
            return NotImplemented
        acc: dict = {}
        for ka, va in a.terms.items():
            for kb, vb in b.terms.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                s = acc.get(key, Fraction(0)) + va * vb
                if s:
                    acc[key] = s
                else:
                    acc.pop(key, None)
        return FieldElement(a.tower, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.tower.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other):
        a, b = self._coerced(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.tower.rational(other) / self

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse; raises ZeroDivisor when the element is a
        zero divisor in a reducible quotient (carrying the found factor)."""
        if self.is_zero():
            raise InvalidInput("inverse of zero")
        tower = self.tower
        if tower.height == 0:
            return tower.rational(1 / self.as_rational())
        step = tower.steps[-1]
        parent = tower.parent
        a = _dense_from_element(self)
        m = [c for c in step.minpoly]
        inv = _dense_invert_mod(a, m, parent, step.name)
        return _dense_to_element(inv, tower)

    def sign(self) -> int:
        """Exact sign; defined for rational values only."""
        q = self.as_rational()
        return (q > 0) - (q < 0)

    # -- presentation ----------------------------------------------------------

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        names = [s.name for s in self.tower.steps]
        parts = []
        for key in sorted(self.terms, reverse=True):
            q = self.terms[key]
            monos = [
                n if e == 1 else f"{n}^{e}"
                for n, e in zip(names, key)
                if e
            ]
            if not monos:
                parts.append(str(q))
            elif q == 1:
                parts.append("*".join(monos))
            elif q == -1:
                parts.append("-" + "*".join(monos))
            else:
                parts.append(f"{q}*" + "*".join(monos))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


# -- reduction ----------------------------------------------------------------


def _reduce_terms(tower: ExtensionTower, terms: dict) -> dict:
    degs = tower._degs
    work = {k: v for k, v in terms.items() if v}
    while True:
        k_viol = None
        for k in range(tower.height - 1, -1, -1):
            if any(e[k] >= degs[k] for e in work):
                k_viol = k
                break
        if k_viol is None:
            return work
        k = k_viol
        d = degs[k]
        minpoly = tower.steps[k].minpoly  # coefficients over the prefix tower
        hit = [e for e in work if e[k] >= d]
        for e in hit:
            # a previous rewrite in this pass may have cancelled this entry
            q = work.pop(e, None)
            if q is None:
                continue
            # theta_k^d == -(c_0 + ... + c_{d-1} theta_k^{d-1})
            for j in range(d):
                cj = minpoly[j]
                if cj.is_zero():
                    continue
                for pe, pq in cj.terms.items():
                    key = tuple(
                        (e[i] + pe[i]) if i < k else
                        (e[k] - d + j if i == k else e[i])
                        for i in range(len(e))
                    )
                    s = work.get(key, Fraction(0)) - q * pq
                    if s:
                        work[key] = s
                    else:
                        work.pop(key, None)


# -- dense univariate helpers over a tower -------------------------------------
# Coefficient lists are constant-first; all coefficients share one tower.


def _dense_trim(c: list) -> list:
    while c and c[-1].is_zero():
        c.pop()
    return c


def _dense_deg(c: list) -> int:
    return len(c) - 1


def _dense_from_element(e: FieldElement) -> list:
    """Split an element into a dense polynomial in its top generator, with
    coefficients over the parent tower."""
    parent = e.tower.parent
    buckets: dict = {}
    for key, q in e.terms.items():
        buckets.setdefault(key[-1], {})[key[:-1]] = q
    top = max(buckets) if buckets else -1
    return _dense_trim(
        [FieldElement(parent, buckets.get(i, {}), reduce=False) for i in range(top + 1)]
    )


def _dense_to_element(c: list, tower: ExtensionTower) -> FieldElement:
    terms: dict = {}
    for i, coeff in enumerate(c):
        for key, q in coeff.terms.items():
            terms[key + (i,)] = q
    return FieldElement(tower, terms, reduce=False)


def _dense_divmod(num: list, den: list, tower: ExtensionTower):
    """Polynomial division with remainder; the divisor's leading coefficient
    is inverted in the tower (may raise ZeroDivisor)."""
    den = _dense_trim(list(den))
    if not den:
        raise InvalidInput("division by the zero polynomial")
    inv_lc = den[-1].inverse()
    r = list(num)
    _dense_trim(r)
    q = [tower.zero()] * max(0, len(r) - len(den) + 1)
    while len(r) >= len(den):
        shift = len(r) - len(den)
        factor = r[-1] * inv_lc
        q[shift] = factor
        for i, dc in enumerate(den):
            r[shift + i] = r[shift + i] - factor * dc
        _dense_trim(r)
    return _dense_trim(q), r


def _dense_derivative(c: list, tower: ExtensionTower) -> list:
    return _dense_trim([c[i] * i for i in range(1, len(c))])


def _dense_gcd_monic(a: list, b: list, tower: ExtensionTower) -> list:
    a, b = _dense_trim(list(a)), _dense_trim(list(b))
    while b:
        _, r = _dense_divmod(a, b, tower)
        a, b = b, r
    if a:
        inv = a[-1].inverse()
        a = [c * inv for c in a]
    return a


def _dense_is_squarefree(c: list, tower: ExtensionTower) -> bool:
    g = _dense_gcd_monic(c, _dense_derivative(c, tower), tower)
    return _dense_deg(g) == 0


def _dense_invert_mod(a: list, m: list, parent: ExtensionTower, step_name: str) -> list:
    """Inverse of ``a`` modulo the monic polynomial ``m`` over ``parent``.

    Half-extended Euclid. A nonconstant gcd means ``a`` is a zero divisor
    in parent[x]/(m); the monic gcd is reported as the splitting factor.
    """
    r0, r1 = _dense_trim(list(m)), _dense_trim(list(a))
    s0, s1 = [], [parent.one()]
    while r1 and _dense_deg(r1) > 0:
        q, r2 = _dense_divmod(r0, r1, parent)
        s2 = _dense_sub(s0, _dense_mul(q, s1, parent), parent)
        r0, r1, s0, s1 = r1, r2, s1, s2
    if not r1:
        inv_lc = r0[-1].inverse()
        factor = tuple(c * inv_lc for c in r0)
        raise ZeroDivisor(step_name, factor)
    c_inv = r1[0].inverse()
    inv = [c * c_inv for c in s1]
    _, rem = _dense_divmod(inv, m, parent)
    return rem


def _dense_mul(a: list, b: list, tower: ExtensionTower) -> list:
    if not a or not b:
        return []
    out = [tower.zero()] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca.is_zero():
            continue
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return _dense_trim(out)


def _dense_sub(a: list, b: list, tower: ExtensionTower) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else tower.zero()
        y = b[i] if i < len(b) else tower.zero()
        out.append(x - y)
    return _dense_trim(out)


# -- dynamic evaluation support -------------------------------------------------


def split_top_step(tower: ExtensionTower, factor: Iterable) -> tuple:
    """Split the top step's minimal polynomial m = factor * cofactor into two
    towers (the dynamic-evaluation branch move). ``factor`` is monic, dense,
    over the parent tower."""
    parent = tower.parent
    step = tower.steps[-1]
    f = _dense_trim([parent._coerce_coeff(c) for c in factor])
    m = list(step.minpoly)
    g, rem = _dense_divmod(m, f, parent)
    if rem:
        raise InvalidInput("factor does not divide the minimal polynomial")
    out = []
    for part in (f, g):
        if _dense_deg(part) == 0:
            raise InvalidInput("trivial factor in tower split")
        out.append(
            ExtensionTower(
                tower.steps[:-1]
                + (TowerStep(step.name, tuple(part), step.embedding),)
            )
        )
    return tuple(out)


def rereduce(e: FieldElement, new_tower: ExtensionTower) -> FieldElement:
    """Map an element into a tower whose top minimal polynomial divides the
    old one (same generators otherwise)."""
    dense = _dense_from_element(e)
    parent = new_tower.parent
    dense = [c for c in dense]
    _, rem = _dense_divmod(dense, list(new_tower.steps[-1].minpoly), parent) if dense else ([], [])
    return _dense_to_element(rem, new_tower)
