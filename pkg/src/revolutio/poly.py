"""Sparse exact polynomials over extension towers.

UniPoly is univariate; MultiPoly holds up to four variables (three for
geometry, four for the Diophantine-identity check). Both keep no zero
coefficients and canonicalize on construction, so structural equality is
semantic equality. The univariate toolkit (gcd, Yun decomposition,
rational roots, Sturm counts) together with substitution, exact division
and Sylvester resultants is everything the parametrization pipeline
needs; there is deliberately no general factorization.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Mapping, Sequence, Union

from .errors import InvalidInput, NotDivisible
from .tower import QQ, ExtensionTower, FieldElement, join_towers

NEG_INF = float("-inf")

Scalar = Union[int, Fraction, FieldElement]

MAX_VARS = 4


def _coerce_scalar(x: Scalar, tower: ExtensionTower) -> FieldElement:
    if isinstance(x, FieldElement):
        t = join_towers(x.tower, tower)
        return x.lift_to(t)
    return tower.rational(x)


class UniPoly:
    """Sparse univariate polynomial over a tower."""

    __slots__ = ("var", "tower", "coeffs")

    def __init__(self, var: str, coeffs: Mapping[int, Scalar], tower: ExtensionTower = QQ):
        t = tower
        coerced = {}
        for e, c in coeffs.items():
            if isinstance(c, FieldElement):
                t = join_towers(t, c.tower)
        for e, c in coeffs.items():
            fe = _coerce_scalar(c, t)
            if not fe.is_zero():
                if e < 0:
                    raise InvalidInput("negative exponent")
                coerced[e] = fe.lift_to(t) if fe.tower != t else fe
        self.var = var
        self.tower = t
        self.coeffs = {e: c.lift_to(t) for e, c in coerced.items()}

    @classmethod
    def from_dense(cls, var: str, dense: Sequence[Scalar], tower: ExtensionTower = QQ) -> "UniPoly":
        return cls(var, {i: c for i, c in enumerate(dense)}, tower)

    @classmethod
    def zero(cls, var: str, tower: ExtensionTower = QQ) -> "UniPoly":
        return cls(var, {}, tower)

    @classmethod
    def constant(cls, var: str, c: Scalar, tower: ExtensionTower = QQ) -> "UniPoly":
        return cls(var, {0: c}, tower)

    @classmethod
    def variable(cls, var: str, tower: ExtensionTower = QQ) -> "UniPoly":
        return cls(var, {1: 1}, tower)

    # -- structure ------------------------------------------------------------

    @property
    def degree(self):
        return max(self.coeffs) if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return self.degree <= 0

    def lc(self) -> FieldElement:
        if self.is_zero():
            return self.tower.zero()
        return self.coeffs[max(self.coeffs)]

    def coeff(self, e: int) -> FieldElement:
        return self.coeffs.get(e, self.tower.zero())

    def constant_value(self) -> FieldElement:
        if not self.is_constant():
            raise InvalidInput("not a constant polynomial")
        return self.coeff(0)

    def is_rational_poly(self) -> bool:
        return all(c.is_rational() for c in self.coeffs.values())

    def rational_coeffs(self) -> dict:
        if not self.is_rational_poly():
            raise InvalidInput("coefficients are not all rational")
        return {e: c.as_rational() for e, c in self.coeffs.items()}

    def with_tower(self, tower: ExtensionTower) -> "UniPoly":
        return UniPoly(self.var, self.coeffs, tower)

    def rename(self, var: str) -> "UniPoly":
        return UniPoly(var, self.coeffs, self.tower)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.is_constant() and self.coeff(0) == other
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.var != other.var:
            return self.is_constant() and other.is_constant() and self.coeff(0) == other.coeff(0)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, frozenset(self.coeffs.items())))

    # -- arithmetic -----------------------------------------------------------

    def _binary(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            other = UniPoly.constant(self.var, other, self.tower)
        if not isinstance(other, UniPoly):
            return None, None
        if other.var != self.var and not (other.is_constant() or self.is_constant()):
            raise InvalidInput(f"variable mismatch: {self.var} vs {other.var}")
        var = self.var if not self.is_constant() else other.var
        t = join_towers(self.tower, other.tower)
        return (
            UniPoly(var, self.coeffs, t),
            UniPoly(var, other.coeffs, t),
        )

    def __add__(self, other):
        a, b = self._binary(other)
        if a is None:
            return NotImplemented
        out = dict(a.coeffs)
        for e, c in b.coeffs.items():
            s = out.get(e, a.tower.zero()) + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return UniPoly(a.var, out, a.tower)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.var, {e: -c for e, c in self.coeffs.items()}, self.tower)

    def __sub__(self, other):
        a, b = self._binary(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        a, b = self._binary(other)
        if a is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in a.coeffs.items():
            for e2, c2 in b.coeffs.items():
                e = e1 + e2
                s = out.get(e, a.tower.zero()) + c1 * c2
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return UniPoly(a.var, out, a.tower)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise InvalidInput("negative exponent")
        result = UniPoly.constant(self.var, 1, self.tower)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divmod(self, other: "UniPoly"):
        """Division with remainder; inverts the divisor's leading coefficient."""
        a, b = self._binary(other)
        if b.is_zero():
            raise InvalidInput("division by zero polynomial")
        inv_lc = b.lc().inverse()
        db = b.degree
        q: dict = {}
        r = dict(a.coeffs)
        while r and max(r) >= db:
            dr = max(r)
            f = r[dr] * inv_lc
            q[dr - db] = f
            for e, c in b.coeffs.items():
                key = dr - db + e
                s = r.get(key, a.tower.zero()) - f * c
                if s.is_zero():
                    r.pop(key, None)
                else:
                    r[key] = s
        return UniPoly(a.var, q, a.tower), UniPoly(a.var, r, a.tower)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = self.lc().inverse()
        return UniPoly(self.var, {e: c * inv for e, c in self.coeffs.items()}, self.tower)

    def derivative(self) -> "UniPoly":
        return UniPoly(self.var, {e - 1: c * e for e, c in self.coeffs.items() if e > 0}, self.tower)

    def eval_at(self, x: Scalar) -> FieldElement:
        xe = _coerce_scalar(x, self.tower)
        t = xe.tower
        acc = t.zero()
        for e in range(int(self.degree), -1, -1) if not self.is_zero() else []:
            acc = acc * xe + self.coeff(e).lift_to(t)
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """self(inner(t)); the result lives in inner's variable."""
        t = join_towers(self.tower, inner.tower)
        acc = UniPoly.zero(inner.var, t)
        if self.is_zero():
            return acc
        for e in range(int(self.degree), -1, -1):
            acc = acc * inner + UniPoly.constant(inner.var, self.coeff(e), t)
        return acc

    def to_multi(self, extra_vars: Iterable[str] = ()) -> "MultiPoly":
        vars_ = tuple(sorted(set(extra_vars) | {self.var}))
        i = vars_.index(self.var)
        terms = {}
        for e, c in self.coeffs.items():
            key = tuple(e if j == i else 0 for j in range(len(vars_)))
            terms[key] = c
        return MultiPoly(vars_, terms, self.tower)

    def __repr__(self) -> str:
        return _poly_str({(e,): c for e, c in self.coeffs.items()}, (self.var,))


class MultiPoly:
    """Sparse polynomial in up to four variables over a tower.

    Variables are always stored sorted, so canonical forms are unique.
    """

    __slots__ = ("vars", "tower", "terms")

    def __init__(self, vars_: Sequence[str], terms: Mapping[tuple, Scalar], tower: ExtensionTower = QQ):
        vars_ = tuple(vars_)
        if len(vars_) > MAX_VARS:
            raise InvalidInput(f"at most {MAX_VARS} variables are supported")
        if len(set(vars_)) != len(vars_):
            raise InvalidInput("duplicate variable")
        order = tuple(sorted(range(len(vars_)), key=lambda i: vars_[i]))
        svars = tuple(vars_[i] for i in order)
        t = tower
        for c in terms.values():
            if isinstance(c, FieldElement):
                t = join_towers(t, c.tower)
        out: dict = {}
        for key, c in terms.items():
            if len(key) != len(vars_):
                raise InvalidInput("exponent tuple length mismatch")
            if any(e < 0 for e in key):
                raise InvalidInput("negative exponent")
            fe = _coerce_scalar(c, t)
            if fe.is_zero():
                continue
            skey = tuple(key[i] for i in order)
            prev = out.get(skey)
            out[skey] = fe if prev is None else prev + fe
            if out[skey].is_zero():
                del out[skey]
        self.vars = svars
        self.tower = t
        self.terms = {k: v.lift_to(t) for k, v in out.items()}

    @classmethod
    def zero(cls, vars_: Sequence[str] = (), tower: ExtensionTower = QQ) -> "MultiPoly":
        return cls(tuple(vars_), {}, tower)

    @classmethod
    def constant(cls, c: Scalar, vars_: Sequence[str] = (), tower: ExtensionTower = QQ) -> "MultiPoly":
        vars_ = tuple(vars_)
        return cls(vars_, {(0,) * len(vars_): c}, tower)

    @classmethod
    def variable(cls, var: str, vars_: Sequence[str] = (), tower: ExtensionTower = QQ) -> "MultiPoly":
        vars_ = tuple(vars_) or (var,)
        if var not in vars_:
            vars_ = vars_ + (var,)
        key = tuple(1 if v == var else 0 for v in vars_)
        return cls(vars_, {key: 1}, tower)

    # -- structure ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in k) for k in self.terms)

    def constant_value(self) -> FieldElement:
        if not self.is_constant():
            raise InvalidInput("not a constant polynomial")
        if self.is_zero():
            return self.tower.zero()
        return next(iter(self.terms.values()))

    @property
    def total_degree(self):
        return max((sum(k) for k in self.terms), default=NEG_INF)

    def degree_in(self, var: str):
        if var not in self.vars:
            return 0 if not self.is_zero() else NEG_INF
        i = self.vars.index(var)
        return max((k[i] for k in self.terms), default=NEG_INF)

    def uses(self, var: str) -> bool:
        d = self.degree_in(var)
        return d != NEG_INF and d > 0

    def with_vars(self, vars_: Sequence[str]) -> "MultiPoly":
        """Reindex onto a superset of variables."""
        vars_ = tuple(sorted(vars_))
        missing = [v for v in self.vars if v not in vars_ and self.uses(v)]
        if missing:
            raise InvalidInput(f"cannot drop used variables {missing}")
        pos = {v: i for i, v in enumerate(vars_)}
        terms = {}
        for key, c in self.terms.items():
            nk = [0] * len(vars_)
            for v, e in zip(self.vars, key):
                if e:
                    nk[pos[v]] = e
            terms[tuple(nk)] = c
        return MultiPoly(vars_, terms, self.tower)

    def drop_unused_vars(self) -> "MultiPoly":
        used = tuple(v for v in self.vars if self.uses(v))
        return self.with_vars(used)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a = self.drop_unused_vars()
        b = other.drop_unused_vars()
        return a.vars == b.vars and a.terms == b.terms

    def __hash__(self):
        a = self.drop_unused_vars()
        return hash((a.vars, frozenset(a.terms.items())))

    # -- arithmetic -----------------------------------------------------------

    def _binary(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            other = MultiPoly.constant(other, self.vars, self.tower)
        if isinstance(other, UniPoly):
            other = other.to_multi()
        if not isinstance(other, MultiPoly):
            return None, None
        vars_ = tuple(sorted(set(self.vars) | set(other.vars)))
        t = join_towers(self.tower, other.tower)
        return (
            MultiPoly(vars_, self.with_vars(vars_).terms, t),
            MultiPoly(vars_, other.with_vars(vars_).terms, t),
        )

    def __add__(self, other):
        a, b = self._binary(other)
        if a is None:
            return NotImplemented
        out = dict(a.terms)
        for k, c in b.terms.items():
            s = out.get(k, a.tower.zero()) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return MultiPoly(a.vars, out, a.tower)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {k: -c for k, c in self.terms.items()}, self.tower)

    def __sub__(self, other):
        a, b = self._binary(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        a, b = self._binary(other)
        if a is None:
            return NotImplemented
        out: dict = {}
        for k1, c1 in a.terms.items():
            for k2, c2 in b.terms.items():
                k = tuple(x + y for x, y in zip(k1, k2))
                s = out.get(k, a.tower.zero()) + c1 * c2
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return MultiPoly(a.vars, out, a.tower)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise InvalidInput("negative exponent")
        result = MultiPoly.constant(1, self.vars, self.tower)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def partial_derivative(self, var: str) -> "MultiPoly":
        if var not in self.vars:
            return MultiPoly.zero(self.vars, self.tower)
        i = self.vars.index(var)
        terms = {}
        for k, c in self.terms.items():
            if k[i] == 0:
                continue
            nk = k[:i] + (k[i] - 1,) + k[i + 1:]
            nc = c * k[i]
            prev = terms.get(nk)
            terms[nk] = nc if prev is None else prev + nc
        return MultiPoly(self.vars, terms, self.tower)

    def eval_at(self, point: Mapping[str, Scalar]) -> FieldElement:
        t = self.tower
        vals = []
        for v in self.vars:
            if v not in point:
                raise InvalidInput(f"no value for variable {v!r}")
            x = _coerce_scalar(point[v], t)
            t = x.tower
            vals.append(x)
        vals = [x.lift_to(t) for x in vals]
        acc = t.zero()
        for k, c in self.terms.items():
            term = c.lift_to(t)
            for x, e in zip(vals, k):
                for _ in range(e):
                    term = term * x
            acc = acc + term
        return acc

    def as_unipoly_in(self, var: str) -> list:
        """Dense coefficient list in ``var``; entries are MultiPoly in the rest."""
        if var not in self.vars:
            raise InvalidInput(f"{var!r} is not a variable of this polynomial")
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        d = self.degree_in(var)
        if d == NEG_INF:
            return []
        buckets: list = [dict() for _ in range(int(d) + 1)]
        for k, c in self.terms.items():
            buckets[k[i]][k[:i] + k[i + 1:]] = c
        return [MultiPoly(rest, b, self.tower) for b in buckets]

    def to_unipoly(self, var: str | None = None) -> UniPoly:
        """Convert when at most one variable is actually used."""
        used = [v for v in self.vars if self.uses(v)]
        if len(used) > 1:
            raise InvalidInput("more than one variable in use")
        v = var or (used[0] if used else (self.vars[0] if self.vars else "t"))
        if used and var is not None and used[0] != var:
            raise InvalidInput(f"polynomial uses {used[0]!r}, not {var!r}")
        i = self.vars.index(used[0]) if used else None
        coeffs = {}
        for k, c in self.terms.items():
            coeffs[k[i] if i is not None else 0] = c
        return UniPoly(v, coeffs, self.tower)

    def __repr__(self) -> str:
        return _poly_str(self.terms, self.vars)


def _poly_str(terms: Mapping[tuple, FieldElement], vars_: tuple) -> str:
    if not terms:
        return "0"
    parts = []
    for key in sorted(terms, key=lambda k: (sum(k), k), reverse=True):
        c = terms[key]
        monos = [v if e == 1 else f"{v}^{e}" for v, e in zip(vars_, key) if e]
        cs = repr(c)
        if " + " in cs or " - " in cs or (cs.startswith("-") and cs.count("-") > 1):
            cs = f"({cs})"
        if not monos:
            parts.append(cs)
        elif cs == "1":
            parts.append("*".join(monos))
        elif cs == "-1":
            parts.append("-" + "*".join(monos))
        else:
            parts.append(cs + "*" + "*".join(monos))
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") and not p.startswith("-(") else " + " + p
    return out


# -- univariate toolkit over Q ---------------------------------------------------


def gcd_unipoly(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm; gcd(f, 0) = monic(f).

    Over a reducible tower a leading coefficient may be a zero divisor, in
    which case ZeroDivisor propagates so the caller can split the tower.
    """
    if f.var != g.var and not (f.is_constant() or g.is_constant()):
        raise InvalidInput("gcd of polynomials in different variables")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


class SquareFreeDecomposition:
    """Yun decomposition f = content * prod(factor_i ^ multiplicity_i)."""

    def __init__(self, content: Fraction, factors: list):
        self.content = content
        self.factors = factors  # list of (monic UniPoly, multiplicity), mult increasing

    def reconstruct(self, var: str = None) -> UniPoly:
        v = var or (self.factors[0][0].var if self.factors else "t")
        out = UniPoly.constant(v, self.content)
        for f, m in self.factors:
            out = out * f ** m
        return out

    def __iter__(self):
        return iter(self.factors)

    def __repr__(self):
        return f"SquareFreeDecomposition(content={self.content}, factors={self.factors})"


def squarefree_decompose(f: UniPoly) -> SquareFreeDecomposition:
    """Yun's algorithm over Q; multiplicities come out strictly increasing."""
    if f.is_zero():
        raise InvalidInput("cannot decompose the zero polynomial")
    if not f.is_rational_poly():
        raise InvalidInput("square-free decomposition is restricted to rational coefficients")
    content = f.lc().as_rational()
    fm = f.monic()
    if fm.is_constant():
        return SquareFreeDecomposition(content, [])
    df = fm.derivative()
    g = gcd_unipoly(fm, df)
    b = fm.divmod(g)[0]
    c = df.divmod(g)[0]
    d = c - b.derivative()
    factors = []
    i = 1
    while not b.is_constant():
        a = gcd_unipoly(b, d)
        if not a.is_constant():
            factors.append((a, i))
        b = b.divmod(a)[0]
        c = d.divmod(a)[0]
        d = c - b.derivative()
        i += 1
    return SquareFreeDecomposition(content, factors)


def squarefree_part(f: UniPoly) -> UniPoly:
    """f / gcd(f, f'), monic; works over any tower that stays invertible."""
    g = gcd_unipoly(f, f.derivative())
    return f.divmod(g)[0].monic()


def _divisors(n: int) -> list:
    n = abs(n)
    out = set()
    for i in range(1, isqrt(n) + 1):
        if n % i == 0:
            out.add(i)
            out.add(n // i)
    return sorted(out)


def rational_roots(f: UniPoly) -> list:
    """All rational roots with multiplicity, in descending order."""
    if f.is_zero():
        raise InvalidInput("zero polynomial")
    coeffs = f.rational_coeffs()
    if f.is_constant():
        return []
    roots = []
    low = min(coeffs)
    if low > 0:
        roots.extend([Fraction(0)] * low)
        coeffs = {e - low: c for e, c in coeffs.items()}
    den = lcm(*(c.denominator for c in coeffs.values()))
    ints = {e: int(c * den) for e, c in coeffs.items()}
    g = gcd(*(abs(v) for v in ints.values()))
    ints = {e: v // g for e, v in ints.items()}
    deg = max(ints)
    a0 = ints[0]  # nonzero: the power of t was stripped above
    ad = ints[deg]
    candidates = []
    if deg >= 1:
        for p in _divisors(a0):
            for q in _divisors(ad):
                if gcd(p, q) == 1:
                    candidates.append(Fraction(p, q))
                    candidates.append(Fraction(-p, q))
    work = UniPoly(f.var, {e: Fraction(v) for e, v in ints.items()})
    for r in candidates:
        while not work.is_constant() and work.eval_at(r).is_zero():
            roots.append(r)
            lin = UniPoly.from_dense(f.var, [-r, 1])
            work = work.divmod(lin)[0]
    return sorted(roots, reverse=True)


def _sign_at(f: UniPoly, x) -> int:
    """Sign of a rational-coefficient polynomial at a rational point or +-infinity
    (x=None means +inf, x is the string '-inf' for -inf)."""
    if f.is_zero():
        return 0
    if x is None:
        return f.lc().sign()
    if x == "-inf":
        s = f.lc().sign()
        return s if int(f.degree) % 2 == 0 else -s
    return f.eval_at(x).sign()


def sturm_real_root_count(f: UniPoly, interval: tuple = (None, None)) -> int:
    """Distinct real roots of a square-free rational polynomial in the open
    interval (lo, hi); None endpoints mean -inf / +inf."""
    if f.is_zero():
        raise InvalidInput("zero polynomial")
    if not f.is_rational_poly():
        raise InvalidInput("Sturm counting needs rational coefficients")
    if f.is_constant():
        return 0
    if not gcd_unipoly(f, f.derivative()).is_constant():
        raise InvalidInput("input must be square-free (deflate first)")
    lo, hi = interval
    if lo is not None and hi is not None:
        if lo > hi:
            raise InvalidInput("empty interval: lo > hi")
        if lo == hi:
            return 0
    chain = [f, f.derivative()]
    while not chain[-1].is_zero() and not chain[-1].is_constant():
        _, r = chain[-2].divmod(chain[-1])
        chain.append(-r)
    if chain[-1].is_zero():
        chain.pop()

    def variations(point) -> int:
        signs = [s for s in (_sign_at(p, point) for p in chain) if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    v_lo = variations("-inf" if lo is None else lo)
    v_hi = variations(None if hi is None else hi)
    count = v_lo - v_hi
    if hi is not None and f.eval_at(hi).is_zero():
        count -= 1  # Sturm counts (lo, hi]; the interval is open
    return count


# -- substitution, exact division, resultants -------------------------------------


def substitute(f, bindings: Mapping[str, object]) -> MultiPoly:
    """Ring-homomorphic substitution; every variable of f must be bound."""
    if isinstance(f, UniPoly):
        f = f.to_multi()
    if not isinstance(f, MultiPoly):
        raise InvalidInput("substitute expects a polynomial")
    images = {}
    t = f.tower
    for v in f.vars:
        if f.uses(v) or v in bindings:
            if v not in bindings:
                raise InvalidInput(f"unbound variable {v!r}")
            img = bindings[v]
            if isinstance(img, UniPoly):
                img = img.to_multi()
            elif not isinstance(img, MultiPoly):
                img = MultiPoly.constant(img)
            images[v] = img
            t = join_towers(t, img.tower)
    out_vars = tuple(sorted(set().union(*(m.vars for m in images.values())) if images else ()))
    acc = MultiPoly.zero(out_vars, t)
    powers = {v: {0: MultiPoly.constant(1, out_vars, t)} for v in images}
    def power(v, e):
        cache = powers[v]
        if e not in cache:
            cache[e] = power(v, e - 1) * images[v]
        return cache[e]
    for key, c in f.terms.items():
        term = MultiPoly.constant(c, out_vars, t)
        for v, e in zip(f.vars, key):
            if e:
                term = term * power(v, e)
        acc = acc + term
    return acc


def exact_divide(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Quotient q with q*g == f, exactly; raises NotDivisible (with the
    remainder attached) otherwise."""
    if isinstance(f, UniPoly):
        f = f.to_multi()
    if isinstance(g, UniPoly):
        g = g.to_multi()
    if g.is_zero():
        raise InvalidInput("division by zero polynomial")
    vars_ = tuple(sorted(set(f.vars) | set(g.vars)))
    t = join_towers(f.tower, g.tower)
    r = MultiPoly(vars_, f.with_vars(vars_).terms, t)
    gg = MultiPoly(vars_, g.with_vars(vars_).terms, t)
    lt_g = max(gg.terms)
    c_g = gg.terms[lt_g]
    q = MultiPoly.zero(vars_, t)
    while not r.is_zero():
        lt_r = max(r.terms)
        diff = tuple(a - b for a, b in zip(lt_r, lt_g))
        if any(d < 0 for d in diff):
            raise NotDivisible(r)
        c = r.terms[lt_r] / c_g
        mono = MultiPoly(vars_, {diff: c}, t)
        q = q + mono
        r = r - mono * gg
    return q


def resultant_eliminate(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Sylvester resultant with respect to ``var``, eliminating it exactly."""
    if isinstance(f, UniPoly):
        f = f.to_multi()
    if isinstance(g, UniPoly):
        g = g.to_multi()
    vars_ = tuple(sorted(set(f.vars) | set(g.vars)))
    if var not in vars_:
        raise InvalidInput(f"{var!r} appears in neither polynomial")
    t = join_towers(f.tower, g.tower)
    fv = MultiPoly(vars_, f.with_vars(vars_).terms, t)
    gv = MultiPoly(vars_, g.with_vars(vars_).terms, t)
    if not fv.uses(var) or not gv.uses(var):
        raise InvalidInput(f"both polynomials must contain {var!r}")
    fc = fv.as_unipoly_in(var)
    gc = gv.as_unipoly_in(var)
    m, n = len(fc) - 1, len(gc) - 1
    rest = tuple(v for v in vars_ if v != var)
    size = m + n
    zero = MultiPoly.zero(rest, t)
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(fc)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(gc)):
            row[i + j] = c
        rows.append(row)
    return _bareiss_det(rows, rest, t)


def _bareiss_det(m: list, vars_: tuple, tower: ExtensionTower) -> MultiPoly:
    """Fraction-free determinant; every division is exact in a domain."""
    n = len(m)
    if n == 0:
        return MultiPoly.constant(1, vars_, tower)
    sign = 1
    prev = MultiPoly.constant(1, vars_, tower)
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if pivot is None:
                return MultiPoly.zero(vars_, tower)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = exact_divide(num, prev) if not num.is_zero() else num
            m[i][k] = MultiPoly.zero(vars_, tower)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det
