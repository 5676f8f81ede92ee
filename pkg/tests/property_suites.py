"""Randomized property suites shared by test_properties and the acceptance
gate. Each suite runs a documented number of cases from its own fixed seed:

    yun round-trip / square-freeness      seed 20260811
    decompose reconstruction p*a^2 = f    seed 20260812
    v*h = p(u v + alpha)                  seed 20260813
    substitution homomorphism             seed 20260814
    Sturm counts vs constructed roots     seed 20260815
    gcd divides both arguments            seed 20260816

Inputs are generated small on purpose: the properties are structural and
low-degree instances already exercise every code path (carries, towers,
content signs) without inflating runtime.
"""

import random
from fractions import Fraction

from revolutio import (
    MultiPoly,
    PlaneCurveParam,
    UniPoly,
    choose_root_alpha,
    decompose_paa,
    exact_divide,
    factor_h,
    gcd_unipoly,
    squarefree_decompose,
    sturm_real_root_count,
    substitute,
)

CASES = 200

t = UniPoly.variable("t")


def _random_factor(rng):
    deg = rng.randrange(1, 3)
    if deg == 1:
        return t + rng.randint(-5, 5)
    return t ** 2 + rng.randint(-4, 4) * t + rng.randint(-4, 6)


def _random_product(rng, max_factors=3, max_mult=3):
    f = UniPoly.constant("t", rng.choice([-4, -2, -1, 1, 2, 3, 5]))
    for _ in range(rng.randrange(1, max_factors + 1)):
        f = f * _random_factor(rng) ** rng.randrange(1, max_mult + 1)
    return f


def run_yun_suite(cases=CASES):
    """Yun round-trip: content * prod f_i^m_i == f, factors pairwise coprime
    and square-free, multiplicities strictly increasing."""
    rng = random.Random(20260811)
    for _ in range(cases):
        f = _random_product(rng)
        dec = squarefree_decompose(f)
        assert dec.reconstruct("t") == f
        mults = [m for _, m in dec.factors]
        assert mults == sorted(set(mults))
        for i, (fi, _) in enumerate(dec.factors):
            assert gcd_unipoly(fi, fi.derivative()).is_constant()
            for fj, _ in dec.factors[i + 1:]:
                assert gcd_unipoly(fi, fj).is_constant()
    return cases


def run_decompose_suite(cases=CASES):
    """decompose_paa reconstruction: p * a^2 equals the input first
    coordinate exactly, and p is square-free including its sign."""
    rng = random.Random(20260812)
    for _ in range(cases):
        f = _random_product(rng)
        d = decompose_paa(PlaneCurveParam.polynomial(f, t + rng.randint(-3, 3)))
        assert d.p * d.a * d.a == f
        assert gcd_unipoly(d.p, d.p.derivative()).is_constant()
        assert d.a.is_constant() or d.a.lc() == 1
    return cases


def run_factor_h_suite(cases=CASES):
    """v * h == p(u v + alpha) for the chosen root, over Q and extensions."""
    rng = random.Random(20260813)
    u = MultiPoly.variable("u", ("u", "v"))
    v = MultiPoly.variable("v", ("u", "v"))
    done = 0
    while done < cases:
        p = _random_factor(rng)
        for _ in range(rng.randrange(0, 2)):
            p = p * _random_factor(rng)
        if not gcd_unipoly(p, p.derivative()).is_constant():
            continue  # factor_h requires p(alpha) = 0 with p square-free upstream
        alpha = choose_root_alpha(p)
        h = factor_h(p, alpha)
        tower = alpha.value.tower
        image = substitute(p, {"t": u * v + MultiPoly.constant(alpha.value, ("u", "v"), tower)})
        assert (MultiPoly.variable("v", ("u", "v"), tower) * h - image).is_zero()
        done += 1
    return cases


def run_substitute_suite(cases=CASES):
    """Substitution is a ring homomorphism: images of sums and products."""
    rng = random.Random(20260814)
    u = MultiPoly.variable("u", ("u", "v"))
    v = MultiPoly.variable("v", ("u", "v"))
    for _ in range(cases):
        f = UniPoly("t", {e: Fraction(rng.randint(-4, 4)) for e in range(rng.randrange(1, 4))})
        g = UniPoly("t", {e: Fraction(rng.randint(-4, 4)) for e in range(rng.randrange(1, 4))})
        image = u * rng.randint(-2, 2) + v * rng.randint(-2, 2) + u * v + rng.randint(-3, 3)
        bind = {"t": image}
        assert substitute(f * g, bind) == substitute(f, bind) * substitute(g, bind)
        assert substitute(f + g, bind) == substitute(f, bind) + substitute(g, bind)
    return cases


def run_sturm_suite(cases=CASES):
    """Sturm counts on products of distinct rational linear factors equal the
    number of constructed roots inside the queried interval."""
    rng = random.Random(20260815)
    for _ in range(cases):
        roots = set()
        while len(roots) < rng.randrange(1, 5):
            roots.add(Fraction(rng.randint(-12, 12), rng.randrange(1, 4)))
        f = UniPoly.constant("t", 1)
        for r in roots:
            f = f * (t - r)
        lo = Fraction(rng.randint(-15, 5), rng.randrange(1, 3))
        hi = lo + Fraction(rng.randrange(1, 20), rng.randrange(1, 3))
        interval = (
            None if rng.random() < 0.2 else lo,
            None if rng.random() < 0.2 else hi,
        )
        expected = sum(
            1
            for r in roots
            if (interval[0] is None or r > interval[0]) and (interval[1] is None or r < interval[1])
        )
        assert sturm_real_root_count(f, interval) == expected
    return cases


def run_gcd_suite(cases=CASES):
    """The monic gcd divides both arguments exactly."""
    rng = random.Random(20260816)
    for _ in range(cases):
        common = _random_factor(rng)
        f = common * _random_factor(rng)
        g = common * _random_factor(rng)
        gcd = gcd_unipoly(f, g)
        assert not gcd.is_constant()  # a common factor was planted
        for h in (f, g):
            q = exact_divide(h.to_multi(), gcd.to_multi())
            assert q * gcd.to_multi() == h.to_multi()
    return cases


ALL_SUITES = (
    ("yun-round-trip", run_yun_suite),
    ("decompose-reconstruction", run_decompose_suite),
    ("factor-h-identity", run_factor_h_suite),
    ("substitute-homomorphism", run_substitute_suite),
    ("sturm-constructed-roots", run_sturm_suite),
    ("gcd-divides-both", run_gcd_suite),
)
