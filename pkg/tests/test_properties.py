"""Randomized laws: factored arithmetic, quotient transfer, predicate algebra."""

from __future__ import annotations

import math

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from idealclass.classify import classify
from idealclass.ideals import enumerate_ideals, generate
from idealclass.rings import Modular, build_ring
from idealclass.theorems import Predicate
from idealclass.zideals import (
    FactoredInteger,
    closed_form_report,
    colon_z,
    intersect_z,
    product_z,
    radical_z,
)

values = st.integers(min_value=2, max_value=10**6)


@given(values, values)
def test_intersect_is_lcm(a, b):
    m, n = FactoredInteger.from_int(a), FactoredInteger.from_int(b)
    assert intersect_z(m, n).value == math.lcm(a, b)


@given(values, values)
def test_product_is_product(a, b):
    m, n = FactoredInteger.from_int(a), FactoredInteger.from_int(b)
    assert product_z(m, n).value == a * b


@given(values)
def test_radical_is_squarefree_kernel(a):
    rad = radical_z(FactoredInteger.from_int(a)).value
    assert a % rad == 0
    assert all(rad % (p * p) for p in range(2, rad + 1) if rad % p == 0)
    assert pow(rad, 40, a) == 0  # every prime of a divides rad


@given(values, values)
def test_colon_divides_out_gcd(a, b):
    m, n = FactoredInteger.from_int(a), FactoredInteger.from_int(b)
    assert colon_z(m, n).value == a // math.gcd(a, b)


@given(values, values, values)
def test_ops_are_associative_and_commutative(a, b, c):
    fa, fb, fc = (FactoredInteger.from_int(v) for v in (a, b, c))
    assert intersect_z(fa, fb) == intersect_z(fb, fa)
    assert product_z(fa, fb) == product_z(fb, fa)
    assert intersect_z(intersect_z(fa, fb), fc) == intersect_z(fa, intersect_z(fb, fc))


@given(st.integers(min_value=2, max_value=40), st.integers(min_value=1, max_value=4))
@settings(max_examples=60, deadline=None)
def test_quotient_transfer(m, k):
    """The ideal mZ_{km} classifies exactly like mZ does symbolically."""
    n = m * k
    assume(n <= 120)
    ring = build_ring(Modular(n))
    report = classify(generate(ring, (m % n,)))
    closed = closed_form_report(FactoredInteger.from_int(m))
    for name, value in closed.flags.items():
        if name == "dividedPrimeRadical":
            continue  # quantifies over the ambient ring, does not transfer
        assert report.flags[name] == value, name
    assert report.ord == closed.ord
    assert report.two_ord == closed.two_ord
    assert report.two_exp == closed.two_exp
    assert report.rad_nilpotency == closed.rad_nilpotency
    assert report.radical_shape == closed.radical_shape
    lifted = {math.gcd(n, *gens) if gens else n for gens in report.minimal_primes}
    assert lifted == {p for (p,) in closed.minimal_primes}


@given(st.integers(min_value=2, max_value=60), st.data())
@settings(max_examples=80, deadline=None)
def test_order_inequalities(n, data):
    ring = build_ring(Modular(n))
    g = data.draw(st.integers(min_value=0, max_value=n - 1))
    assume(math.gcd(g, n) != 1)
    rep = classify(generate(ring, (g,)))
    if rep.two_ord is not None:
        assert rep.two_exp is not None
        assert rep.two_ord <= rep.two_exp
        assert rep.two_exp <= rep.rad_nilpotency
    if rep.flags["uniformlyPrimary"]:
        assert rep.two_ord == 1
    if rep.flags["prime"]:
        assert rep.ord == 1 and rep.two_exp == 1


# ---------------------------------------------------------------------------
# predicate algebra on generated expressions


FLAG_ATOMS = ("primary", "special", "prime", "u2ap", "twoAbsorbing", "proper")
ORDER_FIELDS = ("ord", "twoOrd", "twoExp", "radicalNilpotency")
OPS = ("==", "!=", "<=", ">=", "<", ">")

atoms = st.one_of(
    st.sampled_from(FLAG_ATOMS),
    st.builds(
        lambda f, op, v: f"{f} {op} {v}",
        st.sampled_from(ORDER_FIELDS), st.sampled_from(OPS),
        st.integers(min_value=0, max_value=4),
    ),
)

exprs = st.recursive(
    atoms,
    lambda inner: st.one_of(
        st.builds(lambda a, b: f"({a}) && ({b})", inner, inner),
        st.builds(lambda a, b: f"({a}) || ({b})", inner, inner),
        st.builds(lambda a: f"!({a})", inner),
    ),
    max_leaves=6,
)


def report_pool():
    out = []
    for n in (8, 12, 30, 36):
        ring = build_ring(Modular(n))
        for q in enumerate_ideals(ring).proper():
            out.append(classify(q))
    return out

REPORTS = report_pool()


@given(exprs)
@settings(max_examples=120, deadline=None)
def test_generated_predicates_parse_and_evaluate(text):
    pred = Predicate(text)
    for rep in REPORTS:
        assert pred.evaluate(rep) in (True, False)


@given(exprs, exprs)
@settings(max_examples=80, deadline=None)
def test_de_morgan(a, b):
    conj = Predicate(f"!(({a}) && ({b}))")
    split = Predicate(f"!({a}) || !({b})")
    disj = Predicate(f"!(({a}) || ({b}))")
    both = Predicate(f"!({a}) && !({b})")
    for rep in REPORTS[::5]:
        assert conj.evaluate(rep) == split.evaluate(rep)
        assert disj.evaluate(rep) == both.evaluate(rep)


@given(exprs)
@settings(max_examples=60, deadline=None)
def test_double_negation(a):
    plain = Predicate(a)
    doubled = Predicate(f"!(!({a}))")
    for rep in REPORTS[::7]:
        assert plain.evaluate(rep) == doubled.evaluate(rep)
