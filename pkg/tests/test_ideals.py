"""Ideal generation, lattice enumeration, and operations against brute force."""

from __future__ import annotations

import math

import numpy as np
import pytest

from idealclass.config import DEFAULT_CAPS
from idealclass.errors import CapExceededError, RingFormatError, RingMismatchError
from idealclass.ideals import (
    bracket_power,
    colon_elem,
    colon_ideal,
    enumerate_ideals,
    format_ideal,
    generate,
    hom_image_ideal,
    hom_preimage_ideal,
    intersect_ideals,
    is_irreducible,
    is_prime_ideal,
    minimal_primes_over,
    parse_ideal,
    power_ideal,
    product_ideals,
    radical_ideal,
    sum_ideals,
    unit_ideal,
    z_set,
    zero_ideal,
)
from idealclass.rings import (
    Idealization,
    Modular,
    Product,
    build_ring,
    crt_iso,
    diagonal_embed,
    projection,
    quotient_mod,
)

RINGS = [
    build_ring(Modular(n)) for n in (2, 6, 8, 12, 16, 18)
] + [
    build_ring(Product((Modular(2), Modular(4)))),
    build_ring(Product((Modular(3), Modular(3)))),
    build_ring(Idealization(Modular(2), 2)),
    build_ring(Idealization(Modular(4), 1)),
]


def ideal_closure(ring, seeds):
    """Naive fixpoint: close a seed set under +, -, and ring multiples."""
    cur = {ring.zero} | {s % ring.size for s in seeds}
    while True:
        nxt = set(cur)
        for a in cur:
            nxt.add(int(ring.neg[a]))
            for b in cur:
                nxt.add(ring.add2(a, b))
            for r in range(ring.size):
                nxt.add(ring.mul2(r, a))
        if nxt == cur:
            return frozenset(cur)
        cur = nxt


def as_set(ideal):
    return frozenset(int(e) for e in ideal.elems)


def some_ideals(ring):
    """A spread of ideals per ring: every principal ideal, plus zero."""
    seen = {}
    for g in range(ring.size):
        ideal = generate(ring, (g,))
        seen.setdefault(as_set(ideal), ideal)
    return list(seen.values())


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.key)
def test_generate_matches_closure(ring):
    for g in range(ring.size):
        assert as_set(generate(ring, (g,))) == ideal_closure(ring, (g,))
    # a couple of two-generator seeds
    for pair in ((1, 2), (2, 3), (0, ring.size - 1)):
        pair = tuple(g % ring.size for g in pair)
        assert as_set(generate(ring, pair)) == ideal_closure(ring, pair)


def test_zn12_lattice_is_divisor_lattice():
    ring = build_ring(Modular(12))
    lattice = enumerate_ideals(ring)
    assert len(lattice) == 6  # one ideal per divisor of 12
    sets = {as_set(i) for i in lattice.ideals}
    assert sets == {frozenset(range(0, 12, d)) for d in (1, 2, 3, 4, 6, 12)}
    assert len(lattice.proper()) == 5


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.key)
def test_lattice_is_complete_and_ordered(ring):
    lattice = enumerate_ideals(ring)
    keys = {i.key() for i in lattice.ideals}
    assert len(keys) == len(lattice)
    for ideal in some_ideals(ring):
        assert ideal.key() in keys
    for i, a in enumerate(lattice.ideals):
        for j, b in enumerate(lattice.ideals):
            assert bool(lattice.leq[i, j]) == (as_set(a) <= as_set(b))
    assert unit_ideal(ring).key() in keys


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.key)
def test_binary_operations_match_bruteforce(ring):
    pool = some_ideals(ring)
    for a in pool:
        sa = as_set(a)
        assert as_set(radical_ideal(a)) == frozenset(
            x for x in range(ring.size)
            if any_power_lands(ring, x, sa)
        )
        for b in pool:
            sb = as_set(b)
            assert as_set(sum_ideals(a, b)) == ideal_closure(ring, sa | sb)
            assert as_set(intersect_ideals(a, b)) == sa & sb
            prods = {ring.mul2(x, y) for x in sa for y in sb}
            assert as_set(product_ideals(a, b)) == ideal_closure(ring, prods)
            assert as_set(colon_ideal(a, b)) == frozenset(
                r for r in range(ring.size)
                if all(ring.mul2(r, y) in sa for y in sb)
            )


def any_power_lands(ring, x, target):
    cur = x
    seen = set()
    while cur not in seen:
        if cur in target:
            return True
        seen.add(cur)
        cur = ring.mul2(cur, x)
    return cur in target


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.key)
def test_powers_match_bruteforce(ring):
    for a in some_ideals(ring):
        sa = as_set(a)
        acc = sa
        for n in range(2, 4):
            acc = ideal_closure(ring, {ring.mul2(x, y) for x in acc for y in sa})
            assert as_set(power_ideal(a, n)) == acc
            nth = {x: pow_elem(ring, x, n) for x in sa}
            assert as_set(bracket_power(a, n)) == ideal_closure(ring, nth.values())


def pow_elem(ring, x, n):
    out = ring.one
    for _ in range(n):
        out = ring.mul2(out, x)
    return out


def test_power_one_is_identity_and_zero_rejected():
    ring = build_ring(Modular(12))
    a = generate(ring, (4,))
    assert power_ideal(a, 1) == a
    assert bracket_power(a, 1) == a
    with pytest.raises(ValueError):
        power_ideal(a, 0)
    with pytest.raises(ValueError):
        bracket_power(a, 0)


def test_colon_elem_agrees_with_colon_ideal():
    ring = build_ring(Modular(36))
    a = generate(ring, (12,))
    for x in range(ring.size):
        assert colon_elem(a, x) == colon_ideal(a, generate(ring, (x,)))


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.key)
def test_prime_flag_matches_bruteforce(ring):
    for ideal in enumerate_ideals(ring).proper():
        sa = as_set(ideal)
        brute = all(
            ring.mul2(a, b) not in sa or a in sa or b in sa
            for a in range(ring.size)
            for b in range(ring.size)
        )
        assert is_prime_ideal(ideal) == brute
    assert not is_prime_ideal(unit_ideal(ring))


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.key)
def test_irreducible_matches_bruteforce(ring):
    lattice = enumerate_ideals(ring)
    for ideal in lattice.proper():
        strictly_above = [
            j for j in lattice.ideals
            if j.contains_ideal(ideal) and j != ideal
        ]
        brute = not any(
            as_set(x) & as_set(y) == as_set(ideal)
            for i, x in enumerate(strictly_above)
            for y in strictly_above[i + 1:]
        )
        flag, witness = is_irreducible(ideal, lattice)
        assert flag == brute
        if not flag:
            x, y = witness
            assert as_set(x) & as_set(y) == as_set(ideal)
            assert as_set(x) > as_set(ideal) and as_set(y) > as_set(ideal)


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.key)
def test_minimal_primes_match_bruteforce(ring):
    lattice = enumerate_ideals(ring)
    primes = [p for p in lattice.proper() if is_prime_ideal(p)]
    for ideal in lattice.proper():
        over = [p for p in primes if p.contains_ideal(ideal)]
        brute = {
            as_set(p) for p in over
            if not any(q != p and as_set(q) < as_set(p) for q in over)
        }
        got = minimal_primes_over(ideal, lattice)
        assert {as_set(p) for p in got} == brute


def test_z_set_matches_bruteforce():
    ring = build_ring(Modular(12))
    for ideal in enumerate_ideals(ring).proper():
        sa = as_set(ideal)
        brute = sorted(
            r for r in range(ring.size)
            if any(s not in sa and ring.mul2(r, s) in sa for s in range(ring.size))
        )
        assert z_set(ideal) == brute
    with pytest.raises(ValueError):
        z_set(unit_ideal(ring))


def test_hom_image_and_preimage_match_bruteforce():
    homs = [
        quotient_mod(12, 4),
        quotient_mod(12, 6),
        crt_iso(4, 9),
        projection(build_ring(Product((Modular(2), Modular(4)))), 1),
    ]
    for h in homs:
        for ideal in enumerate_ideals(h.source).ideals:
            img = hom_image_ideal(h, ideal)
            assert as_set(img) == {int(h.table[e]) for e in ideal.elems}
        for ideal in enumerate_ideals(h.target).ideals:
            pre = hom_preimage_ideal(h, ideal)
            sa = as_set(ideal)
            assert as_set(pre) == {
                x for x in range(h.source.size) if int(h.table[x]) in sa
            }


def test_hom_image_requires_surjective():
    h = diagonal_embed(4)
    with pytest.raises(RingMismatchError):
        hom_image_ideal(h, zero_ideal(h.source))
    # preimage is fine either way
    pre = hom_preimage_ideal(h, zero_ideal(h.target))
    assert as_set(pre) == {0}


def test_ops_reject_mixed_rings():
    a = zero_ideal(build_ring(Modular(4)))
    b = zero_ideal(build_ring(Modular(6)))
    for op in (sum_ideals, product_ideals, intersect_ideals, colon_ideal):
        with pytest.raises(RingMismatchError):
            op(a, b)


def test_parse_and_format_round_trip():
    ring = build_ring(Modular(12))
    assert as_set(parse_ideal(ring, "(4)")) == {0, 4, 8}
    assert as_set(parse_ideal(ring, "[3, 4]")) == ideal_closure(ring, (3, 4))
    assert as_set(parse_ideal(ring, "[]")) == {0}
    assert format_ideal(parse_ideal(ring, "(8)")) == "(4)"
    assert format_ideal(zero_ideal(ring)) == "(0)"

    prod = build_ring(Product((Modular(2), Modular(3))))
    ideal = parse_ideal(prod, "[2]")
    assert format_ideal(ideal).startswith("[")
    assert parse_ideal(prod, format_ideal(ideal)) == ideal
    # principal shorthand reduces mod the ring size on any ring
    assert parse_ideal(prod, "(0)") == zero_ideal(prod)

    for bad in ("", "4", "(x)", "[1;2]", "{0}"):
        with pytest.raises((RingFormatError, ValueError)):
            parse_ideal(ring, bad)


def test_generate_rejects_out_of_range_codes():
    ring = build_ring(Modular(6))
    with pytest.raises(RingMismatchError):
        generate(ring, (6,))
    with pytest.raises(RingMismatchError):
        generate(ring, (-1,))


def test_enumeration_cap_applies():
    ring = build_ring(Modular(10))
    with pytest.raises(CapExceededError):
        enumerate_ideals(ring, DEFAULT_CAPS.bumped(enumeration=8))


def test_gens_regenerate_their_ideal():
    for ring in RINGS:
        for ideal in enumerate_ideals(ring).ideals:
            assert generate(ring, ideal.gens) == ideal
