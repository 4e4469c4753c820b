"""Closed forms for ideals of Z against brute force on the quotient Z_n."""

from __future__ import annotations

import math

import pytest

from idealclass.config import DEFAULT_CAPS
from idealclass.errors import BridgeDisagreementError, RingFormatError
from idealclass.zideals import (
    PARSE_LIMIT,
    FactoredInteger,
    classify_z,
    closed_form_report,
    colon_z,
    intersect_z,
    product_z,
    radical_z,
)

# ---------------------------------------------------------------------------
# brute flags for nZ, computed in the quotient Z_n with plain loops


def minexp_mod(b: int, n: int) -> int | None:
    """Least k >= 1 with b^k = 0 mod n, else None."""
    cur = b % n
    seen = set()
    k = 1
    while cur not in seen:
        if cur == 0:
            return k
        seen.add(cur)
        cur = (cur * b) % n
        k += 1
    return None


def brute_prime(n: int) -> bool:
    return all(a % n == 0 or b % n == 0
               for a in range(n) for b in range(n) if (a * b) % n == 0)


def brute_ord(n: int) -> int | None:
    """Uniform primary exponent of nZ via residues."""
    worst = 0
    for a in range(n):
        for b in range(n):
            if (a * b) % n == 0 and a % n != 0:
                k = minexp_mod(b, n)
                if k is None:
                    return None
                worst = max(worst, k)
    return max(worst, 1)


def brute_radical_residues(n: int) -> set:
    return {x for x in range(n) if minexp_mod(x, n) is not None}


def brute_two_absorbing(n: int) -> bool:
    return all(
        (a * b) % n == 0 or (a * c) % n == 0 or (b * c) % n == 0
        for a in range(n) for b in range(a, n) for c in range(b, n)
        if (a * b * c) % n == 0
    )


def brute_two_ord(n: int) -> int | None:
    rad = brute_radical_residues(n)
    worst = 0
    for a in range(n):
        for b in range(n):
            if (a * b) % n == 0:
                continue
            for c in range(n):
                if (a * b * c) % n != 0 or (a * c) % n in rad:
                    continue
                k = minexp_mod((b * c) % n, n)
                if k is None:
                    return None
                worst = max(worst, k)
    return max(worst, 1)


def brute_two_exp(n: int) -> int:
    """Least t with (rad nZ)^t inside nZ; rad is principal so powers are too."""
    r = math.prod(p for p in range(2, n + 1) if n % p == 0 and is_prime(p))
    t = 1
    cur = r % n
    while cur != 0:
        cur = (cur * r) % n
        t += 1
    return t


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


BRUTE_NS = list(range(2, 41)) + [48, 60, 64, 72, 81, 96, 100, 108, 112, 120]


@pytest.mark.parametrize("n", BRUTE_NS)
def test_closed_forms_match_quotient_bruteforce(n):
    rep = closed_form_report(FactoredInteger.from_int(n))
    assert rep.flags["proper"]
    assert rep.flags["prime"] == brute_prime(n)
    assert rep.flags["maximal"] == brute_prime(n)  # nonzero primes of Z are maximal

    o = brute_ord(n)
    assert rep.flags["primary"] == (o is not None)
    assert rep.flags["uniformlyPrimary"] == (o is not None)
    assert rep.ord == o

    assert rep.flags["twoAbsorbing"] == brute_two_absorbing(n)

    t = brute_two_ord(n)
    assert rep.flags["uniformlyTwoAbsorbingPrimary"] == (t is not None)
    assert rep.flags["twoAbsorbingPrimary"] == (t is not None)
    assert rep.flags["noetherStrongly2AP"] == (t is not None)
    assert rep.two_ord == t
    assert rep.flags["special"] == (t == 1)

    assert rep.rad_nilpotency == brute_two_exp(n)
    assert rep.two_exp == (brute_two_exp(n) if t is not None else None)

    k = len(FactoredInteger.from_int(n).pairs)
    assert rep.flags["irreducible"] == (k == 1)
    assert rep.radical_shape == {1: "Prime", 2: "TwoPrimes"}.get(k, "Other")
    assert rep.minimal_primes == tuple(
        (p,) for p in sorted(set(p for p, _ in FactoredInteger.from_int(n).pairs)))


@pytest.mark.parametrize("n", BRUTE_NS)
def test_divided_prime_radical_matches_integer_search(n):
    # rad(n)Z is divided only for n = 0: any prime q not dividing rad(n)
    # gives qZ missing rad(n)Z while q stays outside rad(n)Z
    rep = closed_form_report(FactoredInteger.from_int(n))
    rad = math.prod(p for p, _ in FactoredInteger.from_int(n).pairs)
    violating = [x for x in range(2, 200) if x % rad != 0 and rad % x != 0]
    assert rep.flags["dividedPrimeRadical"] == (is_prime(rad) and not violating)


def test_witnesses_actually_witness():
    for n in BRUTE_NS:
        rep = closed_form_report(FactoredInteger.from_int(n))
        w = rep.witnesses
        if not rep.flags["prime"]:
            a, b = w["prime"]
            assert (a * b) % n == 0 and a % n != 0 and b % n != 0
        if not rep.flags["primary"]:
            a, b = w["primary"]
            assert (a * b) % n == 0 and a % n != 0
            assert minexp_mod(b % n, n) is None
        if not rep.flags["twoAbsorbing"]:
            a, b, c = w["twoAbsorbing"]
            assert (a * b * c) % n == 0
            assert (a * b) % n and (a * c) % n and (b * c) % n
        if not rep.flags["uniformlyTwoAbsorbingPrimary"]:
            a, b, c = w["uniformlyTwoAbsorbingPrimary"]
            rad_set = brute_radical_residues(n)
            assert (a * b * c) % n == 0 and (a * b) % n != 0
            assert (a * c) % n not in rad_set
            assert minexp_mod((b * c) % n, n) is None


def test_zero_ideal_report():
    z = classify_z(FactoredInteger.from_int(0))
    assert z.bridge == "analytic" and z.modulus is None
    rep = z.report
    assert rep.flags["prime"] and rep.flags["dividedPrimeRadical"]
    assert not rep.flags["maximal"]
    assert rep.ord == rep.two_ord == rep.two_exp == rep.rad_nilpotency == 1
    assert all(v for k, v in rep.flags.items() if k != "maximal")


def test_unit_ideal_is_rejected():
    with pytest.raises(ValueError):
        closed_form_report(FactoredInteger.from_int(1))


def test_bridge_statuses():
    small = classify_z(FactoredInteger.from_int(36))
    assert small.bridge == "verified" and small.modulus == 36

    big = classify_z(FactoredInteger.parse("2^30"))
    assert big.bridge == "skipped" and big.modulus is None

    # bump lets a previously skipped modulus verify
    n = FactoredInteger.from_int(600)
    assert classify_z(n).bridge == "skipped"
    bumped = classify_z(n, DEFAULT_CAPS.bumped(cubic=600, enumeration=600))
    assert bumped.bridge == "verified"


def test_classify_z_sweep_is_consistent():
    for n in range(2, 100):
        z = classify_z(FactoredInteger.from_int(n))
        assert z.bridge == "verified"
        assert z.report.gens == (n,)


def test_json_shape():
    z = classify_z(FactoredInteger.parse("2^2*3"))
    d = z.to_json_dict()
    assert d["n"] == "2^2*3" and d["value"] == 12
    assert d["bridge"] == "verified" and d["modulus"] == 12
    assert d["report"]["twoOrd"] == 2


def test_bridge_disagreement_is_loud(monkeypatch):
    import idealclass.zideals as zmod

    real = zmod.closed_form_report

    def lying(n):
        rep = real(n)
        flags = dict(rep.flags)
        flags["prime"] = not flags["prime"]
        return type(rep)(**{**rep.__dict__, "flags": flags})

    monkeypatch.setattr(zmod, "closed_form_report", lying)
    with pytest.raises(BridgeDisagreementError) as info:
        zmod.classify_z(FactoredInteger.from_int(12))
    assert "flags.prime" in info.value.mismatches


# ---------------------------------------------------------------------------
# ideal arithmetic in factored form vs plain integer arithmetic


FACTORED_POOL = [FactoredInteger.from_int(v) for v in (2, 4, 6, 12, 18, 35, 36, 60, 97)]


def test_ops_match_integer_arithmetic():
    for m in FACTORED_POOL:
        assert radical_z(m).value == math.prod(p for p, _ in m.pairs)
        for n in FACTORED_POOL:
            assert intersect_z(m, n).value == math.lcm(m.value, n.value)
            assert product_z(m, n).value == m.value * n.value
            assert colon_z(m, n).value == m.value // math.gcd(m.value, n.value)


def test_ops_with_zero_and_one():
    zero = FactoredInteger(zero=True)
    one = FactoredInteger()
    six = FactoredInteger.from_int(6)
    assert intersect_z(zero, six).zero and intersect_z(six, zero).zero
    assert product_z(zero, six).zero
    assert radical_z(zero).zero
    assert colon_z(six, zero).is_one  # (6Z : 0Z) = Z
    assert colon_z(zero, six).zero  # (0Z : 6Z) = 0Z
    assert colon_z(zero, zero).is_one
    assert intersect_z(one, six).value == 6
    assert colon_z(six, one).value == 6


def test_factored_integer_parse_and_str():
    assert FactoredInteger.parse("360").pairs == ((2, 3), (3, 2), (5, 1))
    assert str(FactoredInteger.parse("2^3*3^2*5")) == "2^3*3^2*5"
    assert FactoredInteger.parse("2^2*3").value == 12
    assert FactoredInteger.parse("7").pairs == ((7, 1),)
    assert str(FactoredInteger.from_int(0)) == "0"
    assert str(FactoredInteger()) == "1"
    assert FactoredInteger.parse(str(PARSE_LIMIT)).value == PARSE_LIMIT

    for bad in ("", "x", "-4", "4^2", "2*2", "2^0", "6^1*5", str(PARSE_LIMIT * 10)):
        with pytest.raises(RingFormatError):
            FactoredInteger.parse(bad)


def test_factored_integer_invariants():
    with pytest.raises(ValueError):
        FactoredInteger(((3, 1), (2, 1)))  # out of order
    with pytest.raises(ValueError):
        FactoredInteger(((2, 0),))
    with pytest.raises(ValueError):
        FactoredInteger(((2, 1),), zero=True)
