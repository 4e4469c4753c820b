"""Symbolic classification of the ideals nZ of the integers.

Everything is driven by the factorization of n.  Closed forms produce the
full report; whenever the modulus fits the cubic-scan cap the same report is
recomputed on the zero ideal of Z_n and any disagreement raises
:class:`~idealclass.errors.BridgeDisagreementError` (a falsified closed form
is a build failure, not a warning).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .classify import FLAG_ORDER, ClassificationReport, classify
from .config import Caps, DEFAULT_CAPS
from .errors import BridgeDisagreementError, RingFormatError
from .ideals import zero_ideal
from .rings import Modular, build_ring, factorize_int, is_prime_int

__all__ = [
    "FactoredInteger",
    "intersect_z",
    "product_z",
    "radical_z",
    "colon_z",
    "closed_form_report",
    "classify_z",
    "ZClassification",
]

PARSE_LIMIT = 10**12  # decimal inputs are factored by trial division


@dataclass(frozen=True)
class FactoredInteger:
    """n = prod p^a as sorted (p, a) pairs; () is 1; a zero flag marks 0."""

    pairs: tuple = ()
    zero: bool = False

    def __post_init__(self):
        if self.zero and self.pairs:
            raise ValueError("zero carries no prime factors")
        last = 1
        for p, a in self.pairs:
            if not is_prime_int(p):
                raise ValueError(f"{p} is not prime")
            if a < 1:
                raise ValueError(f"exponent {a} of {p} must be >= 1")
            if p <= last:
                raise ValueError("primes must be strictly increasing")
            last = p

    @classmethod
    def from_int(cls, n: int) -> "FactoredInteger":
        if n < 0:
            raise ValueError("need n >= 0")
        if n == 0:
            return cls(zero=True)
        return cls(tuple(sorted(factorize_int(n).items())))

    @classmethod
    def from_string(cls, text: str) -> "FactoredInteger":
        """Parse an explicit factorization like 2^2*3."""
        found: dict[int, int] = {}
        for part in text.split("*"):
            part = part.strip()
            base, _, exp = part.partition("^")
            try:
                p = int(base)
                a = int(exp) if exp else 1
            except ValueError:
                raise RingFormatError(f"bad factor {part!r} in {text!r}") from None
            if p in found:
                raise RingFormatError(f"repeated prime {p} in {text!r}")
            found[p] = a
        try:
            return cls(tuple(sorted(found.items())))
        except ValueError as exc:
            raise RingFormatError(f"bad factorization {text!r}: {exc}") from None

    @classmethod
    def parse(cls, text: str) -> "FactoredInteger":
        """Decimal integer or explicit factorization string."""
        text = text.strip()
        if "^" in text or "*" in text:
            return cls.from_string(text)
        try:
            n = int(text)
        except ValueError:
            raise RingFormatError(f"not an integer or factorization: {text!r}") from None
        if n < 0:
            raise RingFormatError("the ideal nZ needs n >= 0")
        if n > PARSE_LIMIT:
            raise RingFormatError(
                f"{n} exceeds the trial-division limit {PARSE_LIMIT}; "
                "pass an explicit factorization like 2^3*5"
            )
        return cls.from_int(n)

    @property
    def value(self) -> int:
        if self.zero:
            return 0
        return math.prod(p**a for p, a in self.pairs)

    @property
    def is_one(self) -> bool:
        return not self.zero and not self.pairs

    def __str__(self) -> str:
        if self.zero:
            return "0"
        if not self.pairs:
            return "1"
        return "*".join(f"{p}^{a}" if a > 1 else str(p) for p, a in self.pairs)


def _merge(m: FactoredInteger, n: FactoredInteger, combine) -> FactoredInteger:
    em = dict(m.pairs)
    en = dict(n.pairs)
    out = {}
    for p in sorted(set(em) | set(en)):
        a = combine(em.get(p, 0), en.get(p, 0))
        if a > 0:
            out[p] = a
    return FactoredInteger(tuple(sorted(out.items())))


def intersect_z(m: FactoredInteger, n: FactoredInteger) -> FactoredInteger:
    """mZ intersect nZ = lcm(m, n)Z."""
    if m.zero or n.zero:
        return FactoredInteger(zero=True)
    return _merge(m, n, max)


def product_z(m: FactoredInteger, n: FactoredInteger) -> FactoredInteger:
    """(mZ)(nZ) = mnZ."""
    if m.zero or n.zero:
        return FactoredInteger(zero=True)
    return _merge(m, n, lambda a, b: a + b)


def radical_z(n: FactoredInteger) -> FactoredInteger:
    """sqrt(nZ) = (squarefree part of n)Z; sqrt(0Z) = 0Z."""
    if n.zero:
        return n
    return FactoredInteger(tuple((p, 1) for p, _ in n.pairs))


def colon_z(m: FactoredInteger, n: FactoredInteger) -> FactoredInteger:
    """(mZ : nZ) = (m / gcd(m, n))Z."""
    if m.zero:
        return FactoredInteger() if n.zero else FactoredInteger(zero=True)
    if n.zero:
        return FactoredInteger()
    return _merge(m, n, lambda a, b: max(a - b, 0))


# ---------------------------------------------------------------------------
# closed-form reports


def _zero_report() -> ClassificationReport:
    flags = {name: True for name in FLAG_ORDER}
    flags["maximal"] = False  # 0Z sits strictly inside every pZ
    return ClassificationReport(
        ring_key="Z",
        gens=(0,),
        flags=flags,
        ord=1,
        two_ord=1,
        two_exp=1,
        rad_nilpotency=1,
        witnesses={"maximal": (2,)},
        radical_shape="Prime",
        minimal_primes=((0,),),
    )


def closed_form_report(n: FactoredInteger) -> ClassificationReport:
    """Report for nZ from the factorization alone (n = 0 or n >= 2)."""
    if n.is_one:
        raise ValueError("1Z is the improper ideal; no report")
    if n.zero:
        return _zero_report()

    pairs = n.pairs
    value = n.value
    k = len(pairs)
    exps = [a for _, a in pairs]
    max_exp = max(exps)
    p0 = pairs[0][0]
    # the prime power carrying the largest exponent, and the cofactor
    big_p, big_a = max(pairs, key=lambda pa: pa[1])
    big_pow = big_p**big_a
    cofactor = value // big_pow

    prime = k == 1 and exps[0] == 1
    primary = k == 1
    two_abs = (k == 1 and exps[0] <= 2) or (k == 2 and max_exp == 1)
    two_ap = k <= 2
    special = k == 1 or (k == 2 and max_exp == 1)
    if k >= 3:
        two_ord = None
    elif special:
        two_ord = 1
    else:
        two_ord = max_exp

    witnesses: dict = {}
    if not prime:
        witnesses["prime"] = (p0, value // p0)
        witnesses["maximal"] = (p0,)
    if not primary:
        first_pow = pairs[0][0] ** pairs[0][1]
        pair_wit = (first_pow, value // first_pow)
        witnesses["primary"] = pair_wit
        witnesses["uniformlyPrimary"] = pair_wit
        witnesses["irreducible"] = ((first_pow,), (value // first_pow,))
    if not two_abs:
        if k == 1:
            witnesses["twoAbsorbing"] = (p0, p0, value // (p0 * p0))
        elif k == 2:
            witnesses["twoAbsorbing"] = (big_p, big_pow // big_p, cofactor)
        else:
            q_pow = pairs[1][0] ** pairs[1][1]
            first_pow = pairs[0][0] ** pairs[0][1]
            witnesses["twoAbsorbing"] = (first_pow, q_pow, value // (first_pow * q_pow))
    if not two_ap:
        triple = witnesses["twoAbsorbing"]
        witnesses["twoAbsorbingPrimary"] = triple
        witnesses["uniformlyTwoAbsorbingPrimary"] = triple
        witnesses["noetherStrongly2AP"] = triple
    if not special:
        if two_ap:
            witnesses["special"] = (big_pow // big_p, cofactor, big_p)
        else:
            witnesses["special"] = witnesses["twoAbsorbingPrimary"]
    if k >= 2:
        rad = math.prod(p for p, _ in pairs)
        witnesses["dividedPrimeRadical"] = (p0, rad // p0)
    else:
        witnesses["dividedPrimeRadical"] = (2,) if p0 != 2 else (3,)

    flags = {
        "proper": True,
        "prime": prime,
        "maximal": prime,
        "primary": primary,
        "uniformlyPrimary": primary,
        "twoAbsorbing": two_abs,
        "twoAbsorbingPrimary": two_ap,
        "uniformlyTwoAbsorbingPrimary": two_ap,
        "noetherStrongly2AP": two_ap,
        "special": special,
        "irreducible": primary,
        "dividedPrimeRadical": False,
    }
    return ClassificationReport(
        ring_key="Z",
        gens=(value,),
        flags=flags,
        ord=exps[0] if primary else None,
        two_ord=two_ord,
        two_exp=max_exp if two_ap else None,
        rad_nilpotency=max_exp,
        witnesses=witnesses,
        radical_shape={1: "Prime", 2: "TwoPrimes"}.get(k, "Other"),
        minimal_primes=tuple((p,) for p, _ in pairs),
    )


# ---------------------------------------------------------------------------
# the bridge


@dataclass(frozen=True)
class ZClassification:
    """Closed-form report for nZ plus how it was cross-checked."""

    n: FactoredInteger
    report: ClassificationReport
    bridge: str  # verified | skipped | analytic
    modulus: int | None

    def to_json_dict(self) -> dict:
        return {
            "n": str(self.n),
            "value": self.n.value,
            "bridge": self.bridge,
            "modulus": self.modulus,
            "report": self.report.to_json_dict(),
        }


# dividedPrimeRadical quantifies over all principal ideals of the ambient ring,
# so it does not transfer along Z -> Z_n; witnesses are ring-specific too
_BRIDGED_FLAGS = tuple(f for f in FLAG_ORDER if f != "dividedPrimeRadical")


def _lift_gens(modulus: int, gens: tuple) -> int:
    """Generator of the preimage in Z of the ideal of Z_n spanned by gens."""
    out = modulus
    for g in gens:
        out = math.gcd(out, int(g))
    return out


def _bridge_mismatches(
    modulus: int, closed: ClassificationReport, oracle: ClassificationReport
) -> dict:
    out = {}
    for name in _BRIDGED_FLAGS:
        if closed.flags[name] != oracle.flags[name]:
            out[f"flags.{name}"] = (closed.flags[name], oracle.flags[name])
    for attr in ("ord", "two_ord", "two_exp", "rad_nilpotency", "radical_shape"):
        a, b = getattr(closed, attr), getattr(oracle, attr)
        if a != b:
            out[attr] = (a, b)
    mine = {p for (p,) in closed.minimal_primes}
    theirs = {_lift_gens(modulus, gens) for gens in oracle.minimal_primes}
    if mine != theirs:
        out["minimal_primes"] = (tuple(sorted(mine)), tuple(sorted(theirs)))
    return out


def classify_z(n: FactoredInteger, caps: Caps = DEFAULT_CAPS) -> ZClassification:
    """Classify nZ by closed forms, cross-checked against the Z_n zero ideal."""
    report = closed_form_report(n)
    if n.zero:
        return ZClassification(n, report, "analytic", None)
    value = n.value
    if value > caps.cubic:
        return ZClassification(n, report, "skipped", None)
    ring = build_ring(Modular(value))
    oracle = classify(zero_ideal(ring), caps=caps)
    mismatches = _bridge_mismatches(value, report, oracle)
    if mismatches:
        raise BridgeDisagreementError(value, mismatches)
    return ZClassification(n, report, "verified", value)
