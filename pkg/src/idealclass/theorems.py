"""Machine checks for the uniformly-2-absorbing-primary statement suite.

Every registered statement gets a checker that walks a corpus of finite rings
and tests the exact quantified claim on each applicable instance, plus a
deliberately broken twin (mutant) that must be falsified by the same corpora.
Instances a checker cannot afford under the configured caps are recorded as
skips, never passed silently.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .classify import (
    classify,
    is_divided_prime,
    is_maximal,
    is_prime,
    is_primary,
    is_special,
    is_two_absorbing,
    is_two_absorbing_primary,
    main1_condition,
    min_exponents,
    radical_nilpotency,
    radical_of,
    special_condition,
    uniformly_primary_condition,
    uniformly_primary_ord,
    uniformly_two_ap_ord,
)
from .config import DEFAULT_CAPS, Caps, check_cap
from .errors import CapExceededError, ExprError, OutOfScopeError, RingFormatError
from .ideals import (
    Ideal,
    colon_elem,
    enumerate_ideals,
    generate,
    hom_image_ideal,
    hom_preimage_ideal,
    intersect_ideals,
    is_irreducible,
    minimal_primes_over,
    power_ideal,
    product_ideals,
    z_set,
)
from .rings import (
    Idealization,
    Modular,
    Product,
    RingHom,
    _parse_desc,
    _parse_int,
    _skip_ws,
    build_ring,
    diagonal_embed,
    crt_iso,
    factorize_int,
    localize_modular,
    multiplicative_set,
    projection,
    quotient_mod,
)

__all__ = [
    "Corpus",
    "Predicate",
    "TheoremCheckResult",
    "TheoremSpec",
    "OUT_OF_SCOPE",
    "REGISTRY",
    "build_corpus",
    "list_theorems",
    "search_ideals",
    "symmetrized_two_ord",
    "verify_all",
    "verify_theorem",
]


# ---------------------------------------------------------------------------
# corpora: compact descriptor ranges expanded to explicit ring descriptors


@dataclass(frozen=True)
class Corpus:
    """Named, ordered list of ring descriptors to sweep."""

    name: str
    descriptors: tuple
    ideal_filter: str = "proper"

    def __len__(self) -> int:
        return len(self.descriptors)


def _expand_range(s: str, i: int) -> tuple[int, int, int]:
    lo, j = _parse_int(s, i)
    if s.startswith("..", j):
        hi, j = _parse_int(s, j + 2)
    else:
        hi = lo
    if hi < lo:
        raise RingFormatError(f"empty range {lo}..{hi} in corpus spec")
    return lo, hi, j


def _expand_desc(s: str, i: int) -> tuple[list, int]:
    j = _skip_ws(s, i)
    if s.startswith("zn:", j):
        lo, hi, j = _expand_range(s, j + 3)
        if lo < 2:
            raise RingFormatError("zn corpus moduli start at 2")
        return [Modular(n) for n in range(lo, hi + 1)], j
    if s.startswith("prod:(", j):
        j += 6
        groups = []
        while True:
            group, j = _expand_desc(s, j)
            groups.append(group)
            j = _skip_ws(s, j)
            if s.startswith(",", j):
                j += 1
                continue
            if s.startswith(")", j):
                j += 1
                break
            raise RingFormatError(f"expected ',' or ')' at index {j} in corpus spec")
        if len(groups) < 2:
            raise RingFormatError("prod corpus needs at least two factors")
        combos = itertools.product(*groups)
        return [Product(tuple(c)) for c in combos], j
    if s.startswith("idz:(", j):
        j += 5
        group, j = _expand_desc(s, j)
        j = _skip_ws(s, j)
        if not s.startswith(")^", j):
            raise RingFormatError(f"expected ')^' at index {j} in corpus spec")
        lo, hi, j = _expand_range(s, j + 2)
        if lo < 1:
            raise RingFormatError("idz ranks start at 1")
        return [Idealization(b, k) for b in group for k in range(lo, hi + 1)], j
    desc, j = _parse_desc(s, j)
    return [desc], j


def build_corpus(spec, name: str | None = None) -> Corpus:
    """Expand a corpus spec like 'zn:2..12,prod:(zn:2..4,zn:2..4)'."""
    if isinstance(spec, Corpus):
        return spec
    descs: list = []
    i = 0
    while True:
        group, i = _expand_desc(spec, i)
        descs.extend(group)
        i = _skip_ws(spec, i)
        if i >= len(spec):
            break
        if spec[i] != ",":
            raise RingFormatError(f"expected ',' between corpus entries at index {i}")
        i += 1
    if not descs:
        raise RingFormatError("empty corpus spec")
    return Corpus(name or spec, tuple(descs))


# ---------------------------------------------------------------------------
# check results


@dataclass(frozen=True)
class TheoremCheckResult:
    """Outcome of sweeping one statement over one corpus."""

    theorem: str
    corpus: str
    instances: int
    verdict: str  # "passed" | "failed"
    counterexamples: tuple = ()
    skipped: tuple = ()
    details: dict = field(default_factory=dict)
    mutant: bool = False

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "mutant": self.mutant,
            "corpus": self.corpus,
            "instances": self.instances,
            "verdict": self.verdict,
            "counterexamples": [dict(c) for c in self.counterexamples],
            "skipped": [dict(s) for s in self.skipped],
            "details": _sorted_tree(self.details),
        }


def _sorted_tree(value):
    if isinstance(value, dict):
        return {k: _sorted_tree(value[k]) for k in sorted(value)}
    return value


def _part() -> dict:
    return {"instances": 0, "counterexamples": [], "skipped": [], "details": {}}


def _plain(value):
    if isinstance(value, Ideal):
        return [int(g) for g in value.gens]
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    return value


def _cx(part: dict, ring, ideal, clause: str, **data) -> None:
    entry = {"ring": ring.key, "ideal": _plain(ideal), "clause": clause}
    if data:
        entry["data"] = {k: _plain(v) for k, v in data.items()}
    part["counterexamples"].append(entry)


def _skip(part: dict, ring, where: str, reason: str, ideal=None) -> None:
    entry = {"ring": ring.key, "where": where, "reason": reason}
    if ideal is not None:
        entry["ideal"] = _plain(ideal)
    part["skipped"].append(entry)


def _lattice(ring, caps: Caps, part: dict, where: str):
    try:
        return enumerate_ideals(ring, caps)
    except CapExceededError as err:
        _skip(part, ring, where, str(err))
        return None


def _merge_details(into: dict, extra: dict) -> None:
    for k, v in extra.items():
        if isinstance(v, dict):
            _merge_details(into.setdefault(k, {}), v)
        else:
            into[k] = into.get(k, 0) + v


# ---------------------------------------------------------------------------
# independent triple scans used by the checkers


def definitional_two_ap(ideal: Ideal, caps: Caps = DEFAULT_CAPS) -> tuple[bool, tuple | None]:
    """Direct test of: abc in Q implies ab in Q, ac in sqrt Q or bc in sqrt Q."""
    ring = ideal.ring
    check_cap(caps, "cubic", ring.size, f"definitional 2AP scan over {ring.key}")
    inq = ideal.mask
    inrad = radical_of(ideal).mask
    mul = ring.mul
    bc_ok = inrad[mul]
    for a in range(ring.size):
        ab = mul[a]
        viol = inq[mul[ab]] & ~inq[ab][:, None] & ~inrad[ab][None, :] & ~bc_ok
        if viol.any():
            b, c = np.unravel_index(int(np.argmax(viol)), viol.shape)
            return False, (a, int(b), int(c))
    return True, None


def _radical_triple_absorbs(ideal: Ideal, caps: Caps) -> bool:
    """Direct test of: abc in I implies ab, ac or bc in sqrt I."""
    ring = ideal.ring
    check_cap(caps, "cubic", ring.size, f"radical triple scan over {ring.key}")
    ini = ideal.mask
    inrad = radical_of(ideal).mask
    mul = ring.mul
    bc_ok = inrad[mul]
    for a in range(ring.size):
        ab = mul[a]
        viol = ini[mul[ab]] & ~inrad[ab][:, None] & ~inrad[ab][None, :] & ~bc_ok
        if viol.any():
            return False
    return True


def symmetrized_two_ord(ideal: Ideal, caps: Caps = DEFAULT_CAPS) -> int | None:
    """Least n with: abc in Q implies (ab)^n, (ac)^n or (bc)^n in Q; exploratory."""
    if not ideal.is_proper:
        raise ValueError("symmetrized_two_ord needs a proper ideal")
    ring = ideal.ring
    check_cap(caps, "cubic", ring.size, f"symmetrized triple scan over {ring.key}")
    minexp = min_exponents(ideal)
    mul = ring.mul
    inq = ideal.mask
    big = ring.size + 1
    exp = np.where(minexp > 0, minexp, big)
    exp_bc = exp[mul]
    best = 1
    for a in range(ring.size):
        ab = mul[a]
        abc_in = inq[mul[ab]]
        if not abc_in.any():
            continue
        need = np.minimum(np.minimum(exp[ab][:, None], exp[ab][None, :]), exp_bc)
        worst = int(need[abc_in].max())
        if worst >= big:
            return None
        best = max(best, worst)
    return best


# ---------------------------------------------------------------------------
# checkers; each takes (ring, caps) and returns a part dict


def _chk_uni_abs(ring, caps: Caps) -> dict:
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            if uniformly_two_ap_ord(q, caps) is None:
                continue
            part["instances"] += 1
            ok, wit = definitional_two_ap(q, caps)
            if not ok:
                _cx(part, ring, q, "uniform ideal fails the plain 2AP triple test", triple=wit)
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _chk_prop1(ring, caps: Caps) -> dict:
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            two_abs, _ = is_two_absorbing(q, caps)
            n = uniformly_two_ap_ord(q, caps)
            if two_abs:
                part["instances"] += 1
                tap, _ = is_two_absorbing_primary(q, caps)
                if not tap or radical_nilpotency(q) > 2:
                    _cx(part, ring, q, "2-absorbing ideal without radical exponent <= 2",
                        exponent=radical_nilpotency(q))
                if n != 1:
                    _cx(part, ring, q, "2-absorbing ideal with 2-ord different from 1", two_ord=n)
            if uniformly_primary_ord(q, caps) is not None:
                part["instances"] += 1
                if n != 1:
                    _cx(part, ring, q, "primary ideal with 2-ord different from 1", two_ord=n)
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _chk_noe_uni(ring, caps: Caps) -> dict:
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    dist = part["details"].setdefault("jointDistribution", {})
    for q in lat.proper():
        try:
            tap, _ = is_two_absorbing_primary(q, caps)
            if not tap:
                continue
            part["instances"] += 1
            e = radical_nilpotency(q)
            n = uniformly_two_ap_ord(q, caps)
            if n is None or n > e:
                _cx(part, ring, q, "2AP ideal whose 2-ord is not bounded by the radical exponent",
                    two_ord=n, radical_exponent=e)
            else:
                key = f"{n},{e}"
                dist[key] = dist.get(key, 0) + 1
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _chk_rad(ring, caps: Caps) -> dict:
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            if uniformly_two_ap_ord(q, caps) is None:
                continue
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
            continue
        part["instances"] += 1
        mps = minimal_primes_over(q, lat)
        rad = radical_of(q)
        if len(mps) == 1:
            ok = rad == mps[0]
        elif len(mps) == 2:
            ok = rad == intersect_ideals(mps[0], mps[1])
        else:
            ok = False
        if not ok:
            _cx(part, ring, q, "radical is not a prime or the meet of exactly two minimal primes",
                minimal_primes=[_plain(p) for p in mps])
    return part


def _chk_uniformly_primary_thm(ring, caps: Caps) -> dict:
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            ordq = uniformly_primary_ord(q, caps)
            part["instances"] += 1
            if ordq is None:
                for n in (1, 2):
                    for which in (2, 3, 4):
                        if uniformly_primary_condition(q, which, n, lat, caps):
                            _cx(part, ring, q,
                                f"condition ({which}) holds at n={n} on a non-primary ideal")
                continue
            for which in (2, 3, 4):
                if not uniformly_primary_condition(q, which, ordq, lat, caps):
                    _cx(part, ring, q, f"condition ({which}) fails at n=ord", ord=ordq)
                if ordq >= 2 and uniformly_primary_condition(q, which, ordq - 1, lat, caps):
                    _cx(part, ring, q, f"condition ({which}) already holds below ord", ord=ordq)
        except CapExceededError as err:
            _skip(part, ring, "primary characterisation", str(err), q)
    return part


def _chk_main1(ring, caps: Caps) -> dict:
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            n = uniformly_two_ap_ord(q, caps)
            part["instances"] += 1
            if n is None:
                for m in (1, 2):
                    for which in (2, 3, 4, 5, 6):
                        if main1_condition(q, which, m, lat, caps):
                            _cx(part, ring, q,
                                f"condition ({which}) holds at n={m} on a non-uniform ideal")
                continue
            for which in (2, 3, 4, 5, 6):
                if not main1_condition(q, which, n, lat, caps):
                    _cx(part, ring, q, f"condition ({which}) fails at n=2-ord", two_ord=n)
            if n >= 2 and main1_condition(q, 3, n - 1, lat, caps):
                _cx(part, ring, q, "condition (3) already holds below 2-ord", two_ord=n)
        except CapExceededError as err:
            _skip(part, ring, "uniform characterisation", str(err), q)
    return part


def _chk_special(ring, caps: Caps) -> dict:
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            sp = is_special(q, caps)
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
            continue
        for which in range(2, 10):
            try:
                cond = special_condition(q, which, lat, caps)
            except CapExceededError as err:
                _skip(part, ring, f"special condition ({which})", str(err), q)
                continue
            part["instances"] += 1
            if cond != sp:
                _cx(part, ring, q, f"condition ({which}) disagrees with 2-ord = 1",
                    special=sp, condition=cond)
    return part


def _chk_idempotent_colon(ring, caps: Caps) -> dict:
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    idems = np.nonzero(ring.mul.diagonal() == np.arange(ring.size))[0]
    for q in lat.proper():
        try:
            n = uniformly_two_ap_ord(q, caps)
            if n is None:
                continue
            rad = radical_of(q)
            for x in idems:
                x = int(x)
                if q.mask[x]:
                    continue
                part["instances"] += 1
                cq = colon_elem(q, x)
                if colon_elem(rad, x) != radical_of(cq):
                    _cx(part, ring, q, "colon by an idempotent does not commute with the radical", x=x)
                nc = uniformly_two_ap_ord(cq, caps)
                if nc is None or nc > n:
                    _cx(part, ring, q, "colon by an idempotent is not uniform within 2-ord",
                        x=x, two_ord=n, colon_two_ord=nc)
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _chk_radical_prop(ring, caps: Caps) -> dict:
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            rad = radical_of(q)
            part["instances"] += 1
            if radical_nilpotency(rad) != 1:
                _cx(part, ring, q, "radical ideal with nilpotency above 1")
            b1, _ = is_two_absorbing(rad, caps)
            b2 = _radical_triple_absorbs(q, caps)
            b3, _ = is_two_absorbing_primary(rad, caps)
            b4 = b3 and radical_nilpotency(rad) == 1
            b5 = uniformly_two_ap_ord(rad, caps) is not None
            if not (b1 == b2 == b3 == b4 == b5):
                _cx(part, ring, q, "the five radical-2-absorbing conditions disagree",
                    flags=[b1, b2, b3, b4, b5])
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _chk_ord_comparison(ring, caps: Caps) -> dict:
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    infos = []
    for q in lat.proper():
        try:
            infos.append((q, uniformly_primary_ord(q, caps), uniformly_two_ap_ord(q, caps),
                          radical_of(q)))
        except CapExceededError as err:
            _skip(part, ring, "scans", str(err), q)
    for q1, ord1, _, r1 in infos:
        if ord1 is None:
            continue
        for q2, _, n2, r2 in infos:
            if n2 is None or r1 != r2 or not q2.contains_ideal(q1):
                continue
            part["instances"] += 1
            if n2 > ord1:
                _cx(part, ring, q2, "2-ord exceeds the ord of a smaller primary ideal with the "
                    "same radical", smaller=q1, ord=ord1, two_ord=n2)
    return part


def _chk_intersection(ring, caps: Caps) -> dict:
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    prims = []
    for q in lat.proper():
        try:
            o = uniformly_primary_ord(q, caps)
        except CapExceededError as err:
            _skip(part, ring, "primary scan", str(err), q)
            continue
        if o is not None:
            prims.append((q, o))
    for i, (q1, o1) in enumerate(prims):
        for q2, o2 in prims[i:]:
            part["instances"] += 1
            try:
                meet = intersect_ideals(q1, q2)
                nm = uniformly_two_ap_ord(meet, caps)
                if nm is None or nm > max(o1, o2):
                    _cx(part, ring, meet, "meet of primary ideals is not uniform within max of "
                        "the ords", parts=[q1, q2], ords=[o1, o2], two_ord=nm)
                prod = product_ideals(q1, q2)
                npr = uniformly_two_ap_ord(prod, caps)
                if npr is None or npr > o1 + o2:
                    _cx(part, ring, prod, "product of primary ideals is not uniform within the "
                        "sum of the ords", parts=[q1, q2], ords=[o1, o2], two_ord=npr)
            except CapExceededError as err:
                _skip(part, ring, "triple scan", str(err), q1)
    return part


def _chk_lemch(ring, caps: Caps) -> dict:
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Modular):
        _skip(part, ring, "prime powers", "needs a modular ring")
        return part
    fac = sorted(factorize_int(desc.n).items())
    if len(fac) == 1:
        (p, a), = fac
        base = generate(ring, (p % desc.n,))
        for k in range(1, a + 1):
            pk = power_ideal(base, k)
            prim, wit = is_primary(pk, caps)
            if not prim:
                _cx(part, ring, pk, "prime power fails to be primary", k=k, witness=wit)
                continue
            part["instances"] += 1
            o = uniformly_primary_ord(pk, caps)
            if o != k:
                _cx(part, ring, pk, "ord of the k-th prime power is not k", k=k, ord=o)
    elif len(fac) == 2:
        (p, a), (r, b) = fac
        p1 = generate(ring, (p,))
        p2 = generate(ring, (r,))
        for n in range(1, a + 1):
            for m in range(1, b + 1):
                q1 = power_ideal(p1, n)
                q2 = power_ideal(p2, m)
                if not (is_primary(q1, caps)[0] and is_primary(q2, caps)[0]):
                    _cx(part, ring, q1, "prime power fails to be primary", n=n, m=m)
                    continue
                part["instances"] += 1
                try:
                    tp = uniformly_two_ap_ord(product_ideals(q1, q2), caps)
                    tm = uniformly_two_ap_ord(intersect_ideals(q1, q2), caps)
                except CapExceededError as err:
                    _skip(part, ring, "triple scan", str(err), q1)
                    continue
                if tp is None or tp > n + m:
                    _cx(part, ring, product_ideals(q1, q2),
                        "product of prime powers is not uniform within n+m", n=n, m=m, two_ord=tp)
                if tm is None or tm > max(n, m):
                    _cx(part, ring, intersect_ideals(q1, q2),
                        "meet of prime powers is not uniform within max(n,m)", n=n, m=m, two_ord=tm)
    else:
        _skip(part, ring, "prime powers", "needs at most two primes in the modulus")
    return part


def _hom_menu(ring) -> list[RingHom]:
    """Registered homomorphisms out of a ring: quotients, CRT splits, projections."""
    desc = ring.desc
    homs: list[RingHom] = []
    if isinstance(desc, Modular):
        n = desc.n
        for d in range(2, n):
            if n % d == 0:
                homs.append(quotient_mod(n, d))
        for a in range(2, n):
            if n % a == 0:
                b = n // a
                if b >= 2 and a < b and math.gcd(a, b) == 1:
                    homs.append(crt_iso(a, b))
    elif isinstance(desc, Product):
        for k in range(len(desc.factors)):
            homs.append(projection(ring, k))
    return homs


def _chk_monoepi(ring, caps: Caps) -> dict:
    part = _part()
    homs = _hom_menu(ring)
    if not homs:
        _skip(part, ring, "homomorphisms", "no registered homomorphisms out of this ring")
        return part
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    kernel_skipped = 0
    for h in homs:
        tgt_lat = _lattice(h.target, caps, part, f"target enumeration for {h.kind}")
        if tgt_lat is None:
            continue
        for qp in tgt_lat.proper():
            try:
                n = uniformly_two_ap_ord(qp, caps)
                if n is None:
                    continue
                part["instances"] += 1
                pre = hom_preimage_ideal(h, qp)
                npre = uniformly_two_ap_ord(pre, caps)
                if npre is None or npre > n:
                    _cx(part, ring, pre, "preimage is not uniform within the target 2-ord",
                        hom=str(h), target_ideal=qp, two_ord=n, preimage_two_ord=npre)
            except CapExceededError as err:
                _skip(part, ring, f"preimage scan for {h.kind}", str(err), qp)
        if not h.surjective:
            continue
        ker_codes = np.nonzero(h.table == h.target.zero)[0]
        for q in lat.proper():
            try:
                n = uniformly_two_ap_ord(q, caps)
                if n is None:
                    continue
                if not q.mask[ker_codes].all():
                    kernel_skipped += 1
                    continue
                part["instances"] += 1
                img = hom_image_ideal(h, q)
                ni = uniformly_two_ap_ord(img, caps) if img.is_proper else None
                if ni is None or ni > n:
                    _cx(part, ring, q, "image under a surjection is not uniform within 2-ord",
                        hom=str(h), two_ord=n, image_two_ord=ni)
            except CapExceededError as err:
                _skip(part, ring, f"image scan for {h.kind}", str(err), q)
    part["details"]["kernelSkipped"] = kernel_skipped
    return part


def _chk_frac(ring, caps: Caps) -> dict:
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Modular):
        _skip(part, ring, "quotient transfer", "needs a modular ring")
        return part
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    n = desc.n
    for d in range(2, n):
        if n % d != 0:
            continue
        h = quotient_mod(n, d)
        ker_codes = np.nonzero(h.table == 0)[0]
        for q in lat.proper():
            if not q.mask[ker_codes].all():
                continue
            part["instances"] += 1
            try:
                img = hom_image_ideal(h, q)
                nq = uniformly_two_ap_ord(q, caps)
                ni = uniformly_two_ap_ord(img, caps) if img.is_proper else None
                if (nq is None) != (ni is None) or nq != ni:
                    _cx(part, ring, q, "2-ord changes across the quotient by a contained ideal",
                        modulus=d, two_ord=nq, image_two_ord=ni)
            except CapExceededError as err:
                _skip(part, ring, "quotient scan", str(err), q)
    return part


def _chk_multi(ring, caps: Caps) -> dict:
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Modular):
        _skip(part, ring, "localization", "needs a modular ring")
        return part
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    n = desc.n
    infos = []
    for q in lat.proper():
        try:
            infos.append((q, uniformly_two_ap_ord(q, caps), set(z_set(q))))
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    for s in range(n):
        sel = multiplicative_set(ring, s).elements
        loc = localize_modular(n, s)
        for q, nq, zq in infos:
            meets_q = any(q.mask[e] for e in sel)
            if nq is not None and not meets_q:
                part["instances"] += 1
                if loc.zero_ring:
                    _cx(part, ring, q, "localization collapses although the ideal misses the "
                        "powers of s", s=s)
                    continue
                ext = hom_image_ideal(loc.hom, q)
                try:
                    ne = uniformly_two_ap_ord(ext, caps) if ext.is_proper else None
                except CapExceededError as err:
                    _skip(part, ring, "extension scan", str(err), q)
                    continue
                if ne is None or ne > nq:
                    _cx(part, ring, q, "extension is not uniform within 2-ord",
                        s=s, two_ord=nq, extension_two_ord=ne)
            if sel & zq:
                continue
            if loc.zero_ring:
                _cx(part, ring, q, "localization collapses although s avoids the zero divisors "
                    "modulo the ideal", s=s)
                continue
            ext = hom_image_ideal(loc.hom, q)
            if not ext.is_proper:
                _cx(part, ring, q, "extension is improper although s avoids the zero divisors "
                    "modulo the ideal", s=s)
                continue
            try:
                ne = uniformly_two_ap_ord(ext, caps)
            except CapExceededError as err:
                _skip(part, ring, "extension scan", str(err), q)
                continue
            if ne is None:
                continue
            part["instances"] += 1
            if nq is None or nq > ne:
                _cx(part, ring, q, "contraction from a uniform extension is not uniform within "
                    "its 2-ord", s=s, two_ord=nq, extension_two_ord=ne)
    return part


def _chk_idealization(ring, caps: Caps) -> dict:
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Idealization):
        _skip(part, ring, "idealization", "needs an idealization ring")
        return part
    base = build_ring(desc.base)
    table = (np.arange(ring.size) % base.size).astype(np.intp)
    h = RingHom("idz_proj", ring, base, table, True)
    ker_codes = np.nonzero(table == base.zero)[0]
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for qm in lat.proper():
        if not qm.mask[ker_codes].all():
            continue
        part["instances"] += 1
        try:
            img = hom_image_ideal(h, qm)
            left = uniformly_two_ap_ord(qm, caps) is not None
            right = img.is_proper and uniformly_two_ap_ord(img, caps) is not None
            if left != right:
                _cx(part, ring, qm, "uniformity differs between Q(+)M and Q",
                    base_ideal=img, idealization=left, base=right)
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), qm)
    return part


def _factor_ideals(ring, q) -> tuple[list, bool]:
    """Per-factor images of an ideal of a product ring, plus the box-product check."""
    desc = ring.desc
    homs = [projection(ring, k) for k in range(len(desc.factors))]
    comps = [hom_image_ideal(h, q) for h in homs]
    mask = np.ones(ring.size, dtype=bool)
    for h, c in zip(homs, comps):
        mask &= c.mask[h.table]
    return comps, bool(np.array_equal(mask, q.mask))


def _box_guard(part, ring, q, comps, boxed) -> bool:
    if not boxed:
        _cx(part, ring, q, "ideal of a product ring is not the box product of its projections",
            components=[_plain(c) for c in comps])
        return False
    return True


def _chk_product1(ring, caps: Caps) -> dict:
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Product) or len(desc.factors) != 2:
        _skip(part, ring, "product decomposition", "needs a 2-factor product ring")
        return part
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        comps, boxed = _factor_ideals(ring, q)
        if not _box_guard(part, ring, q, comps, boxed):
            continue
        q1, q2 = comps
        part["instances"] += 1
        try:
            left = uniformly_two_ap_ord(q, caps) is not None
            if q1.is_proper and not q2.is_proper:
                right = uniformly_two_ap_ord(q1, caps) is not None
            elif q2.is_proper and not q1.is_proper:
                right = uniformly_two_ap_ord(q2, caps) is not None
            else:
                right = is_primary(q1, caps)[0] and is_primary(q2, caps)[0]
            if left != right:
                _cx(part, ring, q, "uniformity disagrees with the three-case decomposition",
                    components=[_plain(c) for c in comps], uniform=left, decomposition=right)
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _chk_product2(ring, caps: Caps) -> dict:
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Product) or len(desc.factors) < 2:
        _skip(part, ring, "product decomposition", "needs a product ring")
        return part
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        comps, boxed = _factor_ideals(ring, q)
        if not _box_guard(part, ring, q, comps, boxed):
            continue
        part["instances"] += 1
        try:
            proper_idx = [i for i, c in enumerate(comps) if c.is_proper]
            left = is_primary(q, caps)[0]
            right = len(proper_idx) == 1 and is_primary(comps[proper_idx[0]], caps)[0]
            if left != right:
                _cx(part, ring, q, "primary disagrees with the single-slot decomposition",
                    components=[_plain(c) for c in comps], primary=left, decomposition=right)
        except CapExceededError as err:
            _skip(part, ring, "primary scan", str(err), q)
    return part


def _chk_product3(ring, caps: Caps) -> dict:
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Product) or len(desc.factors) < 2:
        _skip(part, ring, "product decomposition", "needs a product ring")
        return part
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        comps, boxed = _factor_ideals(ring, q)
        if not _box_guard(part, ring, q, comps, boxed):
            continue
        part["instances"] += 1
        try:
            proper_idx = [i for i, c in enumerate(comps) if c.is_proper]
            left = uniformly_two_ap_ord(q, caps) is not None
            if len(proper_idx) == 1:
                right = uniformly_two_ap_ord(comps[proper_idx[0]], caps) is not None
            elif len(proper_idx) == 2:
                right = all(is_primary(comps[i], caps)[0] for i in proper_idx)
            else:
                right = False
            if left != right:
                _cx(part, ring, q, "uniformity disagrees with the one-uniform-or-two-primary "
                    "decomposition", components=[_plain(c) for c in comps],
                    uniform=left, decomposition=right)
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _chk_result1(ring, caps: Caps) -> dict:
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Product) or len(desc.factors) != 2:
        _skip(part, ring, "product decomposition", "needs a 2-factor product ring")
        return part
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        comps, boxed = _factor_ideals(ring, q)
        if not _box_guard(part, ring, q, comps, boxed):
            continue
        q1, q2 = comps
        part["instances"] += 1
        try:
            left = is_special(q, caps)
            if q1.is_proper and not q2.is_proper:
                right = is_special(q1, caps)
            elif q2.is_proper and not q1.is_proper:
                right = is_special(q2, caps)
            else:
                right = is_prime(q1)[0] and is_prime(q2)[0]
            if left != right:
                _cx(part, ring, q, "special disagrees with the special-slot-or-two-primes "
                    "decomposition", components=[_plain(c) for c in comps],
                    special=left, decomposition=right)
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _chk_product4(ring, caps: Caps) -> dict:
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Product) or len(desc.factors) != 2:
        _skip(part, ring, "product decomposition", "needs a 2-factor product ring")
        return part
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        comps, boxed = _factor_ideals(ring, q)
        if not _box_guard(part, ring, q, comps, boxed):
            continue
        q1, q2 = comps
        if not (q1.is_proper and q2.is_proper):
            continue
        part["instances"] += 1
        try:
            left = is_special(q, caps)
            right = is_two_absorbing(q, caps)[0]
            if left != right:
                _cx(part, ring, q, "special and 2-absorbing disagree on a box product of proper "
                    "ideals", special=left, two_absorbing=right)
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _chk_boolean(ring, caps: Caps) -> dict:
    part = _part()
    if not bool((ring.mul.diagonal() == np.arange(ring.size)).all()):
        _skip(part, ring, "Boolean gate", "ring has a non-idempotent element")
        return part
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        flag, _ = is_irreducible(q, lat)
        if not flag:
            continue
        part["instances"] += 1
        if not is_maximal(q, lat):
            _cx(part, ring, q, "irreducible ideal of a Boolean ring is not maximal")
    return part


def _chk_main2(ring, caps: Caps) -> dict:
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            if not is_special(q, caps):
                continue
            rad = radical_of(q)
            for x in range(ring.size):
                if rad.mask[x]:
                    continue
                part["instances"] += 1
                c1 = colon_elem(q, x)
                cur = ring.mul2(x, x)
                seen = set()
                while cur not in seen:
                    seen.add(cur)
                    if colon_elem(q, cur) != c1:
                        _cx(part, ring, q, "colon by a power differs from the colon by the "
                            "element", x=x, power_code=cur)
                        break
                    cur = ring.mul2(cur, x)
                if colon_elem(rad, x) != radical_of(c1):
                    _cx(part, ring, q, "colon does not commute with the radical", x=x)
                if not is_special(c1, caps):
                    _cx(part, ring, q, "colon of a special ideal is not special", x=x)
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _chk_main3(ring, caps: Caps) -> dict:
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        flag, _ = is_irreducible(q, lat)
        if not flag:
            continue
        part["instances"] += 1
        try:
            rad = radical_of(q)
            stable = True
            for x in range(ring.size):
                if rad.mask[x]:
                    continue
                if colon_elem(q, x) != colon_elem(q, ring.mul2(x, x)):
                    stable = False
                    break
            sp = is_special(q, caps)
            if sp != stable:
                _cx(part, ring, q, "special disagrees with colon stability at squares on an "
                    "irreducible ideal", special=sp, stable=stable)
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _assert_chain(part, ring, q, xs) -> None:
    reps: dict = {}
    for x in xs:
        c = colon_elem(q, x)
        reps.setdefault(c.key(), (c, x))
    order = sorted(reps.values(), key=lambda t: (t[0].size, tuple(map(int, t[0].elems))))
    for (c1, x1), (c2, x2) in zip(order, order[1:]):
        if not c2.contains_ideal(c1):
            _cx(part, ring, q, "colon ideals are not totally ordered", x1=x1, x2=x2,
                colon1=c1, colon2=c2)


def _chk_chain_colon(ring, caps: Caps) -> dict:
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            if not is_special(q, caps):
                continue
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
            continue
        mps = minimal_primes_over(q, lat)
        if len(mps) > 2:
            _cx(part, ring, q, "special ideal with more than two minimal primes")
            continue
        part["instances"] += 1
        union = np.zeros(ring.size, dtype=bool)
        for p in mps:
            union |= p.mask
        xs = [x for x in range(ring.size) if not union[x]]
        _assert_chain(part, ring, q, xs)
    return part


def _chk_divided_prime(ring, caps: Caps) -> dict:
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            if not is_special(q, caps):
                continue
            rad = radical_of(q)
            if not is_prime(rad)[0]:
                continue
            if not is_divided_prime(rad)[0]:
                continue
            part["instances"] += 1
            prim, wit = is_primary(q, caps)
            if not prim:
                _cx(part, ring, q, "special ideal with divided prime radical is not primary",
                    witness=wit)
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


# ---------------------------------------------------------------------------
# mutants: plausible but false variants that the corpora must refute


def _mut_uni_abs(ring, caps: Caps) -> dict:
    """Hypothesis dropped: claims every proper ideal passes the 2AP triple test."""
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        part["instances"] += 1
        try:
            ok, wit = definitional_two_ap(q, caps)
            if not ok:
                _cx(part, ring, q, "proper ideal fails the 2AP triple test", triple=wit)
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _mut_prop1(ring, caps: Caps) -> dict:
    """Hypothesis weakened to primary: claims the radical exponent stays <= 2."""
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            if uniformly_primary_ord(q, caps) is None:
                continue
            part["instances"] += 1
            e = radical_nilpotency(q)
            if e > 2:
                _cx(part, ring, q, "primary ideal with radical exponent above 2", exponent=e)
        except CapExceededError as err:
            _skip(part, ring, "primary scan", str(err), q)
    return part


def _mut_noe_uni(ring, caps: Caps) -> dict:
    """Inequality reversed: claims the radical exponent is bounded by 2-ord."""
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            n = uniformly_two_ap_ord(q, caps)
            if n is None:
                continue
            part["instances"] += 1
            e = radical_nilpotency(q)
            if e > n:
                _cx(part, ring, q, "radical exponent exceeds 2-ord", two_ord=n, radical_exponent=e)
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _mut_rad(ring, caps: Caps) -> dict:
    """Hypothesis dropped: claims every proper ideal has at most two minimal primes."""
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        part["instances"] += 1
        mps = minimal_primes_over(q, lat)
        if len(mps) > 2:
            _cx(part, ring, q, "proper ideal with more than two minimal primes",
                count=len(mps))
    return part


def _mut_uniformly_primary_thm(ring, caps: Caps) -> dict:
    """Off by one: claims the colon bracket-power condition already holds below ord."""
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            ordq = uniformly_primary_ord(q, caps)
            if ordq is None or ordq < 2:
                continue
            part["instances"] += 1
            if not uniformly_primary_condition(q, 3, ordq - 1, lat, caps):
                _cx(part, ring, q, "condition (3) fails below ord", ord=ordq)
        except CapExceededError as err:
            _skip(part, ring, "primary characterisation", str(err), q)
    return part


def _mut_main1(ring, caps: Caps) -> dict:
    """Off by one: claims the colon equality condition already holds below 2-ord."""
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            n = uniformly_two_ap_ord(q, caps)
            if n is None or n < 2:
                continue
            part["instances"] += 1
            if not main1_condition(q, 3, n - 1, lat, caps):
                _cx(part, ring, q, "condition (3) fails below 2-ord", two_ord=n)
        except CapExceededError as err:
            _skip(part, ring, "uniform characterisation", str(err), q)
    return part


def _mut_special(ring, caps: Caps) -> dict:
    """Scope widened: claims the triple-of-ideals condition on every uniform ideal."""
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            if uniformly_two_ap_ord(q, caps) is None:
                continue
            part["instances"] += 1
            if not special_condition(q, 9, lat, caps):
                _cx(part, ring, q, "condition (9) fails on a uniform ideal")
        except CapExceededError as err:
            _skip(part, ring, "special condition", str(err), q)
    return part


def _mut_idempotent_colon(ring, caps: Caps) -> dict:
    """Bound tightened to equality: claims colon by an idempotent preserves 2-ord."""
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    idems = np.nonzero(ring.mul.diagonal() == np.arange(ring.size))[0]
    for q in lat.proper():
        try:
            n = uniformly_two_ap_ord(q, caps)
            if n is None:
                continue
            for x in idems:
                x = int(x)
                if q.mask[x]:
                    continue
                part["instances"] += 1
                nc = uniformly_two_ap_ord(colon_elem(q, x), caps)
                if nc != n:
                    _cx(part, ring, q, "colon by an idempotent changes 2-ord",
                        x=x, two_ord=n, colon_two_ord=nc)
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _mut_radical_prop(ring, caps: Caps) -> dict:
    """Conclusion strengthened: claims the radical conditions force a prime radical."""
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            rad = radical_of(q)
            part["instances"] += 1
            b1, _ = is_two_absorbing(rad, caps)
            if b1 != is_prime(rad)[0]:
                _cx(part, ring, q, "2-absorbing radical is not prime")
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _mut_ord_comparison(ring, caps: Caps) -> dict:
    """Hypotheses dropped: claims the bound without containment or equal radicals."""
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    infos = []
    for q in lat.proper():
        try:
            infos.append((q, uniformly_primary_ord(q, caps), uniformly_two_ap_ord(q, caps)))
        except CapExceededError as err:
            _skip(part, ring, "scans", str(err), q)
    for q1, ord1, _ in infos:
        if ord1 is None:
            continue
        for q2, _, n2 in infos:
            if n2 is None:
                continue
            part["instances"] += 1
            if n2 > ord1:
                _cx(part, ring, q2, "2-ord exceeds the ord of an unrelated primary ideal",
                    primary=q1, ord=ord1, two_ord=n2)
                return part
    return part


def _mut_intersection(ring, caps: Caps) -> dict:
    """Hypothesis dropped: claims the meet of any two proper ideals is uniform."""
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    proper = lat.proper()
    for i, q1 in enumerate(proper):
        for q2 in proper[i:]:
            part["instances"] += 1
            try:
                meet = intersect_ideals(q1, q2)
                if uniformly_two_ap_ord(meet, caps) is None:
                    _cx(part, ring, meet, "meet of proper ideals is not uniform",
                        parts=[q1, q2])
                    return part
            except CapExceededError as err:
                _skip(part, ring, "triple scan", str(err), q1)
    return part


def _mut_lemch(ring, caps: Caps) -> dict:
    """Bound tightened: claims ord of the k-th prime power is below k."""
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Modular):
        _skip(part, ring, "prime powers", "needs a modular ring")
        return part
    fac = sorted(factorize_int(desc.n).items())
    if len(fac) != 1:
        _skip(part, ring, "prime powers", "needs a prime-power modulus")
        return part
    (p, a), = fac
    base = generate(ring, (p % desc.n,))
    for k in range(2, a + 1):
        pk = power_ideal(base, k)
        if not is_primary(pk, caps)[0]:
            continue
        part["instances"] += 1
        o = uniformly_primary_ord(pk, caps)
        if o is not None and o > k - 1:
            _cx(part, ring, pk, "ord of the k-th prime power exceeds k-1", k=k, ord=o)
    return part


def _mut_monoepi(ring, caps: Caps) -> dict:
    """Surjectivity dropped: claims images along the diagonal embedding stay uniform."""
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Modular):
        _skip(part, ring, "diagonal embedding", "needs a modular ring")
        return part
    h = diagonal_embed(desc.n)
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            n = uniformly_two_ap_ord(q, caps)
            if n is None:
                continue
            part["instances"] += 1
            img = generate(h.target, tuple(int(h.table[e]) for e in q.elems))
            ni = uniformly_two_ap_ord(img, caps) if img.is_proper else None
            if ni is None or ni > n:
                _cx(part, ring, q, "generated image along a non-surjection is not uniform "
                    "within 2-ord", two_ord=n, image_two_ord=ni)
                return part
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _mut_frac(ring, caps: Caps) -> dict:
    """Containment dropped: claims 2-ord transfers to quotients by arbitrary ideals."""
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Modular):
        _skip(part, ring, "quotient transfer", "needs a modular ring")
        return part
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    n = desc.n
    for d in range(2, n):
        if n % d != 0:
            continue
        h = quotient_mod(n, d)
        for q in lat.proper():
            try:
                img = hom_image_ideal(h, q)
                if not img.is_proper:
                    continue
                part["instances"] += 1
                left = uniformly_two_ap_ord(q, caps) is not None
                right = uniformly_two_ap_ord(img, caps) is not None
                if left != right:
                    _cx(part, ring, q, "uniformity differs across a quotient that does not "
                        "contain the kernel", modulus=d)
                    return part
            except CapExceededError as err:
                _skip(part, ring, "quotient scan", str(err), q)
    return part


def _mut_multi(ring, caps: Caps) -> dict:
    """Zero-divisor condition dropped: claims contraction from any uniform extension."""
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Modular):
        _skip(part, ring, "localization", "needs a modular ring")
        return part
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    n = desc.n
    for s in range(n):
        sel = multiplicative_set(ring, s).elements
        loc = localize_modular(n, s)
        if loc.zero_ring:
            continue
        for q in lat.proper():
            if any(q.mask[e] for e in sel):
                continue
            try:
                ext = hom_image_ideal(loc.hom, q)
                if not ext.is_proper or uniformly_two_ap_ord(ext, caps) is None:
                    continue
                part["instances"] += 1
                if uniformly_two_ap_ord(q, caps) is None:
                    _cx(part, ring, q, "ideal with a uniform extension is not uniform", s=s)
                    return part
            except CapExceededError as err:
                _skip(part, ring, "extension scan", str(err), q)
    return part


def _mut_idealization(ring, caps: Caps) -> dict:
    """Conclusion strengthened: claims uniform Q(+)M forces a prime Q."""
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Idealization):
        _skip(part, ring, "idealization", "needs an idealization ring")
        return part
    base = build_ring(desc.base)
    table = (np.arange(ring.size) % base.size).astype(np.intp)
    h = RingHom("idz_proj", ring, base, table, True)
    ker_codes = np.nonzero(table == base.zero)[0]
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for qm in lat.proper():
        if not qm.mask[ker_codes].all():
            continue
        try:
            if uniformly_two_ap_ord(qm, caps) is None:
                continue
            part["instances"] += 1
            img = hom_image_ideal(h, qm)
            if not img.is_proper or not is_prime(img)[0]:
                _cx(part, ring, qm, "uniform Q(+)M whose Q is not prime", base_ideal=img)
                return part
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), qm)
    return part


def _mut_product1(ring, caps: Caps) -> dict:
    """Third case weakened: claims uniform x uniform slots give a uniform box ideal."""
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Product) or len(desc.factors) != 2:
        _skip(part, ring, "product decomposition", "needs a 2-factor product ring")
        return part
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        comps, boxed = _factor_ideals(ring, q)
        if not boxed:
            continue
        q1, q2 = comps
        if not (q1.is_proper and q2.is_proper):
            continue
        try:
            if uniformly_two_ap_ord(q1, caps) is None or uniformly_two_ap_ord(q2, caps) is None:
                continue
            part["instances"] += 1
            if uniformly_two_ap_ord(q, caps) is None:
                _cx(part, ring, q, "box product of uniform ideals is not uniform",
                    components=[_plain(c) for c in comps])
                return part
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _mut_product2(ring, caps: Caps) -> dict:
    """Slot count loosened: claims up to two primary slots still give a primary ideal."""
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Product) or len(desc.factors) < 2:
        _skip(part, ring, "product decomposition", "needs a product ring")
        return part
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        comps, boxed = _factor_ideals(ring, q)
        if not boxed:
            continue
        proper_idx = [i for i, c in enumerate(comps) if c.is_proper]
        try:
            if not (1 <= len(proper_idx) <= 2):
                continue
            if not all(is_primary(comps[i], caps)[0] for i in proper_idx):
                continue
            part["instances"] += 1
            if not is_primary(q, caps)[0]:
                _cx(part, ring, q, "box ideal with two primary slots is not primary",
                    components=[_plain(c) for c in comps])
                return part
        except CapExceededError as err:
            _skip(part, ring, "primary scan", str(err), q)
    return part


def _mut_product3(ring, caps: Caps) -> dict:
    """Second case weakened: claims two uniform slots suffice for a uniform box ideal."""
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Product) or len(desc.factors) < 2:
        _skip(part, ring, "product decomposition", "needs a product ring")
        return part
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        comps, boxed = _factor_ideals(ring, q)
        if not boxed:
            continue
        proper_idx = [i for i, c in enumerate(comps) if c.is_proper]
        if len(proper_idx) != 2:
            continue
        try:
            if any(uniformly_two_ap_ord(comps[i], caps) is None for i in proper_idx):
                continue
            part["instances"] += 1
            if uniformly_two_ap_ord(q, caps) is None:
                _cx(part, ring, q, "box ideal with two uniform slots is not uniform",
                    components=[_plain(c) for c in comps])
                return part
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _mut_result1(ring, caps: Caps) -> dict:
    """Third case weakened: claims primary x primary box ideals are special."""
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Product) or len(desc.factors) != 2:
        _skip(part, ring, "product decomposition", "needs a 2-factor product ring")
        return part
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        comps, boxed = _factor_ideals(ring, q)
        if not boxed:
            continue
        q1, q2 = comps
        if not (q1.is_proper and q2.is_proper):
            continue
        try:
            if not (is_primary(q1, caps)[0] and is_primary(q2, caps)[0]):
                continue
            part["instances"] += 1
            if not is_special(q, caps):
                _cx(part, ring, q, "primary x primary box ideal is not special",
                    components=[_plain(c) for c in comps])
                return part
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _mut_product4(ring, caps: Caps) -> dict:
    """Equivalence retargeted: claims special box products of proper ideals are prime."""
    part = _part()
    desc = ring.desc
    if not isinstance(desc, Product) or len(desc.factors) != 2:
        _skip(part, ring, "product decomposition", "needs a 2-factor product ring")
        return part
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        comps, boxed = _factor_ideals(ring, q)
        if not boxed:
            continue
        q1, q2 = comps
        if not (q1.is_proper and q2.is_proper):
            continue
        part["instances"] += 1
        try:
            if is_special(q, caps) != is_prime(q)[0]:
                _cx(part, ring, q, "special box product that is not prime")
                return part
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _mut_boolean(ring, caps: Caps) -> dict:
    """Irreducibility dropped: claims every proper ideal of a Boolean ring is maximal."""
    part = _part()
    if not bool((ring.mul.diagonal() == np.arange(ring.size)).all()):
        _skip(part, ring, "Boolean gate", "ring has a non-idempotent element")
        return part
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        part["instances"] += 1
        if not is_maximal(q, lat):
            _cx(part, ring, q, "proper ideal of a Boolean ring is not maximal")
            return part
    return part


def _mut_main2(ring, caps: Caps) -> dict:
    """Hypothesis dropped: claims colon stability at squares for every proper ideal."""
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        rad = radical_of(q)
        for x in range(ring.size):
            if rad.mask[x]:
                continue
            part["instances"] += 1
            if colon_elem(q, x) != colon_elem(q, ring.mul2(x, x)):
                _cx(part, ring, q, "colon by an element differs from the colon by its square",
                    x=x)
                return part
    return part


def _mut_main3(ring, caps: Caps) -> dict:
    """Irreducibility dropped: claims the colon-stability criterion on every proper ideal."""
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            rad = radical_of(q)
            stable = True
            for x in range(ring.size):
                if rad.mask[x]:
                    continue
                if colon_elem(q, x) != colon_elem(q, ring.mul2(x, x)):
                    stable = False
                    break
            part["instances"] += 1
            if is_special(q, caps) != stable:
                _cx(part, ring, q, "colon stability disagrees with special on a reducible "
                    "ideal", stable=stable)
                return part
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


def _mut_chain_colon(ring, caps: Caps) -> dict:
    """Range widened: claims the chain over every element outside the radical."""
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            if not is_special(q, caps):
                continue
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
            continue
        part["instances"] += 1
        rad = radical_of(q)
        xs = [x for x in range(ring.size) if not rad.mask[x]]
        before = len(part["counterexamples"])
        _assert_chain(part, ring, q, xs)
        if len(part["counterexamples"]) > before:
            return part
    return part


def _mut_divided_prime(ring, caps: Caps) -> dict:
    """Conclusion strengthened: claims the divided-radical hypothesis forces a prime."""
    part = _part()
    lat = _lattice(ring, caps, part, "ideal enumeration")
    if lat is None:
        return part
    for q in lat.proper():
        try:
            if not is_special(q, caps):
                continue
            rad = radical_of(q)
            if not is_prime(rad)[0] or not is_divided_prime(rad)[0]:
                continue
            part["instances"] += 1
            if not is_prime(q)[0]:
                _cx(part, ring, q, "special ideal with divided prime radical is not prime")
                return part
        except CapExceededError as err:
            _skip(part, ring, "triple scan", str(err), q)
    return part


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class TheoremSpec:
    """One registered statement: checker, sabotaged twin, default corpus."""

    theorem_id: str
    statement: str
    checker: object
    mutant: object
    mutant_note: str
    default_corpus: str


def _spec(tid, statement, checker, mutant, note, corpus):
    return tid, TheoremSpec(tid, statement, checker, mutant, note, corpus)


REGISTRY: dict[str, TheoremSpec] = dict([
    _spec("uni-abs",
          "uniformly 2-absorbing primary ideals are 2-absorbing primary",
          _chk_uni_abs, _mut_uni_abs,
          "claims every proper ideal passes the 2AP triple test",
          "zn:2..60,prod:(zn:2..6,zn:2..6)"),
    _spec("prop1",
          "2-absorbing ideals have radical exponent <= 2 and 2-ord 1; primary ideals have "
          "2-ord 1",
          _chk_prop1, _mut_prop1,
          "claims primary ideals have radical exponent <= 2",
          "zn:2..60,prod:(zn:2..5,zn:2..5),idz:(zn:2..4)^1..2"),
    _spec("noe-uni",
          "2AP ideals are uniform with 2-ord bounded by the radical exponent",
          _chk_noe_uni, _mut_noe_uni,
          "claims the radical exponent is bounded by 2-ord",
          "zn:2..60,prod:(zn:2..6,zn:2..6)"),
    _spec("rad",
          "the radical of a uniform ideal is prime or the meet of exactly two minimal primes",
          _chk_rad, _mut_rad,
          "claims every proper ideal has at most two minimal primes",
          "zn:2..60,prod:(zn:2..6,zn:2..6)"),
    _spec("uniformly-primary-thm",
          "three uniform characterisations of primary ideals pin down ord exactly",
          _chk_uniformly_primary_thm, _mut_uniformly_primary_thm,
          "claims the colon bracket-power condition already holds below ord",
          "zn:2..120,zn:125,zn:343,zn:625,zn:2401"),
    _spec("main1",
          "five uniform characterisations of 2AP ideals hold at 2-ord, the colon equality "
          "one minimally",
          _chk_main1, _mut_main1,
          "claims the colon equality condition already holds below 2-ord",
          "zn:2..120,prod:(zn:2..12,zn:2..12)"),
    _spec("idempotent-colon",
          "colon of a uniform ideal by an idempotent outside it commutes with the radical "
          "and stays uniform without raising 2-ord",
          _chk_idempotent_colon, _mut_idempotent_colon,
          "claims colon by an idempotent preserves 2-ord exactly",
          "zn:2..60,prod:(zn:2..6,zn:2..6)"),
    _spec("radical-prop",
          "five ways of saying the radical is 2-absorbing agree",
          _chk_radical_prop, _mut_radical_prop,
          "claims a 2-absorbing radical is prime",
          "zn:2..60,prod:(zn:2..6,zn:2..6)"),
    _spec("ord-comparison",
          "a uniform ideal containing a primary ideal with the same radical has 2-ord "
          "bounded by that ord",
          _chk_ord_comparison, _mut_ord_comparison,
          "claims the bound without containment or matching radicals",
          "zn:2..60,prod:(zn:2..5,zn:2..5)"),
    _spec("intersection",
          "meets and products of primary ideals are uniform with 2-ord at most the max "
          "resp. the sum of the ords",
          _chk_intersection, _mut_intersection,
          "claims the meet of any two proper ideals is uniform",
          "zn:2..60,prod:(zn:2..5,zn:2..5)"),
    _spec("lemch-corollary",
          "primary prime powers have ord equal to the exponent; their products and meets "
          "are uniform within the sum resp. the max",
          _chk_lemch, _mut_lemch,
          "claims ord of the k-th prime power stays below k",
          "zn:2,zn:3,zn:4,zn:5,zn:7,zn:8,zn:9,zn:16,zn:25,zn:27,zn:49,zn:81,zn:125,zn:343,"
          "zn:625,zn:2401,zn:12,zn:36,zn:72,zn:108,zn:144,zn:200,zn:324,zn:392,zn:432,zn:500"),
    _spec("monoepi",
          "uniformity contracts along any hom and pushes forward along surjections whose "
          "kernel the ideal contains, never raising 2-ord",
          _chk_monoepi, _mut_monoepi,
          "claims generated images along the diagonal embedding stay uniform",
          "zn:2..36,prod:(zn:2..6,zn:2..6)"),
    _spec("frac",
          "uniformity and 2-ord transfer exactly to quotients by contained ideals",
          _chk_frac, _mut_frac,
          "claims the transfer for quotients by arbitrary ideals",
          "zn:2..120"),
    _spec("multi",
          "uniformity extends to localizations without raising 2-ord and contracts when "
          "the set avoids the zero divisors modulo the ideal",
          _chk_multi, _mut_multi,
          "claims contraction from any uniform extension",
          "zn:2..120"),
    _spec("idealization",
          "Q(+)M is uniform in R(+)M exactly when Q is uniform in R",
          _chk_idealization, _mut_idealization,
          "claims uniform Q(+)M forces a prime Q",
          "idz:(zn:2..8)^1..2"),
    _spec("product1",
          "uniform ideals of a 2-factor product are uniform x R, R x uniform, or primary "
          "x primary",
          _chk_product1, _mut_product1,
          "claims uniform x uniform slots give a uniform box ideal",
          "prod:(zn:2..16,zn:2..16)"),
    _spec("product2",
          "primary ideals of a finite product are proper in exactly one primary slot",
          _chk_product2, _mut_product2,
          "claims up to two primary slots still give a primary ideal",
          "prod:(zn:2..8,zn:2..8,zn:2..8)"),
    _spec("product3",
          "uniform ideals of a finite product have one uniform slot or exactly two primary "
          "slots",
          _chk_product3, _mut_product3,
          "claims two uniform slots suffice",
          "prod:(zn:2..8,zn:2..8,zn:2..8)"),
    _spec("special",
          "eight colon characterisations agree with 2-ord = 1",
          _chk_special, _mut_special,
          "claims the triple-of-ideals condition on every uniform ideal",
          "zn:2..120,prod:(zn:2..12,zn:2..12)"),
    _spec("main2",
          "colons of a special ideal by elements outside the radical are power-stable, "
          "special, and commute with the radical",
          _chk_main2, _mut_main2,
          "claims colon stability at squares for every proper ideal",
          "zn:2..60,prod:(zn:2..6,zn:2..6)"),
    _spec("main3",
          "an irreducible ideal is special exactly when colons stabilise at squares",
          _chk_main3, _mut_main3,
          "claims the criterion on every proper ideal",
          "zn:2..120,prod:(zn:2..8,zn:2..8)"),
    _spec("chain-colon",
          "colons of a special ideal by elements outside its minimal primes form a chain",
          _chk_chain_colon, _mut_chain_colon,
          "claims the chain over every element outside the radical",
          "zn:2..60,prod:(zn:2..6,zn:2..6)"),
    _spec("divided-prime",
          "a special ideal whose radical is a divided prime is primary",
          _chk_divided_prime, _mut_divided_prime,
          "claims such an ideal is prime",
          "zn:2..60,prod:(zn:2..5,zn:2..5),idz:(zn:2..4)^1..2"),
    _spec("boolean-corollary",
          "irreducible ideals of a Boolean ring are maximal",
          _chk_boolean, _mut_boolean,
          "claims every proper ideal of a Boolean ring is maximal",
          "zn:2,prod:(zn:2,zn:2),prod:(zn:2,zn:2,zn:2),prod:(zn:2,zn:2,zn:2,zn:2)"),
    _spec("result1",
          "special ideals of a 2-factor product are special x R, R x special, or prime x "
          "prime",
          _chk_result1, _mut_result1,
          "claims primary x primary box ideals are special",
          "prod:(zn:2..9,zn:2..9)"),
    _spec("product4",
          "a box product of two proper ideals is special exactly when it is 2-absorbing",
          _chk_product4, _mut_product4,
          "claims special box products of proper ideals are prime",
          "prod:(zn:2..9,zn:2..9)"),
])


OUT_OF_SCOPE: dict[str, str] = {
    "chain": "ascending unions of special ideals need infinite chains, which no finite "
             "ring carries",
    "valuation": "valuation domains are infinite integral domains, outside the enumerable "
                 "corpora",
    "content": "content and Gaussian algebra statements quantify over polynomial extensions "
               "of infinite rings",
    "pruf": "arithmetical and Prufer-style transfer needs infinite domains",
}


def list_theorems() -> list[str]:
    return list(REGISTRY)


def _resolve(theorem_id: str) -> TheoremSpec:
    spec = REGISTRY.get(theorem_id)
    if spec is not None:
        return spec
    if theorem_id in OUT_OF_SCOPE:
        raise OutOfScopeError(theorem_id, OUT_OF_SCOPE[theorem_id], list(REGISTRY))
    raise ValueError(
        f"unknown theorem id {theorem_id!r}; checkable ids: {', '.join(REGISTRY)}"
    )


# ---------------------------------------------------------------------------
# verification drivers; tasks are corpus entries, merged strictly in order


def _run_task(args) -> dict:
    theorem_id, desc, caps, use_mutant = args
    ring = build_ring(desc)
    spec = REGISTRY[theorem_id]
    fn = spec.mutant if use_mutant else spec.checker
    return fn(ring, caps)


def _run_parts(tasks, workers: int) -> list[dict]:
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_task, tasks))
    return [_run_task(t) for t in tasks]


def verify_theorem(theorem_id: str, corpus=None, caps: Caps = DEFAULT_CAPS,
                   workers: int = 1, use_mutant: bool = False) -> TheoremCheckResult:
    """Check one registered statement (or its mutant) over a corpus."""
    spec = _resolve(theorem_id)
    corp = build_corpus(corpus if corpus is not None else spec.default_corpus)
    tasks = [(theorem_id, d, caps, use_mutant) for d in corp.descriptors]
    parts = _run_parts(tasks, workers)
    counterexamples = tuple(c for p in parts for c in p["counterexamples"])
    skipped = tuple(s for p in parts for s in p["skipped"])
    details: dict = {}
    for p in parts:
        _merge_details(details, p["details"])
    return TheoremCheckResult(
        theorem=theorem_id,
        corpus=corp.name,
        instances=sum(p["instances"] for p in parts),
        verdict="failed" if counterexamples else "passed",
        counterexamples=counterexamples,
        skipped=skipped,
        details=details,
        mutant=use_mutant,
    )


def verify_all(corpus=None, caps: Caps = DEFAULT_CAPS, workers: int = 1,
               use_mutant: bool = False) -> list[TheoremCheckResult]:
    """Check every registered statement, in registry order."""
    return [verify_theorem(t, corpus=corpus, caps=caps, workers=workers,
                           use_mutant=use_mutant) for t in REGISTRY]


# ---------------------------------------------------------------------------
# search predicates over classification reports


_FLAG_ALIASES = {
    "proper": "proper",
    "prime": "prime",
    "maximal": "maximal",
    "primary": "primary",
    "uniformlyprimary": "uniformlyPrimary",
    "uprimary": "uniformlyPrimary",
    "twoabsorbing": "twoAbsorbing",
    "2abs": "twoAbsorbing",
    "twoabsorbingprimary": "twoAbsorbingPrimary",
    "2ap": "twoAbsorbingPrimary",
    "uniformlytwoabsorbingprimary": "uniformlyTwoAbsorbingPrimary",
    "u2ap": "uniformlyTwoAbsorbingPrimary",
    "noetherstrongly2ap": "noetherStrongly2AP",
    "ns2ap": "noetherStrongly2AP",
    "special": "special",
    "irreducible": "irreducible",
    "dividedprimeradical": "dividedPrimeRadical",
}

_ORDER_FIELDS = {
    "ord": "ord",
    "twoord": "two_ord",
    "2ord": "two_ord",
    "twoexp": "two_exp",
    "2exp": "two_exp",
    "2e": "two_exp",
    "radicalnilpotency": "rad_nilpotency",
    "sym2ord": "sym2ord",
    "symmetrizedtwoord": "sym2ord",
}

_COMPARATORS = ("==", "!=", "<=", ">=", "<", ">")


def _tokens(text: str) -> list[tuple]:
    out = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isalnum() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            out.append(("num" if word.isdigit() else "name", word, i))
            i = j
            continue
        two = text[i:i + 2]
        if two in ("&&", "||", "==", "!=", "<=", ">="):
            out.append(("op", two, i))
            i += 2
            continue
        if c in "!()<>":
            out.append(("op", c, i))
            i += 1
            continue
        raise ExprError(text, i, f"unexpected character {c!r}")
    out.append(("end", "", n))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokens(text)
        self.k = 0

    def _take(self) -> tuple:
        tok = self.toks[self.k]
        self.k += 1
        return tok

    def _peek(self) -> tuple:
        return self.toks[self.k]

    def parse(self) -> tuple:
        node = self._disjunction()
        kind, _, pos = self._peek()
        if kind != "end":
            raise ExprError(self.text, pos, "trailing input")
        return node

    def _disjunction(self) -> tuple:
        node = self._conjunction()
        while self._peek()[:2] == ("op", "||"):
            self._take()
            node = ("or", node, self._conjunction())
        return node

    def _conjunction(self) -> tuple:
        node = self._negation()
        while self._peek()[:2] == ("op", "&&"):
            self._take()
            node = ("and", node, self._negation())
        return node

    def _negation(self) -> tuple:
        if self._peek()[:2] == ("op", "!"):
            self._take()
            return ("not", self._negation())
        return self._atom()

    def _atom(self) -> tuple:
        kind, val, pos = self._take()
        if (kind, val) == ("op", "("):
            node = self._disjunction()
            kind, val, pos = self._take()
            if (kind, val) != ("op", ")"):
                raise ExprError(self.text, pos, "expected ')'")
            return node
        if kind == "name":
            low = val.lower()
            if low == "true":
                return ("const", True)
            if low == "false":
                return ("const", False)
            if low in _ORDER_FIELDS:
                okind, oval, opos = self._take()
                if okind != "op" or oval not in _COMPARATORS:
                    raise ExprError(self.text, opos, f"expected a comparison after {val!r}")
                nkind, nval, npos = self._take()
                if nkind != "num":
                    raise ExprError(self.text, npos, "expected an integer")
                return ("cmp", _ORDER_FIELDS[low], oval, int(nval))
            if low in _FLAG_ALIASES:
                return ("flag", _FLAG_ALIASES[low])
            raise ExprError(self.text, pos, f"unknown name {val!r}")
        raise ExprError(self.text, pos, "expected a predicate")


def _node_wants_sym(node) -> bool:
    op = node[0]
    if op == "cmp":
        return node[1] == "sym2ord"
    if op in ("and", "or"):
        return _node_wants_sym(node[1]) or _node_wants_sym(node[2])
    if op == "not":
        return _node_wants_sym(node[1])
    return False


def _eval_node(node, report, sym) -> bool:
    op = node[0]
    if op == "const":
        return node[1]
    if op == "flag":
        return bool(report.flags[node[1]])
    if op == "cmp":
        _, fld, cmp, rhs = node
        val = sym if fld == "sym2ord" else getattr(report, fld)
        if val is None:
            return False
        return {
            "==": val == rhs, "!=": val != rhs, "<=": val <= rhs,
            ">=": val >= rhs, "<": val < rhs, ">": val > rhs,
        }[cmp]
    if op == "not":
        return not _eval_node(node[1], report, sym)
    if op == "and":
        return _eval_node(node[1], report, sym) and _eval_node(node[2], report, sym)
    return _eval_node(node[1], report, sym) or _eval_node(node[2], report, sym)


class Predicate:
    """Compiled search predicate over classification reports."""

    def __init__(self, text: str):
        self.text = text
        self.node = _Parser(text).parse()
        self.wants_symmetrized = _node_wants_sym(self.node)

    def evaluate(self, report, symmetrized: int | None = None) -> bool:
        return _eval_node(self.node, report, symmetrized)


def _search_task(args) -> list[dict]:
    text, desc, caps = args
    pred = Predicate(text)
    ring = build_ring(desc)
    lat = enumerate_ideals(ring, caps)
    matches = []
    for q in lat.proper():
        report = classify(q, lattice=lat, caps=caps)
        sym = symmetrized_two_ord(q, caps) if pred.wants_symmetrized else None
        if pred.evaluate(report, sym):
            entry = {"ring": ring.key, "ideal": _plain(q), "report": report.to_json_dict()}
            if pred.wants_symmetrized:
                entry["symmetrizedTwoOrd"] = sym
            matches.append(entry)
    return matches


def search_ideals(predicate, corpus, caps: Caps = DEFAULT_CAPS,
                  limit: int | None = None, workers: int = 1) -> list[dict]:
    """Classified proper ideals matching a predicate, in corpus-then-lattice order."""
    pred = predicate if isinstance(predicate, Predicate) else Predicate(predicate)
    corp = build_corpus(corpus)
    tasks = [(pred.text, d, caps) for d in corp.descriptors]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_search_task, tasks))
    else:
        parts = [_search_task(t) for t in tasks]
    out: list[dict] = []
    for p in parts:
        for m in p:
            out.append(m)
            if limit is not None and len(out) >= limit:
                return out
    return out
