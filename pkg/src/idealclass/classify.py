"""Deciders for the primary / 2-absorbing ideal classes and their order invariants.

Everything here works on :class:`~idealclass.ideals.Ideal` values over finite
rings.  The three expensive scans (primary pairs, 2-absorbing triples, the
uniform triple scan) are vectorised with numpy row gathers and cached per
(ring, ideal); witnesses are always the lexicographically least offending
tuple of element codes, so results are deterministic and worker-count
independent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import Caps, DEFAULT_CAPS, check_cap
from .ideals import (
    Ideal,
    IdealLattice,
    bracket_power,
    canonical_gens,
    enumerate_ideals,
    ideal_from_mask,
    is_irreducible,
    minimal_primes_over,
    prime_witness,
    product_ideals,
)

__all__ = [
    "ClassificationReport",
    "classify",
    "min_exponents",
    "radical_of",
    "is_prime",
    "is_maximal",
    "is_primary",
    "uniformly_primary_ord",
    "is_two_absorbing",
    "is_two_absorbing_primary",
    "uniformly_two_ap_ord",
    "radical_nilpotency",
    "noether_exponent",
    "is_special",
    "is_divided_prime",
    "main1_condition",
    "uniformly_primary_condition",
    "special_condition",
    "FLAG_ORDER",
]

# canonical field order used by reports, JSON output and witness maps
FLAG_ORDER = (
    "proper",
    "prime",
    "maximal",
    "primary",
    "uniformlyPrimary",
    "twoAbsorbing",
    "twoAbsorbingPrimary",
    "uniformlyTwoAbsorbingPrimary",
    "noetherStrongly2AP",
    "special",
    "irreducible",
    "dividedPrimeRadical",
)


def _require_proper(ideal: Ideal, what: str) -> None:
    if not ideal.is_proper:
        raise ValueError(f"{what} needs a proper ideal, got the unit ideal")


# ---------------------------------------------------------------------------
# minimal exponents and radicals


def min_exponents(ideal: Ideal) -> np.ndarray:
    """Per element x: least k >= 1 with x^k in the ideal, or 0 if none exists."""
    ring = ideal.ring
    cache = ring._caches.setdefault("minexp", {})
    key = ideal.key()
    got = cache.get(key)
    if got is not None:
        return got
    size = ring.size
    idx = np.arange(size, dtype=np.intp)
    exps = np.zeros(size, dtype=np.intp)
    cur = idx.copy()
    # x^k for k <= size covers every power that ever lands in the ideal
    for k in range(1, size + 1):
        hit = (exps == 0) & ideal.mask[cur]
        exps[hit] = k
        if exps.all():
            break
        cur = ring.mul[cur, idx]
    exps.setflags(write=False)
    cache[key] = exps
    return exps


def radical_of(ideal: Ideal) -> Ideal:
    """sqrt of the ideal, via the minimal-exponent table."""
    mask = min_exponents(ideal) > 0
    return ideal_from_mask(ideal.ring, mask, canonical_gens(ideal.ring, mask))


# ---------------------------------------------------------------------------
# pair scans: prime / primary / uniformly primary


def is_prime(ideal: Ideal) -> tuple[bool, tuple | None]:
    """(flag, witness (a, b) with ab in Q, a, b outside) for a proper ideal."""
    _require_proper(ideal, "is_prime")
    witness = prime_witness(ideal.ring, ideal.mask)
    return witness is None, witness


def is_maximal(ideal: Ideal, lattice: IdealLattice) -> bool:
    """True when no proper ideal strictly contains this one."""
    _require_proper(ideal, "is_maximal")
    idx = lattice.index_of(ideal)
    above = lattice.leq[idx]
    proper = np.array([j.is_proper for j in lattice.ideals])
    return int((above & proper).sum()) == 1


def _primary_scan(ideal: Ideal, caps: Caps) -> tuple[bool, int | None, tuple | None]:
    """(primary?, ord, witness (r, s) with rs in Q, r outside Q, s outside sqrt Q)."""
    ring = ideal.ring
    check_cap(caps, "enumeration", ring.size, f"primary scan over {ring.key}")
    cache = ring._caches.setdefault("primary", {})
    key = ideal.key()
    got = cache.get(key)
    if got is not None:
        return got
    minexp = min_exponents(ideal)
    out = np.nonzero(~ideal.mask)[0]
    # hits[i, s]: out[i] * s lands in Q
    hits = ideal.mask[ring.mul[out]]
    reached = hits.any(axis=0)
    bad = reached & (minexp == 0)
    if bad.any():
        cols = np.nonzero(bad)[0]
        sub = hits[:, cols]
        flat = int(np.argmax(sub))
        i, j = divmod(flat, sub.shape[1])
        result = (False, None, (int(out[i]), int(cols[j])))
    else:
        result = (True, int(minexp[reached].max(initial=1)), None)
    cache[key] = result
    return result


def is_primary(ideal: Ideal, caps: Caps = DEFAULT_CAPS) -> tuple[bool, tuple | None]:
    _require_proper(ideal, "is_primary")
    flag, _, witness = _primary_scan(ideal, caps)
    return flag, witness


def uniformly_primary_ord(ideal: Ideal, caps: Caps = DEFAULT_CAPS) -> int | None:
    """ord(Q): least n with (rs in Q, r outside Q -> s^n in Q); None if not primary."""
    _require_proper(ideal, "uniformly_primary_ord")
    _, order, _ = _primary_scan(ideal, caps)
    return order


# ---------------------------------------------------------------------------
# triple scans: 2-absorbing / 2-absorbing primary / 2-ord


def _first_true(block: np.ndarray, a: int, rows: np.ndarray, cols: np.ndarray) -> tuple:
    flat = int(np.argmax(block))
    i, j = divmod(flat, block.shape[1])
    return (a, int(rows[i]), int(cols[j]))


def is_two_absorbing(ideal: Ideal, caps: Caps = DEFAULT_CAPS) -> tuple[bool, tuple | None]:
    """(flag, witness triple) for: abc in Q implies ab, ac or bc in Q."""
    _require_proper(ideal, "is_two_absorbing")
    ring = ideal.ring
    check_cap(caps, "cubic", ring.size, f"2-absorbing scan over {ring.key}")
    cache = ring._caches.setdefault("twoabs", {})
    key = ideal.key()
    got = cache.get(key)
    if got is not None:
        return got
    inq = ideal.mask
    mul = ring.mul
    result: tuple[bool, tuple | None] = (True, None)
    for a in range(ring.size):
        row = mul[a]
        keep = np.nonzero(~inq[row])[0]  # ab (and by symmetry ac) outside Q
        if keep.size == 0:
            continue
        abc_in = inq[mul[np.ix_(row[keep], keep)]]
        if not abc_in.any():
            continue
        viol = abc_in & ~inq[mul[np.ix_(keep, keep)]]
        if viol.any():
            result = (False, _first_true(viol, a, keep, keep))
            break
    cache[key] = result
    return result


@dataclass(frozen=True)
class _TripleScan:
    two_ord: int | None  # None when some constrained triple never absorbs
    violation: tuple | None  # min-lex (a,b,c) with bc outside sqrt Q
    not_order_one: tuple | None  # min-lex constrained (a,b,c) with bc outside Q
    order_witness: tuple | None  # min-lex constrained triple attaining two_ord > 1


def _triple_scan(ideal: Ideal, caps: Caps) -> _TripleScan:
    """Scan ordered triples with abc in Q, ab outside Q, ac outside sqrt Q."""
    ring = ideal.ring
    check_cap(caps, "cubic", ring.size, f"uniform triple scan over {ring.key}")
    cache = ring._caches.setdefault("scan2ap", {})
    key = ideal.key()
    got = cache.get(key)
    if got is not None:
        return got
    inq = ideal.mask
    minexp = min_exponents(ideal)
    inrad = minexp > 0
    mul = ring.mul
    two_ord = 1
    not_one: tuple | None = None
    order_wit: tuple | None = None
    violation: tuple | None = None
    for a in range(ring.size):
        row = mul[a]
        bs = np.nonzero(~inq[row])[0]
        if bs.size == 0:
            continue
        cs = np.nonzero(~inrad[row])[0]
        if cs.size == 0:
            continue
        tri = inq[mul[np.ix_(row[bs], cs)]]
        if not tri.any():
            continue
        exps = minexp[mul[np.ix_(bs, cs)]]
        if not_one is None:
            ne1 = tri & (exps != 1)
            if ne1.any():
                not_one = _first_true(ne1, a, bs, cs)
        broken = tri & (exps == 0)
        if broken.any():
            violation = _first_true(broken, a, bs, cs)
            break
        best = int((exps * tri).max())
        if best > two_ord:
            two_ord = best
            order_wit = _first_true(tri & (exps == best), a, bs, cs)
    scan = (
        _TripleScan(None, violation, not_one, None)
        if violation is not None
        else _TripleScan(two_ord, None, not_one, order_wit)
    )
    cache[key] = scan
    return scan


def is_two_absorbing_primary(ideal: Ideal, caps: Caps = DEFAULT_CAPS) -> tuple[bool, tuple | None]:
    """(flag, witness triple) for: abc in Q implies ab in Q, ac in sqrt Q or bc in sqrt Q."""
    _require_proper(ideal, "is_two_absorbing_primary")
    scan = _triple_scan(ideal, caps)
    return scan.two_ord is not None, scan.violation


def uniformly_two_ap_ord(ideal: Ideal, caps: Caps = DEFAULT_CAPS) -> int | None:
    """2-ord(Q): least n absorbing every constrained triple; None when none exists."""
    _require_proper(ideal, "uniformly_two_ap_ord")
    return _triple_scan(ideal, caps).two_ord


def is_special(ideal: Ideal, caps: Caps = DEFAULT_CAPS) -> bool:
    """Uniformly 2-absorbing primary with 2-ord equal to 1."""
    _require_proper(ideal, "is_special")
    return _triple_scan(ideal, caps).two_ord == 1


# ---------------------------------------------------------------------------
# radical powers


def radical_nilpotency(ideal: Ideal) -> int:
    """Least n with (sqrt Q)^n inside Q; always defined over a finite ring."""
    _require_proper(ideal, "radical_nilpotency")
    rad = radical_of(ideal)
    power = rad
    for n in range(1, ideal.ring.size + 1):
        if ideal.contains_ideal(power):
            return n
        power = product_ideals(power, rad)
    raise AssertionError("radical power chain failed to land in the ideal")


def noether_exponent(ideal: Ideal, caps: Caps = DEFAULT_CAPS) -> int | None:
    """2-e(Q): radical nilpotency, defined only for 2-absorbing primary ideals."""
    _require_proper(ideal, "noether_exponent")
    if _triple_scan(ideal, caps).two_ord is None:
        return None
    return radical_nilpotency(ideal)


# ---------------------------------------------------------------------------
# divided primes


def principal_mask(ring, x: int) -> np.ndarray:
    """Membership mask of the principal ideal xR."""
    mask = np.zeros(ring.size, dtype=bool)
    mask[ring.mul[:, x]] = True
    return mask


def is_divided_prime(prime: Ideal) -> tuple[bool, tuple | None]:
    """(flag, witness [x]) for: P sits strictly inside xR for every x outside P."""
    flag, witness = is_prime(prime)
    if not flag:
        raise ValueError(f"is_divided_prime needs a prime ideal; witness {witness}")
    ring = prime.ring
    for x in np.nonzero(~prime.mask)[0]:
        if (prime.mask & ~principal_mask(ring, x)).any():
            return False, (int(x),)
    return True, None


# ---------------------------------------------------------------------------
# per-condition checkers of the characterisation theorems


def _colon_rows(ideal: Ideal) -> np.ndarray:
    """Matrix C with C[x] the membership mask of (Q : x)."""
    ring = ideal.ring
    cache = ring._caches.setdefault("colonrows", {})
    key = ideal.key()
    got = cache.get(key)
    if got is None:
        got = ideal.mask[ring.mul]
        got.setflags(write=False)
        cache[key] = got
    return got


def _bracket_rows(ideal: Ideal, n: int) -> tuple[np.ndarray, np.ndarray]:
    """(index per element x, stack of masks) for the ideals (Q : x)^[n]."""
    ring = ideal.ring
    rows = _colon_rows(ideal)
    seen: dict[bytes, int] = {}
    index = np.zeros(ring.size, dtype=np.intp)
    masks: list[np.ndarray] = []
    for x in range(ring.size):
        key = rows[x].tobytes()
        at = seen.get(key)
        if at is None:
            at = len(masks)
            seen[key] = at
            colon = ideal_from_mask(ring, rows[x].copy())
            masks.append(bracket_power(colon, n).mask)
        index[x] = at
    return index, np.stack(masks)


def main1_condition(
    Q: Ideal,
    which: int,
    n: int,
    lattice: IdealLattice | None = None,
    caps: Caps = DEFAULT_CAPS,
) -> bool:
    """Conditions (2)-(6) of the uniform characterisation, checked verbatim at n."""
    _require_proper(Q, "main1_condition")
    if which not in (2, 3, 4, 5, 6):
        raise ValueError("main1_condition takes which in 2..6")
    if n < 1:
        raise ValueError("main1_condition needs n >= 1")
    ring = Q.ring
    check_cap(caps, "cubic", ring.size, f"main1 condition {which} over {ring.key}")
    mul = ring.mul
    inq = Q.mask
    colq = _colon_rows(Q)
    rad = radical_of(Q)
    colr = _colon_rows(rad)
    pw = ring.pow_vec(n)

    if which in (2, 3):
        pow_in = inq[pw]
        for a in range(ring.size):
            ab = mul[a]
            bs = np.nonzero(~pow_in[ab])[0]
            if bs.size == 0:
                continue
            lhs = colq[ab[bs]]
            if which == 2:
                ok = ~(lhs & ~(colq[a][None, :] | colr[bs])).any(axis=1)
            else:
                eq = (lhs == colq[a][None, :]).all(axis=1)
                sub = ~(lhs & ~colr[bs]).any(axis=1)
                ok = eq | sub
            if not ok.all():
                return False
        return True

    if which == 4:
        if lattice is None:
            lattice = enumerate_ideals(ring, caps)
        stack = np.stack([j.mask for j in lattice.ideals]).astype(np.int64)
        # subq[i, x]: I_i inside (Q : x); likewise subr for sqrt Q
        subq = stack @ (~colq).astype(np.int64).T == 0
        subr = stack @ (~colr).astype(np.int64).T == 0
        pow_in = inq[pw]
        for a in range(ring.size):
            ab = mul[a]
            bs = np.nonzero(~pow_in[ab])[0]
            if bs.size == 0:
                continue
            viol = subq[:, ab[bs]] & ~subq[:, a][:, None] & ~subr[:, bs]
            if viol.any():
                return False
        return True

    # (5) and (6): bracket powers of the colon ideals
    bidx, bmasks = _bracket_rows(Q, n)
    for a in range(ring.size):
        ab = mul[a]
        bs = np.nonzero(~inq[ab])[0]
        if bs.size == 0:
            continue
        bp = bmasks[bidx[ab[bs]]]
        rhs_a = colr[a][None, :]
        rhs_b = colq[pw[bs]]
        if which == 5:
            ok = ~(bp & ~(rhs_a | rhs_b)).any(axis=1)
        else:
            ok = ~(bp & ~rhs_a).any(axis=1) | ~(bp & ~rhs_b).any(axis=1)
        if not ok.all():
            return False
    return True


def uniformly_primary_condition(
    Q: Ideal,
    which: int,
    n: int,
    lattice: IdealLattice | None = None,
    caps: Caps = DEFAULT_CAPS,
) -> bool:
    """Conditions (2)-(4) of the uniformly-primary characterisation at n."""
    _require_proper(Q, "uniformly_primary_condition")
    if which not in (2, 3, 4):
        raise ValueError("uniformly_primary_condition takes which in 2..4")
    if n < 1:
        raise ValueError("uniformly_primary_condition needs n >= 1")
    ring = Q.ring
    check_cap(caps, "enumeration", ring.size, f"uniformly-primary condition {which} over {ring.key}")

    if which == 2:
        if lattice is None:
            lattice = enumerate_ideals(ring, caps)
        stack = np.stack([j.mask for j in lattice.ideals])
        istack = stack.astype(np.int64)
        colq = _colon_rows(Q)
        # colon of Q by each lattice ideal, then the pairwise product test
        colq_ideal = istack @ (~colq).astype(np.int64).T == 0
        prod_in_q = istack @ (~colq_ideal).astype(np.int64).T == 0
        in_q = (stack & ~Q.mask[None, :]).sum(axis=1) == 0
        brackets = np.array(
            [Q.contains_ideal(bracket_power(j, n)) for j in lattice.ideals]
        )
        viol = prod_in_q & ~in_q[:, None] & ~brackets[None, :]
        return not viol.any()

    if which == 3:
        bidx, bmasks = _bracket_rows(Q, n)
        outside = np.nonzero(~Q.mask)[0]
        contained = ~(bmasks & ~Q.mask[None, :]).any(axis=1)
        return bool(contained[bidx[outside]].all())

    pw = ring.pow_vec(n)
    colq = _colon_rows(Q)
    fixed = (colq == Q.mask[None, :]).all(axis=1)
    return bool((Q.mask[pw] | fixed).all())


def _colon_by_set(rows: np.ndarray, codes: np.ndarray) -> np.ndarray:
    """Mask of {x : x*c in the colon base for every code c}, from colon rows."""
    return rows[codes].all(axis=0)


def special_condition(
    Q: Ideal,
    which: int,
    lattice: IdealLattice | None = None,
    caps: Caps = DEFAULT_CAPS,
) -> bool:
    """Conditions (2)-(9) of the special characterisation, checked verbatim."""
    _require_proper(Q, "special_condition")
    if which not in range(2, 10):
        raise ValueError("special_condition takes which in 2..9")
    ring = Q.ring
    check_cap(caps, "cubic", ring.size, f"special condition {which} over {ring.key}")
    mul = ring.mul
    inq = Q.mask
    colq = _colon_rows(Q)
    rad = radical_of(Q)
    colr = _colon_rows(rad)

    if which == 2:
        for a in range(ring.size):
            ab = mul[a]
            bs = np.nonzero(~inq[ab])[0]
            if bs.size == 0:
                continue
            lhs = colq[ab[bs]]
            eq = (lhs == colq[a][None, :]).all(axis=1)
            sub = ~(lhs & ~colr[bs]).any(axis=1)
            if not (eq | sub).all():
                return False
        return True

    if lattice is None:
        lattice = enumerate_ideals(ring, caps)
    if which >= 6:
        check_cap(
            caps,
            "lattice_triples",
            len(lattice),
            f"special condition {which} over {ring.key}",
        )
    stack = np.stack([j.mask for j in lattice.ideals])
    istack = stack.astype(np.int64)
    subq = istack @ (~colq).astype(np.int64).T == 0  # subq[i, x]: I_i inside (Q : x)
    subr = istack @ (~colr).astype(np.int64).T == 0
    elems = [j.elems for j in lattice.ideals]

    if which == 3:
        for a in range(ring.size):
            ab = mul[a]
            bs = np.nonzero(~inq[ab])[0]
            if bs.size == 0:
                continue
            viol = subq[:, ab[bs]] & ~subq[:, a][:, None] & ~subr[:, bs]
            if viol.any():
                return False
        return True

    if which in (4, 5):
        for i, ei in enumerate(elems):
            rad_colon_i = _colon_by_set(colr, ei)  # (sqrt Q : I)
            for a in range(ring.size):
                if subq[i, a]:
                    continue  # aI inside Q
                colon_ai = _colon_by_set(colq, mul[a, ei])  # (Q : aI)
                if which == 4:
                    if (colon_ai & ~(colq[a] | rad_colon_i)).any():
                        return False
                else:
                    if (colon_ai == colq[a]).all():
                        continue
                    if (colon_ai & ~rad_colon_i).any():
                        return False
        return True

    n_l = len(lattice)
    # prod_in_q[i, j]: I_i I_j inside Q; prod_in_r the same against the radical
    colq_ideal = np.stack([_colon_by_set(colq, e) for e in elems])
    colr_ideal = np.stack([_colon_by_set(colr, e) for e in elems])
    prod_in_q = istack @ (~colq_ideal).astype(np.int64).T == 0
    prod_in_r = istack @ (~colr_ideal).astype(np.int64).T == 0

    if which == 6:
        for i in range(n_l):
            for j in range(n_l):
                if prod_in_r[i, j]:
                    continue
                # a with aIJ inside Q are exactly the members of (Q : IJ)
                colon_ij = _colon_by_set(colq_ideal[i][ring.mul], elems[j])
                if (colon_ij & ~(subq[i] | subq[j])).any():
                    return False
        return True

    if which in (7, 8):
        for i in range(n_l):
            rows_i = colq_ideal[i][ring.mul]  # rows_i[x] = mask of ((Q : I) : x)
            for j in range(n_l):
                if prod_in_r[i, j]:
                    continue
                colon_ij = _colon_by_set(rows_i, elems[j])  # (Q : IJ)
                if which == 7:
                    if (colon_ij & ~(colq_ideal[i] | colq_ideal[j])).any():
                        return False
                else:
                    if not (
                        (colon_ij == colq_ideal[i]).all()
                        or (colon_ij == colq_ideal[j]).all()
                    ):
                        return False
        return True

    # (9): ideal triples, IJK inside Q read off as K inside (Q : IJ)
    for i in range(n_l):
        rows_i = colq_ideal[i][ring.mul]
        for j in range(n_l):
            if prod_in_r[i, j]:
                continue
            colon_ij = _colon_by_set(rows_i, elems[j])
            trip = (stack & ~colon_ij[None, :]).sum(axis=1) == 0
            viol = trip & ~prod_in_q[i] & ~prod_in_q[j]
            if viol.any():
                return False
    return True


# ---------------------------------------------------------------------------
# the aggregate report


@dataclass(frozen=True)
class ClassificationReport:
    """Every flag, order and witness for one proper ideal of a finite ring."""

    ring_key: str
    gens: tuple
    flags: dict
    ord: int | None
    two_ord: int | None
    two_exp: int | None
    rad_nilpotency: int
    witnesses: dict
    radical_shape: str
    minimal_primes: tuple

    def to_json_dict(self) -> dict:
        out: dict = {"ring": self.ring_key, "ideal": {"gens": [int(g) for g in self.gens]}}
        for name in FLAG_ORDER:
            out[name] = bool(self.flags[name])
        out["ord"] = self.ord
        out["twoOrd"] = self.two_ord
        out["twoExp"] = self.two_exp
        out["radicalNilpotency"] = self.rad_nilpotency
        out["radicalShape"] = self.radical_shape
        out["minimalPrimes"] = [[int(g) for g in p] for p in self.minimal_primes]
        out["witnesses"] = {
            name: _witness_to_json(self.witnesses[name])
            for name in FLAG_ORDER
            if name in self.witnesses
        }
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "ClassificationReport":
        return cls(
            ring_key=data["ring"],
            gens=tuple(data["ideal"]["gens"]),
            flags={name: bool(data[name]) for name in FLAG_ORDER},
            ord=data["ord"],
            two_ord=data["twoOrd"],
            two_exp=data["twoExp"],
            rad_nilpotency=data["radicalNilpotency"],
            witnesses={k: _witness_from_json(v) for k, v in data["witnesses"].items()},
            radical_shape=data["radicalShape"],
            minimal_primes=tuple(tuple(p) for p in data["minimalPrimes"]),
        )


def _witness_to_json(witness):
    return [
        _witness_to_json(w) if isinstance(w, tuple) else int(w) for w in witness
    ]


def _witness_from_json(value):
    return tuple(
        _witness_from_json(v) if isinstance(v, list) else int(v) for v in value
    )


def classify(
    Q: Ideal,
    lattice: IdealLattice | None = None,
    caps: Caps = DEFAULT_CAPS,
) -> ClassificationReport:
    """Fill every flag, order, witness and the radical shape for a proper ideal."""
    _require_proper(Q, "classify")
    ring = Q.ring
    if lattice is None:
        lattice = enumerate_ideals(ring, caps)
    witnesses: dict = {}

    prime, wit = is_prime(Q)
    if not prime:
        witnesses["prime"] = wit

    maximal = is_maximal(Q, lattice)
    if not maximal:
        idx = lattice.index_of(Q)
        for k in range(len(lattice)):
            bigger = lattice.ideals[k]
            if k != idx and lattice.leq[idx, k] and bigger.is_proper:
                witnesses["maximal"] = tuple(bigger.gens)
                break

    primary, order, wit = _primary_scan(Q, caps)
    if not primary:
        witnesses["primary"] = wit
        witnesses["uniformlyPrimary"] = wit

    two_abs, wit = is_two_absorbing(Q, caps)
    if not two_abs:
        witnesses["twoAbsorbing"] = wit

    scan = _triple_scan(Q, caps)
    two_ap = scan.two_ord is not None
    if not two_ap:
        witnesses["twoAbsorbingPrimary"] = scan.violation
        witnesses["uniformlyTwoAbsorbingPrimary"] = scan.violation
        witnesses["noetherStrongly2AP"] = scan.violation
    special = scan.two_ord == 1
    if not special:
        witnesses["special"] = scan.not_order_one

    rad_nil = radical_nilpotency(Q)

    irreducible, pair = is_irreducible(Q, lattice)
    if not irreducible:
        witnesses["irreducible"] = (tuple(pair[0].gens), tuple(pair[1].gens))

    rad = radical_of(Q)
    rad_prime, wit = is_prime(rad)
    if rad_prime:
        divided, wit = is_divided_prime(rad)
    else:
        divided = False
    if not divided:
        witnesses["dividedPrimeRadical"] = wit

    mins = minimal_primes_over(Q, lattice)
    shape = {1: "Prime", 2: "TwoPrimes"}.get(len(mins), "Other")

    flags = {
        "proper": True,
        "prime": prime,
        "maximal": maximal,
        "primary": primary,
        "uniformlyPrimary": primary,
        "twoAbsorbing": two_abs,
        "twoAbsorbingPrimary": two_ap,
        "uniformlyTwoAbsorbingPrimary": two_ap,
        "noetherStrongly2AP": two_ap,
        "special": special,
        "irreducible": irreducible,
        "dividedPrimeRadical": divided,
    }
    return ClassificationReport(
        ring_key=ring.key,
        gens=Q.gens,
        flags=flags,
        ord=order,
        two_ord=scan.two_ord,
        two_exp=rad_nil if two_ap else None,
        rad_nilpotency=rad_nil,
        witnesses=witnesses,
        radical_shape=shape,
        minimal_primes=tuple(tuple(p.gens) for p in mins),
    )
