"""Ideal calculus for finite commutative rings.

Ideals are stored as full element sets: a sorted code array plus a boolean
membership mask over the ring, so containment and colon tests are vectorised
mask operations.  All operations producing ideals return new immutable
:class:`Ideal` values.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import Caps, DEFAULT_CAPS, check_cap
from .errors import RingFormatError, RingMismatchError
from .rings import Modular, Ring, RingHom, build_ring

__all__ = [
    "Ideal",
    "IdealLattice",
    "generate",
    "ideal_from_mask",
    "zero_ideal",
    "unit_ideal",
    "sum_ideals",
    "product_ideals",
    "intersect_ideals",
    "power_ideal",
    "bracket_power",
    "colon_ideal",
    "colon_elem",
    "radical_ideal",
    "enumerate_ideals",
    "prime_witness",
    "is_prime_ideal",
    "is_irreducible",
    "minimal_primes_over",
    "z_set",
    "hom_image_ideal",
    "hom_preimage_ideal",
    "parse_ideal",
    "format_ideal",
]


@dataclass(frozen=True, eq=False)
class Ideal:
    """An ideal of a finite ring, materialised as its full element set."""

    ring: Ring
    gens: tuple
    elems: np.ndarray = field(repr=False)  # sorted codes
    mask: np.ndarray = field(repr=False)  # bool over range(size)

    @property
    def size(self) -> int:
        return int(self.elems.size)

    @property
    def is_proper(self) -> bool:
        return self.size < self.ring.size

    @property
    def is_zero(self) -> bool:
        return self.size == 1

    def __contains__(self, code: int) -> bool:
        return bool(self.mask[code])

    def contains_ideal(self, other: "Ideal") -> bool:
        _same_ring(self, other)
        return not bool((other.mask & ~self.mask).any())

    def key(self) -> bytes:
        return self.mask.tobytes()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring.key == other.ring.key and np.array_equal(self.mask, other.mask)

    def __hash__(self) -> int:
        return hash((self.ring.key, self.key()))

    def __repr__(self) -> str:
        return f"Ideal({self.ring.key}, {format_ideal(self)}, size={self.size})"

    def to_json_dict(self) -> dict:
        return {
            "ring": self.ring.key,
            "gens": [int(g) for g in self.gens],
            "size": self.size,
            "elements": [int(e) for e in self.elems],
        }


def _same_ring(a: Ideal, b: Ideal) -> None:
    if a.ring.key != b.ring.key:
        raise RingMismatchError(f"ideals live in {a.ring.key} vs {b.ring.key}")


def ideal_from_mask(ring: Ring, mask: np.ndarray, gens: tuple = ()) -> Ideal:
    elems = np.nonzero(mask)[0].astype(np.intp)
    return Ideal(ring, tuple(int(g) for g in gens), elems, mask.copy())


def zero_ideal(ring: Ring) -> Ideal:
    mask = np.zeros(ring.size, dtype=bool)
    mask[ring.zero] = True
    return ideal_from_mask(ring, mask, ())


def unit_ideal(ring: Ring) -> Ideal:
    return generate(ring, (ring.one,))


def _additive_closure(ring: Ring, seed_mask: np.ndarray) -> np.ndarray:
    """Smallest additively closed superset of a 0-containing, negation-closed set."""
    mask = seed_mask.copy()
    mask[ring.zero] = True
    seeds = np.nonzero(mask)[0]
    while True:
        cur = np.nonzero(mask)[0]
        new = ring.add[np.ix_(cur, seeds)]
        before = int(mask.sum())
        mask[new.ravel()] = True
        if int(mask.sum()) == before:
            return mask


def generate(ring: Ring, gens) -> Ideal:
    """The ideal generated by the given element codes."""
    gens = tuple(int(g) for g in gens)
    for g in gens:
        if not (0 <= g < ring.size):
            raise RingMismatchError(f"generator code {g} outside {ring.key}")
    seed = np.zeros(ring.size, dtype=bool)
    seed[ring.zero] = True
    for g in gens:
        seed[ring.mul[:, g]] = True  # R*g, already negation-closed
    mask = _additive_closure(ring, seed)
    return ideal_from_mask(ring, mask, gens)


def canonical_gens(ring: Ring, mask: np.ndarray) -> tuple:
    """Greedy lex-minimal generator list for the ideal with this mask."""
    target = int(mask.sum())
    if target == 1:
        return ()
    gens: list[int] = []
    cur = np.zeros(ring.size, dtype=bool)
    cur[ring.zero] = True
    for c in np.nonzero(mask)[0]:
        if cur[c]:
            continue
        gens.append(int(c))
        cur = generate(ring, gens).mask
        if int(cur.sum()) == target:
            return tuple(gens)
    raise AssertionError("mask is not additively/multiplicatively closed")


def sum_ideals(a: Ideal, b: Ideal) -> Ideal:
    _same_ring(a, b)
    codes = a.ring.add[np.ix_(a.elems, b.elems)]
    mask = np.zeros(a.ring.size, dtype=bool)
    mask[codes.ravel()] = True
    return ideal_from_mask(a.ring, mask, a.gens + b.gens)


def product_ideals(a: Ideal, b: Ideal) -> Ideal:
    _same_ring(a, b)
    ring = a.ring
    seed = np.zeros(ring.size, dtype=bool)
    seed[ring.mul[np.ix_(a.elems, b.elems)].ravel()] = True
    mask = _additive_closure(ring, seed)
    gens = tuple(
        sorted({ring.mul2(g, h) for g in (a.gens or tuple(map(int, a.elems)))
                for h in (b.gens or tuple(map(int, b.elems)))})
    )
    return ideal_from_mask(ring, mask, gens)


def intersect_ideals(a: Ideal, b: Ideal) -> Ideal:
    _same_ring(a, b)
    mask = a.mask & b.mask
    return ideal_from_mask(a.ring, mask, canonical_gens(a.ring, mask))


def power_ideal(a: Ideal, n: int) -> Ideal:
    if n < 1:
        raise ValueError("ideal power needs n >= 1")
    out = a
    for _ in range(n - 1):
        out = product_ideals(out, a)
    return out


def bracket_power(a: Ideal, n: int) -> Ideal:
    """Ideal generated by the n-th powers of all elements of a (n >= 1)."""
    if n < 1:
        raise ValueError("bracket power needs n >= 1")
    if n == 1:
        return a
    powers = np.unique(a.ring.pow_vec(n)[a.elems])
    return generate(a.ring, tuple(int(p) for p in powers))


def colon_ideal(a: Ideal, b: Ideal) -> Ideal:
    """(a : b) = {r : r*b subset of a}."""
    _same_ring(a, b)
    ring = a.ring
    mask = a.mask[ring.mul[:, b.elems]].all(axis=1)
    return ideal_from_mask(ring, mask)


def colon_elem(a: Ideal, x: int) -> Ideal:
    """(a : x) = {r : r*x in a}."""
    ring = a.ring
    mask = a.mask[ring.mul[:, x]]
    return ideal_from_mask(ring, mask)


def radical_mask(ring: Ring, mask: np.ndarray) -> np.ndarray:
    """Radical membership, per element by iterating powers until a repeat."""
    idx = np.arange(ring.size)
    p = idx.copy()
    out = mask.copy()
    for _ in range(ring.size - 1):
        if out.all():
            break
        p = ring.mul[p, idx]
        out |= mask[p]
    return out


def radical_ideal(a: Ideal) -> Ideal:
    mask = radical_mask(a.ring, a.mask)
    return ideal_from_mask(a.ring, mask, canonical_gens(a.ring, mask))


# ---------------------------------------------------------------------------
# lattice enumeration


@dataclass(frozen=True)
class IdealLattice:
    """All ideals of a ring, sorted by (size, element tuple); complete and duplicate-free."""

    ring: Ring
    ideals: tuple
    leq: np.ndarray = field(repr=False)  # leq[i, j] iff ideals[i] subset of ideals[j]

    def __len__(self) -> int:
        return len(self.ideals)

    def index_of(self, ideal: Ideal) -> int:
        key = ideal.key()
        for i, j in enumerate(self.ideals):
            if j.key() == key:
                return i
        raise KeyError("ideal not in lattice")

    def proper(self) -> tuple:
        return tuple(i for i in self.ideals if i.is_proper)


def enumerate_ideals(ring: Ring, caps: Caps = DEFAULT_CAPS) -> IdealLattice:
    """Complete ideal lattice; fast paths for Modular and Product rings."""
    check_cap(caps, "enumeration", ring.size, f"enumerate_ideals({ring.key})")
    cached = ring._caches.get("lattice")
    if cached is not None:
        return cached
    masks = _ideal_masks(ring, caps)
    ideals = []
    for mask in masks:
        gens = canonical_gens(ring, mask)
        ideals.append(ideal_from_mask(ring, mask, gens))
    ideals.sort(key=lambda i: (i.size, tuple(map(int, i.elems))))
    stack = np.stack([i.mask for i in ideals])
    # leq[i, j]: no element of i escapes j
    escapes = stack.astype(np.int64) @ (~stack).astype(np.int64).T
    lattice = IdealLattice(ring, tuple(ideals), escapes == 0)
    ring._caches["lattice"] = lattice
    return lattice


def _ideal_masks(ring: Ring, caps: Caps) -> list[np.ndarray]:
    desc = ring.desc
    if isinstance(desc, Modular):
        out = []
        for d in range(1, desc.n + 1):
            if desc.n % d == 0:
                mask = np.zeros(desc.n, dtype=bool)
                mask[::d] = True
                out.append(mask)
        return out
    from .rings import Product, ring_size

    if isinstance(desc, Product):
        subs = [build_ring(f) for f in desc.factors]
        sub_lattices = [_ideal_masks(r, caps) for r in subs]
        codes = np.arange(ring.size)
        idx = []
        stride = 1
        for r in subs:
            idx.append((codes // stride) % r.size)
            stride *= r.size
        out = [np.ones(ring.size, dtype=bool)]
        for k, lat in enumerate(sub_lattices):
            new = []
            for mask in out:
                for sub_mask in lat:
                    new.append(mask & sub_mask[idx[k]])
            out = new
        return out
    # general path: principal ideals closed under pairwise sum
    seen: dict[bytes, np.ndarray] = {}
    frontier: list[np.ndarray] = []
    for x in range(ring.size):
        mask = generate(ring, (x,)).mask
        key = mask.tobytes()
        if key not in seen:
            seen[key] = mask
            frontier.append(mask)
    while frontier:
        nxt = []
        for m in frontier:
            m_elems = np.nonzero(m)[0]
            for other in list(seen.values()):
                combo = np.zeros(ring.size, dtype=bool)
                combo[ring.add[np.ix_(m_elems, np.nonzero(other)[0])].ravel()] = True
                key = combo.tobytes()
                if key not in seen:
                    seen[key] = combo
                    nxt.append(combo)
        frontier = nxt
    return list(seen.values())


# ---------------------------------------------------------------------------
# predicates tied to the lattice


def prime_witness(ring: Ring, mask: np.ndarray):
    """None if the (proper) ideal is prime, else the lex-least (a, b) violation."""
    viol = mask[ring.mul] & ~mask[:, None] & ~mask[None, :]
    if not viol.any():
        return None
    flat = int(np.argmax(viol))
    return (flat // ring.size, flat % ring.size)


def is_prime_ideal(ideal: Ideal) -> bool:
    return ideal.is_proper and prime_witness(ideal.ring, ideal.mask) is None


def is_irreducible(ideal: Ideal, lattice: IdealLattice):
    """(flag, witness) where witness is a pair of strictly larger ideals meeting in it."""
    if not ideal.is_proper:
        raise ValueError("irreducibility is about proper ideals")
    idx = lattice.index_of(ideal)
    above = [k for k in range(len(lattice)) if lattice.leq[idx, k] and k != idx]
    for i, ji in enumerate(above):
        for jk in above[i + 1:]:
            meet = lattice.ideals[ji].mask & lattice.ideals[jk].mask
            if np.array_equal(meet, ideal.mask):
                return False, (lattice.ideals[ji], lattice.ideals[jk])
    return True, None


def minimal_primes_over(ideal: Ideal, lattice: IdealLattice) -> tuple:
    """Inclusion-minimal primes containing the ideal, in lattice order."""
    idx = lattice.index_of(ideal)
    primes = [
        k
        for k in range(len(lattice))
        if lattice.leq[idx, k]
        and lattice.ideals[k].is_proper
        and prime_witness(lattice.ring, lattice.ideals[k].mask) is None
    ]
    minimal = [
        k for k in primes
        if not any(j != k and lattice.leq[j, k] for j in primes)
    ]
    return tuple(lattice.ideals[k] for k in minimal)


def z_set(ideal: Ideal) -> list[int]:
    """Z_I(R) = {r : exists s outside I with r*s in I}, as sorted codes."""
    ring = ideal.ring
    outside = np.nonzero(~ideal.mask)[0]
    if outside.size == 0:
        raise ValueError("z_set needs a proper ideal")
    hits = ideal.mask[ring.mul[:, outside]].any(axis=1)
    return np.nonzero(hits)[0].tolist()


# ---------------------------------------------------------------------------
# homomorphism companions


def hom_image_ideal(h: RingHom, ideal: Ideal) -> Ideal:
    """Image of an ideal under a surjective hom (then it is again an ideal)."""
    if ideal.ring.key != h.source.key:
        raise RingMismatchError("ideal not in the hom's source ring")
    if not h.surjective:
        raise RingMismatchError(
            f"image under non-surjective {h.kind} need not be an ideal; "
            "use hom_preimage_ideal or generate() over the image"
        )
    mask = np.zeros(h.target.size, dtype=bool)
    mask[h.table[ideal.elems]] = True
    gens = canonical_gens(h.target, mask)
    return ideal_from_mask(h.target, mask, gens)


def hom_preimage_ideal(h: RingHom, ideal: Ideal) -> Ideal:
    """Preimage of an ideal; always an ideal of the source ring."""
    if ideal.ring.key != h.target.key:
        raise RingMismatchError("ideal not in the hom's target ring")
    mask = ideal.mask[h.table]
    gens = canonical_gens(h.source, mask)
    return ideal_from_mask(h.source, mask, gens)


# ---------------------------------------------------------------------------
# text forms:  [g1,g2,...] generator codes, or (d) principal shorthand on zn


def parse_ideal(ring: Ring, text: str) -> Ideal:
    t = text.strip()
    if t.startswith("[") and t.endswith("]"):
        inner = t[1:-1].strip()
        gens = tuple(int(p) for p in inner.split(",") if p.strip()) if inner else ()
        return generate(ring, gens)
    if t.startswith("(") and t.endswith(")"):
        d = int(t[1:-1])
        return generate(ring, (d % ring.size,))
    raise RingFormatError(f"bad ideal form {text!r}; expected [g,...] or (d)")


def format_ideal(ideal: Ideal) -> str:
    if isinstance(ideal.ring.desc, Modular):
        if ideal.is_zero:
            return "(0)"
        nz = ideal.elems[ideal.elems != 0]
        return f"({int(nz.min())})"
    return "[" + ",".join(str(int(g)) for g in ideal.gens) + "]"
