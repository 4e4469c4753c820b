"""Finite commutative ring construction and ring homomorphisms.

Every ring element is a stable integer code in ``range(size)``.  Codes are
mixed-radix over the construction tree:

* ``Modular(n)``: the code of a residue is the residue itself.
* ``Product(f0, ..., fk)``: little-endian mixed radix, factor 0 least
  significant (``code = c0 + size0*(c1 + size1*(...))``).
* ``PolyQuotient(p, f)``: the polynomial ``a0 + a1*x + ...`` has code
  ``a0 + a1*p + a2*p^2 + ...`` (degree below ``deg f``).
* ``Idealization(base, rank)``: the pair ``(r, (m1, ..., mk))`` has code
  ``r + |base|*(m1 + |base|*(m2 + ...))``.
* ``Table``: the code is the row/column index of the supplied tables.

A :class:`Ring` handle carries dense numpy ``add``/``mul`` tables so that
ideal and classification scans are vectorised gathers.  Handles are immutable
apart from internal caches.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import AxiomError, RingFormatError, RingMismatchError

__all__ = [
    "Modular",
    "Product",
    "PolyQuotient",
    "Idealization",
    "Table",
    "Ring",
    "RingHom",
    "MultiplicativeSet",
    "LocalizationResult",
    "build_ring",
    "parse_ring",
    "load_table_json",
    "quotient_mod",
    "projection",
    "crt_iso",
    "diagonal_embed",
    "apply_hom",
    "multiplicative_set",
    "localize_modular",
    "is_prime_int",
]


# ---------------------------------------------------------------------------
# descriptors


@dataclass(frozen=True)
class Modular:
    """The ring of integers modulo ``n`` (n >= 2)."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise RingFormatError(f"zn modulus must be >= 2, got {self.n}")

    def __str__(self) -> str:
        return f"zn:{self.n}"


@dataclass(frozen=True)
class Product:
    """A nonempty finite product of component rings."""

    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise RingFormatError("prod needs at least one factor")

    def __str__(self) -> str:
        return "prod:(" + ",".join(str(f) for f in self.factors) + ")"


@dataclass(frozen=True)
class PolyQuotient:
    """``F_p[x] / (f)`` for a monic ``f`` given low-degree-first (trailing 1)."""

    p: int
    coeffs: tuple  # c0, c1, ..., c_{d-1}, 1

    def __post_init__(self):
        if not is_prime_int(self.p):
            raise RingFormatError(f"polyq characteristic {self.p} is not prime")
        if len(self.coeffs) < 2 or self.coeffs[-1] != 1:
            raise RingFormatError("polyq modulus must be monic of degree >= 1")
        if any(not (0 <= c < self.p) for c in self.coeffs[:-1]):
            raise RingFormatError("polyq coefficients must be reduced mod p")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        return f"polyq:{self.p}:" + ",".join(str(c) for c in self.coeffs)


@dataclass(frozen=True)
class Idealization:
    """The idealization R(+)M with M = R^rank and M*M = 0."""

    base: object
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise RingFormatError(f"idz rank must be >= 1, got {self.rank}")

    def __str__(self) -> str:
        return f"idz:({self.base})^{self.rank}"


@dataclass(frozen=True)
class Table:
    """Explicit addition/multiplication tables (validated on construction)."""

    size: int
    add: tuple  # row-major, length size*size
    mul: tuple
    zero: int
    one: int
    path: str = ""  # display only; identity comes from the table contents

    def digest(self) -> str:
        h = hashlib.sha256()
        h.update(repr((self.size, self.add, self.mul, self.zero, self.one)).encode())
        return h.hexdigest()[:12]

    def __str__(self) -> str:
        return f"table:@{self.path}" if self.path else f"table:#{self.digest()}"


# ---------------------------------------------------------------------------
# the ring handle


@dataclass(eq=False)
class Ring:
    """Concrete finite ring: element codes plus dense operation tables."""

    desc: object
    size: int
    add: np.ndarray  # (size, size) intp
    mul: np.ndarray  # (size, size) intp
    neg: np.ndarray  # (size,) intp
    zero: int
    one: int
    key: str
    _caches: dict = field(default_factory=dict, repr=False)

    def elements(self) -> range:
        return range(self.size)

    def add2(self, a: int, b: int) -> int:
        return int(self.add[a, b])

    def mul2(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def pow_vec(self, n: int) -> np.ndarray:
        """Vector of x**n over all codes x (n >= 1), cached."""
        if n < 1:
            raise ValueError("exponent must be >= 1")
        cache = self._caches.setdefault("pow", {1: np.arange(self.size)})
        k = max(cache)
        while n not in cache:
            cache[k + 1] = self.mul[cache[k], np.arange(self.size)]
            k += 1
        return cache[n]

    def decode(self, code: int):
        """Structured value of a code (ints and nested tuples)."""
        return _decode(self.desc, code)

    def format_element(self, code: int) -> str:
        return _format_value(self.desc, self.decode(code))

    def __repr__(self) -> str:
        return f"Ring({self.key}, size={self.size})"


def _decode(desc, code: int):
    if isinstance(desc, Modular):
        return code
    if isinstance(desc, Product):
        sizes = [ring_size(f) for f in desc.factors]
        out = []
        for f, s in zip(desc.factors, sizes):
            out.append(_decode(f, code % s))
            code //= s
        return tuple(out)
    if isinstance(desc, PolyQuotient):
        d = desc.degree
        return tuple((code // desc.p**i) % desc.p for i in range(d))
    if isinstance(desc, Idealization):
        b = ring_size(desc.base)
        parts = []
        for _ in range(desc.rank + 1):
            parts.append(code % b)
            code //= b
        return (_decode(desc.base, parts[0]), tuple(parts[1:]))
    return code


def _format_value(desc, value) -> str:
    if isinstance(desc, Product):
        return "(" + ",".join(_format_value(f, v) for f, v in zip(desc.factors, value)) + ")"
    if isinstance(desc, PolyQuotient):
        terms = []
        for i, c in enumerate(value):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if c == 1 else f"{c}{x}")
        return "+".join(terms) if terms else "0"
    if isinstance(desc, Idealization):
        r, ms = value
        return f"({_format_value(desc.base, r)}|{','.join(str(m) for m in ms)})"
    return str(value)


def ring_size(desc) -> int:
    if isinstance(desc, Modular):
        return desc.n
    if isinstance(desc, Product):
        return math.prod(ring_size(f) for f in desc.factors)
    if isinstance(desc, PolyQuotient):
        return desc.p**desc.degree
    if isinstance(desc, Idealization):
        return ring_size(desc.base) ** (desc.rank + 1)
    if isinstance(desc, Table):
        return desc.size
    raise RingFormatError(f"unknown descriptor {desc!r}")


# ---------------------------------------------------------------------------
# construction

_RING_CACHE: dict = {}


def build_ring(desc) -> Ring:
    """Build (or fetch from cache) the Ring handle for a descriptor."""
    key = str(desc)
    hit = _RING_CACHE.get(key)
    if hit is not None:
        return hit
    ring = _construct(desc, key)
    _RING_CACHE[key] = ring
    return ring


def _construct(desc, key: str) -> Ring:
    if isinstance(desc, Modular):
        n = desc.n
        i = np.arange(n)
        add = (i[:, None] + i[None, :]) % n
        mul = (i[:, None] * i[None, :]) % n
        neg = (-i) % n
        return Ring(desc, n, add.astype(np.intp), mul.astype(np.intp),
                    neg.astype(np.intp), 0, 1, key)

    if isinstance(desc, Product):
        subs = [build_ring(f) for f in desc.factors]
        size = math.prod(r.size for r in subs)
        codes = np.arange(size)
        idx, strides = [], []
        stride = 1
        for r in subs:
            strides.append(stride)
            idx.append((codes // stride) % r.size)
            stride *= r.size
        add = np.zeros((size, size), dtype=np.intp)
        mul = np.zeros((size, size), dtype=np.intp)
        neg = np.zeros(size, dtype=np.intp)
        one = 0
        for r, ix, st in zip(subs, idx, strides):
            add += r.add[ix[:, None], ix[None, :]] * st
            mul += r.mul[ix[:, None], ix[None, :]] * st
            neg += r.neg[ix] * st
            one += r.one * st
        return Ring(desc, size, add, mul, neg, 0, one, key)

    if isinstance(desc, PolyQuotient):
        return _construct_polyq(desc, key)

    if isinstance(desc, Idealization):
        base = build_ring(desc.base)
        b, k = base.size, desc.rank
        size = b ** (k + 1)
        codes = np.arange(size)
        comp = [(codes // b**j) % b for j in range(k + 1)]
        add = np.zeros((size, size), dtype=np.intp)
        neg = np.zeros(size, dtype=np.intp)
        for j in range(k + 1):
            add += base.add[comp[j][:, None], comp[j][None, :]] * (b**j)
            neg += base.neg[comp[j]] * (b**j)
        # (r,m)(s,n) = (rs, rn + sm); the module part squares to zero
        r0, s0 = comp[0][:, None], comp[0][None, :]
        mul = base.mul[r0, s0].astype(np.intp).copy()
        for j in range(1, k + 1):
            rn = base.mul[r0, comp[j][None, :]]
            sm = base.mul[s0, comp[j][:, None]]
            mul += base.add[rn, sm] * (b**j)
        return Ring(desc, size, add, mul, neg, 0, base.one, key)

    if isinstance(desc, Table):
        return _construct_table(desc, key)

    raise RingFormatError(f"unknown descriptor {desc!r}")


def _construct_polyq(desc: PolyQuotient, key: str) -> Ring:
    p, d = desc.p, desc.degree
    size = p**d
    codes = np.arange(size)
    digits = np.stack([(codes // p**i) % p for i in range(d)], axis=1)  # (size, d)

    add_digits = (digits[:, None, :] + digits[None, :, :]) % p
    weights = p ** np.arange(d)
    add = (add_digits * weights).sum(axis=2).astype(np.intp)
    neg = (((-digits) % p) * weights).sum(axis=1).astype(np.intp)

    # x^m mod f for m = 0 .. 2d-2, as digit rows
    xpow = np.zeros((2 * d - 1, d), dtype=np.int64)
    cur = np.zeros(d, dtype=np.int64)
    cur[0] = 1
    for m in range(2 * d - 1):
        xpow[m] = cur
        top = cur[d - 1]
        cur = np.roll(cur, 1)
        cur[0] = 0
        cur = (cur - top * np.array(desc.coeffs[:-1], dtype=np.int64)) % p
    mul = np.zeros((size, size), dtype=np.intp)
    for i in range(size):
        conv = np.zeros((size, 2 * d - 1), dtype=np.int64)
        for u in range(d):
            if digits[i, u]:
                conv[:, u:u + d] += digits[i, u] * digits
        red = (conv @ xpow) % p
        mul[i] = (red * weights).sum(axis=1)
    return Ring(desc, size, add, mul, neg.astype(np.intp), 0, 1, key)


def _construct_table(desc: Table, key: str) -> Ring:
    s = desc.size
    if s < 2:
        raise AxiomError("table ring needs size >= 2 (1 != 0)")
    if len(desc.add) != s * s or len(desc.mul) != s * s:
        raise AxiomError("table lengths must equal size*size (row-major)")
    add = np.array(desc.add, dtype=np.intp).reshape(s, s)
    mul = np.array(desc.mul, dtype=np.intp).reshape(s, s)
    if add.min() < 0 or add.max() >= s or mul.min() < 0 or mul.max() >= s:
        raise AxiomError("table entries must be codes in range(size)")
    z, o = desc.zero, desc.one
    if not (0 <= z < s and 0 <= o < s) or z == o:
        raise AxiomError("zero/one must be distinct codes in range(size)")
    i = np.arange(s)
    _check(add[z] == i, "0 + a = a")
    _check(mul[o] == i, "1 * a = a")
    _check(mul[z] == z, "0 * a = 0")
    _check(add == add.T, "a + b = b + a")
    _check(mul == mul.T, "a * b = b * a")
    neg = np.full(s, -1, dtype=np.intp)
    rows, cols = np.nonzero(add == z)
    neg[rows] = cols
    if (neg < 0).any():
        a = int(np.nonzero(neg < 0)[0][0])
        raise AxiomError(f"additive inverse missing for code {a}")
    for a in range(s):
        if not (add[add[a]][:, :] == add[a][add]).all():
            b, c = map(int, np.argwhere(add[add[a]] != add[a][add])[0])
            raise AxiomError(f"(a+b)+c != a+(b+c) at (a,b,c)=({a},{b},{c})")
        if not (mul[mul[a]][:, :] == mul[a][mul]).all():
            b, c = map(int, np.argwhere(mul[mul[a]] != mul[a][mul])[0])
            raise AxiomError(f"(a*b)*c != a*(b*c) at (a,b,c)=({a},{b},{c})")
        if not (mul[a][add] == add[mul[a][:, None], mul[a][None, :]]).all():
            b, c = map(int, np.argwhere(mul[a][add] != add[mul[a][:, None], mul[a][None, :]])[0])
            raise AxiomError(f"a*(b+c) != a*b+a*c at (a,b,c)=({a},{b},{c})")
    return Ring(desc, s, add, mul, neg, z, o, key)


def _check(cond, law: str):
    if not bool(np.all(cond)):
        where = int(np.argmin(np.asarray(cond).ravel()))
        raise AxiomError(f"table violates '{law}' (first failure at flat index {where})")


def load_table_json(path: str) -> Table:
    """Read a table-ring JSON file: size, add, mul (row-major), zero, one."""
    with open(path) as fh:
        data = json.load(fh)
    try:
        return Table(
            size=int(data["size"]),
            add=tuple(int(v) for v in data["add"]),
            mul=tuple(int(v) for v in data["mul"]),
            zero=int(data["zero"]),
            one=int(data["one"]),
            path=path,
        )
    except KeyError as exc:
        raise RingFormatError(f"table json missing field {exc}") from exc


# ---------------------------------------------------------------------------
# text grammar:  zn:12 | prod:(d,d,...) | polyq:p:c0,c1,...,1 | idz:(d)^k | table:@path


def parse_ring(text: str):
    """Parse a single ring descriptor from its text form."""
    desc, pos = _parse_desc(text, 0)
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise RingFormatError(f"trailing input at column {pos} in {text!r}")
    return desc


def _skip_ws(s: str, i: int) -> int:
    while i < len(s) and s[i].isspace():
        i += 1
    return i


def _parse_int(s: str, i: int) -> tuple[int, int]:
    j = i
    while j < len(s) and s[j].isdigit():
        j += 1
    if j == i:
        raise RingFormatError(f"expected integer at column {i} in {s!r}")
    return int(s[i:j]), j


def _parse_desc(s: str, i: int):
    i = _skip_ws(s, i)
    if s.startswith("zn:", i):
        n, j = _parse_int(s, i + 3)
        return Modular(n), j
    if s.startswith("prod:(", i):
        j = i + 6
        factors = []
        while True:
            d, j = _parse_desc(s, j)
            factors.append(d)
            j = _skip_ws(s, j)
            if j < len(s) and s[j] == ",":
                j += 1
                continue
            if j < len(s) and s[j] == ")":
                return Product(tuple(factors)), j + 1
            raise RingFormatError(f"expected ',' or ')' at column {j} in {s!r}")
    if s.startswith("polyq:", i):
        p, j = _parse_int(s, i + 6)
        if j >= len(s) or s[j] != ":":
            raise RingFormatError(f"expected ':' at column {j} in {s!r}")
        coeffs, j = _parse_int_list(s, j + 1)
        return PolyQuotient(p, tuple(coeffs)), j
    if s.startswith("idz:(", i):
        d, j = _parse_desc(s, i + 5)
        if not s.startswith(")^", j):
            raise RingFormatError(f"expected ')^' at column {j} in {s!r}")
        k, j = _parse_int(s, j + 2)
        return Idealization(d, k), j
    if s.startswith("table:@", i):
        j = i + 7
        k = j
        while k < len(s) and s[k] not in ",)" and not s[k].isspace():
            k += 1
        if k == j:
            raise RingFormatError(f"expected path at column {j} in {s!r}")
        return load_table_json(s[j:k]), k
    raise RingFormatError(f"unknown ring form at column {i} in {s!r}")


def _parse_int_list(s: str, i: int) -> tuple[list[int], int]:
    """Comma-separated ints; stops before a comma not followed by an int."""
    vals = []
    v, i = _parse_int(s, i)
    vals.append(v)
    while True:
        j = _skip_ws(s, i)
        if j < len(s) and s[j] == ",":
            k = _skip_ws(s, j + 1)
            if k < len(s) and s[k].isdigit():
                v, i = _parse_int(s, k)
                vals.append(v)
                continue
        return vals, i


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class RingHom:
    """Unital ring homomorphism given by a per-code mapping table."""

    kind: str
    source: Ring
    target: Ring
    table: np.ndarray  # (source.size,) intp of target codes
    surjective: bool

    def __str__(self) -> str:
        return f"{self.kind}:{self.source.key}->{self.target.key}"


def apply_hom(h: RingHom, x: int) -> int:
    if not (0 <= x < h.source.size):
        raise RingMismatchError(f"code {x} outside source ring {h.source.key}")
    return int(h.table[x])


def quotient_mod(n: int, d: int) -> RingHom:
    """Reduction Z_n -> Z_d for d | n (d >= 2)."""
    if d < 2 or n % d != 0:
        raise RingFormatError(f"quotient_mod needs d | n with d >= 2, got {n}->{d}")
    src, tgt = build_ring(Modular(n)), build_ring(Modular(d))
    return RingHom("quotient_mod", src, tgt, np.arange(n) % d, True)


def projection(prod_ring: Ring, k: int) -> RingHom:
    """Projection of a product ring onto factor k."""
    desc = prod_ring.desc
    if not isinstance(desc, Product):
        raise RingFormatError("projection needs a product ring")
    if not (0 <= k < len(desc.factors)):
        raise RingFormatError(f"factor index {k} out of range")
    stride = 1
    for f in desc.factors[:k]:
        stride *= ring_size(f)
    tgt = build_ring(desc.factors[k])
    table = (np.arange(prod_ring.size) // stride) % tgt.size
    return RingHom("projection", prod_ring, tgt, table.astype(np.intp), True)


def crt_iso(a: int, b: int) -> RingHom:
    """CRT isomorphism Z_ab -> Z_a x Z_b for coprime a, b >= 2."""
    if math.gcd(a, b) != 1 or a < 2 or b < 2:
        raise RingFormatError(f"crt_iso needs coprime a,b >= 2, got ({a},{b})")
    src = build_ring(Modular(a * b))
    tgt = build_ring(Product((Modular(a), Modular(b))))
    x = np.arange(a * b)
    return RingHom("crt_iso", src, tgt, (x % a + a * (x % b)).astype(np.intp), True)


def diagonal_embed(n: int) -> RingHom:
    """Diagonal embedding Z_n -> Z_n x Z_n (injective, not surjective)."""
    src = build_ring(Modular(n))
    tgt = build_ring(Product((Modular(n), Modular(n))))
    x = np.arange(n)
    return RingHom("diagonal_embed", src, tgt, (x + n * x).astype(np.intp), False)


# ---------------------------------------------------------------------------
# multiplicative sets and modular localization


@dataclass(frozen=True)
class MultiplicativeSet:
    """Cyclic multiplicative set {1, g, g^2, ...} inside a ring."""

    ring: Ring
    generator: int
    elements: frozenset

    def __contains__(self, code: int) -> bool:
        return code in self.elements


def multiplicative_set(ring: Ring, g: int) -> MultiplicativeSet:
    if not (0 <= g < ring.size):
        raise RingMismatchError(f"generator code {g} outside {ring.key}")
    seen = {ring.one}
    cur = ring.one
    while True:
        cur = ring.mul2(cur, g)
        if cur in seen:
            break
        seen.add(cur)
    return MultiplicativeSet(ring, g, frozenset(seen))


@dataclass(frozen=True)
class LocalizationResult:
    """Outcome of localizing Z_n at the powers of s."""

    modulus: int  # n' = product of p^v_p(n) over primes p | n with p !| s
    zero_ring: bool
    ring: Ring | None
    hom: RingHom | None  # reduction Z_n -> Z_n' when n' >= 2


def localize_modular(n: int, s: int) -> LocalizationResult:
    """Localization of Z_n at the multiplicative set generated by s.

    The localization is Z_{n'} where n' keeps exactly the prime powers of n
    whose prime does not divide s.  n' = 1 is the explicit zero-ring outcome.
    """
    if n < 2:
        raise RingFormatError(f"localize_modular needs n >= 2, got {n}")
    s %= n
    nprime = 1
    for p, a in factorize_int(n).items():
        if s % p != 0:
            nprime *= p**a
    if nprime == 1:
        return LocalizationResult(1, True, None, None)
    return LocalizationResult(nprime, False, build_ring(Modular(nprime)),
                              quotient_mod(n, nprime))


# ---------------------------------------------------------------------------
# small integer helpers (trial division is plenty for moduli <= 10^12)


def is_prime_int(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def factorize_int(n: int) -> dict[int, int]:
    """Prime factorization {p: exponent} of n >= 1 by trial division."""
    if n < 1:
        raise ValueError(f"factorize_int needs n >= 1, got {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return dict(sorted(out.items()))
