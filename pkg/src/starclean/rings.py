"""Finite unital rings assembled from a compositional recipe.

Every ring exposes its elements as integer ids ``0..size-1`` in a fixed
mixed-radix enumeration over the construction tree: matrix entries are read
row-major, group-ring coefficients in group element order, product components
left to right, and the first component is the most significant digit.  Id 0
is always the additive zero.  Arithmetic is backed by memoized Cayley tables
for rings up to ``DEFAULT_TABLE_CAP`` elements and computed structurally
above that.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import MalformedSpec, NotAnIdeal, NotIdempotent, SpecTooLarge

DEFAULT_SIZE_CAP = 4096
DEFAULT_TABLE_CAP = 4096
SIZE_CAP_ENV = "STARCLEAN_CAP"

# chunk budget (entries) for blocked table construction
_CHUNK_ENTRIES = 1 << 22


def current_size_cap(override: int | None = None) -> int:
    """Resolve the ring-size cap: explicit argument beats env beats default."""
    if override is not None:
        if override < 1:
            raise MalformedSpec(f"size cap must be positive, got {override}")
        return int(override)
    raw = os.environ.get(SIZE_CAP_ENV, "").strip()
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise MalformedSpec(f"invalid {SIZE_CAP_ENV}={raw!r}") from exc
    return DEFAULT_SIZE_CAP


# ---------------------------------------------------------------------------
# finite groups (for group rings)


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class GroupProduct:
    left: "GroupSpec"
    right: "GroupSpec"


GroupSpec = Union[Cyclic, GroupProduct]


def group_spec_string(spec: GroupSpec) -> str:
    if isinstance(spec, Cyclic):
        return f"C{spec.n}"
    return f"{group_spec_string(spec.left)}*{group_spec_string(spec.right)}"


def _validate_group_spec(spec: GroupSpec) -> int:
    if isinstance(spec, Cyclic):
        if spec.n < 1:
            raise MalformedSpec(f"cyclic group order must be >= 1, got {spec.n}")
        return spec.n
    if isinstance(spec, GroupProduct):
        return _validate_group_spec(spec.left) * _validate_group_spec(spec.right)
    raise MalformedSpec(f"not a group spec: {spec!r}")


def _group_tables(spec: GroupSpec):
    if isinstance(spec, Cyclic):
        n = spec.n
        i = np.arange(n)
        mul = ((i[:, None] + i[None, :]) % n).astype(np.int32)
        inv = ((-i) % n).astype(np.int32)
        names = ["1"] + [("g" if e == 1 else f"g^{e}") for e in range(1, n)]
        return mul, inv, names
    lm, li, ln = _group_tables(spec.left)
    rm, ri, rn = _group_tables(spec.right)
    nl, nr = len(ln), len(rn)
    mul = (lm[:, None, :, None].astype(np.int64) * nr + rm[None, :, None, :]).reshape(
        nl * nr, nl * nr
    )
    inv = (li[:, None].astype(np.int64) * nr + ri[None, :]).reshape(nl * nr)
    names = [f"({a},{b})" for a in ln for b in rn]
    return mul.astype(np.int32), inv.astype(np.int32), names


class FiniteGroup:
    """Finite group on ids 0..order-1; id 0 is the identity."""

    def __init__(self, spec: GroupSpec):
        _validate_group_spec(spec)
        self.spec = spec
        self.mul_table, self.inv_table, self.names = _group_tables(spec)
        self.order = len(self.names)

    def is_two_group(self) -> bool:
        n = self.order
        return n & (n - 1) == 0


# ---------------------------------------------------------------------------
# ring specs


@dataclass(frozen=True)
class Zmod:
    n: int


@dataclass(frozen=True)
class MatrixSpec:
    k: int
    base: "RingSpec"


@dataclass(frozen=True)
class ProductSpec:
    left: "RingSpec"
    right: "RingSpec"


@dataclass(frozen=True)
class GroupRingSpec:
    base: "RingSpec"
    group: GroupSpec


@dataclass(frozen=True)
class TruncatedPolySpec:
    base: "RingSpec"
    bound: int


@dataclass(frozen=True)
class QuotientSpec:
    base: "RingSpec"
    generators: tuple[int, ...]


RingSpec = Union[Zmod, MatrixSpec, ProductSpec, GroupRingSpec, TruncatedPolySpec, QuotientSpec]


def spec_string(spec: RingSpec) -> str:
    """Canonical textual form of a spec, matching the parser grammar."""
    if isinstance(spec, Zmod):
        return f"Z{spec.n}"
    if isinstance(spec, MatrixSpec):
        return f"M{spec.k}({spec_string(spec.base)})"
    if isinstance(spec, ProductSpec):
        return f"{spec_string(spec.left)}x{spec_string(spec.right)}"
    if isinstance(spec, GroupRingSpec):
        return f"GR({spec_string(spec.base)},{group_spec_string(spec.group)})"
    if isinstance(spec, TruncatedPolySpec):
        return f"TP({spec_string(spec.base)},{spec.bound})"
    if isinstance(spec, QuotientSpec):
        gens = ",".join(str(g) for g in spec.generators)
        return f"Q({spec_string(spec.base)},[{gens}])"
    raise MalformedSpec(f"not a ring spec: {spec!r}")


def spec_size_bound(spec: RingSpec) -> int:
    """Element count of the spec; for quotients, the pre-quotient bound."""
    if isinstance(spec, Zmod):
        return spec.n
    if isinstance(spec, MatrixSpec):
        return spec_size_bound(spec.base) ** (spec.k * spec.k)
    if isinstance(spec, ProductSpec):
        return spec_size_bound(spec.left) * spec_size_bound(spec.right)
    if isinstance(spec, GroupRingSpec):
        return spec_size_bound(spec.base) ** _validate_group_spec(spec.group)
    if isinstance(spec, TruncatedPolySpec):
        return spec_size_bound(spec.base) ** spec.bound
    if isinstance(spec, QuotientSpec):
        return spec_size_bound(spec.base)
    raise MalformedSpec(f"not a ring spec: {spec!r}")


def validate_spec(spec: RingSpec, cap: int) -> None:
    if isinstance(spec, Zmod):
        if spec.n < 2:
            raise MalformedSpec(f"Zmod modulus must be >= 2, got {spec.n}")
    elif isinstance(spec, MatrixSpec):
        if spec.k < 1:
            raise MalformedSpec(f"matrix size must be >= 1, got {spec.k}")
        validate_spec(spec.base, cap)
    elif isinstance(spec, ProductSpec):
        validate_spec(spec.left, cap)
        validate_spec(spec.right, cap)
    elif isinstance(spec, GroupRingSpec):
        validate_spec(spec.base, cap)
        _validate_group_spec(spec.group)
    elif isinstance(spec, TruncatedPolySpec):
        if spec.bound < 1:
            raise MalformedSpec(f"truncation bound must be >= 1, got {spec.bound}")
        validate_spec(spec.base, cap)
    elif isinstance(spec, QuotientSpec):
        validate_spec(spec.base, cap)
        base_size = spec_size_bound(spec.base)
        for g in spec.generators:
            if not 0 <= g < base_size:
                raise MalformedSpec(f"quotient generator {g} out of range 0..{base_size - 1}")
    else:
        raise MalformedSpec(f"not a ring spec: {spec!r}")
    size = spec_size_bound(spec)
    if size > cap:
        raise SpecTooLarge(size, cap)


# ---------------------------------------------------------------------------
# rings


class FiniteRing:
    """A finite unital ring on element ids 0..size-1.

    Subclasses provide structural scalar arithmetic and a vectorized table
    builder; everything else (units, idempotents, nilpotents, center, the
    Jacobson radical, right-ideal masks) is derived here and cached.
    """

    spec: RingSpec | None = None
    size: int
    one: int
    zero: int = 0
    table_cap: int = DEFAULT_TABLE_CAP

    # -- structural scalar arithmetic -------------------------------------

    def _scalar_add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def _scalar_mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def _scalar_neg(self, a: int) -> int:
        raise NotImplementedError

    def _tables(self):
        """Return (add, mul, neg) tables; subclasses vectorize this."""
        raise NotImplementedError

    # -- public arithmetic --------------------------------------------------

    @property
    def has_tables(self) -> bool:
        return self.size <= self.table_cap

    @cached_property
    def _table_cache(self):
        if not self.has_tables:
            # refuse to materialize quadratic tables past the cap; callers on
            # the structural path never get here
            raise SpecTooLarge(self.size, self.table_cap)
        add, mul, neg = self._tables()
        return (
            np.ascontiguousarray(add, dtype=np.int32),
            np.ascontiguousarray(mul, dtype=np.int32),
            np.ascontiguousarray(neg, dtype=np.int32),
        )

    @property
    def add_table(self) -> np.ndarray:
        return self._table_cache[0]

    @property
    def mul_table(self) -> np.ndarray:
        return self._table_cache[1]

    @property
    def neg_table(self) -> np.ndarray:
        return self._table_cache[2]

    def add(self, a: int, b: int) -> int:
        if self.has_tables:
            return int(self.add_table[a, b])
        return self._scalar_add(a, b)

    def mul(self, a: int, b: int) -> int:
        if self.has_tables:
            return int(self.mul_table[a, b])
        return self._scalar_mul(a, b)

    def neg(self, a: int) -> int:
        if self.has_tables:
            return int(self.neg_table[a])
        return self._scalar_neg(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def elements(self) -> range:
        return range(self.size)

    @cached_property
    def one_minus_table(self) -> np.ndarray:
        """Vector mapping x to 1 - x."""
        return self.add_table[self.one][self.neg_table]

    def one_minus(self, a: int) -> int:
        return self.sub(self.one, a)

    # -- rendering ----------------------------------------------------------

    def render(self, a: int) -> str:
        raise NotImplementedError

    def from_value(self, value):
        """Element id for a structural value (int, tuple, nested lists)."""
        raise NotImplementedError

    def describe(self) -> str:
        return spec_string(self.spec) if self.spec is not None else type(self).__name__

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.describe()} size={self.size}>"

    # -- power sequences ------------------------------------------------------

    def distinct_powers(self, a: int) -> tuple[list[int], int]:
        """All distinct powers a^1, a^2, ... and the value of the next repeat."""
        out: list[int] = []
        seen: set[int] = set()
        x = a
        while x not in seen:
            seen.add(x)
            out.append(x)
            x = self.mul(x, a)
        return out, x

    def is_nilpotent(self, a: int) -> bool:
        """Cycle-detecting walk along the powers of a; nilpotent iff 0 shows up."""
        powers, _ = self.distinct_powers(a)
        return self.zero in powers

    # -- derived subsets ------------------------------------------------------

    @cached_property
    def _unit_data(self) -> tuple[tuple[int, ...], np.ndarray]:
        inv = np.full(self.size, -1, dtype=np.int64)
        units: list[int] = []
        if self.has_tables:
            eq = self.mul_table == self.one
            for a in range(self.size):
                for b in np.flatnonzero(eq[a]):
                    if eq[b, a]:
                        units.append(a)
                        inv[a] = b
                        break
        else:
            for a in range(self.size):
                for b in range(self.size):
                    if self._scalar_mul(a, b) == self.one and self._scalar_mul(b, a) == self.one:
                        units.append(a)
                        inv[a] = b
                        break
        return tuple(units), inv

    def units(self) -> tuple[int, ...]:
        return self._unit_data[0]

    @cached_property
    def units_mask(self) -> np.ndarray:
        mask = np.zeros(self.size, dtype=bool)
        mask[list(self._unit_data[0])] = True
        return mask

    def is_unit(self, a: int) -> bool:
        return bool(self.units_mask[a])

    def inverse(self, a: int) -> int:
        b = int(self._unit_data[1][a])
        if b < 0:
            raise ValueError(f"{self.render(a)} is not a unit")
        return b

    @cached_property
    def idempotent_mask(self) -> np.ndarray:
        if self.has_tables:
            return self.mul_table.diagonal() == np.arange(self.size)
        mask = np.zeros(self.size, dtype=bool)
        for a in range(self.size):
            mask[a] = self._scalar_mul(a, a) == a
        return mask

    def idempotents(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.flatnonzero(self.idempotent_mask))

    @cached_property
    def nilpotent_mask(self) -> np.ndarray:
        mask = np.zeros(self.size, dtype=bool)
        for a in range(self.size):
            mask[a] = self.is_nilpotent(a)
        return mask

    def nilpotents(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.flatnonzero(self.nilpotent_mask))

    @cached_property
    def center_mask(self) -> np.ndarray:
        if self.has_tables:
            return (self.mul_table == self.mul_table.T).all(axis=1)
        mask = np.ones(self.size, dtype=bool)
        for a in range(self.size):
            mask[a] = all(
                self._scalar_mul(a, b) == self._scalar_mul(b, a) for b in range(self.size)
            )
        return mask

    def center(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.flatnonzero(self.center_mask))

    @cached_property
    def is_commutative(self) -> bool:
        return bool(self.center_mask.all())

    def commutant(self, a: int) -> np.ndarray:
        """Element ids commuting with a."""
        if self.has_tables:
            return np.flatnonzero(self.mul_table[a] == self.mul_table[:, a])
        return np.array(
            [b for b in range(self.size) if self._scalar_mul(a, b) == self._scalar_mul(b, a)],
            dtype=np.int64,
        )

    def jacobson_radical(self) -> "Ideal":
        return self._jacobson

    @cached_property
    def _jacobson(self) -> "Ideal":
        # quasi-regularity: a is in the radical iff 1 - r*a is a unit for all r.
        # One-sided suffices here: left invertible implies invertible in a
        # finite ring (direct finiteness).
        if self.has_tables:
            one_minus_ra = self.one_minus_table[self.mul_table]
            mask = self.units_mask[one_minus_ra].all(axis=0)
        else:
            mask = np.zeros(self.size, dtype=bool)
            for a in range(self.size):
                mask[a] = all(
                    self.is_unit(self.one_minus(self._scalar_mul(r, a)))
                    for r in range(self.size)
                )
        ideal = Ideal(self, mask, check=False)
        ideal.validate()
        return ideal

    @cached_property
    def right_ideal_masks(self) -> np.ndarray:
        """Boolean matrix with row a marking the principal right ideal aR."""
        masks = np.zeros((self.size, self.size), dtype=bool)
        if self.has_tables:
            masks[np.arange(self.size)[:, None], self.mul_table] = True
        else:
            for a in range(self.size):
                for r in range(self.size):
                    masks[a, self._scalar_mul(a, r)] = True
        return masks

    def right_ideal(self, a: int) -> np.ndarray:
        return self.right_ideal_masks[a]

    def left_ideal(self, a: int) -> np.ndarray:
        mask = np.zeros(self.size, dtype=bool)
        if self.has_tables:
            mask[self.mul_table[:, a]] = True
        else:
            for r in range(self.size):
                mask[self._scalar_mul(r, a)] = True
        return mask

    @cached_property
    def comaximal_pairs(self) -> np.ndarray:
        """Boolean matrix: entry (a, b) iff aR + bR = R."""
        ar = self.right_ideal_masks
        flipped = np.zeros_like(ar)
        flipped[:, self.one_minus_table] = ar  # row b marks {1 - v : v in bR}
        counts = ar.astype(np.int32) @ flipped.T.astype(np.int32)
        return counts > 0

    def directly_finite_witness(self) -> tuple[int, int] | None:
        """Pair (a, b) with ab = 1 but ba != 1, or None."""
        if self.has_tables:
            pos = np.argwhere(self.mul_table == self.one)
            bad = self.mul_table[pos[:, 1], pos[:, 0]] != self.one
            if bad.any():
                a, b = pos[np.flatnonzero(bad)[0]]
                return int(a), int(b)
            return None
        for a in range(self.size):
            for b in range(self.size):
                if self._scalar_mul(a, b) == self.one and self._scalar_mul(b, a) != self.one:
                    return a, b
        return None


# -- concrete constructions --------------------------------------------------


class ZmodRing(FiniteRing):
    def __init__(self, spec: Zmod):
        self.spec = spec
        self.size = spec.n
        self.one = 1 % spec.n

    def _scalar_add(self, a, b):
        return (a + b) % self.size

    def _scalar_mul(self, a, b):
        return (a * b) % self.size

    def _scalar_neg(self, a):
        return (-a) % self.size

    def _tables(self):
        i = np.arange(self.size)
        add = (i[:, None] + i[None, :]) % self.size
        mul = (i[:, None] * i[None, :]) % self.size
        neg = (-i) % self.size
        return add, mul, neg

    def render(self, a):
        return str(a)

    def from_value(self, value):
        return int(value) % self.size


class ProductRing(FiniteRing):
    def __init__(self, spec: ProductSpec, left: FiniteRing, right: FiniteRing):
        self.spec = spec
        self.left = left
        self.right = right
        self.size = left.size * right.size
        self.one = left.one * right.size + right.one

    def split(self, a: int) -> tuple[int, int]:
        return divmod(a, self.right.size)

    def join(self, l: int, r: int) -> int:
        return l * self.right.size + r

    def _scalar_add(self, a, b):
        al, ar = self.split(a)
        bl, br = self.split(b)
        return self.join(self.left.add(al, bl), self.right.add(ar, br))

    def _scalar_mul(self, a, b):
        al, ar = self.split(a)
        bl, br = self.split(b)
        return self.join(self.left.mul(al, bl), self.right.mul(ar, br))

    def _scalar_neg(self, a):
        al, ar = self.split(a)
        return self.join(self.left.neg(al), self.right.neg(ar))

    def _tables(self):
        nl, nr = self.left.size, self.right.size
        la, lm, ln = self.left.add_table, self.left.mul_table, self.left.neg_table
        ra, rm, rn = self.right.add_table, self.right.mul_table, self.right.neg_table
        n = self.size
        add = (la[:, None, :, None].astype(np.int64) * nr + ra[None, :, None, :]).reshape(n, n)
        mul = (lm[:, None, :, None].astype(np.int64) * nr + rm[None, :, None, :]).reshape(n, n)
        neg = (ln[:, None].astype(np.int64) * nr + rn[None, :]).reshape(n)
        return add, mul, neg

    def render(self, a):
        l, r = self.split(a)
        return f"({self.left.render(l)},{self.right.render(r)})"

    def from_value(self, value):
        l, r = value
        return self.join(self.left.from_value(l), self.right.from_value(r))


class _DigitRing(FiniteRing):
    """Shared machinery for rings whose elements are digit vectors over a base."""

    base: FiniteRing
    width: int

    @cached_property
    def _weights(self) -> np.ndarray:
        m = self.base.size
        return np.array([m ** (self.width - 1 - l) for l in range(self.width)], dtype=np.int64)

    @cached_property
    def digits(self) -> np.ndarray:
        idx = np.arange(self.size, dtype=np.int64)
        m = self.base.size
        cols = [((idx // int(w)) % m).astype(np.int32) for w in self._weights]
        return np.stack(cols, axis=1)

    def digits_of(self, a: int) -> list[int]:
        m = self.base.size
        out = [0] * self.width
        for l in range(self.width - 1, -1, -1):
            a, d = divmod(a, m)
            out[l] = d
        return out

    def encode(self, digs: Sequence[int]) -> int:
        m = self.base.size
        acc = 0
        for d in digs:
            acc = acc * m + int(d)
        return acc

    def _scalar_add(self, a, b):
        da, db = self.digits_of(a), self.digits_of(b)
        return self.encode([self.base.add(x, y) for x, y in zip(da, db)])

    def _scalar_neg(self, a):
        return self.encode([self.base.neg(x) for x in self.digits_of(a)])

    def _digitwise_table(self, op_table: np.ndarray) -> np.ndarray:
        d = self.digits
        n = self.size
        out = np.empty((n, n), dtype=np.int32)
        chunk = max(1, _CHUNK_ENTRIES // max(1, n * self.width))
        for s in range(0, n, chunk):
            block = op_table[d[s : s + chunk, None, :], d[None, :, :]]
            out[s : s + chunk] = block.astype(np.int64) @ self._weights
        return out

    def _neg_table_impl(self) -> np.ndarray:
        return (self.base.neg_table[self.digits].astype(np.int64) @ self._weights).astype(np.int32)

    def _mul_digit_block(self, rows: np.ndarray) -> np.ndarray:
        """Digit vectors of rows[i] * b for all b; shape (len(rows), n, width)."""
        raise NotImplementedError

    def _tables(self):
        add = self._digitwise_table(self.base.add_table)
        neg = self._neg_table_impl()
        n = self.size
        mul = np.empty((n, n), dtype=np.int32)
        chunk = max(1, _CHUNK_ENTRIES // max(1, n * self.width))
        rows = np.arange(n)
        for s in range(0, n, chunk):
            block = self._mul_digit_block(rows[s : s + chunk])
            mul[s : s + chunk] = block.astype(np.int64) @ self._weights
        return add, mul, neg


class MatrixRing(_DigitRing):
    def __init__(self, spec: MatrixSpec, base: FiniteRing):
        self.spec = spec
        self.base = base
        self.k = spec.k
        self.width = spec.k * spec.k
        self.size = base.size**self.width
        one_digits = [
            base.one if i == j else base.zero for i in range(spec.k) for j in range(spec.k)
        ]
        self.one = self.encode(one_digits)

    def _scalar_mul(self, a, b):
        da, db = self.digits_of(a), self.digits_of(b)
        k, B = self.k, self.base
        out = []
        for i in range(k):
            for j in range(k):
                s = B.zero
                for l in range(k):
                    s = B.add(s, B.mul(da[i * k + l], db[l * k + j]))
                out.append(s)
        return self.encode(out)

    def _mul_digit_block(self, rows):
        k = self.k
        d = self.digits
        bm, ba = self.base.mul_table, self.base.add_table
        dc = d[rows]
        block = np.empty((len(rows), self.size, self.width), dtype=np.int32)
        for i in range(k):
            for j in range(k):
                acc = None
                for l in range(k):
                    term = bm[dc[:, i * k + l][:, None], d[:, l * k + j][None, :]]
                    acc = term if acc is None else ba[acc, term]
                block[:, :, i * k + j] = acc
        return block

    def render(self, a):
        digs = self.digits_of(a)
        k = self.k
        rows = []
        for i in range(k):
            rows.append("[" + ",".join(self.base.render(digs[i * k + j]) for j in range(k)) + "]")
        return "[" + ",".join(rows) + "]"

    def from_value(self, value):
        k = self.k
        digs = [self.base.from_value(value[i][j]) for i in range(k) for j in range(k)]
        return self.encode(digs)


class GroupRing(_DigitRing):
    def __init__(self, spec: GroupRingSpec, base: FiniteRing):
        self.spec = spec
        self.base = base
        self.group = FiniteGroup(spec.group)
        self.width = self.group.order
        self.size = base.size**self.width
        one_digits = [base.one] + [base.zero] * (self.width - 1)
        self.one = self.encode(one_digits)

    def _scalar_mul(self, a, b):
        da, db = self.digits_of(a), self.digits_of(b)
        B, G = self.base, self.group
        out = [B.zero] * self.width
        for g in range(self.width):
            if da[g] == B.zero:
                continue
            for h in range(self.width):
                t = int(G.mul_table[g, h])
                out[t] = B.add(out[t], B.mul(da[g], db[h]))
        return self.encode(out)

    def _mul_digit_block(self, rows):
        d = self.digits
        bm, ba = self.base.mul_table, self.base.add_table
        dc = d[rows]
        block = np.zeros((len(rows), self.size, self.width), dtype=np.int32)
        for g in range(self.width):
            col_g = dc[:, g][:, None]
            for h in range(self.width):
                t = int(self.group.mul_table[g, h])
                term = bm[col_g, d[:, h][None, :]]
                block[:, :, t] = ba[block[:, :, t], term]
        return block

    def render(self, a):
        digs = self.digits_of(a)
        terms = []
        for g, c in enumerate(digs):
            if c == self.base.zero:
                continue
            name = self.group.names[g]
            if g == 0:
                terms.append(self.base.render(c))
            else:
                terms.append(f"{self.base.render(c)}*{name}")
        return " + ".join(terms) if terms else "0"

    def from_value(self, value):
        digs = [self.base.from_value(c) for c in value]
        if len(digs) != self.width:
            raise MalformedSpec(f"expected {self.width} coefficients, got {len(digs)}")
        return self.encode(digs)


class TruncatedPolyRing(_DigitRing):
    """Polynomials over the base modulo x^bound, coefficients low degree first."""

    def __init__(self, spec: TruncatedPolySpec, base: FiniteRing):
        self.spec = spec
        self.base = base
        self.width = spec.bound
        self.size = base.size**self.width
        one_digits = [base.one] + [base.zero] * (self.width - 1)
        self.one = self.encode(one_digits)

    def _scalar_mul(self, a, b):
        da, db = self.digits_of(a), self.digits_of(b)
        B = self.base
        out = [B.zero] * self.width
        for i in range(self.width):
            if da[i] == B.zero:
                continue
            for j in range(self.width - i):
                out[i + j] = B.add(out[i + j], B.mul(da[i], db[j]))
        return self.encode(out)

    def _mul_digit_block(self, rows):
        d = self.digits
        bm, ba = self.base.mul_table, self.base.add_table
        dc = d[rows]
        block = np.zeros((len(rows), self.size, self.width), dtype=np.int32)
        for i in range(self.width):
            col_i = dc[:, i][:, None]
            for j in range(self.width - i):
                term = bm[col_i, d[:, j][None, :]]
                block[:, :, i + j] = ba[block[:, :, i + j], term]
        return block

    def render(self, a):
        digs = self.digits_of(a)
        terms = []
        for i, c in enumerate(digs):
            if c == self.base.zero:
                continue
            if i == 0:
                terms.append(self.base.render(c))
            elif i == 1:
                terms.append(f"{self.base.render(c)}*x")
            else:
                terms.append(f"{self.base.render(c)}*x^{i}")
        return " + ".join(terms) if terms else "0"

    def from_value(self, value):
        digs = [self.base.from_value(c) for c in value]
        if len(digs) != self.width:
            raise MalformedSpec(f"expected {self.width} coefficients, got {len(digs)}")
        return self.encode(digs)


class QuotientRing(FiniteRing):
    """Ring of cosets of a two-sided ideal, enumerated by minimal representatives."""

    def __init__(self, base: FiniteRing, ideal: "Ideal", spec: QuotientSpec | None = None):
        if ideal.owner is not base:
            raise NotAnIdeal("ideal belongs to a different ring")
        self.spec = spec
        self.base = base
        self.ideal = ideal
        members = ideal.elements_array
        if base.has_tables:
            rep_of = base.add_table[:, members].min(axis=1)
        else:
            rep_of = np.array(
                [min(base.add(x, i) for i in members.tolist()) for x in range(base.size)],
                dtype=np.int64,
            )
        reps = np.unique(rep_of)
        self.reps = reps.astype(np.int64)
        self.surjection = np.searchsorted(reps, rep_of).astype(np.int64)
        self.size = len(reps)
        if self.size * ideal.size != base.size:
            raise NotAnIdeal("coset partition is not uniform; subset is not an ideal")
        self.one = int(self.surjection[base.one])

    def _scalar_add(self, a, b):
        return int(self.surjection[self.base.add(int(self.reps[a]), int(self.reps[b]))])

    def _scalar_mul(self, a, b):
        return int(self.surjection[self.base.mul(int(self.reps[a]), int(self.reps[b]))])

    def _scalar_neg(self, a):
        return int(self.surjection[self.base.neg(int(self.reps[a]))])

    def _tables(self):
        if self.base.has_tables:
            ix = np.ix_(self.reps, self.reps)
            add = self.surjection[self.base.add_table[ix]]
            mul = self.surjection[self.base.mul_table[ix]]
            neg = self.surjection[self.base.neg_table[self.reps]]
        else:
            n = self.size
            add = np.empty((n, n), dtype=np.int64)
            mul = np.empty((n, n), dtype=np.int64)
            neg = np.empty(n, dtype=np.int64)
            for a in range(n):
                neg[a] = self._scalar_neg(a)
                for b in range(n):
                    add[a, b] = self._scalar_add(a, b)
                    mul[a, b] = self._scalar_mul(a, b)
        return add, mul, neg

    def render(self, a):
        return f"{self.base.render(int(self.reps[a]))}+I"

    def from_value(self, value):
        return int(self.surjection[self.base.from_value(value)])

    def describe(self) -> str:
        if self.spec is not None:
            return spec_string(self.spec)
        gens = ",".join(str(int(g)) for g in self.ideal.elements_array[:4])
        return f"Q({self.base.describe()},[{gens}...])"


class CornerRing(FiniteRing):
    """The ring e*R*e for an idempotent e, with unity e."""

    def __init__(self, parent: FiniteRing, e: int):
        if parent.mul(e, e) != e:
            raise NotIdempotent(f"{parent.render(e)} is not idempotent")
        self.spec = None
        self.parent = parent
        self.e = e
        if parent.has_tables:
            elems = np.unique(parent.mul_table[parent.mul_table[e, :], e])
        else:
            elems = np.array(
                sorted({parent.mul(parent.mul(e, x), e) for x in parent.elements()}),
                dtype=np.int64,
            )
        self.parent_elements = elems.astype(np.int64)
        self.size = len(elems)
        pos = np.full(parent.size, -1, dtype=np.int64)
        pos[self.parent_elements] = np.arange(self.size)
        self._pos = pos
        self.one = int(pos[e])

    def embed(self, a: int) -> int:
        return int(self.parent_elements[a])

    def position(self, parent_id: int) -> int:
        p = int(self._pos[parent_id])
        if p < 0:
            raise ValueError(f"{self.parent.render(parent_id)} is not in the corner")
        return p

    def _scalar_add(self, a, b):
        return self.position(self.parent.add(self.embed(a), self.embed(b)))

    def _scalar_mul(self, a, b):
        return self.position(self.parent.mul(self.embed(a), self.embed(b)))

    def _scalar_neg(self, a):
        return self.position(self.parent.neg(self.embed(a)))

    def _tables(self):
        ix = np.ix_(self.parent_elements, self.parent_elements)
        add = self._pos[self.parent.add_table[ix]]
        mul = self._pos[self.parent.mul_table[ix]]
        neg = self._pos[self.parent.neg_table[self.parent_elements]]
        return add, mul, neg

    def render(self, a):
        return self.parent.render(self.embed(a))

    def from_value(self, value):
        return self.position(self.parent.from_value(value))

    def describe(self) -> str:
        return f"corner({self.parent.describe()},{self.parent.render(self.e)})"


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """A validated two-sided ideal, stored as a boolean mask over the owner."""

    def __init__(self, owner: FiniteRing, mask: np.ndarray, check: bool = True):
        self.owner = owner
        self.mask = np.asarray(mask, dtype=bool)
        if self.mask.shape != (owner.size,):
            raise NotAnIdeal("mask shape does not match the ring")
        self.elements_array = np.flatnonzero(self.mask).astype(np.int64)
        self.size = int(self.mask.sum())
        if check:
            self.validate()

    @classmethod
    def from_elements(cls, owner: FiniteRing, elems: Iterable[int], check: bool = True) -> "Ideal":
        mask = np.zeros(owner.size, dtype=bool)
        mask[list(elems)] = True
        return cls(owner, mask, check=check)

    def elements(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.elements_array)

    def contains(self, a: int) -> bool:
        return bool(self.mask[a])

    def validate(self) -> None:
        R = self.owner
        if not self.mask[R.zero]:
            raise NotAnIdeal("0 is missing")
        idx = self.elements_array
        if R.has_tables:
            if not self.mask[R.add_table[np.ix_(idx, idx)]].all():
                raise NotAnIdeal("not closed under addition")
            if not self.mask[R.mul_table[:, idx]].all():
                raise NotAnIdeal("not closed under left multiplication")
            if not self.mask[R.mul_table[idx, :]].all():
                raise NotAnIdeal("not closed under right multiplication")
        else:
            for x in idx.tolist():
                for y in idx.tolist():
                    if not self.mask[R.add(x, y)]:
                        raise NotAnIdeal("not closed under addition")
                for r in range(R.size):
                    if not self.mask[R.mul(r, x)] or not self.mask[R.mul(x, r)]:
                        raise NotAnIdeal("not closed under multiplication by the ring")

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and other.owner is self.owner
            and bool((other.mask == self.mask).all())
        )

    def __hash__(self):
        return hash((id(self.owner), self.elements()))

    def __repr__(self):
        return f"<Ideal size={self.size} of {self.owner.describe()}>"


def generated_ideal(R: FiniteRing, generators: Iterable[int]) -> Ideal:
    """Two-sided ideal generated by the given elements (closure to fixpoint)."""
    mask = np.zeros(R.size, dtype=bool)
    mask[R.zero] = True
    mask[list(generators)] = True
    if R.has_tables:
        while True:
            idx = np.flatnonzero(mask)
            new = mask.copy()
            new[R.mul_table[:, idx].ravel()] = True
            new[R.mul_table[idx, :].ravel()] = True
            idx2 = np.flatnonzero(new)
            new[R.add_table[np.ix_(idx2, idx2)].ravel()] = True
            if (new == mask).all():
                break
            mask = new
    else:
        while True:
            current = set(np.flatnonzero(mask).tolist())
            new = set(current)
            for x in current:
                for r in range(R.size):
                    new.add(R.mul(r, x))
                    new.add(R.mul(x, r))
            for x in list(new):
                for y in list(new):
                    new.add(R.add(x, y))
            if new == current:
                break
            mask[:] = False
            mask[list(new)] = True
    return Ideal(R, mask, check=False)


# ---------------------------------------------------------------------------
# construction and module-level operations


def build_ring(spec: RingSpec, cap: int | None = None) -> FiniteRing:
    """Construct and enumerate the ring described by the spec."""
    resolved = current_size_cap(cap)
    validate_spec(spec, resolved)
    return _build(spec)


def _build(spec: RingSpec) -> FiniteRing:
    if isinstance(spec, Zmod):
        return ZmodRing(spec)
    if isinstance(spec, MatrixSpec):
        return MatrixRing(spec, _build(spec.base))
    if isinstance(spec, ProductSpec):
        return ProductRing(spec, _build(spec.left), _build(spec.right))
    if isinstance(spec, GroupRingSpec):
        return GroupRing(spec, _build(spec.base))
    if isinstance(spec, TruncatedPolySpec):
        return TruncatedPolyRing(spec, _build(spec.base))
    if isinstance(spec, QuotientSpec):
        base = _build(spec.base)
        ideal = generated_ideal(base, spec.generators)
        return QuotientRing(base, ideal, spec=spec)
    raise MalformedSpec(f"not a ring spec: {spec!r}")


def units(R: FiniteRing) -> tuple[int, ...]:
    return R.units()


def idempotents(R: FiniteRing) -> tuple[int, ...]:
    return R.idempotents()


def nilpotents(R: FiniteRing) -> tuple[int, ...]:
    return R.nilpotents()


def jacobson_radical(R: FiniteRing) -> Ideal:
    return R.jacobson_radical()


def quotient(R: FiniteRing, ideal: Ideal) -> QuotientRing:
    if ideal.owner is not R:
        raise NotAnIdeal("ideal belongs to a different ring")
    ideal.validate()
    return QuotientRing(R, ideal)


def corner(R: FiniteRing, e: int) -> CornerRing:
    return CornerRing(R, e)


def is_local(R: FiniteRing) -> tuple[bool, int | None]:
    """True iff every a has a or 1-a invertible; witness element otherwise."""
    if R.has_tables:
        ok = R.units_mask | R.units_mask[R.one_minus_table]
        bad = np.flatnonzero(~ok)
        return (True, None) if bad.size == 0 else (False, int(bad[0]))
    for a in range(R.size):
        if not (R.is_unit(a) or R.is_unit(R.one_minus(a))):
            return False, a
    return True, None


# ---------------------------------------------------------------------------
# axiom checking


_AXIOMS = (
    "add-commutative",
    "add-associative",
    "zero-identity",
    "neg-inverse",
    "mul-associative",
    "one-identity",
    "left-distributive",
    "right-distributive",
)


def check_ring_axioms(
    R: FiniteRing,
    exhaustive_limit: int = 512,
    samples: int = 4096,
    seed: int = 0,
) -> list[tuple[str, tuple[int, ...]]]:
    """Verify the ring axioms; exhaustive up to the limit, sampled above.

    Returns a list of (axiom, witness ids); empty means everything holds.
    """
    n = R.size
    violations: list[tuple[str, tuple[int, ...]]] = []
    if R.has_tables and n <= exhaustive_limit:
        add, mul, neg = R.add_table, R.mul_table, R.neg_table
        idx = np.arange(n)
        if not (add == add.T).all():
            a, b = np.argwhere(add != add.T)[0]
            violations.append(("add-commutative", (int(a), int(b))))
        if not (add[R.zero] == idx).all():
            violations.append(("zero-identity", (int(np.flatnonzero(add[R.zero] != idx)[0]),)))
        if not (add[idx, neg] == R.zero).all():
            violations.append(("neg-inverse", (int(np.flatnonzero(add[idx, neg] != R.zero)[0]),)))
        if not ((mul[R.one] == idx).all() and (mul[:, R.one] == idx).all()):
            violations.append(("one-identity", (0,)))
        for a in range(n):
            lhs = add[add[a][:, None], idx[None, :]]
            rhs = np.take(add[a], add)
            if not (lhs == rhs).all():
                b, c = np.argwhere(lhs != rhs)[0]
                violations.append(("add-associative", (a, int(b), int(c))))
                break
        for a in range(n):
            lhs = mul[mul[a][:, None], idx[None, :]]
            rhs = np.take(mul[a], mul)
            if not (lhs == rhs).all():
                b, c = np.argwhere(lhs != rhs)[0]
                violations.append(("mul-associative", (a, int(b), int(c))))
                break
        for a in range(n):
            lhs = np.take(mul[a], add)
            rhs = add[np.ix_(mul[a], mul[a])]
            if not (lhs == rhs).all():
                b, c = np.argwhere(lhs != rhs)[0]
                violations.append(("left-distributive", (a, int(b), int(c))))
                break
        for a in range(n):
            lhs = np.take(mul[:, a], add)
            rhs = add[np.ix_(mul[:, a], mul[:, a])]
            if not (lhs == rhs).all():
                b, c = np.argwhere(lhs != rhs)[0]
                violations.append(("right-distributive", (int(b), int(c), a)))
                break
        return violations

    rng = np.random.default_rng(seed)
    triples = rng.integers(0, n, size=(samples, 3))
    for a, b, c in triples.tolist():
        if R.add(a, b) != R.add(b, a):
            violations.append(("add-commutative", (a, b)))
        if R.add(R.add(a, b), c) != R.add(a, R.add(b, c)):
            violations.append(("add-associative", (a, b, c)))
        if R.add(R.zero, a) != a:
            violations.append(("zero-identity", (a,)))
        if R.add(a, R.neg(a)) != R.zero:
            violations.append(("neg-inverse", (a,)))
        if R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)):
            violations.append(("mul-associative", (a, b, c)))
        if R.mul(R.one, a) != a or R.mul(a, R.one) != a:
            violations.append(("one-identity", (a,)))
        if R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)):
            violations.append(("left-distributive", (a, b, c)))
        if R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c)):
            violations.append(("right-distributive", (a, b, c)))
        if violations:
            break
    return violations
