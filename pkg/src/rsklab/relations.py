"""Finite universes, subsets and binary relations as integer bitsets.

Elements of a universe are dense indices ``0..size-1``; labels, when
present, are display names only. A subset is a single bitmask, and a
relation is stored row-wise: bit ``y`` of ``rows[x]`` means ``(x, y)`` is
in the relation. Concatenating the rows LSB-first gives the row-major
``n*n``-bit encoding, a total order on relations of a given size. That
order is what makes "minimal counterexample" well defined everywhere
else in the package, so nothing here may reorder it.

All types are immutable after construction and safe to share across
workers.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, InputError

DEFAULT_CAPACITY_BOUND = 4
_CAPACITY_ENV = "RSK_MAX_N"


def capacity_bound() -> int:
    """Size bound for exhaustive enumeration, overridable via RSK_MAX_N."""
    raw = os.environ.get(_CAPACITY_ENV)
    if raw is None:
        return DEFAULT_CAPACITY_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{_CAPACITY_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise InputError(f"{_CAPACITY_ENV} must be nonnegative, got {value}")
    return value


def check_capacity(n: int, bound: int | None) -> None:
    limit = capacity_bound() if bound is None else bound
    if n > limit:
        raise CapacityError(
            f"universe size {n} exceeds the capacity bound {limit}"
            f" (raise {_CAPACITY_ENV} or pass an explicit bound)"
        )


@dataclass(frozen=True)
class Universe:
    """An indexed finite set of elements, optionally labelled."""

    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.size < 0:
            raise InputError(f"universe size must be nonnegative, got {self.size}")
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != self.size:
                raise InputError(
                    f"{len(labels)} labels given for a universe of size {self.size}"
                )
            if len(set(labels)) != len(labels):
                raise InputError("universe labels must be pairwise distinct")

    @cached_property
    def _index_of(self) -> dict[str, int]:
        if self.labels is None:
            return {str(i): i for i in range(self.size)}
        return {name: i for i, name in enumerate(self.labels)}

    def label(self, index: int) -> str:
        self.check_index(index)
        return self.labels[index] if self.labels is not None else str(index)

    def index(self, name: str) -> int:
        try:
            return self._index_of[name]
        except KeyError:
            raise InputError(f"unknown element {name!r}") from None

    def check_index(self, index: int) -> None:
        if not 0 <= index < self.size:
            raise InputError(
                f"element index {index} out of range for universe of size {self.size}"
            )

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def __len__(self) -> int:
        return self.size


@dataclass(frozen=True)
class Subset:
    """A subset of a universe, stored as a bitmask over element indices."""

    universe: Universe
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits <= self.universe.full_mask:
            raise InputError(
                f"bitmask {self.bits:#x} does not fit a universe of size"
                f" {self.universe.size}"
            )

    @classmethod
    def empty(cls, universe: Universe) -> Subset:
        return cls(universe, 0)

    @classmethod
    def full(cls, universe: Universe) -> Subset:
        return cls(universe, universe.full_mask)

    @classmethod
    def of(cls, universe: Universe, members: Iterable[int]) -> Subset:
        bits = 0
        for index in members:
            universe.check_index(index)
            bits |= 1 << index
        return cls(universe, bits)

    @classmethod
    def from_labels(cls, universe: Universe, names: Iterable[str]) -> Subset:
        return cls.of(universe, (universe.index(name) for name in names))

    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.universe.size) if self.bits >> i & 1)

    def labels(self) -> tuple[str, ...]:
        return tuple(self.universe.label(i) for i in self.members())

    def complement(self) -> Subset:
        return Subset(self.universe, self.universe.full_mask & ~self.bits)

    def _coerce(self, other: Subset) -> None:
        if other.universe != self.universe:
            raise InputError("subsets belong to different universes")

    def __or__(self, other: Subset) -> Subset:
        self._coerce(other)
        return Subset(self.universe, self.bits | other.bits)

    def __and__(self, other: Subset) -> Subset:
        self._coerce(other)
        return Subset(self.universe, self.bits & other.bits)

    def __sub__(self, other: Subset) -> Subset:
        self._coerce(other)
        return Subset(self.universe, self.bits & ~other.bits)

    def __le__(self, other: Subset) -> bool:
        self._coerce(other)
        return not (self.bits & ~other.bits)

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.universe.size and bool(self.bits >> index & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __repr__(self) -> str:
        return "{" + ", ".join(self.labels()) + "}"


@dataclass(frozen=True)
class RelationFlags:
    """Outcome of classifying a relation against the four base predicates."""

    reflexive: bool
    symmetric: bool
    transitive: bool
    serial: bool

    @property
    def preorder(self) -> bool:
        return self.reflexive and self.transitive

    @property
    def equivalence(self) -> bool:
        return self.reflexive and self.symmetric and self.transitive


class RelationClass(Enum):
    """The nine relation classes used as table columns.

    Declaration order is the column order of the property tables.
    """

    R = "R"
    Rr = "Rr"
    Rs = "Rs"
    Rt = "Rt"
    Rrs = "Rrs"
    Rrt = "Rrt"
    Rst = "Rst"
    Rrst = "Rrst"
    Rser = "Rser"

    def contains_flags(self, flags: RelationFlags) -> bool:
        r, s, t = flags.reflexive, flags.symmetric, flags.transitive
        return {
            RelationClass.R: True,
            RelationClass.Rr: r,
            RelationClass.Rs: s,
            RelationClass.Rt: t,
            RelationClass.Rrs: r and s,
            RelationClass.Rrt: r and t,
            RelationClass.Rst: s and t,
            RelationClass.Rrst: r and s and t,
            RelationClass.Rser: flags.serial,
        }[self]

    def contains(self, relation: BinaryRelation) -> bool:
        return self.contains_flags(classify(relation))

    @classmethod
    def from_tag(cls, tag: str) -> RelationClass:
        # bare lowercase "r" is the reflexive subscript; the unconstrained
        # column is addressed as uppercase "R" or "any"
        normalized = tag.strip()
        if normalized == "R" or normalized.lower() == "any":
            return cls.R
        for member in cls:
            if member.value == normalized:
                return member
        by_subscript = {m.value[1:]: m for m in cls if m is not cls.R}
        member = by_subscript.get(normalized.lower())
        if member is None:
            raise InputError(
                f"unknown relation class {tag!r}; expected one of "
                + ", ".join(m.value for m in cls)
                + " or a subscript r/s/t/rs/rt/st/rst/ser, or 'any'"
            )
        return member


@dataclass(frozen=True)
class BinaryRelation:
    """A binary relation over a finite universe, one bitmask row per element."""

    universe: Universe
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.universe.size:
            raise InputError(
                f"{len(rows)} rows given for a universe of size {self.universe.size}"
            )
        full = self.universe.full_mask
        for x, row in enumerate(rows):
            if not 0 <= row <= full:
                raise InputError(f"row {x} does not fit the universe")

    @classmethod
    def from_encoding(cls, universe: Universe, encoding: int) -> BinaryRelation:
        n = universe.size
        full = universe.full_mask
        if not 0 <= encoding < 1 << (n * n):
            raise InputError(f"encoding {encoding} does not fit {n}x{n} relations")
        return cls(universe, tuple((encoding >> (n * x)) & full for x in range(n)))

    def has(self, x: int, y: int) -> bool:
        self.universe.check_index(x)
        self.universe.check_index(y)
        return bool(self.rows[x] >> y & 1)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        n = self.universe.size
        return tuple(
            (x, y) for x in range(n) for y in range(n) if self.rows[x] >> y & 1
        )

    @property
    def encoding(self) -> int:
        n = self.universe.size
        value = 0
        for x, row in enumerate(self.rows):
            value |= row << (n * x)
        return value

    def transpose(self) -> BinaryRelation:
        return BinaryRelation(self.universe, transpose_rows(self.rows))

    def __repr__(self) -> str:
        shown = ", ".join(
            f"({self.universe.label(x)},{self.universe.label(y)})"
            for x, y in self.pairs()
        )
        return f"BinaryRelation(n={self.universe.size}, {{{shown}}})"


def transpose_rows(rows: Sequence[int]) -> tuple[int, ...]:
    n = len(rows)
    out = [0] * n
    for x in range(n):
        row = rows[x]
        bit = 1 << x
        for y in range(n):
            if row >> y & 1:
                out[y] |= bit
    return tuple(out)


def build_relation(
    universe: Universe, pairs: Iterable[tuple[int, int]]
) -> BinaryRelation:
    """Build a relation containing exactly the given index pairs.

    Duplicates are permitted; out-of-range indices raise InputError naming
    the offending pair.
    """
    rows = [0] * universe.size
    for pair in pairs:
        x, y = pair
        if not (0 <= x < universe.size and 0 <= y < universe.size):
            raise InputError(
                f"pair {tuple(pair)!r} out of range for universe of size"
                f" {universe.size}"
            )
        rows[x] |= 1 << y
    return BinaryRelation(universe, tuple(rows))


def flags_of_rows(n: int, rows: Sequence[int]) -> RelationFlags:
    """Classify a row-encoded relation. Kernel shared by every search loop."""
    reflexive = all(rows[x] >> x & 1 for x in range(n))
    symmetric = True
    for x in range(n):
        row = rows[x]
        for y in range(n):
            if row >> y & 1 and not rows[y] >> x & 1:
                symmetric = False
                break
        if not symmetric:
            break
    transitive = True
    for x in range(n):
        row = rows[x]
        reachable = 0
        for y in range(n):
            if row >> y & 1:
                reachable |= rows[y]
        if reachable & ~row:
            transitive = False
            break
    serial = all(rows[x] for x in range(n))
    return RelationFlags(reflexive, symmetric, transitive, serial)


def classify(relation: BinaryRelation) -> RelationFlags:
    """Evaluate the reflexive/symmetric/transitive/serial predicates."""
    return flags_of_rows(relation.universe.size, relation.rows)


def intersect(relations: Sequence[BinaryRelation]) -> BinaryRelation:
    """Pairwise bitwise intersection; the indiscernibility construction."""
    if not relations:
        raise InputError("intersect needs at least one relation")
    universe = relations[0].universe
    rows = list(relations[0].rows)
    for other in relations[1:]:
        if other.universe != universe:
            raise InputError("relations belong to different universes")
        for x in range(universe.size):
            rows[x] &= other.rows[x]
    return BinaryRelation(universe, tuple(rows))


def transitive_closure_rows(n: int, rows: Sequence[int]) -> tuple[int, ...]:
    out = list(rows)
    changed = True
    while changed:
        changed = False
        for x in range(n):
            row = out[x]
            acc = row
            for y in range(n):
                if row >> y & 1:
                    acc |= out[y]
            if acc != row:
                out[x] = acc
                changed = True
    return tuple(out)


def transitive_closure(relation: BinaryRelation) -> BinaryRelation:
    """Smallest transitive relation containing the input; idempotent."""
    return BinaryRelation(
        relation.universe,
        transitive_closure_rows(relation.universe.size, relation.rows),
    )


def reflexive_closure(relation: BinaryRelation) -> BinaryRelation:
    return BinaryRelation(
        relation.universe,
        tuple(row | (1 << x) for x, row in enumerate(relation.rows)),
    )


def iter_encodings(n: int) -> Iterator[int]:
    return iter(range(1 << (n * n)))


def rows_from_encoding(n: int, encoding: int) -> tuple[int, ...]:
    full = (1 << n) - 1
    return tuple((encoding >> (n * x)) & full for x in range(n))


def enumerate_relations(
    n: int,
    relation_class: RelationClass = RelationClass.R,
    *,
    bound: int | None = None,
) -> Iterator[BinaryRelation]:
    """Yield every n-element relation of the class, ascending by encoding.

    Equals filtering the full enumeration by class membership, element for
    element; that identity is part of the contract and is tested.
    """
    if n < 0:
        raise InputError(f"universe size must be nonnegative, got {n}")
    check_capacity(n, bound)
    universe = Universe(n)
    for encoding in iter_encodings(n):
        rows = rows_from_encoding(n, encoding)
        if relation_class.contains_flags(flags_of_rows(n, rows)):
            yield BinaryRelation(universe, rows)
