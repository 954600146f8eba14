"""Lower and upper approximation operators.

Four couplings of a lower and an upper operator are supported, selected
by :class:`Pairing`:

* ``DUAL_SUCC`` - both operators read successor neighbourhoods; the pair
  is dual (``l(-X) = -u(X)``).
* ``NONDUAL`` - lower reads successors, upper reads predecessors. The
  upper operator then collects all successors of members of X, and the
  pair forms an adjunction instead of a duality.
* ``MIRROR_NONDUAL`` - the opposite coupling (lower via predecessors,
  upper via successors); equivalent to ``NONDUAL`` on the transpose.
* ``PAWLAK`` - granule-based operators, defined only when the relation
  is an equivalence; included as a checked special case so the classical
  definitions can be cross-checked against the relational ones.

The module also exposes a small kernel (:func:`approx_tables`) that
precomputes all four operators as mask-to-mask lookup tables for one
relation; the exhaustive searches elsewhere in the package live on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import InputError, PreconditionError
from .relations import BinaryRelation, Subset, classify, transpose_rows


class Pairing(Enum):
    """Which (lower, upper) coupling is in force."""

    DUAL_SUCC = "dual-succ"
    NONDUAL = "nondual"
    MIRROR_NONDUAL = "mirror-nondual"
    PAWLAK = "pawlak"

    @classmethod
    def from_name(cls, name: str) -> Pairing:
        aliases = {
            "dual": cls.DUAL_SUCC,
            "dual-succ": cls.DUAL_SUCC,
            "dual_succ": cls.DUAL_SUCC,
            "nondual": cls.NONDUAL,
            "non-dual": cls.NONDUAL,
            "mirror": cls.MIRROR_NONDUAL,
            "mirror-nondual": cls.MIRROR_NONDUAL,
            "mirror_nondual": cls.MIRROR_NONDUAL,
            "pawlak": cls.PAWLAK,
        }
        try:
            return aliases[name.strip().lower()]
        except KeyError:
            raise InputError(
                f"unknown pairing {name!r}; expected dual, nondual, mirror or pawlak"
            ) from None


@dataclass(frozen=True)
class OperatorTables:
    """All four pointwise operators of one relation, tabulated by mask."""

    n: int
    lower_succ: tuple[int, ...]
    upper_succ: tuple[int, ...]
    lower_pred: tuple[int, ...]
    upper_pred: tuple[int, ...]

    def select(self, pairing: Pairing) -> tuple[Sequence[int], Sequence[int]]:
        if pairing is Pairing.NONDUAL:
            return self.lower_succ, self.upper_pred
        if pairing is Pairing.MIRROR_NONDUAL:
            return self.lower_pred, self.upper_succ
        if pairing is Pairing.DUAL_SUCC:
            return self.lower_succ, self.upper_succ
        raise PreconditionError("PAWLAK has no successor/predecessor tables")


def approx_tables(n: int, rows: Sequence[int]) -> OperatorTables:
    pred = transpose_rows(rows)
    size = 1 << n
    l_s = [0] * size
    u_s = [0] * size
    l_p = [0] * size
    u_p = [0] * size
    for mask in range(size):
        ls = us = lp = up = 0
        for x in range(n):
            bit = 1 << x
            succ_x = rows[x]
            pred_x = pred[x]
            if not succ_x & ~mask:
                ls |= bit
            if succ_x & mask:
                us |= bit
            if not pred_x & ~mask:
                lp |= bit
            if pred_x & mask:
                up |= bit
        l_s[mask] = ls
        u_s[mask] = us
        l_p[mask] = lp
        u_p[mask] = up
    return OperatorTables(n, tuple(l_s), tuple(u_s), tuple(l_p), tuple(u_p))


def successor_set(relation: BinaryRelation, x: int) -> Subset:
    """All y with x related to y."""
    relation.universe.check_index(x)
    return Subset(relation.universe, relation.rows[x])


def predecessor_set(relation: BinaryRelation, x: int) -> Subset:
    """All y with y related to x; the successor set of the transpose."""
    relation.universe.check_index(x)
    bits = 0
    for y in range(relation.universe.size):
        if relation.rows[y] >> x & 1:
            bits |= 1 << y
    return Subset(relation.universe, bits)


def granules(relation: BinaryRelation) -> list[Subset]:
    """The partition induced by an equivalence relation.

    Classes are listed once each, ordered by least element. Raises
    PreconditionError for non-equivalences: the granule-based definitions
    are only meaningful on a partition.
    """
    if not classify(relation).equivalence:
        raise PreconditionError("granules are defined only for equivalence relations")
    universe = relation.universe
    seen = 0
    out: list[Subset] = []
    for x in range(universe.size):
        if seen >> x & 1:
            continue
        block = relation.rows[x]
        seen |= block
        out.append(Subset(universe, block))
    return out


def _check_args(relation: BinaryRelation, x_set: Subset) -> None:
    if x_set.universe != relation.universe:
        raise InputError("set and relation belong to different universes")


def _pawlak(relation: BinaryRelation, x_set: Subset, want_lower: bool) -> Subset:
    blocks = granules(relation)  # raises unless equivalence
    bits = 0
    for block in blocks:
        if want_lower:
            if not block.bits & ~x_set.bits:
                bits |= block.bits
        elif block.bits & x_set.bits:
            bits |= block.bits
    return Subset(relation.universe, bits)


def lower(pairing: Pairing, relation: BinaryRelation, x_set: Subset) -> Subset:
    """Elements whose neighbourhood is contained in the given set."""
    _check_args(relation, x_set)
    if pairing is Pairing.PAWLAK:
        return _pawlak(relation, x_set, want_lower=True)
    rows = (
        transpose_rows(relation.rows)
        if pairing is Pairing.MIRROR_NONDUAL
        else relation.rows
    )
    bits = 0
    for x in range(relation.universe.size):
        if not rows[x] & ~x_set.bits:
            bits |= 1 << x
    return Subset(relation.universe, bits)


def upper(pairing: Pairing, relation: BinaryRelation, x_set: Subset) -> Subset:
    """Elements whose neighbourhood meets the given set."""
    _check_args(relation, x_set)
    if pairing is Pairing.PAWLAK:
        return _pawlak(relation, x_set, want_lower=False)
    rows = (
        transpose_rows(relation.rows) if pairing is Pairing.NONDUAL else relation.rows
    )
    bits = 0
    for x in range(relation.universe.size):
        if rows[x] & x_set.bits:
            bits |= 1 << x
    return Subset(relation.universe, bits)
