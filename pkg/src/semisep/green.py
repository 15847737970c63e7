"""Green's relations and the structural predicates built on them."""
from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteSemigroup, SemigroupError, index_period

RELATIONS = ("J", "L", "R", "H")


def right_ideal(S: FiniteSemigroup, s: int) -> frozenset[int]:
    """sS^1"""
    return frozenset(S.table[s]) | {s}


def left_ideal(S: FiniteSemigroup, s: int) -> frozenset[int]:
    """S^1 s"""
    return frozenset(row[s] for row in S.table) | {s}


def two_sided_ideal(S: FiniteSemigroup, s: int) -> frozenset[int]:
    """S^1 s S^1"""
    left = left_ideal(S, s)
    return left | frozenset(S.table[u][v] for u in left for v in S.elements)


def _classes_by_key(S, key) -> tuple[tuple[int, ...], ...]:
    groups: dict = {}
    for s in S.elements:
        groups.setdefault(key(s), []).append(s)
    return tuple(sorted(tuple(g) for g in groups.values()))


@dataclass(frozen=True)
class GreenPartition:
    relation: str
    classes: tuple[tuple[int, ...], ...]

    def class_of(self, s: int) -> tuple[int, ...]:
        for c in self.classes:
            if s in c:
                return c
        raise SemigroupError(f"element {s} not covered")

    def related(self, s: int, t: int) -> bool:
        return t in self.class_of(s)

    def labels(self) -> list[int]:
        lab = [0] * sum(len(c) for c in self.classes)
        for k, c in enumerate(self.classes):
            for s in c:
                lab[s] = k
        return lab


def green_classes(S: FiniteSemigroup, relation: str) -> GreenPartition:
    relation = relation.upper()
    if relation == "J":
        key = lambda s: two_sided_ideal(S, s)  # noqa: E731
    elif relation == "L":
        key = lambda s: left_ideal(S, s)  # noqa: E731
    elif relation == "R":
        key = lambda s: right_ideal(S, s)  # noqa: E731
    elif relation == "H":
        key = lambda s: (left_ideal(S, s), right_ideal(S, s))  # noqa: E731
    else:
        raise ValueError(f"unknown Green relation {relation!r}; expected one of {RELATIONS}")
    return GreenPartition(relation, _classes_by_key(S, key))


def is_group_hclass(S: FiniteSemigroup, H) -> bool:
    """An H-class is a subgroup exactly when H*H = H."""
    H = frozenset(S.index(h) for h in H)
    if tuple(sorted(H)) not in green_classes(S, "H").classes:
        raise SemigroupError(f"{sorted(H)} is not an H-class")
    return S.set_product(H, H) == H


def lies_in_subgroup(S: FiniteSemigroup, s: int) -> bool:
    # s^(r+1) = s for some r >= 1 iff the index of s is 1
    return index_period(S, s)[0] == 1


def is_union_of_groups(S: FiniteSemigroup) -> bool:
    return all(lies_in_subgroup(S, s) for s in S.elements)


@dataclass(frozen=True)
class StabilityReport:
    passed: bool
    checked: int
    counterexample: dict | None = None


def check_stability(S: FiniteSemigroup) -> StabilityReport:
    """Check that S is stable, and that x J x^2 puts x in a group H-class.

    Finite semigroups are always stable, so a failure here points at a bug in
    the Green's relation code rather than at the input.
    """
    J = green_classes(S, "J").labels()
    L = green_classes(S, "L").labels()
    R = green_classes(S, "R").labels()
    H = green_classes(S, "H")
    t = S.table
    checked = 0
    for a in S.elements:
        for b in S.elements:
            checked += 1
            ab, ba = t[a][b], t[b][a]
            if J[a] == J[ab] and R[a] != R[ab]:
                return StabilityReport(False, checked, {"rule": "aJab=>aRab", "a": a, "b": b})
            if J[a] == J[ba] and L[a] != L[ba]:
                return StabilityReport(False, checked, {"rule": "aJba=>aLba", "a": a, "b": b})
    for x in S.elements:
        checked += 1
        xx = t[x][x]
        if J[x] != J[xx]:
            continue
        if not H.related(x, xx):
            return StabilityReport(False, checked, {"rule": "xJxx=>xHxx", "x": x})
        if not is_group_hclass(S, H.class_of(x)):
            return StabilityReport(False, checked, {"rule": "H-class of x is a group", "x": x})
    return StabilityReport(True, checked)


def nilpotency_degree(S: FiniteSemigroup) -> int | None:
    """Least k with S^k = {0}, or None when S has no zero or never reaches it."""
    z = S.zero()
    if z is None:
        return None
    everything = frozenset(S.elements)
    P, k = everything, 1
    while P != {z}:
        nxt = S.set_product(P, everything)
        if nxt == P:
            return None
        P, k = nxt, k + 1
    return k


@dataclass(frozen=True)
class StructureFlags:
    is_band: bool
    is_left_zero: bool
    is_right_zero: bool
    is_null: bool
    is_group: bool
    has_identity: bool
    has_zero: bool


def structure_flags(S: FiniteSemigroup) -> StructureFlags:
    t = S.table
    els = S.elements
    z = S.zero()
    hclasses = green_classes(S, "H").classes
    return StructureFlags(
        is_band=all(S.is_idempotent(e) for e in els),
        is_left_zero=all(t[a][b] == a for a in els for b in els),
        is_right_zero=all(t[a][b] == b for a in els for b in els),
        is_null=z is not None and all(t[a][b] == z for a in els for b in els),
        is_group=len(hclasses) == 1 and is_group_hclass(S, hclasses[0]),
        has_identity=S.identity() is not None,
        has_zero=z is not None,
    )
