"""Congruences on finite semigroups and separation witnesses."""
from __future__ import annotations

import json
from dataclasses import dataclass

from .core import FiniteSemigroup, SemigroupError, require_ideal

ENUMERATION_CAP = 9


class InvalidCongruence(SemigroupError):
    pass


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        """Merge the classes of x and y; True if they were distinct."""
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if y < x:
            x, y = y, x
        self.parent[y] = x
        return True

    def classes(self):
        groups = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())


def normalize_partition(S: FiniteSemigroup, partition) -> tuple[tuple[int, ...], ...]:
    classes = [tuple(sorted(S.index(x) for x in block)) for block in partition]
    seen = [x for block in classes for x in block]
    if any(not block for block in classes):
        raise InvalidCongruence("empty block in partition")
    if len(seen) != len(set(seen)):
        raise InvalidCongruence("blocks of the partition overlap")
    if set(seen) != set(S.elements):
        missing = sorted(set(S.elements) - set(seen))
        raise InvalidCongruence(f"partition does not cover elements {missing}")
    return tuple(sorted(classes))


def _labels(n, classes):
    lab = [0] * n
    for k, block in enumerate(classes):
        for x in block:
            lab[x] = k
    return lab


def _incompatibility(S, classes):
    lab = _labels(S.size, classes)
    t = S.table
    for block in classes:
        rep = block[0]
        for x in block[1:]:
            for c in S.elements:
                if lab[t[c][x]] != lab[t[c][rep]]:
                    return (rep, x, "left", c)
                if lab[t[x][c]] != lab[t[rep][c]]:
                    return (rep, x, "right", c)
    return None


def is_congruence(S: FiniteSemigroup, partition) -> bool:
    return _incompatibility(S, normalize_partition(S, partition)) is None


@dataclass(frozen=True)
class Congruence:
    """A congruence on ``base``; classes are sorted by least element."""

    base: FiniteSemigroup
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        classes = normalize_partition(self.base, self.classes)
        object.__setattr__(self, "classes", classes)
        bad = _incompatibility(self.base, classes)
        if bad is not None:
            a, b, side, c = bad
            raise InvalidCongruence(f"not compatible: {a} ~ {b} but multiplying on the {side} by {c} separates them")

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def labels(self) -> list[int]:
        return _labels(self.base.size, self.classes)

    def class_of(self, s: int) -> tuple[int, ...]:
        return self.classes[self.labels()[s]]

    def related(self, a: int, b: int) -> bool:
        lab = self.labels()
        return lab[a] == lab[b]

    def encoding(self) -> tuple[int, ...]:
        """Restricted-growth string: element i gets the number of its class."""
        return tuple(self.labels())

    def to_json(self) -> str:
        return json.dumps({"classes": [list(c) for c in self.classes]})

    @classmethod
    def from_json(cls, S: FiniteSemigroup, text: str) -> Congruence:
        return cls(S, json.loads(text)["classes"])


def identity_congruence(S: FiniteSemigroup) -> Congruence:
    return Congruence(S, [(s,) for s in S.elements])


def universal_congruence(S: FiniteSemigroup) -> Congruence:
    return Congruence(S, [tuple(S.elements)])


def _close(S: FiniteSemigroup, pairs) -> Congruence:
    """Least congruence containing ``pairs``."""
    uf = UnionFind(S.size)
    t = S.table
    queue = [(a, b) for a, b in pairs if uf.union(a, b)]
    while queue:
        p, q = queue.pop()
        for c in S.elements:
            for x, y in ((t[c][p], t[c][q]), (t[p][c], t[q][c])):
                if uf.union(x, y):
                    queue.append((x, y))
    return Congruence(S, uf.classes())


def principal_congruence(S: FiniteSemigroup, a: int, b: int) -> Congruence:
    return _close(S, [(S.index(a), S.index(b))])


def _same_base(rho: Congruence, sigma: Congruence) -> FiniteSemigroup:
    if rho.base != sigma.base:
        raise InvalidCongruence("congruences live on different semigroups")
    return rho.base


def meet(rho: Congruence, sigma: Congruence) -> Congruence:
    S = _same_base(rho, sigma)
    lr, ls = rho.labels(), sigma.labels()
    groups = {}
    for x in S.elements:
        groups.setdefault((lr[x], ls[x]), []).append(x)
    return Congruence(S, groups.values())


def join(rho: Congruence, sigma: Congruence) -> Congruence:
    S = _same_base(rho, sigma)
    pairs = [(c[0], x) for cong in (rho, sigma) for c in cong.classes for x in c[1:]]
    return _close(S, pairs)


def rees_congruence(S: FiniteSemigroup, I) -> Congruence:
    I = require_ideal(S, I)
    return Congruence(S, [tuple(sorted(I))] + [(s,) for s in S.elements if s not in I])


def quotient(S: FiniteSemigroup, rho: Congruence) -> FiniteSemigroup:
    """S/rho; class k of rho (sorted by least element) becomes element k."""
    if rho.base != S:
        raise InvalidCongruence("congruence is defined on a different semigroup")
    lab = rho.labels()
    t = S.table
    reps = [c[0] for c in rho.classes]
    table = [[lab[t[a][b]] for b in reps] for a in reps]
    names = None
    if S.names is not None:
        names = ["[" + ",".join(S.names[x] for x in c) + "]" if len(c) > 1 else S.names[c[0]] for c in rho.classes]
    return FiniteSemigroup(table, names)


def _constraints_by_step(S: FiniteSemigroup):
    # Each constraint (a, b, x, y) reads: a ~ b implies x ~ y.  It can be
    # decided once the largest of its four elements has a label.
    t = S.table
    steps = [[] for _ in S.elements]
    for a in S.elements:
        for b in range(a + 1, S.size):
            for c in S.elements:
                for x, y in ((t[c][a], t[c][b]), (t[a][c], t[b][c])):
                    if x != y:
                        steps[max(a, b, x, y)].append((a, b, x, y))
    return steps


def all_congruences(S: FiniteSemigroup, cap: int = ENUMERATION_CAP) -> list[Congruence]:
    """Every congruence on S, coarsest first, ties broken by encoding."""
    n = S.size
    if n > cap:
        raise SemigroupError(f"semigroup has {n} elements; congruence enumeration is capped at {cap}")
    steps = _constraints_by_step(S)
    labels = [0] * n
    found = []

    def extend(k, nblocks):
        if k == n:
            found.append(tuple(labels))
            return
        for b in range(nblocks + 1):
            labels[k] = b
            if all(labels[a] != labels[bb] or labels[x] == labels[y] for a, bb, x, y in steps[k]):
                extend(k + 1, max(nblocks, b + 1))

    extend(0, 0)
    found.sort(key=lambda enc: (max(enc) + 1, enc))
    out = []
    for enc in found:
        groups = {}
        for x, b in enumerate(enc):
            groups.setdefault(b, []).append(x)
        out.append(Congruence(S, groups.values()))
    return out


def separates(rho: Congruence, s: int, Y) -> bool:
    lab = rho.labels()
    return all(lab[s] != lab[y] for y in Y)


@dataclass(frozen=True)
class Separation:
    congruence: Congruence
    minimized: bool


def separate(S: FiniteSemigroup, s: int, Y, cap: int = ENUMERATION_CAP) -> Separation:
    """A congruence with as few classes as possible that separates s from Y.

    Above the enumeration cap the identity congruence is returned unminimized;
    it always separates.
    """
    s = S.index(s)
    Y = frozenset(S.index(y) for y in Y)
    if s in Y:
        raise SemigroupError(f"element {s} belongs to the set it should be separated from")
    if S.size > cap:
        return Separation(identity_congruence(S), False)
    for rho in all_congruences(S, cap):
        if separates(rho, s, Y):
            return Separation(rho, True)
    raise AssertionError("identity congruence always separates")  # pragma: no cover
