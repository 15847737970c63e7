"""Cayley-table semigroups.

Elements are 0-based indices; ``names`` are for display only.  Every value is
immutable once built, so semigroups can be shared freely between threads.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

MAX_SIZE = 4096
# above this the O(n^3) associativity re-check of derived tables is skipped
ASSOC_CHECK_LIMIT = 512

# marker for the adjoined identity of S^1 in Golubov pairs
ONE = -1


class SemigroupError(ValueError):
    pass


class ParseError(SemigroupError):
    pass


class AssociativityError(SemigroupError):
    def __init__(self, triple):
        i, j, k = triple
        super().__init__(f"not associative: ({i}*{j})*{k} != {i}*({j}*{k})")
        self.triple = triple


class NotAnIdealError(SemigroupError):
    def __init__(self, msg, witness):
        super().__init__(msg)
        self.witness = witness


class SizeCapError(SemigroupError):
    pass


def first_nonassociative(table) -> tuple[int, int, int] | None:
    """Least triple (i, j, k) with (ij)k != i(jk), or None."""
    t = np.asarray(table, dtype=np.int64)
    n = len(t)
    if n == 0:
        return None
    for i in range(n):
        lhs = t[t[i]]  # lhs[j, k] = (i*j)*k
        rhs = t[i][t]  # rhs[j, k] = i*(j*k)
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            j, k = bad[0]
            return i, int(j), int(k)
    return None


def _check_size(n: int, force: bool) -> None:
    if n > MAX_SIZE and not force:
        raise SizeCapError(f"result would have {n} elements (cap {MAX_SIZE}); pass force=True to override")


@dataclass(frozen=True)
class FiniteSemigroup:
    """A finite semigroup given by its Cayley table (row = left factor)."""

    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0:
            raise SemigroupError("a semigroup needs at least one element")
        for i, row in enumerate(table):
            if len(row) != n:
                raise SemigroupError(f"row {i} has {len(row)} entries, expected {n}")
            for j, x in enumerate(row):
                if not 0 <= x < n:
                    raise SemigroupError(f"entry ({i},{j}) = {x} out of range [0, {n})")
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != n:
                raise SemigroupError(f"{len(names)} names for {n} elements")
            if len(set(names)) != n:
                raise SemigroupError("element names must be distinct")
            object.__setattr__(self, "names", names)
        if self.check and n <= ASSOC_CHECK_LIMIT:
            bad = first_nonassociative(table)
            if bad is not None:
                raise AssociativityError(bad)

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def name(self, i: int) -> str:
        return self.names[i] if self.names is not None else str(i)

    def index(self, label: str | int) -> int:
        """Element index from an index or a declared name."""
        if isinstance(label, int):
            if not 0 <= label < self.size:
                raise SemigroupError(f"element {label} out of range [0, {self.size})")
            return label
        if self.names is not None and label in self.names:
            return self.names.index(label)
        try:
            return self.index(int(label))
        except ValueError:
            raise SemigroupError(f"unknown element {label!r}") from None

    def product(self, *xs: int) -> int:
        it = iter(xs)
        p = next(it)
        for x in it:
            p = self.table[p][x]
        return p

    def power(self, s: int, n: int) -> int:
        if n < 1:
            raise ValueError("powers start at 1")
        p = s
        for _ in range(n - 1):
            p = self.table[p][s]
        return p

    def set_product(self, X, Y) -> frozenset[int]:
        t = self.table
        return frozenset(t[x][y] for x in X for y in Y)

    def set_power(self, X, k: int) -> frozenset[int]:
        """X^k: all products of exactly k factors from X."""
        P = frozenset(X)
        for _ in range(k - 1):
            P = self.set_product(P, X)
        return P

    def is_identity(self, e: int) -> bool:
        return all(self.table[e][x] == x == self.table[x][e] for x in self.elements)

    def is_zero(self, z: int) -> bool:
        return all(self.table[z][x] == z == self.table[x][z] for x in self.elements)

    def identity(self) -> int | None:
        return next((e for e in self.elements if self.is_identity(e)), None)

    def zero(self) -> int | None:
        return next((z for z in self.elements if self.is_zero(z)), None)

    def is_idempotent(self, e: int) -> bool:
        return self.table[e][e] == e


# -- .sgp text format ------------------------------------------------------


def from_table(text: str) -> FiniteSemigroup:
    """Parse the ``.sgp`` format.

    Line 1 holds the size n, the next n lines hold the rows of the Cayley
    table, and an optional last line ``# names: a b c`` labels the elements.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    lines = [ln[:-1] if ln.endswith("\r") else ln for ln in lines]
    if not lines:
        raise ParseError("empty input")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ParseError(f"line 1: expected element count, got {lines[0]!r}") from None
    if n < 1:
        raise ParseError(f"line 1: size must be positive, got {n}")
    if len(lines) < n + 1:
        raise ParseError(f"expected {n} table rows, found {len(lines) - 1}")
    rows = []
    for lineno in range(2, n + 2):
        parts = lines[lineno - 1].split()
        if len(parts) != n:
            raise ParseError(f"line {lineno}: expected {n} entries, got {len(parts)}")
        try:
            row = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer entry") from None
        for x in row:
            if not 0 <= x < n:
                raise SemigroupError(f"line {lineno}: index {x} out of range [0, {n})")
        rows.append(row)
    names = None
    rest = [ln for ln in lines[n + 1:] if ln.strip()]
    if rest:
        if len(rest) > 1 or not rest[0].startswith("# names:"):
            raise ParseError(f"line {n + 2}: unexpected content {rest[0]!r}")
        names = rest[0][len("# names:"):].split()
        if len(names) != n:
            raise ParseError(f"line {n + 2}: expected {n} names, got {len(names)}")
    return FiniteSemigroup(rows, names)


def to_table(S: FiniteSemigroup) -> str:
    out = [str(S.size)]
    out += [" ".join(map(str, row)) for row in S.table]
    if S.names is not None:
        out.append("# names: " + " ".join(S.names))
    return "\n".join(out) + "\n"


# -- operations --------------------------------------------------------------


def mul(S: FiniteSemigroup, i: int, j: int) -> int:
    S.index(i), S.index(j)
    return S.table[i][j]


def closure(S: FiniteSemigroup, X) -> frozenset[int]:
    """The subsemigroup generated by X."""
    X = [S.index(x) for x in X]
    if not X:
        raise SemigroupError("closure of the empty set")
    t = S.table
    found = set(X)
    frontier = list(found)
    while frontier:
        new = []
        for a in frontier:
            for b in list(found):
                for c in (t[a][b], t[b][a]):
                    if c not in found:
                        found.add(c)
                        new.append(c)
        frontier = new
    return frozenset(found)


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup, force: bool = False) -> FiniteSemigroup:
    """S x T with (i, j) stored at index i*|T| + j."""
    n, m = S.size, T.size
    _check_size(n * m, force)
    s, t = S.table, T.table
    table = [
        [s[i1][i2] * m + t[j1][j2] for i2 in range(n) for j2 in range(m)]
        for i1 in range(n)
        for j1 in range(m)
    ]
    names = [f"({S.name(i)},{T.name(j)})" for i in range(n) for j in range(m)]
    return FiniteSemigroup(table, names)


def pair_index(T: FiniteSemigroup, i: int, j: int) -> int:
    return i * T.size + j


def project_left(T: FiniteSemigroup, k: int) -> int:
    return k // T.size


def project_right(T: FiniteSemigroup, k: int) -> int:
    return k % T.size


def ideal_violation(S: FiniteSemigroup, I) -> tuple[int, int, int] | None:
    """First (s, i, product) with s*i or i*s outside I, or None if I is an ideal."""
    I = frozenset(I)
    t = S.table
    for i in sorted(I):
        for s in S.elements:
            if t[s][i] not in I:
                return s, i, t[s][i]
            if t[i][s] not in I:
                return i, s, t[i][s]
    return None


def is_ideal(S: FiniteSemigroup, I) -> bool:
    return bool(I) and ideal_violation(S, I) is None


def require_ideal(S: FiniteSemigroup, I) -> frozenset[int]:
    I = frozenset(S.index(i) for i in I)
    if not I:
        raise NotAnIdealError("an ideal must be nonempty", None)
    bad = ideal_violation(S, I)
    if bad is not None:
        a, b, c = bad
        raise NotAnIdealError(
            f"not an ideal: {S.name(a)}*{S.name(b)} = {S.name(c)} is outside it", bad
        )
    return I


def rees_quotient(S: FiniteSemigroup, I) -> FiniteSemigroup:
    """S/I: elements outside I keep their order, I becomes a zero at the end."""
    I = require_ideal(S, I)
    keep = [s for s in S.elements if s not in I]
    new = {s: k for k, s in enumerate(keep)}
    z = len(keep)
    t = S.table

    def image(x):
        return z if x in I else new[x]

    table = [[image(t[a][b]) for b in keep] + [z] for a in keep]
    table.append([z] * (z + 1))
    names = None
    if S.names is not None:
        kept = [S.names[s] for s in keep]
        names = kept + ["0" if "0" not in kept else "[I]"]
    return FiniteSemigroup(table, names, check=S.size <= ASSOC_CHECK_LIMIT)


def adjoin_identity(S: FiniteSemigroup, force: bool = False) -> FiniteSemigroup:
    """S^1, always with a fresh identity appended as the last element."""
    n = S.size
    _check_size(n + 1, force)
    table = [list(row) + [i] for i, row in enumerate(S.table)]
    table.append(list(range(n + 1)))
    names = None
    if S.names is not None:
        one = "1"
        while one in S.names:
            one += "'"
        names = list(S.names) + [one]
    return FiniteSemigroup(table, names)


def _power_name(k: int, letter: str = "x") -> str:
    return letter if k == 1 else f"{letter}^{k}"


def monogenic(m: int, r: int) -> FiniteSemigroup:
    """<x | x^m = x^(m+r)>; element k-1 is x^k for k = 1 .. m+r-1."""
    if m < 1 or r < 1:
        raise SemigroupError(f"index and period must be positive, got m={m}, r={r}")
    n = m + r - 1
    _check_size(n, False)

    def reduce(k):
        return k if k < m + r else m + (k - m) % r

    table = [[reduce(i + j) - 1 for j in range(1, n + 1)] for i in range(1, n + 1)]
    return FiniteSemigroup(table, [_power_name(k) for k in range(1, n + 1)])


def index_period(S: FiniteSemigroup, s: int) -> tuple[int, int]:
    """Minimal (m, r) with s^m = s^(m+r)."""
    s = S.index(s)
    seen = {}
    p, k = s, 1
    while p not in seen:
        seen[p] = k
        p = S.table[p][s]
        k += 1
    m = seen[p]
    return m, k - m


@dataclass(frozen=True)
class GolubovSet:
    """[a:b] = {(u, v) in S^1 x S^1 : u b v = a}; ONE marks the adjoined identity."""

    target: int
    probe: int
    pairs: frozenset[tuple[int, int]]

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)


def golubov_set(S: FiniteSemigroup, a: int, b: int) -> GolubovSet:
    a, b = S.index(a), S.index(b)
    t = S.table
    ones = [ONE, *S.elements]

    def left(u, x):
        return x if u == ONE else t[u][x]

    def right(x, v):
        return x if v == ONE else t[x][v]

    pairs = frozenset((u, v) for u, v in product(ones, ones) if right(left(u, b), v) == a)
    return GolubovSet(a, b, pairs)


def distinct_golubov_count(S: FiniteSemigroup, a: int) -> int:
    return len({golubov_set(S, a, s).pairs for s in S.elements})


# -- small families ----------------------------------------------------------


def trivial() -> FiniteSemigroup:
    return FiniteSemigroup([[0]], ["e"])


def left_zero(n: int = 2) -> FiniteSemigroup:
    names = ["y", "z"] if n == 2 else [f"l{i}" for i in range(n)]
    return FiniteSemigroup([[i] * n for i in range(n)], names)


def right_zero(n: int = 2) -> FiniteSemigroup:
    names = ["y", "z"] if n == 2 else [f"r{i}" for i in range(n)]
    return FiniteSemigroup([list(range(n)) for _ in range(n)], names)


def null(n: int = 2) -> FiniteSemigroup:
    """Null semigroup with zero at index 0; for n = 2 the elements are {0, x}."""
    names = ["0", "x"] if n == 2 else ["0"] + [f"x{i}" for i in range(1, n)]
    return FiniteSemigroup([[0] * n for _ in range(n)], names)


def cyclic_group(n: int) -> FiniteSemigroup:
    return monogenic(1, n)
