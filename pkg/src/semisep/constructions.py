"""Symbolic infinite objects: the free group on {x, y}, the semigroup
A = <a, b, c | ab^2c = b> with its embedding into it, and the semigroup
FC_2 u N glued along the map a^i b^j -> i - j.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .core import FiniteSemigroup, SemigroupError
from .presentations import A_SYSTEM, PresentationError, fp_multiply

CLOSURE_CAP = 10**6

# -- free group on x, y ------------------------------------------------------
# A letter is "x", "y" or its inverse "X", "Y".

INVERSE = {"x": "X", "X": "x", "y": "Y", "Y": "y"}


@dataclass(frozen=True)
class FreeGroupWord:
    letters: str = ""

    def __post_init__(self):
        for a, b in zip(self.letters, self.letters[1:]):
            if INVERSE[a] == b:
                raise ValueError(f"{self.letters!r} is not freely reduced")

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other):
        return fg_mul(self, other)

    def __str__(self):
        if not self.letters:
            return "ε"
        parts = []
        for m in re.finditer(r"x+|X+|y+|Y+", self.letters):
            run = m.group()
            base = run[0].lower()
            k = len(run) if run[0].islower() else -len(run)
            parts.append(base if k == 1 else f"{base}^{k}")
        return " ".join(parts)

    def ends_with(self, suffix: str) -> bool:
        return self.letters.endswith(suffix)


def fg_reduce(letters) -> FreeGroupWord:
    stack = []
    for ch in letters:
        if ch not in INVERSE:
            raise ValueError(f"{ch!r} is not a free group letter")
        if stack and stack[-1] == INVERSE[ch]:
            stack.pop()
        else:
            stack.append(ch)
    return FreeGroupWord("".join(stack))


def fg_mul(u: FreeGroupWord, v: FreeGroupWord) -> FreeGroupWord:
    # only the seam can cancel
    a, b = u.letters, v.letters
    k = 0
    while k < min(len(a), len(b)) and INVERSE[a[len(a) - 1 - k]] == b[k]:
        k += 1
    return FreeGroupWord(a[: len(a) - k] + b[k:])


def fg_inverse(u: FreeGroupWord) -> FreeGroupWord:
    return FreeGroupWord("".join(INVERSE[c] for c in reversed(u.letters)))


def parse_fg(text: str) -> FreeGroupWord:
    """Parse ``"y^-2 x^-1 y"``; ``ε`` or an empty string is the identity."""
    s = text.replace(" ", "").replace("ε", "")
    out = []
    for m in re.finditer(r"([xy])(?:\^(-?\d+))?|(.)", s):
        if m.group(3):
            raise ValueError(f"cannot parse free group word {text!r}")
        k = int(m.group(2) or 1)
        out.append((m.group(1) if k > 0 else m.group(1).upper()) * abs(k))
    return fg_reduce("".join(out))


# -- the semigroup A and its embedding ---------------------------------------

PHI_IMAGES = {"a": "x", "b": "y", "c": "YYXy"}


@dataclass(frozen=True)
class AWord:
    """An element of A as a normal-form word; the empty word is the identity of A^1."""

    word: str

    def __post_init__(self):
        if set(self.word) - set("abc"):
            raise PresentationError(f"{self.word!r} is not a word over a, b, c")
        if not A_SYSTEM.is_irreducible(self.word):
            raise PresentationError(f"{self.word!r} is not in normal form")

    def __mul__(self, other):
        if not self.word:
            return other
        if not other.word:
            return self
        return AWord(fp_multiply(A_SYSTEM, self.word, other.word, strict=False))

    def __str__(self):
        if not self.word:
            return "1"
        return re.sub(r"(.)\1+", lambda m: f"{m.group(1)}^{len(m.group())}", self.word)


def phi(w) -> FreeGroupWord:
    """a -> x, b -> y, c -> y^-2 x^-1 y."""
    word = w.word if isinstance(w, AWord) else w
    if not A_SYSTEM.is_irreducible(word):
        raise PresentationError(f"{word!r} is not in normal form")
    return fg_reduce("".join(PHI_IMAGES[ch] for ch in word))


# -- FC_2 u N -----------------------------------------------------------------


@dataclass(frozen=True)
class Comm:
    """a^i b^j in the free commutative semigroup on {a, b}."""

    i: int
    j: int

    def __post_init__(self):
        if self.i < 0 or self.j < 0 or self.i + self.j < 1:
            raise ValueError(f"a^{self.i} b^{self.j} is not an element of FC_2")

    def __str__(self):
        parts = [f"a^{self.i}" if self.i else "", f"b^{self.j}" if self.j else ""]
        return " ".join(p for p in parts if p)


@dataclass(frozen=True)
class Null:
    """x_z in the null part."""

    z: int

    def __str__(self):
        return f"x_{{{self.z}}}"


@dataclass(frozen=True)
class Zero:
    def __str__(self):
        return "0"


SElement = Union[Comm, Null, Zero]
ZERO = Zero()


def fc2_phi(i: int, j: int) -> int:
    if i < 0 or j < 0 or i + j < 1:
        raise ValueError(f"a^{i} b^{j} is not an element of FC_2")
    return i - j


def s_mul(p: SElement, q: SElement) -> SElement:
    match p, q:
        case Comm(i1, j1), Comm(i2, j2):
            return Comm(i1 + i2, j1 + j2)
        case Null(z), Comm(i, j):
            return Null(z + fc2_phi(i, j))
        case Comm(i, j), Null(z):
            return Null(z - fc2_phi(i, j))
        case _:
            # N is null and 0 absorbs everything
            return ZERO


def parse_selement(text: str) -> SElement:
    s = text.strip()
    if s == "0":
        return ZERO
    m = re.fullmatch(r"x_\{?(-?\d+)\}?", s)
    if m:
        return Null(int(m.group(1)))
    m = re.fullmatch(r"(?:a\^(\d+))?\s*(?:b\^(\d+))?", s)
    if m and (m.group(1) or m.group(2)):
        return Comm(int(m.group(1) or 0), int(m.group(2) or 0))
    raise ValueError(f"cannot parse {text!r} as an element of FC_2 u N")


# -- direct products with a finite factor ------------------------------------

LEFT_KINDS = ("S", "A", "A1")


@dataclass(frozen=True)
class ProductContext:
    """Fixes the two carriers of a direct product.

    ``left_kind`` is "S" for FC_2 u N, "A" for the semigroup A and "A1" for A
    with an identity (the empty word) adjoined; ``right`` is a finite semigroup.
    """

    left_kind: str
    right: FiniteSemigroup

    def __post_init__(self):
        if self.left_kind not in LEFT_KINDS:
            raise ValueError(f"left carrier must be one of {LEFT_KINDS}")

    def element(self, left, right) -> ProductElement:
        return ProductElement(self, left, self.right.index(right))

    def _left_mul(self, p, q):
        if self.left_kind == "S":
            return s_mul(p, q)
        return p * q

    def check_left(self, x) -> None:
        if self.left_kind == "S":
            if not isinstance(x, (Comm, Null, Zero)):
                raise SemigroupError(f"{x!r} is not an element of FC_2 u N")
        else:
            if not isinstance(x, AWord):
                raise SemigroupError(f"{x!r} is not an element of A")
            if self.left_kind == "A" and not x.word:
                raise SemigroupError("the empty word is only allowed in A^1")


@dataclass(frozen=True)
class ProductElement:
    context: ProductContext
    left: object
    right: int

    def __post_init__(self):
        self.context.check_left(self.left)
        if not 0 <= self.right < self.context.right.size:
            raise SemigroupError(f"right component {self.right} out of range")

    def __mul__(self, other):
        return product_mul(self, other)

    def __str__(self):
        return f"({self.left}, {self.context.right.name(self.right)})"


def product_mul(p: ProductElement, q: ProductElement) -> ProductElement:
    if p.context != q.context:
        raise SemigroupError("cannot multiply elements of different product contexts")
    ctx = p.context
    return ProductElement(ctx, ctx._left_mul(p.left, q.left), ctx.right.mul(p.right, q.right))


def leftzero_context() -> ProductContext:
    """(FC_2 u N) x L with L = {y, z} left-zero; y is index 0, z index 1."""
    from .core import left_zero

    return ProductContext("S", left_zero(2))


def in_U_leftzero(p: ProductElement) -> bool:
    """Membership in the explicit description of <(a, y), (x_1, z)>.

    Natural-number indices start at 1.
    """
    ctx = p.context
    if ctx.left_kind != "S" or ctx.right.size != 2 or not all(ctx.right.mul(i, j) == i for i in (0, 1) for j in (0, 1)):
        raise SemigroupError("membership is only defined on (FC_2 u N) x {y, z} with {y, z} left-zero")
    side = ctx.right.name(p.right) if ctx.right.names else ("y", "z")[p.right]
    x = p.left
    match x:
        case Comm(i, 0):
            return side == "y" and i >= 1
        case Null(i):
            return side == "y" or i >= 1
        case Zero():
            return True
    return False


def bounded_closure(generators, maxfactors: int, cap: int = CLOSURE_CAP) -> set:
    """All products of between 1 and ``maxfactors`` generators."""
    if maxfactors < 1:
        raise ValueError("maxfactors must be at least 1")
    gens = list(generators)
    found = set(gens)
    level = set(gens)
    for _ in range(maxfactors - 1):
        level = {p * g for p in level for g in gens}
        found |= level
        if len(found) > cap:
            raise SemigroupError(f"closure exceeded {cap} elements")
    return found
