"""Semigroup presentations, Adian's pair graphs, and length-reducing rewriting.

Words are plain strings of single-character generators.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

NF_ENUMERATION_CAP = 14


class PresentationError(ValueError):
    pass


class NonConfluentError(PresentationError):
    pass


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relations", tuple((u, w) for u, w in self.relations))
        gens = set(self.generators)
        for g in self.generators:
            if len(g) != 1 or not g.isalpha():
                raise PresentationError(f"generator {g!r} must be a single letter")
        if len(gens) != len(self.generators):
            raise PresentationError("repeated generator")
        for u, w in self.relations:
            for word in (u, w):
                if not word:
                    raise PresentationError("relation words must be nonempty")
                for ch in word:
                    if ch not in gens:
                        raise PresentationError(f"unknown letter {ch!r} in relation {u}={w}")

    def __str__(self):
        rels = ", ".join(f"{u}={w}" for u, w in self.relations)
        return " ".join(self.generators) + " | " + rels


_FACTOR = re.compile(r"([A-Za-z])(?:\^(\d+))?")


def parse_word(text: str, generators=None) -> str:
    """Expand ``ab^2c`` into ``abbc``; whitespace is ignored."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise PresentationError("empty word")
    out, pos = [], 0
    while pos < len(s):
        m = _FACTOR.match(s, pos)
        if m is None:
            if s[pos] == "^":
                raise PresentationError(f"malformed exponent in {text!r}")
            raise PresentationError(f"unexpected character {s[pos]!r} in {text!r}")
        letter, exp = m.group(1), m.group(2)
        if m.end() < len(s) and s[m.end()] == "^":
            raise PresentationError(f"malformed exponent in {text!r}")
        if generators is not None and letter not in generators:
            raise PresentationError(f"unknown letter {letter!r}")
        k = 1 if exp is None else int(exp)
        if k < 1:
            raise PresentationError(f"exponent must be positive in {text!r}")
        out.append(letter * k)
        pos = m.end()
    return "".join(out)


def parse_presentation(text: str) -> Presentation:
    """Parse ``"a b c | ab^2c = b, ..."``."""
    if "|" not in text:
        raise PresentationError("missing '|' between generators and relations")
    gens_part, rels_part = text.split("|", 1)
    gens = gens_part.split()
    if not gens:
        raise PresentationError("no generators")
    for g in gens:
        if len(g) != 1 or not g.isalpha():
            raise PresentationError(f"generator {g!r} must be a single letter")
    relations = []
    for chunk in rels_part.split(","):
        if not chunk.strip():
            continue
        if chunk.count("=") != 1:
            raise PresentationError(f"relation {chunk.strip()!r} needs exactly one '='")
        u, w = chunk.split("=")
        relations.append((parse_word(u, gens), parse_word(w, gens)))
    return Presentation(tuple(gens), tuple(relations))


# -- Adian's criterion -------------------------------------------------------


@dataclass(frozen=True)
class PairGraph:
    side: str
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]


def pair_graph(P: Presentation, side: str) -> PairGraph:
    if side == "left":
        edges = tuple((u[0], w[0]) for u, w in P.relations)
    elif side == "right":
        edges = tuple((u[-1], w[-1]) for u, w in P.relations)
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return PairGraph(side, P.generators, edges)


def has_no_cycles(G: PairGraph) -> bool:
    """A multigraph is a forest iff every edge joins two different components.

    Loops and repeated edges fail this test, as they should.
    """
    parent = {v: v for v in G.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for x, y in G.edges:
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[ry] = rx
    return True


@dataclass(frozen=True)
class AdianResult:
    """``embeddable`` True certifies group-embeddability; False proves nothing."""

    embeddable: bool
    left: PairGraph
    right: PairGraph

    @property
    def verdict(self) -> str:
        return "embeddable" if self.embeddable else "inconclusive"

    def __bool__(self):
        return self.embeddable


def adian_embeddable(P: Presentation) -> AdianResult:
    left, right = pair_graph(P, "left"), pair_graph(P, "right")
    return AdianResult(has_no_cycles(left) and has_no_cycles(right), left, right)


# -- rewriting ---------------------------------------------------------------


@dataclass(frozen=True)
class CriticalPair:
    word: str
    left: str
    right: str


@dataclass(frozen=True)
class RewriteSystem:
    alphabet: tuple[str, ...]
    rules: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "rules", tuple((l, r) for l, r in self.rules))
        letters = set(self.alphabet)
        for lhs, rhs in self.rules:
            if len(lhs) <= len(rhs):
                raise PresentationError(f"rule {lhs}->{rhs} is not length reducing")
            if not set(lhs + rhs) <= letters:
                raise PresentationError(f"rule {lhs}->{rhs} uses letters outside the alphabet")

    @cached_property
    def max_lhs(self) -> int:
        return max((len(l) for l, _ in self.rules), default=0)

    @cached_property
    def confluent(self) -> bool:
        # length reduction makes the system terminating, so local confluence
        # is confluence
        return all(_reduce(self, cp.left) == _reduce(self, cp.right) for cp in critical_pairs(self))

    def is_irreducible(self, word: str) -> bool:
        return not any(lhs in word for lhs, _ in self.rules)


def orient(P: Presentation) -> RewriteSystem:
    rules = []
    for u, w in P.relations:
        if len(u) == len(w):
            raise PresentationError(f"relation {u}={w} has sides of equal length and cannot be oriented")
        rules.append((u, w) if len(u) > len(w) else (w, u))
    return RewriteSystem(P.generators, tuple(rules))


def critical_pairs(RS: RewriteSystem) -> list[CriticalPair]:
    """Overlap and containment critical pairs, each with its two one-step results."""
    out = []
    for i, (l1, r1) in enumerate(RS.rules):
        for j, (l2, r2) in enumerate(RS.rules):
            # proper suffix of l1 equal to proper prefix of l2
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    out.append(CriticalPair(l1 + l2[k:], r1 + l2[k:], l1[:-k] + r2))
            if i != j and len(l2) <= len(l1):
                p = l1.find(l2)
                while p != -1:
                    out.append(CriticalPair(l1, r1, l1[:p] + r2 + l1[p + len(l2):]))
                    p = l1.find(l2, p + 1)
    return out


def locally_confluent(RS: RewriteSystem) -> bool:
    return RS.confluent


def _reduce(RS: RewriteSystem, word: str) -> str:
    # rewrite the leftmost redex; earlier positions cannot gain a redex except
    # within max_lhs - 1 letters of the rewrite
    rules = RS.rules
    w, pos = word, 0
    while pos < len(w):
        for lhs, rhs in rules:
            if w.startswith(lhs, pos):
                w = w[:pos] + rhs + w[pos + len(lhs):]
                pos = max(0, pos - RS.max_lhs + 1)
                break
        else:
            pos += 1
    return w


def _check_letters(RS: RewriteSystem, word: str) -> None:
    bad = set(word) - set(RS.alphabet)
    if bad:
        raise PresentationError(f"letters {sorted(bad)} are not in the alphabet")


def normal_form(RS: RewriteSystem, word: str) -> str:
    _check_letters(RS, word)
    if not RS.confluent:
        raise NonConfluentError("rewriting system is not confluent; normal forms are not unique")
    return _reduce(RS, word)


def fp_multiply(RS: RewriteSystem, u: str, v: str, strict: bool = True) -> str:
    if strict:
        for w in (u, v):
            _check_letters(RS, w)
            if not RS.is_irreducible(w):
                raise PresentationError(f"{w!r} is not in normal form")
    return normal_form(RS, u + v)


def enumerate_normal_forms(RS: RewriteSystem, maxlen: int, cap: int = NF_ENUMERATION_CAP) -> list[str]:
    """Irreducible words of length 1..maxlen, by length and then lexicographically."""
    if maxlen < 1:
        raise ValueError("maxlen must be at least 1")
    if maxlen > cap:
        raise ValueError(f"maxlen {maxlen} exceeds cap {cap}")
    lhss = [l for l, _ in RS.rules]
    # a factor of a normal form is a normal form, so only new suffixes can match
    level = [a for a in RS.alphabet if a not in lhss]
    out = list(level)
    for _ in range(maxlen - 1):
        level = [w + a for w in level for a in RS.alphabet if not any((w + a).endswith(l) for l in lhss)]
        out += level
    return out


A_PRESENTATION = parse_presentation("a b c | ab^2c = b")
A_SYSTEM = orient(A_PRESENTATION)
