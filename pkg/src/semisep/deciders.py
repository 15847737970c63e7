"""Decide which separability properties a finite semigroup preserves in direct products."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .core import FiniteSemigroup
from .green import (
    StructureFlags,
    is_union_of_groups,
    lies_in_subgroup,
    nilpotency_degree,
    structure_flags,
)


def indecomposables(S: FiniteSemigroup) -> frozenset[int]:
    """Elements outside S*S."""
    return frozenset(S.elements) - S.set_product(S.elements, S.elements)


def _factorization(S, p):
    return next((t, u) for t in S.elements for u in S.elements if S.table[t][u] == p)


@dataclass(frozen=True)
class Witness:
    element: int
    factorization: tuple[int, int] | None = None


@dataclass(frozen=True)
class Decision:
    holds: bool
    witnesses: tuple[Witness, ...] = ()

    @property
    def witness(self) -> Witness | None:
        return self.witnesses[0] if self.witnesses else None

    def __bool__(self):
        return self.holds


def is_sss_preserving(S: FiniteSemigroup) -> Decision:
    """Every element must be indecomposable or lie in a subgroup."""
    square = S.set_product(S.elements, S.elements)
    bad = tuple(
        Witness(p, _factorization(S, p)) for p in sorted(square) if not lies_in_subgroup(S, p)
    )
    return Decision(not bad, bad)


def is_mss_preserving(S: FiniteSemigroup) -> Decision:
    bad = tuple(Witness(s) for s in S.elements if not lies_in_subgroup(S, s))
    holds = not bad
    assert holds == is_union_of_groups(S)
    return Decision(holds, bad)


@dataclass(frozen=True)
class WssStatus:
    verdict: str  # "yes", "no" or "unknown"
    reason: str | None = None
    k: int | None = None

    def __str__(self):
        if self.verdict == "yes":
            return f"Yes({self.reason}, k={self.k})"
        if self.verdict == "no":
            return f"No({self.reason})"
        return "Unknown"


def wss_preserving_status(S: FiniteSemigroup) -> WssStatus:
    """Only two finite families are settled; everything else is an open question."""
    k = nilpotency_degree(S)
    flags = structure_flags(S)
    no = None
    if S.size >= 2 and flags.is_left_zero:
        no = "nontrivial left-zero"
    elif S.size >= 2 and flags.is_right_zero:
        no = "nontrivial right-zero"
    if k is not None and no is not None:
        raise AssertionError("a nilpotent semigroup cannot be a nontrivial left- or right-zero semigroup")
    if k is not None:
        return WssStatus("yes", "nilpotent", k)
    if no is not None:
        return WssStatus("no", no)
    return WssStatus("unknown")


@dataclass(frozen=True)
class PreservationReport:
    size: int
    sss_preserving: bool
    sss_witnesses: tuple[Witness, ...]
    mss_preserving: bool
    mss_witnesses: tuple[Witness, ...]
    wss_status: WssStatus
    flags: StructureFlags
    nilpotency_degree: int | None
    union_of_groups: bool
    indecomposables: tuple[int, ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("names")
        return d

    @classmethod
    def from_dict(cls, d: dict) -> PreservationReport:
        def witnesses(ws):
            return tuple(
                Witness(w["element"], tuple(w["factorization"]) if w["factorization"] is not None else None)
                for w in ws
            )

        return cls(
            size=d["size"],
            sss_preserving=d["sss_preserving"],
            sss_witnesses=witnesses(d["sss_witnesses"]),
            mss_preserving=d["mss_preserving"],
            mss_witnesses=witnesses(d["mss_witnesses"]),
            wss_status=WssStatus(**d["wss_status"]),
            flags=StructureFlags(**d["flags"]),
            nilpotency_degree=d["nilpotency_degree"],
            union_of_groups=d["union_of_groups"],
            indecomposables=tuple(d["indecomposables"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def render(self) -> str:
        def nm(i):
            return self.names[i] if self.names else str(i)

        def wit(ws):
            if not ws:
                return ""
            w = ws[0]
            if w.factorization:
                t, u = w.factorization
                return f" (witness {nm(w.element)} = {nm(t)}*{nm(u)})"
            return f" (witness {nm(w.element)})"

        flags = [k for k, v in asdict(self.flags).items() if v]
        lines = [
            f"size: {self.size}",
            f"sss_preserving: {str(self.sss_preserving).lower()}{wit(self.sss_witnesses)}",
            f"mss_preserving: {str(self.mss_preserving).lower()}{wit(self.mss_witnesses)}",
            f"wss_status: {self.wss_status}",
            f"union_of_groups: {str(self.union_of_groups).lower()}",
            f"nilpotency_degree: {self.nilpotency_degree if self.nilpotency_degree is not None else 'none'}",
            "indecomposables: {" + ", ".join(nm(i) for i in self.indecomposables) + "}",
            "flags: " + (", ".join(flags) if flags else "none"),
        ]
        return "\n".join(lines)


def classify(S: FiniteSemigroup) -> PreservationReport:
    sss = is_sss_preserving(S)
    mss = is_mss_preserving(S)
    if mss.holds and not sss.holds:
        raise AssertionError("MSS-preserving finite semigroups must be SSS-preserving")
    return PreservationReport(
        size=S.size,
        sss_preserving=sss.holds,
        sss_witnesses=sss.witnesses,
        mss_preserving=mss.holds,
        mss_witnesses=mss.witnesses,
        wss_status=wss_preserving_status(S),
        flags=structure_flags(S),
        nilpotency_degree=nilpotency_degree(S),
        union_of_groups=is_union_of_groups(S),
        indecomposables=tuple(sorted(indecomposables(S))),
        names=S.names,
    )
