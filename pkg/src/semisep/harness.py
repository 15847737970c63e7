"""Desk-scale verification scenarios.

Each ``verify_*`` function checks one finitely checkable claim exhaustively
within its bounds and returns a :class:`ScenarioReport`.  The first failure in
enumeration order is reported as the counterexample.
"""
from __future__ import annotations

import json
import os
import time
from dataclasses import asdict, dataclass, field
from itertools import product
from pathlib import Path

from . import catalog as _catalog
from .constructions import (
    AWord,
    Comm,
    Null,
    ProductContext,
    ZERO,
    bounded_closure,
    fg_mul,
    in_U_leftzero,
    leftzero_context,
    phi,
)
from .core import (
    ONE,
    FiniteSemigroup,
    closure,
    direct_product,
    golubov_set,
    index_period,
    monogenic,
    null,
    pair_index,
)
from .green import green_classes, is_group_hclass, lies_in_subgroup
from .presentations import A_SYSTEM, enumerate_normal_forms, fp_multiply

# statements whose content is infinite; the scenarios exercise their finite
# trap identities only
STATEMENT_LEVEL = (
    "complete separability of direct products",
    "SSS of a product passes to its factors",
    "product of two WSS semigroups is MSS",
    "WSS times residually finite periodic is MSS",
    "residual finiteness of products",
)

CAPS = {
    "lemma-positive": {"maxlen": 12},
    "embedding": {"maxlen": 9},
    "case-formulas": {"maxn": 50},
    "leftzero-counter": {"bound": 30},
    "eq1": {"max_size": 5},
    "eq10": {"maxexp": 40},
    "hom-trap": {"max_order": 3},
    "strong-no": {"max_size": 6},
}

DEFAULTS = {
    "lemma-positive": {"maxlen": 10},
    "embedding": {"maxlen": 8},
    "case-formulas": {"maxn": 20},
    "leftzero-counter": {"bound": 20},
    "eq1": {"max_size": 5},
    "eq10": {"maxexp": 30},
    "hom-trap": {"max_order": 3},
    "strong-no": {"max_size": 4},
}

# total word length for the homomorphism check in the embedding scenario
HOM_BUDGET = 10


class BoundError(ValueError):
    pass


@dataclass
class ScenarioReport:
    scenario: str
    params: dict
    status: str
    checked: int
    counterexample: object = None
    ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> ScenarioReport:
        return cls(**d)


def _bound(scenario, name, value, lo=1):
    cap = CAPS[scenario][name]
    if not lo <= value <= cap:
        raise BoundError(f"{scenario}: {name}={value} outside [{lo}, {cap}]")


class _Run:
    """Collects the outcome of one scenario."""

    def __init__(self, scenario, params):
        self.scenario, self.params = scenario, params
        self.checked = 0
        self.counterexample = None
        self.start = time.perf_counter()

    def check(self, ok, counterexample) -> bool:
        self.checked += 1
        if not ok and self.counterexample is None:
            self.counterexample = counterexample() if callable(counterexample) else counterexample
        return ok

    @property
    def failed(self):
        return self.counterexample is not None

    def report(self) -> ScenarioReport:
        ms = (time.perf_counter() - self.start) * 1000
        status = "fail" if self.failed else "pass"
        return ScenarioReport(self.scenario, self.params, status, self.checked, self.counterexample, round(ms, 3))


def verify_lemma_positive(maxlen: int = 10) -> ScenarioReport:
    _bound("lemma-positive", "maxlen", maxlen)
    run = _Run("lemma-positive", {"maxlen": maxlen})
    for w in enumerate_normal_forms(A_SYSTEM, maxlen):
        if not run.check(len(phi(w)) > 0, {"word": w}):
            break
    return run.report()


def verify_embedding(maxlen: int = 8) -> ScenarioReport:
    """phi is injective on normal forms up to ``maxlen`` and multiplicative on
    pairs of total length at most ``HOM_BUDGET``.

    ``checked`` counts the C(N, 2) distinctness pairs plus the homomorphism pairs.
    """
    _bound("embedding", "maxlen", maxlen)
    run = _Run("embedding", {"maxlen": maxlen})
    words = enumerate_normal_forms(A_SYSTEM, maxlen)
    images = {}
    for w in words:
        img = phi(w).letters
        if img in images:
            run.check(False, {"words": [images[img], w], "image": img})
            return run.report()
        images[img] = w
    run.checked += len(words) * (len(words) - 1) // 2
    image_of = {w: img for img, w in images.items()}
    short = [w for w in words if len(w) < HOM_BUDGET]
    for u in short:
        pu = phi(u)
        for v in short:
            if len(u) + len(v) > HOM_BUDGET:
                break
            uv = fp_multiply(A_SYSTEM, u, v, strict=False)
            lhs = image_of.get(uv) or phi(uv).letters
            if not run.check(lhs == fg_mul(pu, phi(v)).letters, {"u": u, "v": v}):
                return run.report()
    return run.report()


def case_2a_formula(n: int) -> str:
    """y^-2 (x^-1 y^-1)^(n-1) x^-1 y written in letters (capitals are inverses)."""
    return "YY" + "XY" * (n - 1) + "Xy"


def verify_case_formulas(maxn: int = 20) -> ScenarioReport:
    _bound("case-formulas", "maxn", maxn)
    run = _Run("case-formulas", {"maxn": maxn})
    for n in range(1, maxn + 1):
        run.check(phi("c" * n).letters == case_2a_formula(n), lambda: {"n": n, "phi": str(phi("c" * n))})
    # every normal form ending in c has image ending in x^-1 y
    for w in enumerate_normal_forms(A_SYSTEM, 10):
        if w.endswith("c"):
            run.check(phi(w).ends_with("Xy"), lambda: {"word": w, "phi": str(phi(w))})
    return run.report()


def u_description_members(depth: int):
    """Members of the explicit description of U reachable with at most ``depth``
    generator factors, paired with that minimal factor count."""
    ctx = leftzero_context()
    y, z = 0, 1
    out = []
    for i in range(1, depth + 1):
        out.append((ctx.element(Comm(i, 0), y), i))
        out.append((ctx.element(Null(i), z), i))
    for i in range(-depth, depth + 1):
        # (a,y)^k (x_1,z) = (x_{1-k}, y); (a,y)(x_1,z)(a,y)^j = (x_j, y)
        need = 1 - i + 1 if i <= 0 else i + 2
        if need <= depth:
            out.append((ctx.element(Null(i), y), need))
    out.append((ctx.element(ZERO, y), 3))
    out.append((ctx.element(ZERO, z), 2))
    return [(p, k) for p, k in out if k <= depth]


def verify_leftzero_counter(bound: int = 20) -> ScenarioReport:
    _bound("leftzero-counter", "bound", bound)
    run = _Run("leftzero-counter", {"bound": bound})
    ctx = leftzero_context()
    y, z = 0, 1
    x0z = ctx.element(Null(0), z)
    run.check(not in_U_leftzero(x0z), {"element": str(x0z), "claim": "(x_0, z) not in U"})
    gens = [ctx.element(Comm(1, 0), y), ctx.element(Null(1), z)]
    reached = bounded_closure(gens, bound)
    for p in sorted(reached, key=str):
        run.check(in_U_leftzero(p), lambda: {"element": str(p), "claim": "closure inside U"})
    for p, _ in u_description_members(bound):
        run.check(p in reached, lambda: {"element": str(p), "claim": "U member reached"})
    for i in range(1, bound + 1):
        b_i = ctx.element(Comm(0, i), z)
        for j in range(i + 1, bound + 1):
            first = ctx.element(Null(i), z) * b_i
            second = ctx.element(Null(j), z) * b_i
            ok = first == x0z and second == ctx.element(Null(j - i), z) and in_U_leftzero(second)
            run.check(ok, lambda: {"i": i, "j": j, "got": [str(first), str(second)]})
    return run.report()


def verify_eq1(max_size: int = 5) -> ScenarioReport:
    """If V^(n+1) is inside V then X_i = V n V^(i+1) satisfies X_i^(n-i+1) inside X_i."""
    _bound("eq1", "max_size", max_size)
    run = _Run("eq1", {"max_size": max_size})
    for name, S in _catalog.catalog(max_size):
        els = list(S.elements)
        for mask in range(1, 1 << S.size):
            V = frozenset(e for e in els if mask >> e & 1)
            powers = [None, V]
            for k in range(2, 6):
                powers.append(S.set_product(powers[-1], V))
            for n in range(1, 5):
                if not powers[n + 1] <= V:
                    continue
                run.checked += 1
                for i in range(1, n):
                    X = V & powers[i + 1]
                    ok = S.set_power(X, n - i + 1) <= X
                    run.check(ok, lambda: {"semigroup": name, "V": sorted(V), "n": n, "i": i})
    return run.report()


def verify_eq10(maxexp: int = 30) -> ScenarioReport:
    """Powers of (b, t) in A^1 x N with N = {0, x} null and t = x."""
    _bound("eq10", "maxexp", maxexp, lo=2)
    run = _Run("eq10", {"maxexp": maxexp})
    N = null(2)
    t = N.index("x")
    m, r = index_period(N, t)
    i = m - 1
    target = N.power(t, i + r)
    ctx = ProductContext("A1", N)
    g = ctx.element(AWord("b"), t)
    powers = [g]
    for _ in range(maxexp - 1):
        powers.append(powers[-1] * g)
    for n, p in enumerate(powers, start=1):
        run.check((p.right == target) == (n >= 2), lambda: {"n": n, "power": str(p)})
    projection = {p.left.word for p in powers if p.right == target}
    expected = {"b" * (i + k * r) for k in range(1, maxexp) if i + k * r <= maxexp}
    run.check(projection == expected, lambda: {"projection": sorted(projection, key=len)})
    bad = ctx.element(AWord("b" * i), target)
    run.check(bad not in powers, {"element": str(bad), "claim": "not a power of (b, x)"})
    return run.report()


# -- small semigroup enumeration -----------------------------------------------


def _cache_dir() -> Path:
    return Path(os.environ.get("SEMISEP_CACHE", Path.home() / ".cache" / "semisep"))


def _enumerate_tables(n: int) -> list[tuple[int, ...]]:
    out = []
    for flat in product(range(n), repeat=n * n):
        rows = [flat[k * n:(k + 1) * n] for k in range(n)]
        if _is_associative(rows, n):
            out.append(flat)
    return out


def _is_associative(rows, n):
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            rab = rows[ra[b]]
            for c in range(n):
                if rab[c] != ra[rows[b][c]]:
                    return False
    return True


def associative_tables(n: int, cache: bool = True) -> list[tuple[int, ...]]:
    """All associative n x n tables, flattened row-major, in lexicographic order.

    Order 3 is cached on disk as one table per line.
    """
    if n > CAPS["hom-trap"]["max_order"]:
        raise BoundError(f"table enumeration is capped at order {CAPS['hom-trap']['max_order']}")
    path = _cache_dir() / f"assoc{n}.txt"
    if cache and n >= 3 and path.exists():
        tables = [tuple(map(int, ln.split())) for ln in path.read_text().splitlines() if ln.strip()]
        if all(len(t) == n * n for t in tables):
            return tables
    tables = _enumerate_tables(n)
    if cache and n >= 3:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_text("".join(" ".join(map(str, t)) + "\n" for t in tables))
            tmp.replace(path)
        except OSError:
            pass
    return tables


def _table_semigroup(flat, n) -> FiniteSemigroup:
    return FiniteSemigroup([flat[k * n:(k + 1) * n] for k in range(n)], check=False)


def verify_hom_trap(max_order: int = 3) -> ScenarioReport:
    """Any image of A in a small finite semigroup puts the image of b in a group."""
    _bound("hom-trap", "max_order", max_order)
    run = _Run("hom-trap", {"max_order": max_order})
    counts = {}
    for n in range(1, max_order + 1):
        tables = associative_tables(n)
        counts[str(n)] = len(tables)
        naive = count_tables_naively(n)
        run.check(naive == len(tables), {"order": n, "enumerated": len(tables), "naive": naive})
        for flat in tables:
            T = _table_semigroup(flat, n)
            J = green_classes(T, "J")
            H = green_classes(T, "H")
            for a, b, c in product(T.elements, repeat=3):
                if T.product(a, b, b, c) != b:
                    continue
                bb, bbb = T.power(b, 2), T.power(b, 3)
                ok = (
                    lies_in_subgroup(T, b)
                    and b in closure(T, [bb, bbb])
                    and J.related(b, bb)
                    and is_group_hclass(T, H.class_of(b))
                )
                if not run.check(ok, {"table": list(flat), "alpha": a, "beta": b, "gamma": c}):
                    break
    run.params = {"max_order": max_order, "table_counts": counts}
    return run.report()


def verify_strong_no_identity(max_size: int = 4) -> ScenarioReport:
    """Factorisations u b v = a lift to (a, x^3) in S x <x | x^4 = x^5>."""
    _bound("strong-no", "max_size", max_size)
    run = _Run("strong-no", {"max_size": max_size})
    T = monogenic(4, 1)
    x = 0
    x2, x3 = T.power(x, 2), T.power(x, 3)
    for name, S in _catalog.catalog(max_size):
        P = direct_product(S, T)

        def el(s, k):
            return pair_index(T, s, k)

        for a in S.elements:
            target = el(a, x3)
            for b in S.elements:
                for u, v in golubov_set(S, a, b).sorted_pairs():
                    if u != ONE and v != ONE:
                        got = P.product(el(u, x), el(b, x), el(v, x))
                    elif u == ONE and v != ONE:
                        got = P.product(el(b, x), el(v, x2))
                    elif v == ONE and u != ONE:
                        got = P.product(el(u, x2), el(b, x))
                    else:
                        got = el(b, x3)
                    run.check(got == target, lambda: {"semigroup": name, "a": a, "b": b, "u": u, "v": v})
    return run.report()


SCENARIOS = {
    "lemma-positive": verify_lemma_positive,
    "embedding": verify_embedding,
    "case-formulas": verify_case_formulas,
    "leftzero-counter": verify_leftzero_counter,
    "eq1": verify_eq1,
    "eq10": verify_eq10,
    "hom-trap": verify_hom_trap,
    "strong-no": verify_strong_no_identity,
}


@dataclass
class HarnessConfig:
    bounds: dict = field(default_factory=lambda: {k: dict(v) for k, v in DEFAULTS.items()})
    only: tuple[str, ...] | None = None


def run_scenario(scenario: str, **bounds) -> ScenarioReport:
    if scenario not in SCENARIOS:
        raise KeyError(scenario)
    params = {**DEFAULTS[scenario], **bounds}
    try:
        return SCENARIOS[scenario](**params)
    except BoundError as e:
        return ScenarioReport(scenario, params, "fail", 0, {"error": str(e)}, 0.0)


def run_all(config: HarnessConfig | None = None) -> list[ScenarioReport]:
    config = config or HarnessConfig()
    names = config.only or tuple(SCENARIOS)
    return [run_scenario(name, **config.bounds.get(name, {})) for name in names]


def count_tables_naively(n: int) -> int:
    """Count associative n x n tables with a separate vectorised filter."""
    import numpy as np

    flats = np.array(list(product(range(n), repeat=n * n)), dtype=np.int64).reshape(-1, n, n)
    ok = np.ones(len(flats), dtype=bool)
    rows = np.arange(len(flats))[:, None]
    for a in range(n):
        for b in range(n):
            ab = flats[:, a, b]
            for c in range(n):
                bc = flats[:, b, c]
                ok &= flats[rows[:, 0], ab, c] == flats[rows[:, 0], a, bc]
    return int(ok.sum())

