"""Named small semigroups used by the verification scenarios and the tests."""
from __future__ import annotations

from itertools import permutations

from .core import (
    FiniteSemigroup,
    adjoin_identity,
    cyclic_group,
    direct_product,
    left_zero,
    monogenic,
    null,
    right_zero,
    trivial,
)


def chain(n: int) -> FiniteSemigroup:
    """{0 < 1 < ... < n-1} under min."""
    return FiniteSemigroup([[min(i, j) for j in range(n)] for i in range(n)], [f"e{i}" for i in range(n)])


def rectangular_band(p: int, q: int) -> FiniteSemigroup:
    """(i, j)(k, l) = (i, l)."""
    els = [(i, j) for i in range(p) for j in range(q)]
    idx = {e: k for k, e in enumerate(els)}
    return FiniteSemigroup(
        [[idx[(a[0], b[1])] for b in els] for a in els],
        [f"({i},{j})" for i, j in els],
    )


def brandt_b2() -> FiniteSemigroup:
    """The five-element Brandt semigroup of 2x2 matrix units plus zero."""
    els = [None, (0, 0), (0, 1), (1, 0), (1, 1)]

    def mul(a, b):
        if a is None or b is None or a[1] != b[0]:
            return 0
        return els.index((a[0], b[1]))

    return FiniteSemigroup(
        [[mul(a, b) for b in els] for a in els],
        ["0", "e11", "e12", "e21", "e22"],
    )


def full_transformations(n: int) -> FiniteSemigroup:
    """All maps {0..n-1} -> itself, composed left to right."""
    from itertools import product

    maps = list(product(range(n), repeat=n))
    idx = {f: k for k, f in enumerate(maps)}
    return FiniteSemigroup(
        [[idx[tuple(g[f[i]] for i in range(n))] for g in maps] for f in maps],
        ["[" + "".join(map(str, f)) + "]" for f in maps],
    )


def symmetric_group(n: int) -> FiniteSemigroup:
    perms = list(permutations(range(n)))
    idx = {p: k for k, p in enumerate(perms)}
    return FiniteSemigroup(
        [[idx[tuple(q[p[i]] for i in range(n))] for q in perms] for p in perms],
        ["(" + "".join(map(str, p)) + ")" for p in perms],
    )


def _build():
    cat = {"trivial": trivial()}
    for m in range(1, 7):
        for r in range(1, 8 - m):
            cat[f"C({m},{r})"] = monogenic(m, r)
    for n in (2, 3, 4):
        cat[f"leftzero{n}"] = left_zero(n)
        cat[f"rightzero{n}"] = right_zero(n)
        cat[f"null{n}"] = null(n)
    cat["chain3"] = chain(3)
    cat["rectband2x2"] = rectangular_band(2, 2)
    cat["rectband2x3"] = rectangular_band(2, 3)
    cat["B2"] = brandt_b2()
    cat["T2"] = full_transformations(2)
    cat["S3"] = symmetric_group(3)
    cat["klein4"] = direct_product(cyclic_group(2), cyclic_group(2))
    cat["leftzero2^1"] = adjoin_identity(left_zero(2))
    cat["null2^1"] = adjoin_identity(null(2))
    cat["leftzero2xnull2"] = direct_product(left_zero(2), null(2))
    return cat


CATALOG: dict[str, FiniteSemigroup] = _build()


def catalog(max_size: int | None = None) -> list[tuple[str, FiniteSemigroup]]:
    """Catalog entries in a fixed order, optionally limited by size."""
    return [(k, S) for k, S in CATALOG.items() if max_size is None or S.size <= max_size]
