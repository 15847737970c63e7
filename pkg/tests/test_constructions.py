from itertools import product

import pytest
from hypothesis import given, strategies as st

from semisep.core import SemigroupError, left_zero, monogenic
from semisep.constructions import (
    ZERO,
    AWord,
    Comm,
    FreeGroupWord,
    Null,
    ProductContext,
    bounded_closure,
    fc2_phi,
    fg_inverse,
    fg_mul,
    fg_reduce,
    in_U_leftzero,
    leftzero_context,
    parse_fg,
    parse_selement,
    phi,
    s_mul,
)
from semisep.harness import case_2a_formula
from semisep.presentations import A_SYSTEM, PresentationError, enumerate_normal_forms

fg_letters = st.text(alphabet="xXyY", max_size=16)


def test_fg_reduce_examples():
    assert fg_reduce("xXy").letters == "y"
    assert fg_reduce("yXxY").letters == ""
    assert str(fg_reduce("YYXy")) == "y^-2 x^-1 y"
    assert str(FreeGroupWord("")) == "ε"
    with pytest.raises(ValueError):
        fg_reduce("xz")


def test_unreduced_word_rejected():
    with pytest.raises(ValueError):
        FreeGroupWord("xX")


@given(fg_letters, fg_letters, fg_letters)
def test_free_group_laws(a, b, c):
    u, v, w = fg_reduce(a), fg_reduce(b), fg_reduce(c)
    assert fg_mul(fg_mul(u, v), w) == fg_mul(u, fg_mul(v, w))
    assert fg_mul(u, v) == fg_reduce(a + b)
    assert fg_mul(u, fg_inverse(u)).letters == ""
    assert fg_reduce(u.letters) == u
    assert parse_fg(str(u)) == u


def test_phi_examples():
    assert phi("a").letters == "x"
    assert phi("c") == parse_fg("y^-2 x^-1 y")
    assert phi("abc") == parse_fg("x y^-1 x^-1 y")
    with pytest.raises(PresentationError):
        phi("abbc")


@pytest.mark.parametrize("n", range(1, 21))
def test_phi_of_powers_of_c(n):
    assert phi("c" * n).letters == case_2a_formula(n)
    assert phi("c" * n).ends_with("Xy")


def test_phi_respects_the_relation():
    # image of abbc is x y y (y^-2 x^-1 y) = y
    assert fg_reduce("xyyYYXy") == phi("b")


def test_phi_homomorphism_and_injective_on_short_words():
    nfs = enumerate_normal_forms(A_SYSTEM, 6)
    images = {}
    for w in nfs:
        img = phi(w)
        assert img not in images, (w, images.get(img))
        images[img] = w
    short = [w for w in nfs if len(w) <= 3]
    for u in short:
        for v in short:
            assert phi(AWord(u) * AWord(v)) == fg_mul(phi(u), phi(v))


def test_aword_examples():
    assert (AWord("ab") * AWord("bc")).word == "b"
    assert str(AWord("aabbb")) == "a^2b^3"
    assert str(AWord("")) == "1"
    assert AWord("") * AWord("a") == AWord("a")
    with pytest.raises(PresentationError):
        AWord("abbc")


def test_s_mul_examples():
    assert s_mul(Comm(1, 0), Comm(0, 2)) == Comm(1, 2)
    assert s_mul(Null(3), Comm(1, 0)) == Null(4)
    assert s_mul(Comm(0, 1), Null(0)) == Null(1)
    assert s_mul(Null(1), Null(2)) == ZERO
    assert s_mul(ZERO, Comm(1, 1)) == ZERO
    assert fc2_phi(3, 5) == -2
    with pytest.raises(ValueError):
        fc2_phi(0, 0)


def _elements():
    comm = [Comm(i, j) for i in range(5) for j in range(5) if 1 <= i + j <= 4]
    return comm + [Null(z) for z in range(-6, 7)] + [ZERO]


def test_s_mul_associative_exhaustive():
    els = _elements()
    for p, q, r in product(els, repeat=3):
        assert s_mul(s_mul(p, q), r) == s_mul(p, s_mul(q, r))


@pytest.mark.parametrize("text, el", [("0", ZERO), ("x_{3}", Null(3)), ("x_-2", Null(-2)), ("a^2 b^1", Comm(2, 1)), ("b^4", Comm(0, 4))])
def test_parse_selement(text, el):
    assert parse_selement(text) == el


def test_selement_render_round_trip():
    for el in _elements():
        assert parse_selement(str(el)) == el
    with pytest.raises(ValueError):
        parse_selement("q")


def test_product_mul_examples():
    ctx = leftzero_context()
    p = ctx.element(Comm(1, 0), "y")
    q = ctx.element(Null(1), "z")
    pq = p * q
    assert pq.left == Null(0) and ctx.right.name(pq.right) == "y"
    assert str(pq) == "(x_{0}, y)"
    other = ProductContext("A", monogenic(2, 1))
    with pytest.raises(SemigroupError):
        p * other.element(AWord("a"), 0)
    with pytest.raises(SemigroupError):
        other.element(AWord(""), 0)
    assert ProductContext("A1", monogenic(2, 1)).element(AWord(""), 0).left.word == ""


def test_in_U_leftzero_examples():
    ctx = leftzero_context()
    assert in_U_leftzero(ctx.element(Comm(2, 0), "y"))
    assert not in_U_leftzero(ctx.element(Comm(2, 0), "z"))
    assert not in_U_leftzero(ctx.element(Comm(1, 1), "y"))
    assert in_U_leftzero(ctx.element(Null(1), "z"))
    assert not in_U_leftzero(ctx.element(Null(0), "z"))
    assert in_U_leftzero(ctx.element(Null(-3), "y"))
    with pytest.raises(SemigroupError):
        in_U_leftzero(ProductContext("S", monogenic(2, 1)).element(ZERO, 0))


def test_bounded_closure_matches_description():
    ctx = leftzero_context()
    gens = [ctx.element(Comm(1, 0), "y"), ctx.element(Null(1), "z")]
    found = bounded_closure(gens, 6)
    assert all(in_U_leftzero(p) for p in found)
    assert ctx.element(Null(0), "y") in found
    assert bounded_closure(gens, 1) == set(gens)
    with pytest.raises(ValueError):
        bounded_closure(gens, 0)
    with pytest.raises(SemigroupError):
        bounded_closure(gens, 20, cap=5)


def test_bounded_closure_in_A():
    ctx = ProductContext("A", left_zero())
    gens = [ctx.element(AWord(ch), "y") for ch in "abc"]
    found = bounded_closure(gens, 4)
    assert {p.left.word for p in found} == set(enumerate_normal_forms(A_SYSTEM, 4))
