import itertools

from hypothesis import given, strategies as st

from conftest import SORT_STAR, VARS3, term_strategy
from pts.syntax import (
    App,
    Const,
    Lam,
    Pi,
    Var,
    VarT,
    concat,
    decode,
    delete,
    encode,
    fv,
    is_fresh,
    member,
    term_size,
)

x, y, z = Var("x"), Var("y"), Var("z")
star = Const(SORT_STAR)


def test_decode_examples():
    assert decode(0) == Var("x0")
    assert decode(12) == Var("x12")


def test_encode_examples():
    assert encode(Var("x7")) == 7
    assert encode(Var("foo")) == 0
    assert encode(Var("x0")) == 0
    assert encode(Var("x01")) == 0  # leading zero is not canonical


def test_encode_decode_right_inverse():
    for n in range(10001):
        assert encode(decode(n)) == n


@given(st.integers(min_value=0, max_value=10**9))
def test_encode_decode_large(n):
    assert encode(decode(n)) == n


def test_fv_examples():
    assert fv(VarT(x)) == (x,)
    assert fv(Lam(x, VarT(y), VarT(x))) == (y,)
    assert fv(App(VarT(x), VarT(x))) == (x, x)
    assert fv(Const(SORT_STAR)) == ()
    assert fv(Pi(x, VarT(y), App(VarT(x), VarT(z)))) == (y, z)


def test_is_fresh_examples():
    assert is_fresh(y, Lam(x, star, VarT(x)))
    assert not is_fresh(x, VarT(x))
    assert not is_fresh(y, Lam(x, VarT(y), VarT(x)))


@given(term_strategy())
def test_fv_deterministic(m):
    assert fv(m) == fv(m)


@given(term_strategy())
def test_fv_order_annotation_first(m):
    match m:
        case Lam(b, ann, body) | Pi(b, ann, body):
            assert fv(m) == fv(ann) + delete(fv(body), b)
        case App(fn, arg):
            assert fv(m) == fv(fn) + fv(arg)


def _all_lists(alphabet, max_len):
    for n in range(max_len + 1):
        yield from (tuple(t) for t in itertools.product(alphabet, repeat=n))


ALPHABET = (Var("a"), Var("b"), Var("c"), Var("d"))


def test_genlist_delete_exhaustive():
    for xs in _all_lists(ALPHABET, 5):
        for v in ALPHABET:
            for w in ALPHABET:
                # delIn: w in delete(xs, v) <-> w != v and w in xs
                assert member(w, delete(xs, v)) == (w != v and member(w, xs))
                # delNotIn: w not in delete(xs, v) <-> w == v or w not in xs
                assert (not member(w, delete(xs, v))) == (w == v or not member(w, xs))


def test_genlist_concat_exhaustive():
    small = list(_all_lists(ALPHABET, 3))
    for xs in small:
        for ys in small:
            for v in ALPHABET:
                # appIn / appNotIn
                assert member(v, concat(xs, ys)) == (member(v, xs) or member(v, ys))
                assert (not member(v, concat(xs, ys))) == (
                    not member(v, xs) and not member(v, ys)
                )


@given(st.lists(st.sampled_from(ALPHABET), max_size=12),
       st.lists(st.sampled_from(ALPHABET), max_size=12),
       st.sampled_from(ALPHABET))
def test_genlist_concat_random(xs, ys, v):
    assert member(v, concat(xs, ys)) == (member(v, xs) or member(v, ys))


def test_delete_all_occurrences():
    assert delete((x, y, x), x) == (y,)
    assert not member(x, delete((x, x, x), x))


@given(term_strategy())
def test_term_size_positive(m):
    assert term_size(m) >= 1
