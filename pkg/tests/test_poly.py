import pytest
from hypothesis import given, settings, strategies as st

from fnlab.errors import ValidationError
from fnlab.poly import Poly, PolyMap, poly_equal
from fnlab.rationals import Q
from fnlab.simplicial import D2, d_cube, d_paren
from fnlab.weil import from_dense, make_algebra


def naive_eval(poly, args):
    """Term-by-term substitution oracle over the rationals."""
    total = Q(0)
    for e, c in poly.terms.items():
        term = c
        for i, k in enumerate(e):
            for _ in range(k):
                term = term * args[i]
        total += term
    return total


def test_eval_square_zero_argument():
    f = PolyMap(1, [Poly.var(1, 0) ** 2])
    alg = make_algebra(d_cube(1))
    val = f.eval([alg.one() + alg.generator(1)], alg.one())[0]
    assert val == from_dense(alg, [Q(1), Q(2)])


def test_eval_second_order_argument():
    f = PolyMap(1, [Poly.var(1, 0) ** 2])
    alg = make_algebra(D2)
    val = f.eval([alg.one() + alg.generator(1)], alg.one())[0]
    assert val == from_dense(alg, [Q(1), Q(2), Q(1)])


def test_eval_pairwise_vanishing():
    f = PolyMap(2, [Poly.var(2, 0) * Poly.var(2, 1)])
    alg = make_algebra(d_paren(2))
    assert not f.eval([alg.generator(1), alg.generator(2)], alg.one())[0]


def test_compose_examples():
    f = PolyMap(1, [Poly.var(1, 0) ** 2])
    g = PolyMap(1, [Poly.var(1, 0) + Poly.one(1)])
    assert f.compose(g).comps[0] == Poly.from_terms(
        1, [(Q(1), (2,)), (Q(2), (1,)), (Q(1), (0,))])
    assert f.compose(PolyMap.identity(1)) == f
    with pytest.raises(ValidationError):
        f.compose(PolyMap(1, [Poly.var(1, 0), Poly.var(1, 0)]))


def test_poly_equal_examples():
    x = Poly.var(1, 0)
    assert poly_equal(PolyMap(1, [x + x]), PolyMap(1, [x.scale(Q(2))]))
    assert poly_equal(PolyMap(1, [x ** 2]), PolyMap(1, [x * x]))
    tiny = x + Poly.const(1, Q(1, 10 ** 9))
    assert not poly_equal(PolyMap(1, [x]), PolyMap(1, [tiny]))
    with pytest.raises(ValidationError):
        poly_equal(PolyMap(1, [x]), PolyMap(2, [Poly.var(2, 0)]))


@st.composite
def polys(draw, n, deg=3, terms=4):
    pairs = []
    for _ in range(draw(st.integers(0, terms))):
        e = [0] * n
        for _ in range(draw(st.integers(0, deg))):
            e[draw(st.integers(0, n - 1))] += 1
        c = draw(st.integers(-6, 6))
        pairs.append((Q(c, draw(st.integers(1, 3))), tuple(e)))
    return Poly.from_terms(n, pairs)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_eval_matches_naive_substitution(data):
    p = data.draw(polys(2))
    args = [Q(data.draw(st.integers(-4, 4)), data.draw(st.integers(1, 3)))
            for _ in range(2)]
    assert p.eval(args) == naive_eval(p, args)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_compose_associative_random_cubics(data):
    f = PolyMap(2, [data.draw(polys(2)), data.draw(polys(2))])
    g = PolyMap(2, [data.draw(polys(2)), data.draw(polys(2))])
    h = PolyMap(2, [data.draw(polys(2)), data.draw(polys(2))])
    assert f.compose(g).compose(h) == f.compose(g.compose(h))


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_eval_commutes_with_composition(data):
    f = PolyMap(2, [data.draw(polys(2, deg=2)), data.draw(polys(2, deg=2))])
    g = PolyMap(2, [data.draw(polys(2, deg=2)), data.draw(polys(2, deg=2))])
    alg = make_algebra(d_cube(2))
    args = [from_dense(alg, [Q(data.draw(st.integers(-3, 3))) for _ in range(4)])
            for _ in range(2)]
    one = alg.one()
    assert f.compose(g).eval(args, one) == f.eval(g.eval(args, one), one)


def test_eval_identity_is_identity():
    alg = make_algebra(d_cube(2))
    args = [from_dense(alg, [Q(3), Q(1), Q(0), Q(7)]),
            from_dense(alg, [Q(-1), Q(2), Q(5), Q(0)])]
    assert PolyMap.identity(2).eval(args, alg.one()) == args


def test_partial_derivative():
    p = Poly.from_terms(2, [(Q(3), (2, 1)), (Q(1), (0, 2))])
    assert p.partial(0) == Poly.from_terms(2, [(Q(6), (1, 1))])
    assert p.partial(1) == Poly.from_terms(2, [(Q(3), (2, 0)), (Q(2), (0, 1))])


def test_arity_errors():
    f = PolyMap(2, [Poly.var(2, 0)])
    with pytest.raises(ValidationError):
        f.eval([Q(1)])
    with pytest.raises(ValidationError):
        Poly.var(2, 5)
