from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from fnlab.errors import ValidationError
from fnlab.morphisms import InfMorphism, compose_morphisms, identity_morphism, \
    inclusion
from fnlab.poly import Poly
from fnlab.rationals import Q
from fnlab.simplicial import D2, SimplicialObject, d_cube, d_paren, oplus
from fnlab.weil import from_dense, make_algebra


def brute_basis(obj):
    rels = [tuple(s) for s in obj.relations]
    out = [e for e in product(*(range(b) for b in obj.bounds))
           if not any(all(e[i - 1] >= 1 for i in s) for s in rels)]
    if obj.n == 0:
        out = [()]
    return sorted(out, key=lambda e: (sum(e), tuple(-x for x in e)))


def test_square_cube_basis():
    alg = make_algebra(d_cube(2))
    assert [alg.monomial_str(i) for i in range(alg.dim)] == ["1", "d1", "d2", "d1*d2"]
    assert alg.dim == 4


def test_pairwise_vanishing_basis():
    alg = make_algebra(d_paren(2))
    assert alg.dim == 3
    assert [alg.monomial_str(i) for i in range(alg.dim)] == ["1", "d1", "d2"]


def test_relation_bases_match_enumeration():
    obj = SimplicialObject(3, frozenset({(1, 3), (2, 3)}))
    alg = make_algebra(obj)
    assert alg.dim == 5
    assert list(alg.basis) == brute_basis(obj)
    obj4 = SimplicialObject(4, frozenset({(2, 4), (3, 4)}))
    assert make_algebra(obj4).dim == 10 == len(brute_basis(obj4))


def test_second_order_generator():
    alg = make_algebra(D2)
    assert alg.dim == 3
    d = alg.generator(1)
    assert (d * d).coeff((2,)) == 1
    assert not (d * d) * d


@pytest.mark.parametrize("n", range(7))
def test_cube_dimensions(n):
    assert make_algebra(d_cube(n)).dim == 2 ** n


def test_unit_first_and_divisor_closed():
    alg = make_algebra(SimplicialObject(3, frozenset({(1, 2)})))
    assert alg.basis[0] == (0, 0, 0)
    for exps in alg.basis:
        for i, e in enumerate(exps):
            if e:
                lower = tuple(v - 1 if k == i else v for k, v in enumerate(exps))
                assert lower in alg.index


def test_bad_relations_rejected():
    with pytest.raises(ValidationError):
        SimplicialObject(2, frozenset({(2, 1)}))
    with pytest.raises(ValidationError):
        SimplicialObject(2, frozenset({(0, 1)}))
    with pytest.raises(ValidationError):
        SimplicialObject(1, frozenset(), (1,))


def test_oplus_examples():
    assert oplus(d_cube(1), d_cube(1)) == d_paren(2)
    assert oplus(d_cube(2), d_cube(1)) == SimplicialObject(3, frozenset({(1, 3), (2, 3)}))
    a = d_cube(1)
    assert oplus(oplus(a, a), a) == oplus(a, oplus(a, a))
    with pytest.raises(ValidationError):
        oplus(D2, d_cube(1))


@st.composite
def simplicial_objects(draw, n_max=3):
    n = draw(st.integers(0, n_max))
    rels = set()
    for _ in range(draw(st.integers(0, 3))):
        if n == 0:
            break
        size = draw(st.integers(1, n))
        seq = tuple(sorted(draw(st.permutations(range(1, n + 1)))[:size]))
        rels.add(seq)
    return SimplicialObject(n, frozenset(rels))


@settings(max_examples=40, deadline=None)
@given(simplicial_objects(), simplicial_objects(), simplicial_objects())
def test_oplus_associative(a, b, c):
    assert oplus(oplus(a, b), c) == oplus(a, oplus(b, c))


@settings(max_examples=40, deadline=None)
@given(simplicial_objects())
def test_basis_matches_brute_force(obj):
    assert list(make_algebra(obj).basis) == brute_basis(obj)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_ring_axioms(data):
    obj = data.draw(simplicial_objects(3))
    alg = make_algebra(obj)
    rat = st.fractions(min_value=-5, max_value=5).map(lambda f: Q(f.numerator, f.denominator))
    elems = st.lists(rat, min_size=alg.dim, max_size=alg.dim).map(
        lambda v: from_dense(alg, v))
    x, y, z = data.draw(elems), data.draw(elems), data.draw(elems)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * alg.one() == x


def test_multiplication_examples():
    alg = make_algebra(d_cube(2))
    d1, d2 = alg.generator(1), alg.generator(2)
    assert (d1 * d2).coeff((1, 1)) == 1
    algp = make_algebra(d_paren(2))
    assert not algp.generator(1) * algp.generator(2)


def test_morphism_validation():
    sq = d_cube(2)
    tgt = SimplicialObject(3, frozenset({(1, 3), (2, 3)}))
    psi = InfMorphism(sq, tgt, [Poly.var(2, 0), Poly.var(2, 1),
                                Poly.var(2, 0) * Poly.var(2, 1)])
    assert psi.subst[2].degree() == 2
    diag = InfMorphism(d_cube(1), sq, [Poly.var(1, 0), Poly.var(1, 0)])
    assert diag.matrix()[0][0] == 1
    with pytest.raises(ValidationError):
        InfMorphism(d_cube(1), d_cube(1), [Poly.one(1) + Poly.var(1, 0)])
    # the twisted leg map into the wrong target must be rejected
    with pytest.raises(ValidationError):
        InfMorphism(sq, d_paren(3), [Poly.var(2, 0), Poly.var(2, 1),
                                     Poly.var(2, 0) * Poly.var(2, 1)])


def test_second_order_square_map():
    f = InfMorphism(D2, d_cube(1), [Poly.var(1, 0) * Poly.var(1, 0)])
    alg = make_algebra(D2)
    x = from_dense(make_algebra(d_cube(1)), [Q(1), Q(5)])
    assert f.pullback_element(x) == from_dense(alg, [Q(1), Q(0), Q(5)])


def test_morphism_composition():
    sq = d_cube(2)
    tgt = SimplicialObject(3, frozenset({(1, 3), (2, 3)}))
    psi = InfMorphism(sq, tgt, [Poly.var(2, 0), Poly.var(2, 1),
                                Poly.var(2, 0) * Poly.var(2, 1)])
    pad = InfMorphism(d_cube(1), sq, [Poly.var(1, 0), Poly.zero(1)])
    comp = compose_morphisms(pad, psi)
    assert comp.subst == (Poly.var(1, 0), Poly.zero(1), Poly.zero(1))
    ident = identity_morphism(sq)
    assert compose_morphisms(ident, psi) == psi
    assert compose_morphisms(pad, identity_morphism(sq)) == pad
    third = inclusion(d_paren(2), sq)
    assert compose_morphisms(compose_morphisms(third, ident), psi) == \
        compose_morphisms(third, compose_morphisms(ident, psi))


def test_pullback_is_algebra_map():
    sq = d_cube(2)
    tgt = SimplicialObject(3, frozenset({(1, 3), (2, 3)}))
    psi = InfMorphism(sq, tgt, [Poly.var(2, 0), Poly.var(2, 1),
                                Poly.var(2, 0) * Poly.var(2, 1)])
    alg = make_algebra(tgt)
    x = from_dense(alg, [Q(1), Q(2), Q(-1), Q(3), Q(1, 2)])
    y = from_dense(alg, [Q(0), Q(1), Q(1, 3), Q(-2), Q(5)])
    assert psi.pullback_element(x + y) == \
        psi.pullback_element(x) + psi.pullback_element(y)
    assert psi.pullback_element(x * y) == \
        psi.pullback_element(x) * psi.pullback_element(y)
    assert psi.pullback_element(alg.one()) == make_algebra(sq).one()
