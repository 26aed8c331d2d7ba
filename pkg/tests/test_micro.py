import random

import pytest

from fnlab.errors import PreconditionError, ValidationError
from fnlab.micro import (MicroPoint, TRIANGLE_LABELS, TriangleConfig,
                         amalgamate, flow_field, get_case, jacobi3_defect,
                         restrict, strong_diff, strong_diff_i,
                         tangent_principal, triangle_from_slots,
                         triangle_from_vector_fields)
from fnlab.morphisms import InfMorphism, axis_map, inclusion
from fnlab.poly import Poly, PolyMap
from fnlab.rationals import Q
from fnlab.simplicial import d_cube, d_paren
from fnlab.weil import make_algebra


def square(m, base, e1, e2, corner):
    return MicroPoint.from_table(d_cube(2), m, {
        (): base, (1,): e1, (2,): e2, (1, 2): corner})


GAMMA = MicroPoint.from_table(d_cube(2), 1, {
    (): [1], (1,): [2], (2,): [3], (1, 2): [5]})


def test_restrict_kills_corner():
    r = restrict(GAMMA, inclusion(d_paren(2), d_cube(2)))
    assert r.coeff(()) == (1,) and r.coeff((1,)) == (2,) and r.coeff((2,)) == (3,)


def test_restrict_axis_projection():
    r = restrict(GAMMA, axis_map(d_cube(1), d_cube(2), (1,)))
    assert r.coeff(()) == (1,) and r.coeff((1,)) == (2,)


def test_restrict_diagonal():
    diag = InfMorphism(d_cube(1), d_cube(2), [Poly.var(1, 0), Poly.var(1, 0)])
    r = restrict(GAMMA, diag)
    assert r.coeff(()) == (1,) and r.coeff((1,)) == (5,)


def test_restrict_object_mismatch():
    with pytest.raises(ValidationError):
        restrict(GAMMA, axis_map(d_cube(1), d_cube(3), (1,)))


def test_square_amalgamation_example():
    g1 = square(1, [1], [2], [3], [5])
    g2 = square(1, [1], [2], [3], [4])
    glued = amalgamate(g1, g2, "square")
    assert glued.coeff(()) == (1,)
    assert glued.coeff((1,)) == (2,)
    assert glued.coeff((2,)) == (3,)
    assert glued.coeff((1, 2)) == (4,)
    assert glued.coeff((3,)) == (1,)


def test_square_amalgamation_equal_legs():
    g = square(1, [1], [2], [3], [4])
    assert amalgamate(g, g, "square").coeff((3,)) == (0,)


def test_strong_diff_examples():
    g1 = square(1, [1], [2], [3], [5])
    g2 = square(1, [1], [2], [3], [4])
    assert tangent_principal(strong_diff(g1, g2)) == (1,)
    assert tangent_principal(strong_diff(g1, g1)) == (0,)
    assert tangent_principal(strong_diff(g2, g1)) == (-1,)
    assert strong_diff(g1, g2).base() == (1,)


def test_strong_diff_requires_agreement():
    g1 = square(1, [1], [2], [3], [5])
    bad = square(1, [1], [2], [7], [5])
    with pytest.raises(PreconditionError):
        strong_diff(g1, bad)


def cube(m, table):
    keys = [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]
    full = {k: table.get(k, [0] * m) for k in keys}
    return MicroPoint.from_table(d_cube(3), m, full)


def test_axis_difference_example():
    g1 = cube(1, {(1,): [7], (2, 3): [5], (1, 2, 3): [3]})
    g2 = cube(1, {(1,): [7], (2, 3): [3], (1, 2, 3): [2]})
    sq = strong_diff_i(g1, g2, 1)
    assert sq.coeff(()) == (0,)
    assert sq.coeff((1,)) == (7,)
    assert sq.coeff((2,)) == (2,)
    assert sq.coeff((1, 2)) == (1,)
    glued = amalgamate(g1, g2, "cube-1")
    assert glued.coeff((4,)) == (2,) and glued.coeff((1, 4)) == (1,)


def test_axis_difference_third_axis():
    g1 = cube(1, {(3,): [4], (1, 2): [9], (1, 2, 3): [3]})
    g2 = cube(1, {(3,): [4], (1, 2): [7], (1, 2, 3): [1]})
    sq = strong_diff_i(g1, g2, 3)
    assert sq.coeff((1,)) == (4,)
    assert sq.coeff((2,)) == (2,)
    assert sq.coeff((1, 2)) == (2,)


def test_axis_difference_equal_inputs():
    g = cube(2, {(1,): [1, 2], (2, 3): [5, 5]})
    sq = strong_diff_i(g, g, 2)
    assert sq.coeff((2,)) == (0, 0) and sq.coeff((1, 2)) == (0, 0)


def test_pullback_roundtrip_all_cases():
    rng = random.Random(3)
    rv = lambda m: [Q(rng.randint(-9, 9), rng.choice([1, 2, 3])) for _ in range(m)]
    for name in ("square", "cube-1", "cube-2", "cube-3"):
        case = get_case(name)
        for _ in range(10):
            m = rng.randint(1, 3)
            if name == "square":
                g2 = square(m, rv(m), rv(m), rv(m), rv(m))
                table = {k: list(g2.coeff(k)) for k in [(), (1,), (2,)]}
                table[(1, 2)] = rv(m)
                g1 = MicroPoint.from_table(d_cube(2), m, table)
            else:
                axis = int(name[-1])
                others = tuple(sorted({1, 2, 3} - {axis}))
                g2 = cube(m, {k: rv(m) for k in
                              [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]})
                keys = [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]
                table = {k: list(g2.coeff(k)) for k in keys}
                table[others] = rv(m)
                table[(1, 2, 3)] = rv(m)
                g1 = MicroPoint.from_table(d_cube(3), m, table)
            glued = amalgamate(g1, g2, case)
            assert restrict(glued, case.twisted) == g1
            assert restrict(glued, case.flat) == g2
            apex_dim = make_algebra(case.apex).dim
            assert amalgamate(g1, g2, case,
                              column_order=list(reversed(range(apex_dim)))) == glued


def test_zero_fields_triangle():
    zero = PolyMap(1, [Poly.zero(1)])
    t = triangle_from_vector_fields(zero, zero, zero, [Q(2)])
    for label in TRIANGLE_LABELS:
        assert t.cubes[label].coeff(()) == (2,)
        assert t.cubes[label].coeff((1, 2, 3)) == (0,)
    assert tangent_principal(jacobi3_defect(t)) == (0,)


def test_flow_triangle_corner_example():
    x = PolyMap(1, [Poly.var(1, 0)])
    y = PolyMap(1, [Poly.one(1)])
    z = PolyMap(1, [Poly.zero(1)])
    t = triangle_from_vector_fields(x, y, z, [0])
    assert t.cubes["123"].coeff((1, 2)) == (1,)
    assert t.cubes["213"].coeff((1, 2)) == (0,)
    assert tangent_principal(jacobi3_defect(t)) == (0,)


def test_flow_field_base_is_identity():
    x = PolyMap(2, [Poly.var(2, 1), Poly.var(2, 0)])
    fld = flow_field([x, x, x], (1, 2, 3))
    pt = fld.at([Q(1, 2), Q(-3)])
    assert pt.coeff(()) == (Q(1, 2), Q(-3))


def test_random_field_triangles_satisfy_membership():
    rng = random.Random(17)

    def rpoly():
        pairs = []
        for _ in range(2):
            e = [0, 0]
            for _ in range(rng.randint(0, 2)):
                e[rng.randrange(2)] += 1
            pairs.append((Q(rng.randint(-9, 9), rng.choice([1, 2, 3])), tuple(e)))
        return Poly.from_terms(2, pairs)

    for _ in range(5):
        fields = [PolyMap(2, [rpoly(), rpoly()]) for _ in range(3)]
        at = [Q(rng.randint(-3, 3), rng.choice([1, 2])) for _ in range(2)]
        t = triangle_from_vector_fields(*fields, at)
        assert t.violations() == []
        assert tangent_principal(jacobi3_defect(t)) == (Q(0), Q(0))


def test_random_slot_triangles():
    rng = random.Random(9)
    rv = lambda: [Q(rng.randint(-9, 9), rng.choice([1, 2, 3]))]
    for _ in range(10):
        t = triangle_from_slots(
            1, [rv() for _ in range(4)],
            {(1, 2): (rv(), rv()), (1, 3): (rv(), rv()), (2, 3): (rv(), rv())},
            {label: rv() for label in TRIANGLE_LABELS})
        assert t.violations() == []
        assert tangent_principal(jacobi3_defect(t)) == (0,)


def test_triangle_rejects_wrong_labels():
    g = cube(1, {})
    with pytest.raises(ValidationError):
        TriangleConfig({"123": g})


def test_triangle_violation_detection():
    base = {(): [0], (1,): [1], (2,): [2], (3,): [3]}
    cubes = {label: cube(1, base) for label in TRIANGLE_LABELS}
    bad = dict(base)
    bad[(1,)] = [9]
    cubes["123"] = cube(1, bad)
    t = TriangleConfig(cubes)
    assert t.violations()
    with pytest.raises(PreconditionError):
        jacobi3_defect(t)


def test_translation_equivariance():
    g1 = square(1, [1], [2], [3], [5])
    g2 = square(1, [1], [2], [3], [4])
    shifted1 = square(1, [1], [2], [3], [7])
    shifted2 = square(1, [1], [2], [3], [6])
    assert tangent_principal(strong_diff(shifted1, shifted2)) == \
        tangent_principal(strong_diff(g1, g2))
    assert tangent_principal(strong_diff(shifted1, g2)) == (3,)
