"""Tour of nilpotent algebras: objects, bases, jet arithmetic, object maps.

Run:  python demos/weil_algebras.py
"""

from fnlab import (D2, InfMorphism, Poly, PolyMap, SimplicialObject, d_cube,
                   d_paren, d_order, make_algebra, oplus)
from fnlab.rationals import Q
from fnlab.weil import from_dense


def show(obj):
    alg = make_algebra(obj)
    monos = ", ".join(alg.monomial_str(i) for i in range(alg.dim))
    print(f"  {obj!r:<24} dim {alg.dim:>2}   basis: {monos}")


print("== infinitesimal objects and their algebras ==")
show(d_cube(2))
show(d_paren(2))
show(SimplicialObject(3, frozenset({(1, 3), (2, 3)})))
show(SimplicialObject(4, frozenset({(2, 4), (3, 4)})))
show(d_order(2))

print()
print("== combining objects so cross products vanish ==")
print("  D + D            ->", oplus(d_cube(1), d_cube(1)))
print("  D^2 + D          ->", oplus(d_cube(2), d_cube(1)))
a = d_cube(1)
print("  associativity    ->", oplus(oplus(a, a), a) == oplus(a, oplus(a, a)))

print()
print("== jet arithmetic: evaluating maps on nilpotent arguments ==")
square = PolyMap(1, [Poly.var(1, 0) ** 2])
for obj, label in [(d_cube(1), "square-zero d"), (D2, "second-order d")]:
    alg = make_algebra(obj)
    arg = alg.one() + alg.generator(1)
    print(f"  x^2 at 1+d with {label:<16} -> {square.eval([arg], alg.one())[0]}")
alg_p = make_algebra(d_paren(2))
xy = PolyMap(2, [Poly.var(2, 0) * Poly.var(2, 1)])
print("  x*y at (d1, d2) with d1*d2 = 0   ->",
      xy.eval([alg_p.generator(1), alg_p.generator(2)], alg_p.one()))

print()
print("== maps of objects are nilpotent substitutions ==")
sq = d_cube(2)
tall = SimplicialObject(3, frozenset({(1, 3), (2, 3)}))
twisted = InfMorphism(sq, tall, [Poly.var(2, 0), Poly.var(2, 1),
                                 Poly.var(2, 0) * Poly.var(2, 1)])
print("  (d1,d2) -> (d1,d2,d1*d2) is well defined into", tall)
try:
    InfMorphism(d_cube(1), d_cube(1), [Poly.one(1) + Poly.var(1, 0)])
except Exception as exc:
    print("  d -> 1+d rejected:", exc)

second = InfMorphism(D2, d_cube(1), [Poly.var(1, 0) ** 2])
tangent = from_dense(make_algebra(d_cube(1)), [Q(3), Q(5)])
print("  pulling 3+5d back along d -> d^2:", second.pullback_element(tangent))
