"""From convolutions to the graded bracket on tangent-valued forms.

A p-form is a kernel on the p-cube coefficient space with the base slot
pinned to the projection.  Convolving two kernels in the two possible orders
and expanding along nilpotent directions gives two products that agree below
the corner; their corner gap is the bracket, and antisymmetrizing with
1/(p! q!) lands in the alternating multilinear forms where the graded
antisymmetry and Jacobi identities hold exactly.
Run:  python demos/bracket_tower.py
"""

from fnlab import (Kernel, Permutation, Poly, PolyMap, antisymmetrize,
                   bracket_fn13, bracket_fn123, bracket_l1, bracket_l12,
                   conv_over, conv_under, identity_one_form, is_omega12,
                   is_omega13, is_omega123, perm_kernel, pi_kernel,
                   prod_over, prod_under, shuffle_sigma, vector_field_form)
from fnlab.forms import cube_dim, cube_var, form_from_kernel
from fnlab.rationals import Q

print("== convolutions generalize composition ==")
f = Kernel(0, 1, PolyMap(1, [Poly.var(1, 0) ** 2]))
g = Kernel(0, 1, PolyMap(1, [Poly.var(1, 0) + Poly.one(1)]))
print("  under (f after g):", conv_under(f, g).body)
print("  over  (g after f):", conv_over(f, g).body)

print()
print("== the block shuffle exchanges the two orders ==")
n = cube_dim(1, 1)
k1 = Kernel(1, 1, PolyMap(n, [Poly.var(n, cube_var(1, 1, {1}, 0)) ** 2]))
k2 = Kernel(1, 1, PolyMap(n, [Poly.var(n, cube_var(1, 1, (), 0))
                              * Poly.var(n, cube_var(1, 1, {1}, 0))]))
shuffled = perm_kernel(conv_under(k1, k2), shuffle_sigma(1, 1))
print("  shuffled under == swapped over:", shuffled == conv_over(k2, k1))
print("  shuffle (1,1) sign:", shuffle_sigma(1, 1).sign)

print()
print("== vector fields: the bracket from expanded products ==")
x = vector_field_form(PolyMap(1, [Poly.var(1, 0)]))
y = vector_field_form(PolyMap(1, [Poly.one(1)]))
a, b = prod_under(x, y), prod_over(x, y)
print("  product corners differ:",
      a.coeff({1, 2}).body.comps[0], "vs", b.coeff({1, 2}).body.comps[0])
br = bracket_l1(x, y)
print("  bracket principal kernel:", br.principal().body.comps[0],
      " (= -(classical commutator))")

print()
print("== the graded story on alternating multilinear forms ==")
ident = identity_one_form(2)
print("  identity 1-form is alternating multilinear:", is_omega123(ident))
out = bracket_fn123(vector_field_form(PolyMap(2, [Poly.var(2, 1), Poly.zero(2)])),
                    ident)
print("  bracket with a vector field stays in the class:",
      is_omega12(out) and is_omega13(out))

raw = form_from_kernel(Kernel(2, 1, PolyMap(
    cube_dim(2, 1), [Poly.var(cube_dim(2, 1), cube_var(2, 1, {1}, 0))])))
alt = antisymmetrize(raw)
print("  antisymmetrized kernel:", alt.principal().body.comps[0])
print("  alternating under the swap:",
      perm_kernel(alt.principal(), Permutation((2, 1))) == alt.principal().scale(Q(-1)))

print()
print("== graded antisymmetry at arities (1,1): symmetric, not alternating ==")
u = antisymmetrize(form_from_kernel(Kernel(2, 1, PolyMap(
    cube_dim(2, 1), [Poly.var(cube_dim(2, 1), cube_var(2, 1, {1, 2}, 0)) ** 1]))))
v = alt
lhs = bracket_fn13(u.with_tag("omega13"), v.with_tag("omega13")).principal()
rhs = bracket_fn13(v.with_tag("omega13"), u.with_tag("omega13")).principal()
print("  [u,v] + (-1)^{1*1} [v,u] vanishes:", not (lhs + rhs.scale(Q(-1))))

print()
print("== everything above at scale: run `fnlab verify` ==")
