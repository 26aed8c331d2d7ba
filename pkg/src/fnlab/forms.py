"""Tangent-vector-valued forms and their bracket tower.

A p-form on R^m is stored through its kernels: polynomial maps from the
p-cube coefficient space (variables gamma_S for S a subset of {1..p}, m
coordinates each, ordered by the cube algebra basis) back to R^m.  A
FormElem is a nilpotent expansion of kernels: one kernel per subset of its
expansion directions, with the unit slot pinned to the base projection for
the Dirac-normalized classes.

The two convolutions evaluate one kernel inside the other with Weil-valued
scalars; their expanded products agree below the corner, and the corner gap,
extracted by the same amalgamation solver that powers strong differences of
points, is the bracket.  Antisymmetrizing with 1/(p! q!) yields the graded
bracket on alternating forms.
"""

from itertools import permutations as iter_permutations

from .errors import InternalError, PreconditionError, ValidationError
from .micro import case_compat_errors, case_solve, get_case, restrict_coeffs
from .poly import Poly, PolyMap
from .rationals import Q, factorial
from .simplicial import d_cube
from .weil import WeilElement, make_algebra


# ---------------------------------------------------------------------------
# cube coordinates and kernels


def cube_dim(p: int, m: int) -> int:
    return m * (1 << p)


def cube_positions(p: int):
    """Subsets of {1..p} in basis order, as (position, frozenset) pairs."""
    alg = make_algebra(d_cube(p))
    out = []
    for pos, exps in enumerate(alg.basis):
        out.append((pos, frozenset(i + 1 for i, e in enumerate(exps) if e)))
    return out


def subset_position(p: int, subset) -> int:
    alg = make_algebra(d_cube(p))
    exps = tuple(1 if i + 1 in subset else 0 for i in range(p))
    return alg.index[exps]


def cube_var(p: int, m: int, subset, j: int) -> int:
    """Variable index of coordinate j of the gamma_subset slot."""
    return subset_position(p, subset) * m + j


class Kernel:
    """Polynomial map from the p-cube coefficient space to R^m."""

    __slots__ = ("p", "m", "body", "degree_bound")

    def __init__(self, p: int, m: int, body: PolyMap):
        if body.in_dim != cube_dim(p, m) or body.out_dim != m:
            raise ValidationError(
                f"kernel body must map {cube_dim(p, m)} -> {m} for arity {p}")
        self.p = p
        self.m = m
        self.body = body
        self.degree_bound = body.degree()

    def _check(self, other):
        if self.p != other.p or self.m != other.m:
            raise ValidationError("kernels of different arity or model dimension")

    def __add__(self, other):
        if not isinstance(other, Kernel):
            return NotImplemented
        self._check(other)
        return Kernel(self.p, self.m, self.body + other.body)

    def __neg__(self):
        return Kernel(self.p, self.m, -self.body)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Kernel":
        return Kernel(self.p, self.m, self.body.scale(c))

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return (isinstance(other, Kernel) and self.p == other.p
                and self.m == other.m and self.body == other.body)

    def __bool__(self):
        return bool(self.body)

    def __repr__(self):
        return f"Kernel(p={self.p}, m={self.m}, {self.body!r})"


def pi_kernel(p: int, m: int) -> Kernel:
    """Base-point projection: returns the gamma_() slot of the cube."""
    n = cube_dim(p, m)
    return Kernel(p, m, PolyMap(n, [Poly.var(n, j) for j in range(m)]))


def zero_kernel(p: int, m: int) -> Kernel:
    return Kernel(p, m, PolyMap.zero(cube_dim(p, m), m))


# ---------------------------------------------------------------------------
# permutations


class Permutation:
    """Bijection of {1..p}, stored as the image tuple."""

    __slots__ = ("p", "images")

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        p = len(images)
        if sorted(images) != list(range(1, p + 1)):
            raise ValidationError(f"not a permutation of 1..{p}: {images}")
        self.p = p
        self.images = images

    @staticmethod
    def identity(p: int) -> "Permutation":
        return Permutation(range(1, p + 1))

    @staticmethod
    def all(p: int):
        return [Permutation(im) for im in iter_permutations(range(1, p + 1))]

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def apply_subset(self, subset) -> frozenset:
        return frozenset(self.images[i - 1] for i in subset)

    def after(self, other: "Permutation") -> "Permutation":
        """self composed after other: i -> self(other(i))."""
        if self.p != other.p:
            raise ValidationError("permutations of different degree")
        return Permutation(self.images[other.images[i - 1] - 1] for i in range(1, self.p + 1))

    def inverse(self) -> "Permutation":
        inv = [0] * self.p
        for i, im in enumerate(self.images):
            inv[im - 1] = i + 1
        return Permutation(inv)

    @property
    def sign(self) -> int:
        seen = [False] * self.p
        sign = 1
        for i in range(self.p):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.images[j] - 1
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation{self.images}"


def shuffle_sigma(p: int, q: int) -> Permutation:
    """Block shuffle sending 1..p to q+1..q+p and p+1..p+q to 1..q."""
    return Permutation([q + i for i in range(1, p + 1)] + list(range(1, q + 1)))


def perm_kernel(k: Kernel, sigma: Permutation) -> Kernel:
    """Precompose with the axis permutation: result(gamma) = k(gamma^sigma)."""
    if sigma.p != k.p:
        raise ValidationError("permutation degree != kernel arity")
    n = cube_dim(k.p, k.m)
    mapping = [0] * n
    for pos, subset in cube_positions(k.p):
        tgt = subset_position(k.p, sigma.apply_subset(subset))
        for j in range(k.m):
            mapping[pos * k.m + j] = tgt * k.m + j
    comps = [c.remap_variables(mapping) for c in k.body.comps]
    return Kernel(k.p, k.m, PolyMap(n, comps))


# ---------------------------------------------------------------------------
# form elements


OMEGA0 = "omega0"
OMEGA1 = "omega1"
OMEGA12 = "omega12"
OMEGA13 = "omega13"
OMEGA123 = "omega123"

_CLASS_ORDER = (OMEGA0, OMEGA1, OMEGA12, OMEGA13, OMEGA123)

VIEW_EXPANDED = "expanded"    # nilpotent expansion of kernel maps
VIEW_POINTWISE = "pointwise"  # map sending each cube to a tangent vector


class FormElem:
    """Expansion-indexed family of kernels.

    coeffs maps subsets of {1..k} to kernels of arity p on R^m.  Zero
    kernels are dropped; equality compares the surviving coefficient data
    and ignores the view marker.
    """

    __slots__ = ("p", "k", "m", "coeffs", "class_tag", "view")

    def __init__(self, p: int, k: int, m: int, coeffs: dict,
                 class_tag: str = OMEGA0, view: str = VIEW_EXPANDED):
        if class_tag not in _CLASS_ORDER:
            raise ValidationError(f"unknown class tag {class_tag!r}")
        if view not in (VIEW_EXPANDED, VIEW_POINTWISE):
            raise ValidationError(f"unknown view {view!r}")
        clean = {}
        for subset, ker in coeffs.items():
            subset = frozenset(subset)
            if any(i < 1 or i > k for i in subset):
                raise ValidationError(f"expansion subset {set(subset)} out of range")
            if ker.p != p or ker.m != m:
                raise ValidationError("kernel arity or dimension mismatch")
            if ker:
                clean[subset] = ker
        self.p = p
        self.k = k
        self.m = m
        self.coeffs = clean
        self.class_tag = class_tag
        self.view = view

    def coeff(self, subset) -> Kernel:
        return self.coeffs.get(frozenset(subset), zero_kernel(self.p, self.m))

    def principal(self) -> Kernel:
        if self.k != 1:
            raise PreconditionError("principal part needs expansion arity 1")
        return self.coeff({1})

    def with_tag(self, tag: str) -> "FormElem":
        return FormElem(self.p, self.k, self.m, self.coeffs, tag, self.view)

    def __eq__(self, other):
        return (isinstance(other, FormElem) and self.p == other.p
                and self.k == other.k and self.m == other.m
                and self.coeffs == other.coeffs)

    def __repr__(self):
        body = ", ".join(
            f"{sorted(s)}: {ker.body!r}" for s, ker in sorted(
                self.coeffs.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))))
        return f"FormElem(p={self.p}, k={self.k}, m={self.m}, {{{body}}})"


def form_from_kernel(principal, p: int = None, m: int = None,
                     class_tag: str = OMEGA1) -> FormElem:
    """Dirac-normalized form with the given principal kernel."""
    if isinstance(principal, PolyMap):
        if p is None or m is None:
            raise ValidationError("arity and dimension required for a bare map")
        principal = Kernel(p, m, principal)
    return FormElem(principal.p, 1, principal.m,
                    {frozenset(): pi_kernel(principal.p, principal.m),
                     frozenset({1}): principal}, class_tag)


def vector_field_form(x: PolyMap) -> FormElem:
    """A vector field as an arity-0 form: base identity plus principal value."""
    if x.in_dim != x.out_dim:
        raise ValidationError("vector field must map R^m to R^m")
    return form_from_kernel(Kernel(0, x.in_dim, x), class_tag=OMEGA123)


def identity_one_form(m: int) -> FormElem:
    """The (1,1)-form returning the first-order slot unchanged."""
    n = cube_dim(1, m)
    body = PolyMap(n, [Poly.var(n, cube_var(1, m, {1}, j)) for j in range(m)])
    return form_from_kernel(Kernel(1, m, body), class_tag=OMEGA123)


def transpose_views(x: FormElem) -> FormElem:
    """Swap the two encodings; pure relabeling in this representation."""
    view = VIEW_POINTWISE if x.view == VIEW_EXPANDED else VIEW_EXPANDED
    return FormElem(x.p, x.k, x.m, x.coeffs, x.class_tag, view)


def perm_act(x: FormElem, sigma: Permutation) -> FormElem:
    """Axis permutation applied to every kernel coefficient."""
    if sigma.p != x.p:
        raise ValidationError("permutation degree != form arity")
    return FormElem(x.p, x.k, x.m,
                    {s: perm_kernel(ker, sigma) for s, ker in x.coeffs.items()},
                    x.class_tag, x.view)


# ---------------------------------------------------------------------------
# membership predicates


def is_omega1(x: FormElem) -> bool:
    """Dirac condition: the unit-slot kernel is the base projection."""
    if x.k != 1:
        raise PreconditionError("membership predicates expect expansion arity 1")
    return x.coeff(()) == pi_kernel(x.p, x.m)


def _axis_degrees(p: int, m: int, exps):
    degs = [0] * p
    for pos, subset in cube_positions(p):
        for j in range(m):
            e = exps[pos * m + j]
            if e:
                for axis in subset:
                    degs[axis - 1] += e
    return degs


def is_omega12(x: FormElem) -> bool:
    """Multilinearity: the principal kernel is degree-1 in every axis grading.

    Scaling axis i of the cube by a formal scalar multiplies every gamma_S
    with i in S; the kernel must come out scaled exactly once per axis, which
    holds iff each monomial has axis degree one in every direction.
    """
    if not is_omega1(x):
        return False
    ker = x.principal()
    for comp in ker.body.comps:
        for exps in comp.terms:
            if any(d != 1 for d in _axis_degrees(x.p, x.m, exps)):
                return False
    return True


def is_omega13(x: FormElem) -> bool:
    """Alternation: permuting cube axes multiplies the kernel by the sign."""
    if not is_omega1(x):
        return False
    ker = x.principal()
    if x.p <= 3:
        sigmas = Permutation.all(x.p)
    else:
        sigmas = [Permutation([*range(1, i), i + 1, i, *range(i + 2, x.p + 1)])
                  for i in range(1, x.p)]
    for sigma in sigmas:
        if perm_kernel(ker, sigma) != ker.scale(Q(sigma.sign)):
            return False
    return True


def is_omega123(x: FormElem) -> bool:
    return is_omega12(x) and is_omega13(x)


_PREDICATES = {
    OMEGA0: lambda x: True,
    OMEGA1: is_omega1,
    OMEGA12: is_omega12,
    OMEGA13: is_omega13,
    OMEGA123: is_omega123,
}


def verify_class(x: FormElem) -> bool:
    """Check the claimed class tag against the actual predicates."""
    return _PREDICATES[x.class_tag](x)


# ---------------------------------------------------------------------------
# convolution and expanded product


def _conv_core(outer_bar, inner_bar, outer_axes, inner_axes, total, m, ext_n):
    """Evaluate the inner kernels inside the outer ones with Weil scalars.

    outer_bar / inner_bar map expansion subsets to kernels of arity
    len(outer_axes) / len(inner_axes); the axis tuples partition {1..total}.
    Scalars live in the algebra on ext_n expansion generators tensored with
    one square-zero generator per outer axis; coefficients are polynomials in
    the total-cube variables.  Returns expansion subset -> Kernel(total).
    """
    po, qi = len(outer_axes), len(inner_axes)
    big_alg = make_algebra(d_cube(ext_n + po))
    ext_alg = make_algebra(d_cube(ext_n))
    n_gamma = cube_dim(total, m)
    big_one = WeilElement(big_alg, {0: Poly.one(n_gamma)})
    ext_one = WeilElement(ext_alg, {0: Poly.one(n_gamma)})

    outer_subsets = cube_positions(po)

    def big_position(ext_subset, outer_pos_subset):
        exps = [0] * (ext_n + po)
        for i in ext_subset:
            exps[i - 1] = 1
        for t in outer_pos_subset:
            exps[ext_n + t - 1] = 1
        return big_alg.index[tuple(exps)]

    # arguments for the inner kernels: gamma viewed with outer-directions scalars
    args = []
    for _pos, s_own in cube_positions(qi):
        s_global = {inner_axes[s - 1] for s in s_own}
        for j in range(m):
            coeffs = {}
            for _tpos, t_own in outer_subsets:
                t_global = {outer_axes[t - 1] for t in t_own}
                var = cube_var(total, m, s_global | t_global, j)
                coeffs[big_position((), t_own)] = Poly.var(n_gamma, var)
            args.append(WeilElement(big_alg, coeffs))

    inner_vals = [WeilElement(big_alg, {}) for _ in range(m)]
    for v_subset, ker in inner_bar.items():
        emb = WeilElement(big_alg, {big_position(v_subset, ()): Poly.one(n_gamma)})
        vals = ker.body.eval(args, big_one)
        for j in range(m):
            inner_vals[j] = inner_vals[j] + emb * vals[j]

    # split the scalars: polynomial h-cube entries over the expansion algebra
    split = {}
    for pos, exps in enumerate(big_alg.basis):
        ext_subset = frozenset(i + 1 for i in range(ext_n) if exps[i])
        t_own = frozenset(t + 1 for t in range(po) if exps[ext_n + t])
        ext_pos = ext_alg.index[tuple(1 if i + 1 in ext_subset else 0
                                      for i in range(ext_n))]
        split[pos] = (subset_position(po, t_own), ext_pos)

    h_args = []
    for tpos in range(1 << po):
        for j in range(m):
            h_args.append({})
    for j in range(m):
        for pos, poly in inner_vals[j].coeffs.items():
            tpos, ext_pos = split[pos]
            h_args[tpos * m + j][ext_pos] = poly
    h_args = [WeilElement(ext_alg, c) for c in h_args]

    out_vals = [WeilElement(ext_alg, {}) for _ in range(m)]
    for u_subset, ker in outer_bar.items():
        emb = WeilElement(ext_alg, {
            ext_alg.index[tuple(1 if i + 1 in u_subset else 0
                                for i in range(ext_n))]: Poly.one(n_gamma)})
        vals = ker.body.eval(h_args, ext_one)
        for j in range(m):
            out_vals[j] = out_vals[j] + emb * vals[j]

    result = {}
    for pos, exps in enumerate(ext_alg.basis):
        subset = frozenset(i + 1 for i, e in enumerate(exps) if e)
        comps = [out_vals[j].coeffs.get(pos, Poly.zero(n_gamma)) for j in range(m)]
        if any(comps):
            result[subset] = Kernel(total, m, PolyMap(n_gamma, comps))
    return result


def conv_under(f: Kernel, g: Kernel) -> Kernel:
    """g evaluated with scalars expanded along f's axes, then f applied."""
    if f.m != g.m:
        raise ValidationError("kernels on different model dimensions")
    total = f.p + g.p
    out = _conv_core({frozenset(): f}, {frozenset(): g},
                     tuple(range(1, f.p + 1)),
                     tuple(range(f.p + 1, total + 1)), total, f.m, 0)
    return out.get(frozenset(), zero_kernel(total, f.m))


def conv_over(f: Kernel, g: Kernel) -> Kernel:
    """f evaluated with scalars expanded along g's axes, then g applied."""
    if f.m != g.m:
        raise ValidationError("kernels on different model dimensions")
    total = f.p + g.p
    out = _conv_core({frozenset(): g}, {frozenset(): f},
                     tuple(range(f.p + 1, total + 1)),
                     tuple(range(1, f.p + 1)), total, f.m, 0)
    return out.get(frozenset(), zero_kernel(total, f.m))


def _prod(x: FormElem, y: FormElem, under: bool) -> FormElem:
    if x.m != y.m:
        raise ValidationError("forms on different model dimensions")
    ext_n = x.k + y.k
    xbar = dict(x.coeffs)
    ybar = {frozenset(v + x.k for v in subset): ker
            for subset, ker in y.coeffs.items()}
    total = x.p + y.p
    x_axes = tuple(range(1, x.p + 1))
    y_axes = tuple(range(x.p + 1, total + 1))
    if under:
        out = _conv_core(xbar, ybar, x_axes, y_axes, total, x.m, ext_n)
    else:
        out = _conv_core(ybar, xbar, y_axes, x_axes, total, x.m, ext_n)
    return FormElem(total, ext_n, x.m, out)


def prod_under(x: FormElem, y: FormElem) -> FormElem:
    """Expansion-extended convolution, x's directions first."""
    return _prod(x, y, True)


def prod_over(x: FormElem, y: FormElem) -> FormElem:
    """Expansion-extended convolution with the roles swapped."""
    return _prod(x, y, False)


# ---------------------------------------------------------------------------
# antisymmetrizers


def antisymmetrize(x: FormElem) -> FormElem:
    """Signed sum over all axis permutations of the principal kernel.

    The base projection is symmetric, so it is carried unchanged rather than
    picking up a factor p!.
    """
    ker = x.principal()
    total = None
    for sigma in Permutation.all(x.p):
        term = perm_kernel(ker, sigma).scale(Q(sigma.sign))
        total = term if total is None else total + term
    return FormElem(x.p, 1, x.m,
                    {frozenset(): x.coeff(()), frozenset({1}): total},
                    x.class_tag, x.view)


def antisymmetrize_scaled(x: FormElem, parts) -> FormElem:
    """Antisymmetrize and divide by the product of part factorials."""
    denom = 1
    for part in parts:
        denom *= factorial(part)
    out = antisymmetrize(x)
    return FormElem(out.p, 1, out.m,
                    {frozenset(): out.coeff(()),
                     frozenset({1}): out.principal().scale(Q(1, denom))},
                    x.class_tag, x.view)


# ---------------------------------------------------------------------------
# the bracket tower


def _bracket_core(x: FormElem, y: FormElem) -> FormElem:
    """Strong difference of the two expanded products, at kernel level."""
    a = prod_under(x, y)
    b = prod_over(x, y)
    case = get_case("square")
    order = [frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2})]
    ca = [a.coeff(s) for s in order]
    cb = [b.coeff(s) for s in order]
    bad = case_compat_errors(case, ca, cb)
    if bad:
        raise InternalError(
            f"expanded products disagree below the corner at {bad[0]}")
    apex = case_solve(case, ca, cb)
    tangent = restrict_coeffs(apex, case.extract)
    total = x.p + y.p
    if tangent[0] != pi_kernel(total, x.m):
        raise InternalError("bracket base is not the projection")
    return FormElem(total, 1, x.m,
                    {frozenset(): tangent[0], frozenset({1}): tangent[1]},
                    OMEGA1)


def _require(x: FormElem, pred, name: str):
    if not pred(x):
        raise PreconditionError(f"input does not satisfy {name}")


def bracket_l1(x: FormElem, y: FormElem) -> FormElem:
    """Unnormalized bracket of Dirac-normalized forms."""
    _require(x, is_omega1, "is_omega1")
    _require(y, is_omega1, "is_omega1")
    return _bracket_core(x, y)


def bracket_l12(x: FormElem, y: FormElem) -> FormElem:
    """Bracket restricted to multilinear forms; multilinearity is preserved."""
    _require(x, is_omega12, "is_omega12")
    _require(y, is_omega12, "is_omega12")
    out = _bracket_core(x, y)
    if not is_omega12(out):
        raise InternalError("bracket of multilinear forms lost multilinearity")
    return out.with_tag(OMEGA12)


def bracket_fn13(x: FormElem, y: FormElem) -> FormElem:
    """Graded bracket on alternating forms: antisymmetrized strong difference."""
    _require(x, is_omega13, "is_omega13")
    _require(y, is_omega13, "is_omega13")
    raw = _bracket_core(x, y)
    out = antisymmetrize_scaled(raw, (x.p, y.p))
    if not is_omega13(out):
        raise InternalError("antisymmetrized bracket is not alternating")
    return out.with_tag(OMEGA13)


def bracket_fn123(x: FormElem, y: FormElem) -> FormElem:
    """Graded bracket on alternating multilinear forms."""
    _require(x, is_omega123, "is_omega123")
    _require(y, is_omega123, "is_omega123")
    raw = _bracket_core(x, y)
    out = antisymmetrize_scaled(raw, (x.p, y.p))
    if not (is_omega12(out) and is_omega13(out)):
        raise InternalError("graded bracket left the alternating multilinear class")
    return out.with_tag(OMEGA123)


BRACKETS = {
    "L1": bracket_l1,
    "L12": bracket_l12,
    "FN13": bracket_fn13,
    "FN123": bracket_fn123,
}
