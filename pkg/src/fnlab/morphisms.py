"""Maps of infinitesimal objects as nilpotent polynomial substitutions.

An InfMorphism from S to T is a T.n-tuple of polynomials in S's generators
with zero constant term, subject to well-definedness: every ideal generator
of T (each vanishing product and each power-bound monomial) must reduce to
zero in S's algebra after substitution.  Dually it is an algebra map from
T's algebra to S's; on points it restricts T-expansions to S-expansions.
"""

from .errors import ValidationError
from .poly import Poly
from .rationals import Q
from .simplicial import SimplicialObject
from .weil import WeilElement, make_algebra


class InfMorphism:
    __slots__ = ("source", "target", "subst", "_matrix")

    def __init__(self, source: SimplicialObject, target: SimplicialObject, subst):
        """subst: one Poly in source.n variables per target generator."""
        subst = tuple(subst)
        if len(subst) != target.n:
            raise ValidationError(
                f"need {target.n} substitution components, got {len(subst)}")
        for p in subst:
            if p.n != source.n:
                raise ValidationError("substitution variable count != source generators")
            if p.constant_term():
                raise ValidationError("substitution must have zero constant term")
        self.source = source
        self.target = target
        self.subst = subst
        self._matrix = None
        self._validate()

    def _images(self):
        """Generator images as elements of the source algebra."""
        alg = make_algebra(self.source)
        out = []
        for p in self.subst:
            acc = alg.zero()
            for e, c in p.terms.items():
                acc = acc + alg.monomial(e, c)
            out.append(acc)
        return out

    def _validate(self):
        imgs = self._images()
        for i, b in enumerate(self.target.bounds):
            if imgs[i] ** b:
                raise ValidationError(
                    f"ideal not preserved: image of generator {i + 1} "
                    f"has nonzero power {b}")
        alg = make_algebra(self.source)
        for seq in sorted(self.target.relations):
            prod = alg.one()
            for i in seq:
                prod = prod * imgs[i - 1]
            if prod:
                mono = "*".join(f"d{i}" for i in seq)
                raise ValidationError(f"ideal not preserved: {mono} maps to {prod!r}")

    def matrix(self):
        """Rational matrix of the induced coefficient map on points.

        Rows are indexed by the source algebra basis, columns by the target
        basis: column beta holds the expansion of the substituted monomial
        d^beta in the source algebra.
        """
        if self._matrix is not None:
            return self._matrix
        src = make_algebra(self.source)
        tgt = make_algebra(self.target)
        imgs = self._images()
        cols = []
        for beta in tgt.basis:
            w = src.one()
            for i, e in enumerate(beta):
                for _ in range(e):
                    w = w * imgs[i]
            cols.append(w.coeffs)
        matrix = [[cols[j].get(i, Q(0)) for j in range(tgt.dim)] for i in range(src.dim)]
        self._matrix = matrix
        return matrix

    def pullback_element(self, w: WeilElement) -> WeilElement:
        """Apply the dual algebra map to an element of the target algebra."""
        tgt = make_algebra(self.target)
        if w.algebra is not tgt:
            raise ValidationError("element does not live on the target algebra")
        src = make_algebra(self.source)
        imgs = self._images()
        acc = src.zero()
        for k, c in w.coeffs.items():
            beta = tgt.basis[k]
            term = src.one()
            for i, e in enumerate(beta):
                for _ in range(e):
                    term = term * imgs[i]
            acc = acc + term.scale(c)
        return acc

    def then(self, other: "InfMorphism") -> "InfMorphism":
        """Composite applying self first; requires self.target == other.source."""
        if self.target != other.source:
            raise ValidationError("object mismatch in composition")
        one = Poly.one(self.source.n)
        comps = [p.eval(list(self.subst), one) for p in other.subst]
        src_alg = make_algebra(self.source)
        reduced = []
        for p in comps:
            keep = {}
            for e, c in p.terms.items():
                if src_alg._reduce_exponents(e) is not None:
                    keep[e] = c
            reduced.append(Poly(self.source.n, keep))
        return InfMorphism(self.source, other.target, reduced)

    def __eq__(self, other):
        return (isinstance(other, InfMorphism) and self.source == other.source
                and self.target == other.target and self.subst == other.subst)

    def __repr__(self):
        return f"InfMorphism({self.source!r} -> {self.target!r}: {list(self.subst)})"


def compose_morphisms(f: InfMorphism, g: InfMorphism) -> InfMorphism:
    """g after f; precondition f.target == g.source."""
    return f.then(g)


def identity_morphism(obj: SimplicialObject) -> InfMorphism:
    return InfMorphism(obj, obj, [Poly.var(obj.n, i) for i in range(obj.n)])


def inclusion(sub: SimplicialObject, ambient: SimplicialObject) -> InfMorphism:
    """Identity substitution from an object with more relations into one with fewer."""
    if sub.n != ambient.n:
        raise ValidationError("inclusion requires equal generator counts")
    return InfMorphism(sub, ambient, [Poly.var(sub.n, i) for i in range(sub.n)])


def axis_map(source: SimplicialObject, target: SimplicialObject, images) -> InfMorphism:
    """d_i of the source goes to the target generator images[i] (1-indexed, 0 drops it)."""
    comps = [Poly.zero(source.n)] * target.n
    comps = list(comps)
    for i, tgt_axis in enumerate(images):
        if tgt_axis:
            comps[tgt_axis - 1] = comps[tgt_axis - 1] + Poly.var(source.n, i)
    return InfMorphism(source, target, comps)


def subst_from_terms(source: SimplicialObject, target: SimplicialObject, term_lists):
    """Build a morphism from [[coefficient, exponent-vector], ...] per component."""
    comps = [Poly.from_terms(source.n, [(Q(str(c)), e) for c, e in terms])
             for terms in term_lists]
    return InfMorphism(source, target, comps)
