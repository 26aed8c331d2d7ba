"""Multivariate polynomials and polynomial maps, generic over the scalar ring.

Poly stores a dict from dense exponent tuples to nonzero coefficients;
equality is structural, so two polynomials are equal iff they normalize to
the same terms.  Degree is never truncated here: nilpotency of Weil scalars
performs all truncation during evaluation.

PolyMap bundles out_dim component polynomials in in_dim variables.  Its
eval() is the single entry point for extending a map to exotic scalars: feed
it Weil-valued arguments and it computes the jet the corresponding functor
would produce.
"""

from .errors import ValidationError
from .rationals import ONE, Q


class Poly:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict):
        self.n = n
        self.terms = terms

    # construction ---------------------------------------------------------

    @staticmethod
    def zero(n: int) -> "Poly":
        return Poly(n, {})

    @staticmethod
    def const(n: int, c) -> "Poly":
        return Poly(n, {(0,) * n: c} if c else {})

    @staticmethod
    def one(n: int) -> "Poly":
        return Poly.const(n, ONE)

    @staticmethod
    def var(n: int, i: int, c=ONE) -> "Poly":
        """c * x_i with 0-based variable index."""
        if not 0 <= i < n:
            raise ValidationError(f"variable index {i} out of range for {n} variables")
        e = [0] * n
        e[i] = 1
        return Poly(n, {tuple(e): c} if c else {})

    @staticmethod
    def from_terms(n: int, pairs) -> "Poly":
        out = {}
        for c, e in pairs:
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise ValidationError("exponent vector length != variable count")
            if any(x < 0 for x in e):
                raise ValidationError("negative exponent")
            if not c:
                continue
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return Poly(n, out)

    # ring operations ------------------------------------------------------

    def _check(self, other):
        if self.n != other.n:
            raise ValidationError("polynomials in different variable counts")

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return Poly(self.n, out)

    def __neg__(self):
        return Poly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    c = c1 * c2
                    if not c:
                        continue
                    e = tuple(a + b for a, b in zip(e1, e2))
                    s = out.get(e)
                    s = c if s is None else s + c
                    if s:
                        out[e] = s
                    elif e in out:
                        del out[e]
            return Poly(self.n, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Poly":
        if not c:
            return Poly.zero(self.n)
        out = {}
        for e, v in self.terms.items():
            s = c * v
            if s:
                out[e] = s
        return Poly(self.n, out)

    def __pow__(self, k: int):
        if k < 0:
            raise ValidationError("negative power")
        out = Poly.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, Poly) and self.n == other.n and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    # queries ----------------------------------------------------------------

    def degree(self) -> int:
        """Max total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get((0,) * self.n, Q(0))

    def partial(self, i: int) -> "Poly":
        """Formal partial derivative in variable i."""
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            d = list(e)
            k = d[i]
            d[i] = k - 1
            d = tuple(d)
            s = out.get(d)
            v = c * k
            s = v if s is None else s + v
            if s:
                out[d] = s
            elif d in out:
                del out[d]
        return Poly(self.n, out)

    def eval(self, args, one=ONE):
        """Evaluate at ring elements; `one` is the ring unit for empty products.

        Coefficients multiply arguments from the left, so any ring whose
        elements accept rational scaling works.
        """
        if len(args) != self.n:
            raise ValidationError(f"expected {self.n} arguments, got {len(args)}")
        total = None
        pow_cache = {}
        for e, c in self.terms.items():
            prod = None
            for i, k in enumerate(e):
                if k == 0:
                    continue
                p = pow_cache.get((i, k))
                if p is None:
                    p = args[i]
                    for _ in range(k - 1):
                        p = p * args[i]
                    pow_cache[(i, k)] = p
                prod = p if prod is None else prod * p
            term = c * one if prod is None else c * prod
            total = term if total is None else total + term
        return c_zero_like(one) if total is None else total

    def remap_variables(self, mapping, new_n=None) -> "Poly":
        """Substitute x_i -> x_mapping[i]; mapping is a 0-based index list."""
        m = self.n if new_n is None else new_n
        out = {}
        for e, c in self.terms.items():
            d = [0] * m
            for i, k in enumerate(e):
                if k:
                    d[mapping[i]] += k
            d = tuple(d)
            s = out.get(d)
            s = c if s is None else s + c
            if s:
                out[d] = s
            elif d in out:
                del out[d]
        return Poly(m, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=lambda t: (sum(t), tuple(-x for x in t))):
            c = self.terms[e]
            mono = "*".join(
                f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in enumerate(e) if k)
            bits.append(str(c) if not mono else f"{c}*{mono}")
        return " + ".join(bits)


def c_zero_like(one):
    """Zero of the ring whose unit is `one` (rationals give Q(0))."""
    return one - one


class PolyMap:
    """A tuple of polynomials read as a map between coordinate spaces."""

    __slots__ = ("in_dim", "out_dim", "comps")

    def __init__(self, in_dim: int, comps):
        comps = tuple(comps)
        for c in comps:
            if c.n != in_dim:
                raise ValidationError("component variable count != in_dim")
        self.in_dim = in_dim
        self.out_dim = len(comps)
        self.comps = comps

    @staticmethod
    def identity(n: int) -> "PolyMap":
        return PolyMap(n, [Poly.var(n, i) for i in range(n)])

    @staticmethod
    def zero(in_dim: int, out_dim: int) -> "PolyMap":
        return PolyMap(in_dim, [Poly.zero(in_dim)] * out_dim)

    def eval(self, args, one=ONE):
        """Evaluate all components at ring-valued arguments."""
        return [c.eval(args, one) for c in self.comps]

    def __call__(self, args, one=ONE):
        return self.eval(args, one)

    def compose(self, other: "PolyMap") -> "PolyMap":
        """self after other, expanded and normalized."""
        if other.out_dim != self.in_dim:
            raise ValidationError(
                f"cannot compose: inner map yields {other.out_dim}, outer expects {self.in_dim}")
        args = list(other.comps)
        one = Poly.one(other.in_dim)
        return PolyMap(other.in_dim, [c.eval(args, one) for c in self.comps])

    # linear-space structure (used when maps act as coefficient slots) -------

    def _check(self, other):
        if self.in_dim != other.in_dim or self.out_dim != other.out_dim:
            raise ValidationError("maps of different dimensions")

    def __add__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        self._check(other)
        return PolyMap(self.in_dim, [a + b for a, b in zip(self.comps, other.comps)])

    def __neg__(self):
        return PolyMap(self.in_dim, [-a for a in self.comps])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PolyMap":
        return PolyMap(self.in_dim, [a.scale(c) for a in self.comps])

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return (isinstance(other, PolyMap) and self.in_dim == other.in_dim
                and self.comps == other.comps)

    def __bool__(self):
        return any(self.comps)

    def degree(self) -> int:
        return max((c.degree() for c in self.comps), default=-1)

    def __repr__(self):
        return "PolyMap(%d -> %d: %s)" % (
            self.in_dim, self.out_dim, "; ".join(repr(c) for c in self.comps))


def poly_equal(f: PolyMap, g: PolyMap) -> bool:
    """Exact coefficient-wise equality of two maps of matching dimensions."""
    if f.in_dim != g.in_dim or f.out_dim != g.out_dim:
        raise ValidationError("maps of different dimensions")
    return f.comps == g.comps
