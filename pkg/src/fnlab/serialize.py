"""JSON wire formats.

Rationals travel as decimal strings "num/den" (or "num").  Monomial keys are
sorted 1-based index lists rendered compactly, e.g. "[]", "[1]", "[1,2]",
with repeats for powers above one.  Polynomials are term lists
{"c": "...", "e": [exponents]}; maps carry their dimensions explicitly.
"""

import json

from .errors import ValidationError
from .forms import OMEGA0, FormElem, Kernel, cube_dim, pi_kernel
from .micro import MicroPoint
from .morphisms import InfMorphism
from .poly import Poly, PolyMap
from .rationals import Q, rat_str
from .simplicial import SimplicialObject


def _key(indices) -> str:
    return json.dumps(sorted(indices), separators=(",", ":"))


def _unkey(text: str):
    try:
        idx = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"bad monomial key {text!r}") from exc
    if not isinstance(idx, list) or any(not isinstance(i, int) for i in idx):
        raise ValidationError(f"bad monomial key {text!r}")
    return tuple(idx)


def _rat(value) -> Q:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ValidationError(f"rational expected, got {value!r}")
    try:
        return Q(value if isinstance(value, int) else str(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"bad rational {value!r}") from exc


# simplicial objects ---------------------------------------------------------


def obj_to_json(obj: SimplicialObject) -> dict:
    return {"n": obj.n,
            "p": [list(seq) for seq in sorted(obj.relations)],
            "bounds": list(obj.bounds)}


def obj_from_json(data: dict) -> SimplicialObject:
    if not isinstance(data, dict) or "n" not in data:
        raise ValidationError("simplicial object JSON needs at least {'n': ...}")
    try:
        n = int(data["n"])
        rels = frozenset(tuple(int(i) for i in seq) for seq in data.get("p", []))
        bounds = data.get("bounds")
        bounds = None if bounds is None else tuple(int(b) for b in bounds)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"malformed simplicial object JSON: {exc}") from exc
    return SimplicialObject(n, rels, bounds)


# polynomials ----------------------------------------------------------------


def poly_to_json(p: Poly) -> list:
    items = sorted(p.terms.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0])))
    return [{"c": rat_str(c), "e": list(e)} for e, c in items]


def poly_from_json(data, n: int) -> Poly:
    if not isinstance(data, list):
        raise ValidationError("polynomial JSON must be a term list")
    pairs = []
    for term in data:
        if not isinstance(term, dict) or "c" not in term or "e" not in term:
            raise ValidationError(f"bad polynomial term {term!r}")
        pairs.append((_rat(term["c"]), tuple(int(x) for x in term["e"])))
    return Poly.from_terms(n, pairs)


def polymap_to_json(f: PolyMap) -> dict:
    return {"in_dim": f.in_dim, "out_dim": f.out_dim,
            "components": [poly_to_json(c) for c in f.comps]}


def polymap_from_json(data) -> PolyMap:
    if not isinstance(data, dict) or "in_dim" not in data or "components" not in data:
        raise ValidationError("polynomial map JSON needs in_dim and components")
    n = int(data["in_dim"])
    comps = [poly_from_json(c, n) for c in data["components"]]
    f = PolyMap(n, comps)
    if "out_dim" in data and int(data["out_dim"]) != f.out_dim:
        raise ValidationError("out_dim does not match component count")
    return f


# morphisms ------------------------------------------------------------------


def morphism_to_json(f: InfMorphism) -> dict:
    return {"source": obj_to_json(f.source),
            "target": obj_to_json(f.target),
            "subst": [[[rat_str(c), list(e)] for e, c in sorted(p.terms.items())]
                      for p in f.subst]}


def morphism_from_json(data) -> InfMorphism:
    src = obj_from_json(data["source"])
    tgt = obj_from_json(data["target"])
    comps = []
    for terms in data["subst"]:
        comps.append(Poly.from_terms(
            src.n, [(_rat(c), tuple(int(x) for x in e)) for c, e in terms]))
    return InfMorphism(src, tgt, comps)


# points ---------------------------------------------------------------------


def micropoint_to_json(p: MicroPoint) -> dict:
    alg = p.algebra
    coeffs = {}
    for pos, exps in enumerate(alg.basis):
        vec = [c.coeffs.get(pos) for c in p.coords]
        if not any(vec):
            continue
        indices = []
        for i, e in enumerate(exps):
            indices.extend([i + 1] * e)
        coeffs[_key(indices)] = [rat_str(v) if v else "0" for v in vec]
    return {"object": obj_to_json(alg.source), "m": p.m, "coeffs": coeffs}


def micropoint_from_json(data) -> MicroPoint:
    obj = obj_from_json(data["object"])
    m = int(data["m"])
    table = {}
    for key, vec in data.get("coeffs", {}).items():
        table[_unkey(key)] = [_rat(v) for v in vec]
    return MicroPoint.from_table(obj, m, table)


# forms ----------------------------------------------------------------------


def form_to_json(x: FormElem) -> dict:
    coeffs = {}
    pi = pi_kernel(x.p, x.m)
    for subset, ker in x.coeffs.items():
        coeffs[_key(subset)] = "pi" if ker == pi else polymap_to_json(ker.body)
    return {"p": x.p, "k": x.k, "m": x.m, "class": x.class_tag, "coeffs": coeffs}


def form_from_json(data) -> FormElem:
    try:
        p, k, m = int(data["p"]), int(data["k"]), int(data["m"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"form JSON needs integer p, k, m: {exc}") from exc
    coeffs = {}
    for key, body in data.get("coeffs", {}).items():
        subset = frozenset(_unkey(key))
        if body == "pi":
            ker = pi_kernel(p, m)
        else:
            pm = polymap_from_json(body)
            if pm.in_dim != cube_dim(p, m) or pm.out_dim != m:
                raise ValidationError(
                    f"kernel at {key} must map {cube_dim(p, m)} -> {m}")
            ker = Kernel(p, m, pm)
        coeffs[subset] = ker
    return FormElem(p, k, m, coeffs, data.get("class", OMEGA0))


# generic --------------------------------------------------------------------


def to_json(value):
    """Best-effort serialization for report witnesses."""
    if isinstance(value, SimplicialObject):
        return obj_to_json(value)
    if isinstance(value, InfMorphism):
        return morphism_to_json(value)
    if isinstance(value, MicroPoint):
        return micropoint_to_json(value)
    if isinstance(value, FormElem):
        return form_to_json(value)
    if isinstance(value, Kernel):
        return polymap_to_json(value.body)
    if isinstance(value, PolyMap):
        return polymap_to_json(value)
    if isinstance(value, Poly):
        return poly_to_json(value)
    if isinstance(value, (list, tuple)):
        return [to_json(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_json(v) for k, v in value.items()}
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    return rat_str(value)
