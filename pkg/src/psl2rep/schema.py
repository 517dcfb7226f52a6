"""JSON documents: validation, parsing and rendering.

Rationals travel as "p" or "p/q" strings so they round-trip exactly.
Validation failures raise ``SchemaError`` carrying a JSON pointer to the
offending value.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from jsonschema import Draft202012Validator

from .components import BoundarySpec, ComponentDescriptor, Signature
from .errors import SchemaError
from .higgs import Residue, Stratum, StratumTopology, Weight
from .kinds import ClassKind
from .lift import IsometryClass, LiftedIsometry, Mat2, Representation
from .uniformization import BoundaryLengthSpec, UniformizationComponent

RATIONAL = {"type": "string", "pattern": r"^-?\d+(/0*[1-9]\d*)?$"}
NUMBER = {"type": "number"}
MATRIX = {
    "type": "array",
    "items": {"type": "array", "items": NUMBER, "minItems": 2, "maxItems": 2},
    "minItems": 2,
    "maxItems": 2,
}
GENUS = {"type": "integer", "minimum": 0}


def _tagged(tag: str, variants: dict[str, list[str]], properties: dict) -> dict:
    """Object schema discriminated by ``tag`` with per-variant required keys."""
    return {
        "type": "object",
        "required": [tag],
        "properties": {tag: {"enum": list(variants)}, **properties},
        "additionalProperties": False,
        "allOf": [
            {
                "if": {"properties": {tag: {"const": name}}},
                "then": {"required": required},
            }
            for name, required in variants.items()
            if required
        ],
    }


BOUNDARY_SPEC = _tagged(
    "type",
    {"elliptic": ["frac_rot"], "hyperbolic": [], "unipotent": ["sign"], "identity": []},
    {"frac_rot": RATIONAL, "sign": {"enum": ["+", "-"]}},
)

SIGNATURE_SCHEMA = {
    "type": "object",
    "required": ["genus", "boundary"],
    "properties": {"genus": GENUS, "boundary": {"type": "array", "items": BOUNDARY_SPEC}},
    "additionalProperties": False,
}

MATRIX_SCHEMA = {
    "oneOf": [
        MATRIX,
        {
            "type": "object",
            "required": ["matrix"],
            "properties": {"matrix": MATRIX, "lifted_value": NUMBER},
            "additionalProperties": False,
        },
    ]
}

REPRESENTATION_SCHEMA = {
    "type": "object",
    "required": ["genus", "handles", "boundaries"],
    "properties": {
        "genus": GENUS,
        "handles": {
            "type": "array",
            "items": {"type": "array", "items": MATRIX, "minItems": 2, "maxItems": 2},
        },
        "boundaries": {"type": "array", "items": MATRIX, "minItems": 1},
    },
    "additionalProperties": False,
}

HIGGS_SCHEMA = {
    "type": "object",
    "required": ["g", "d0", "weights", "residues"],
    "properties": {
        "g": GENUS,
        "d0": {"type": "integer"},
        "weights": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind", "w1"],
                "properties": {"kind": {"enum": ["deg", "nondeg"]}, "w1": RATIONAL},
                "additionalProperties": False,
            },
        },
        "residues": {
            "type": "array",
            "items": _tagged(
                "type",
                {"zero": [], "nilpotent": [], "invertible": ["det"]},
                {"det": RATIONAL},
            ),
        },
        "d": {"type": "integer"},
        "a": {"type": "array", "items": {"enum": [0, 1]}},
        "eps": {"type": "array", "items": {"enum": ["+", "-"]}},
    },
    "dependentRequired": {"d": ["a"], "a": ["d"]},
    "additionalProperties": False,
}

GEOMETRY_SCHEMA = {
    "type": "object",
    "required": ["genus", "boundary"],
    "properties": {
        "genus": GENUS,
        "boundary": {
            "type": "array",
            "items": _tagged(
                "type",
                {"cone": ["theta_over_pi"], "boundary": ["length"], "cusp": []},
                {"theta_over_pi": RATIONAL, "length": RATIONAL},
            ),
        },
    },
    "additionalProperties": False,
}


def pointer(path) -> str:
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in path)


def validate(doc: Any, schema: dict) -> None:
    errors = list(Draft202012Validator(schema).iter_errors(doc))
    if not errors:
        return
    # the most deeply nested complaint is the most specific one
    err = max(errors, key=lambda e: (len(e.absolute_path), -len(e.path)))
    where = pointer(err.absolute_path)
    raise SchemaError(f"{where or '/'}: {err.message}", where)


def _domain(doc_pointer: str, build):
    """Run a constructor, turning ValueError into a schema error at the pointer."""
    try:
        return build()
    except ValueError as exc:
        raise SchemaError(f"{doc_pointer or '/'}: {exc}", doc_pointer) from exc


# parsing


def parse_matrix(doc: Any, where: str = "") -> Mat2:
    return _domain(where, lambda: Mat2.from_rows(doc))


def parse_matrix_doc(doc: Any) -> Mat2 | LiftedIsometry:
    validate(doc, MATRIX_SCHEMA)
    if isinstance(doc, dict):
        m = parse_matrix(doc["matrix"], "/matrix")
        if "lifted_value" in doc:
            return LiftedIsometry(m, float(doc["lifted_value"]))
        return m
    return parse_matrix(doc)


def parse_spec(doc: dict) -> BoundarySpec:
    kind = doc["type"]
    if kind == "elliptic":
        return BoundarySpec.elliptic(Fraction(doc["frac_rot"]))
    if kind == "hyperbolic":
        return BoundarySpec.hyperbolic()
    if kind == "identity":
        return BoundarySpec.identity()
    if doc["sign"] == "+":
        return BoundarySpec.positive_unipotent()
    return BoundarySpec.negative_unipotent()


def parse_signature(doc: Any) -> Signature:
    validate(doc, SIGNATURE_SCHEMA)
    return Signature(doc["genus"], tuple(parse_spec(s) for s in doc["boundary"]))


def parse_representation(doc: Any, relation_tol: float) -> Representation:
    validate(doc, REPRESENTATION_SCHEMA)
    handles = tuple(
        (parse_matrix(a, f"/handles/{i}/0"), parse_matrix(b, f"/handles/{i}/1"))
        for i, (a, b) in enumerate(doc["handles"])
    )
    boundaries = tuple(parse_matrix(c, f"/boundaries/{i}") for i, c in enumerate(doc["boundaries"]))
    return Representation(doc["genus"], handles, boundaries, relation_tol=relation_tol)


def parse_higgs(doc: Any) -> tuple[int, int, tuple[Weight, ...], tuple[Residue, ...], dict]:
    """Return (g, d0, weights, residues, extra) where extra holds optional d, a, eps."""
    validate(doc, HIGGS_SCHEMA)
    weights = tuple(
        _domain(f"/weights/{i}", lambda w=w: Weight(Fraction(w["w1"]), w["kind"] == "deg"))
        for i, w in enumerate(doc["weights"])
    )
    residues = []
    for i, r in enumerate(doc["residues"]):
        if r["type"] == "invertible":
            residues.append(_domain(f"/residues/{i}/det", lambda r=r: Residue.invertible(Fraction(r["det"]))))
        else:
            residues.append(Residue(r["type"]))
    n = len(weights)
    if len(residues) != n:
        raise SchemaError("/residues: need one residue per weight", "/residues")
    extra = {}
    if "d" in doc:
        if len(doc["a"]) != n:
            raise SchemaError("/a: need one entry per puncture", "/a")
        extra["d"] = doc["d"]
        extra["a"] = tuple(doc["a"])
    if "eps" in doc:
        nil = [i for i, r in enumerate(residues) if r.kind.value == "nilpotent"]
        if len(doc["eps"]) != len(nil):
            raise SchemaError("/eps: need one sign per nilpotent residue", "/eps")
        eps = [None] * n
        for i, s in zip(nil, doc["eps"]):
            eps[i] = s
        extra["eps"] = tuple(eps)
    return doc["g"], doc["d0"], weights, tuple(residues), extra


def parse_geometry(doc: Any) -> tuple[int, tuple[BoundaryLengthSpec, ...]]:
    validate(doc, GEOMETRY_SCHEMA)
    specs = []
    for s in doc["boundary"]:
        if s["type"] == "cone":
            specs.append(BoundaryLengthSpec.cone(Fraction(s["theta_over_pi"])))
        elif s["type"] == "boundary":
            specs.append(BoundaryLengthSpec.boundary(Fraction(s["length"])))
        else:
            specs.append(BoundaryLengthSpec.cusp())
    return doc["genus"], tuple(specs)


# rendering


def rational(x: Fraction) -> str:
    return str(Fraction(x))


def dump_matrix(m: Mat2) -> list[list[float]]:
    return m.rows()


def dump_lifted(g: LiftedIsometry) -> dict:
    return {"matrix": dump_matrix(g.matrix), "lifted_value": g.lifted_value}


def dump_representation(rep: Representation) -> dict:
    return {
        "genus": rep.genus,
        "handles": [[dump_matrix(a), dump_matrix(b)] for a, b in rep.handles],
        "boundaries": [dump_matrix(c) for c in rep.boundaries],
    }


def dump_class(cls: IsometryClass) -> dict:
    out: dict[str, Any] = {"class": cls.kind.value}
    if cls.kind is ClassKind.ELLIPTIC:
        out["frac_rot"] = cls.frac_rot
    if cls.kind is ClassKind.HYPERBOLIC:
        out["translation_length"] = cls.translation_length
    return out


def dump_spec(spec: BoundarySpec) -> dict:
    if spec.kind is ClassKind.ELLIPTIC:
        return {"type": "elliptic", "frac_rot": rational(spec.frac_rot)}
    if spec.kind is ClassKind.POSITIVE_UNIPOTENT:
        return {"type": "unipotent", "sign": "+"}
    if spec.kind is ClassKind.NEGATIVE_UNIPOTENT:
        return {"type": "unipotent", "sign": "-"}
    return {"type": spec.kind.value}


def dump_signature(sig: Signature) -> dict:
    return {"genus": sig.genus, "boundary": [dump_spec(s) for s in sig.specs]}


def dump_component(c: ComponentDescriptor) -> dict:
    return {
        "euler": rational(c.euler),
        "m": c.m,
        "rank": c.bundle_rank,
        "base": {"sym": c.base_sym_degree, "removed": sorted(c.base_removed)},
        "removed_subbundles": c.removed_subbundles,
        "smooth": c.smooth,
        "compact": c.compact,
        "closure": c.closure_variant,
    }


def dump_stratum(st: Stratum) -> dict:
    return {
        "d": st.d,
        "a": list(st.a),
        "eps": [s for s in st.eps if s is not None],
        "e": rational(st.e),
        "m": st.m,
        "m_prime": st.m_prime,
        "w_L": [rational(x) for x in st.w_l],
    }


def dump_topology(t: StratumTopology) -> dict:
    return {
        "rank": t.fiber_rank,
        "base": {"sym": t.base_sym_degree, "removed": sorted(t.base_removed)},
        "removed_subbundles": t.removed_subbundles,
        "quotient": t.quotient,
        "closure": t.closure,
        "torsor_components": t.torsor_components,
        "compact": t.compact,
    }


def dump_uniformization(u: UniformizationComponent) -> dict:
    return {
        "euler": rational(u.e),
        "m": u.m,
        "s0": u.s0,
        "rank": u.rank,
        "base": {"sym": u.base_degree},
        "removed_open": sorted(u.removed_open),
        "removed_closure": sorted(u.removed_closure),
    }
