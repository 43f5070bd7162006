"""JSON schemas for the ``--json`` output of each CLI command.

Matrices and codes are carried as strings in the ``.bmat`` text format
(one ``0``/``1`` row per line).  Neurons are numbered from 1.
"""

from .poset import POSET_SCHEMA

_int = {"type": "integer"}
_nat = {"type": "integer", "minimum": 0}
_str = {"type": "string"}
_bool = {"type": "boolean"}
_strs = {"type": "array", "items": _str}
_neurons = {"type": "array", "items": {"type": "integer", "minimum": 1}}


def _obj(required: dict, optional: dict | None = None) -> dict:
    props = dict(required)
    props.update(optional or {})
    return {"type": "object", "required": sorted(required), "properties": props}


_rank_report = _obj(
    {
        "brank": {"type": ["integer", "null"]},
        "lower_bounds": {"type": "object", "additionalProperties": _nat},
        "upper_bounds": {"type": "object", "additionalProperties": _nat},
    },
    {"certificate": _obj({"V": _str, "H": _str})},
)

SCHEMAS = {
    "cf": _obj({"n": _nat, "elements": _strs}),
    "cf-census": _obj(
        {
            "n": _nat,
            "codes": _nat,
            "histogram": {"type": "object", "additionalProperties": _nat},
            "max_size": _int,
            "witness": _str,
        }
    ),
    "complete": _obj({"kind": {"enum": ["intersection", "union"]}, "n": _nat, "code": _str, "cf": _strs}),
    "reduce": _obj({"n": _nat, "code": _str, "kept": _neurons, "redundant": _neurons, "projection": _str}),
    "trunks": _obj(
        {
            "count": _nat,
            "trunks": {"type": "array", "items": _obj({"root": _str, "words": _strs})},
        }
    ),
    "defect": _obj({"t": _nat, "size": _nat, "defect": _nat}),
    "covering": _obj(
        {
            "steps": {
                "type": "array",
                "items": _obj(
                    {
                        "neuron": {"type": "integer", "minimum": 1},
                        "free": _bool,
                        "bmf": _bool,
                        "reduced_bmf": _bool,
                        "image_size": _nat,
                        "t": _nat,
                        "d": _nat,
                        "defect_drop": {"enum": [0, 1]},
                        "collision": {"oneOf": [{"type": "null"}, {"type": "array", "items": _str, "minItems": 2, "maxItems": 2}]},
                    },
                    {"image": _str, "rep": _str},
                ),
            }
        }
    ),
    "free": _obj({"free": _neurons}),
    "brank": _obj(
        {"mode": {"enum": ["exact", "bounds", "chain"]}, "report": _rank_report},
        {
            "chain": _obj(
                {"bound": _nat, "complete": _bool, "nodes": _nat, "evaluations": _nat, "neurons": {"type": "array", "items": _int}}
            )
        },
    ),
    "mrank": _obj({"mrank": _nat}),
    "factorize": _obj({"V": _str, "H": _str, "factors": _bool}),
    "poset": POSET_SCHEMA,
    "iso": _obj({"isomorphic": _bool, "labels": _strs}),
    "verify": _obj(
        {
            "seed": _int,
            "ok": _bool,
            "results": {
                "type": "array",
                "items": _obj({"name": _str, "cases": _nat, "violations": _nat, "ok": _bool}),
            },
        }
    ),
    "conjecture-scan": _obj(
        {
            "samples": _nat,
            "agreements": _nat,
            "counterexamples": {
                "type": "array",
                "items": _obj(
                    {
                        "code": _str,
                        "injected": _str,
                        "k": _nat,
                        "ell": _nat,
                        "brank": _nat,
                        "brank_reduced": _nat,
                    }
                ),
            },
        }
    ),
}
