"""JSON Schemas (draft 2020-12) for the CLI's JSON outputs."""

_COUNTS = {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}}
_PAIRS = {
    "type": "array",
    "items": {
        "type": "array",
        "prefixItems": [{"type": "number"}, {"type": "integer", "minimum": 1}],
        "minItems": 2,
        "maxItems": 2,
    },
}
_SPECTRUM = {
    "type": "object",
    "required": ["source", "pairs", "energy"],
    "properties": {
        "source": {"type": "string"},
        "pairs": _PAIRS,
        "energy": {"type": "number", "minimum": 0},
    },
}

GRAPH = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["p", "k", "n", "m", "classes", "edge_partition", "degrees"],
    "properties": {
        "p": {"type": "integer"},
        "k": {"type": "integer"},
        "n": {"type": "integer", "minimum": 0},
        "m": {"type": "integer", "minimum": 0},
        "classes": _COUNTS,
        "edge_partition": _COUNTS,
        "degrees": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
}

SPECTRUM = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["p", "n", "closed_form", "dense", "agree", "cubic_roots", "energy", "bounds", "flags"],
    "properties": {
        "p": {"type": "integer"},
        "n": {"type": "integer"},
        "closed_form": _SPECTRUM,
        "dense": {"oneOf": [_SPECTRUM, {"type": "null"}]},
        "agree": {"type": ["boolean", "null"]},
        "cubic_roots": {"type": "array", "items": {"type": "number"}, "minItems": 3, "maxItems": 3},
        "energy": {"type": "number"},
        "bounds": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
        "flags": {"type": "object", "additionalProperties": {"type": "boolean"}},
    },
}

INDICES = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["p", "rows", "zagreb", "conjecture"],
    "properties": {
        "p": {"type": "integer"},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index_name", "alpha", "closed_form", "brute_force", "rel_error"],
                "properties": {
                    "index_name": {"type": "string"},
                    "alpha": {"type": ["number", "null"]},
                    "closed_form": {"type": "number"},
                    "brute_force": {"type": ["number", "null"]},
                    "rel_error": {"type": ["number", "null"]},
                },
            },
        },
        "zagreb": {
            "type": "object",
            "required": ["M1", "M2"],
            "properties": {"M1": {"type": "integer"}, "M2": {"type": "integer"}},
        },
        "conjecture": {
            "type": "object",
            "required": ["holds", "lhs", "rhs", "margin"],
            "properties": {
                "holds": {"type": "boolean"},
                "lhs": {"type": "string"},
                "rhs": {"type": "string"},
                "margin": {"type": "integer"},
            },
        },
        "note": {"type": "string"},
    },
}

VERIFY = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["passed", "results"],
    "properties": {
        "passed": {"type": "boolean"},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["p", "module", "name", "status", "detail"],
                "properties": {
                    "p": {"type": "integer"},
                    "module": {"type": "string"},
                    "name": {"type": "string"},
                    "status": {"enum": ["pass", "fail", "skip"]},
                    "detail": {"type": "string"},
                },
            },
        },
    },
}

REFUTE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["p", "prior_charpoly", "prior_roots", "assumption", "reports"],
    "properties": {
        "p": {"type": "integer"},
        "prior_charpoly": {"type": "string"},
        "prior_roots": _PAIRS,
        "assumption": {"type": "string"},
        "reports": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["quantity", "claimed", "computed", "verdict", "violated_facts"],
                "properties": {
                    "quantity": {"type": "string"},
                    "claimed": {"type": "number"},
                    "computed": {"type": "number"},
                    "verdict": {"enum": ["agrees", "refuted"]},
                    "violated_facts": {"type": "array", "items": {"type": "string"}},
                    "notes": {"type": "array", "items": {"type": "string"}},
                },
            },
        },
    },
}

SWEEP = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "array",
    "items": {
        "type": "object",
        "required": ["p", "energy", "lower", "upper", "f", "g", "h", "M1", "M2"],
        "properties": {
            "p": {"type": "integer"},
            "energy": {"type": "number"},
            "lower": {"type": "number"},
            "upper": {"type": "number"},
            "f": {"type": "integer"},
            "g": {"type": "integer"},
            "h": {"type": "integer"},
            "M1": {"type": "integer"},
            "M2": {"type": "integer"},
            "dense_energy": {"type": ["number", "null"]},
        },
    },
}
