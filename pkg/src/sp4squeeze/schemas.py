"""JSON Schemas for CLI payloads (draft 2020-12).

Printed by ``sp4squeeze schema <command>``; see README for examples.
"""
_number = {"type": "number"}
_vec3 = {"type": "array", "items": _number, "minItems": 3, "maxItems": 3}
_row4 = {"type": "array", "items": _number, "minItems": 4, "maxItems": 4}
_matrix4 = {"type": "array", "items": _row4, "minItems": 4, "maxItems": 4}
_row2 = {"type": "array", "items": _number, "minItems": 2, "maxItems": 2}
_real2 = {"type": "array", "items": _row2, "minItems": 2, "maxItems": 2}
_complex = {
    "oneOf": [
        _number,
        {
            "type": "object",
            "properties": {"re": _number, "im": _number},
            "additionalProperties": False,
        },
    ]
}
_complex2 = {
    "type": "object",
    "properties": {"re": _real2, "im": _real2},
    "required": ["re", "im"],
    "additionalProperties": False,
}
_label = {
    "type": "object",
    "properties": {"a": {"type": "number", "minimum": 0}, "b": {"type": "number", "minimum": 0}},
    "required": ["a", "b"],
}

_coherent_request = {
    "type": "object",
    "properties": {
        "kind": {"const": "coherent"},
        "alpha": {"type": "array", "items": _complex, "minItems": 2, "maxItems": 2},
        "label": _label,
    },
    "required": ["kind"],
    "additionalProperties": False,
}
_thermal_request = {
    "type": "object",
    "properties": {
        "kind": {"const": "thermal"},
        "beta": {"type": "number", "exclusiveMinimum": 0},
        "label": _label,
    },
    "required": ["kind", "beta"],
    "additionalProperties": False,
}

CLASSIFY = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "classify input: a symplectic matrix or a pair of squeeze vectors",
    "oneOf": [
        {
            "type": "object",
            "properties": {"matrix": _matrix4},
            "required": ["matrix"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {"k": _vec3, "l": _vec3},
            "required": ["k", "l"],
            "additionalProperties": False,
        },
    ],
}

STATE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "state input: squeezed coherent or squeezed thermal state",
    "oneOf": [_coherent_request, _thermal_request],
}

SCAN_HETERODYNE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "scan-heterodyne input: a GaussianState (e.g. output of `state`) or a state request",
    "type": "object",
    "properties": {"samples": {"type": "integer", "minimum": 8}},
    "anyOf": [
        {"properties": {"variance": _matrix4}, "required": ["variance"]},
        {"properties": {"kind": {"enum": ["coherent", "thermal"]}}, "required": ["kind"]},
    ],
}

SYNTH = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "synth input: a 2x2 unitary and the optical target",
    "type": "object",
    "properties": {
        "unitary": _complex2,
        "target": {"enum": ["mz", "waveplates"]},
        "det_one": {"type": "boolean"},
    },
    "required": ["unitary", "target"],
    "additionalProperties": False,
}

OCTANT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "octant input: square grid 0 <= b <= a <= a_max with `steps` intervals per axis",
    "type": "object",
    "properties": {
        "a_max": {"type": "number", "exclusiveMinimum": 0},
        "steps": {"type": "integer", "minimum": 1, "maximum": 2000},
        "beta": {"type": "number", "exclusiveMinimum": 0},
    },
    "required": ["a_max", "steps"],
    "additionalProperties": False,
}

SCHEMAS = {
    "classify": CLASSIFY,
    "state": STATE,
    "scan-heterodyne": SCAN_HETERODYNE,
    "synth": SYNTH,
    "octant": OCTANT,
}
