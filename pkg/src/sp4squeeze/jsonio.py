"""JSON encodings: real matrices as row-major nested lists, complex matrices
as {"re": [[...]], "im": [[...]]}, complex scalars as a number or
{"re": x, "im": y}."""
import numpy as np


def matrix_to_json(m):
    return np.asarray(m, dtype=float).tolist()


def complex_matrix_to_json(m):
    m = np.asarray(m, dtype=complex)
    # + 0.0 turns -0.0 into 0.0 so output is stable across sign noise
    return {"re": (m.real + 0.0).tolist(), "im": (m.imag + 0.0).tolist()}


def complex_matrix_from_json(d):
    return np.asarray(d["re"], dtype=float) + 1j * np.asarray(d["im"], dtype=float)


def complex_from_json(x):
    if isinstance(x, dict):
        return complex(float(x.get("re", 0.0)), float(x.get("im", 0.0)))
    return complex(float(x))


def complex_to_json(z):
    z = complex(z)
    return {"re": z.real, "im": z.imag}
