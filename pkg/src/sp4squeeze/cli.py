"""Command-line interface.

Subcommands: classify, state, scan-heterodyne, synth, octant (plus
``schema`` to print a payload schema). Payloads are JSON given inline
(``--inline``) or from a file (``--input``). Angles are radians; quadrature
order is (q1, q2, p1, p2); the vacuum variance is 1/2.

Exit codes: 0 success, 2 input or schema error, 3 numerical validation
failure (non-symplectic matrix, synthesis residual above 1e-7).
"""
import argparse
import csv
import io
import json
import os
import sys
import tempfile

import jsonschema
import numpy as np

from . import classification as cl
from . import detection as det
from . import gaussian as gs
from .errors import NotSymplecticError, NotUnitaryError, Sp4Error
from .jsonio import complex_from_json, complex_matrix_from_json, complex_matrix_to_json
from .schemas import SCHEMAS, STATE

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC = 0, 2, 3
SYNTH_RESIDUAL_LIMIT = 1e-7


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _fmt(x):
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if x is None:
        return ""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return format(float(x) + 0.0, ".12g")
    return str(x)


def _csv_text(header, rows, trailer=None):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(x) for x in row])
    if trailer:
        buf.write(trailer + "\n")
    return buf.getvalue()


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for key, val in obj.items():
            yield from _flatten(val, f"{prefix}.{key}" if prefix else key)
    elif isinstance(obj, list):
        for i, val in enumerate(obj):
            yield from _flatten(val, f"{prefix}[{i}]")
    else:
        yield prefix, obj


def _json_text(obj):
    return json.dumps(obj, indent=2) + "\n"


def _render(obj, fmt):
    if fmt == "csv":
        return _csv_text(["key", "value"], _flatten(obj))
    return _json_text(obj)


def _label(d):
    return cl.ClassLabel(0.0, 0.0) if d is None else cl.ClassLabel(d["a"], d["b"])


def _build_state(payload):
    label = _label(payload.get("label"))
    if payload["kind"] == "coherent":
        alpha = payload.get("alpha", [0.0, 0.0])
        return gs.squeezed_coherent(complex_from_json(alpha[0]), complex_from_json(alpha[1]), label), label
    return gs.squeezed_thermal(payload["beta"], label), label


def cmd_classify(payload, args):
    if "matrix" in payload:
        s = np.array(payload["matrix"], dtype=float)
        label, u = cl.classify_symplectic(s, tol=args.tol)
        inv = cl.InvariantPair(label.a**2 * label.b**2, label.a**2 + label.b**2)
    else:
        v = cl.SqueezeVectors(payload["k"], payload["l"])
        inv = cl.invariants(v)
        label = cl.class_of_vectors(v)
        u = np.eye(2, dtype=complex)
    out = {
        "a": label.a,
        "b": label.b,
        "no_squeeze": label.no_squeeze,
        "two_mode_character": None if label.no_squeeze else cl.two_mode_character(label),
        "invariants": {"i1": inv.i1, "i2": inv.i2},
        "passive_factor": complex_matrix_to_json(u),
    }
    return _render(out, args.format or "json")


def cmd_state(payload, args):
    state, label = _build_state(payload)
    verdict = gs.squeezing_verdict(state.variance)
    out = {"kind": payload["kind"], "label": label.to_dict()}
    out.update(state.to_dict())
    out["verdict"] = verdict.to_dict()
    return _render(out, args.format or "json")


def cmd_scan_heterodyne(payload, args):
    samples = payload.get("samples", args.samples)
    if "variance" in payload:
        v = np.array(payload["variance"], dtype=float)
        if np.max(np.abs(v - v.T)) > args.tol * max(1.0, np.max(np.abs(v))):
            raise CliError("variance matrix is not symmetric", EXIT_INPUT)
    else:
        request = {k: val for k, val in payload.items() if k != "samples"}
        _validate(request, STATE)
        v = _build_state(request)[0].variance
    scan = det.heterodyne_scan(v, samples)
    summary = {
        "psi_min": scan.psi_min,
        "var_min": scan.var_min,
        "detects": scan.detects,
        "least_eigenvalue": gs.least_eigenvalue(v),
        "physical": gs.uncertainty_min_eigenvalue(v) >= -1e-10,
    }
    fmt = args.format or "csv"
    if fmt == "json":
        rows = [{"psi": float(p), "variance": float(x)} for p, x in zip(scan.psis, scan.variances)]
        return _json_text({"summary": summary, "rows": rows})
    trailer = "# " + ",".join(f"{k}={_fmt(val)}" for k, val in summary.items())
    return _csv_text(["psi", "variance"], zip(scan.psis, scan.variances), trailer)


def cmd_synth(payload, args):
    u = complex_matrix_from_json(payload["unitary"])
    if not np.max(np.abs(u.conj().T @ u - np.eye(2))) <= max(args.tol, 1e-12):
        raise CliError("input matrix is not unitary", EXIT_INPUT)
    if payload["target"] == "mz":
        p = det.mz_synthesize(u)
        forward = det.mz_forward(p)
        out = {"target": "mz", "settings": p.to_dict()}
    else:
        p, phase = det.waveplate_synthesize(u, det_one=payload.get("det_one", False))
        forward = np.exp(1j * phase) * det.waveplate_forward(p)
        out = {"target": "waveplates", "settings": p.to_dict(), "global_phase": phase}
    residual = float(np.max(np.abs(forward - u)))
    out["residual"] = residual
    if residual > SYNTH_RESIDUAL_LIMIT:
        raise CliError(f"synthesis residual {residual:.3e} exceeds {SYNTH_RESIDUAL_LIMIT:g}", EXIT_NUMERIC)
    return _render(out, args.format or "json")


def _boundary(i, j):
    if i == 0:
        return "origin"
    if j == 0:
        return "caves_schumaker"
    if j == i:
        return "single_mode"
    return "interior"


def cmd_octant(payload, args):
    a_max, steps, beta = payload["a_max"], payload["steps"], payload.get("beta")
    h = a_max / steps
    rows = []
    for i in range(steps + 1):
        for j in range(i + 1):
            label = cl.ClassLabel(i * h, j * h)
            char = None if label.no_squeeze else cl.two_mode_character(label)
            flag = None
            if beta is not None:
                flag = gs.squeezing_verdict(gs.squeezed_thermal(beta, label).variance).squeezed
            rows.append((label.a, label.b, char, flag, _boundary(i, j)))
    header = ["a", "b", "two_mode_character", "squeezed_thermal", "boundary"]
    if (args.format or "csv") == "json":
        out = {"beta": beta, "threshold": None if beta is None else gs.thermal_squeeze_threshold(beta)}
        out["rows"] = [dict(zip(header, r)) for r in rows]
        return _json_text(out)
    return _csv_text(header, rows)


COMMANDS = {
    "classify": cmd_classify,
    "state": cmd_state,
    "scan-heterodyne": cmd_scan_heterodyne,
    "synth": cmd_synth,
    "octant": cmd_octant,
}


def _validate(payload, schema):
    try:
        jsonschema.validate(payload, schema)
    except jsonschema.ValidationError as exc:
        raise CliError(f"schema violation: {exc.message}", EXIT_INPUT) from None


def _load_payload(args):
    if args.inline is not None and args.input is not None:
        raise CliError("give either --input or --inline, not both", EXIT_INPUT)
    try:
        if args.inline is not None:
            return json.loads(args.inline)
        if args.input is not None:
            with open(args.input) as fh:
                return json.load(fh)
        return json.load(sys.stdin)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read payload: {exc}", EXIT_INPUT) from None


def _write_atomic(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".sp4squeeze-")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="PATH", help="read the JSON payload from PATH")
    src.add_argument("--inline", metavar="JSON", help="JSON payload given on the command line")
    common.add_argument("--output", metavar="PATH", help="write the result to PATH (default stdout)")
    common.add_argument("--format", choices=["json", "csv"], help="output format")
    common.add_argument("--seed", type=int, default=0, help="accepted for reproducible scripts; all commands are deterministic")
    common.add_argument("--tol", type=float, default=1e-9, help="input validation tolerance (default 1e-9)")

    parser = argparse.ArgumentParser(prog="sp4squeeze", description="Two-mode Sp(4,R) squeezing toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("classify", parents=[common], help="U(2) class (a, b) of a symplectic matrix or squeeze vectors")
    sub.add_parser("state", parents=[common], help="squeezed coherent/thermal state with squeezing verdict")
    scan = sub.add_parser("scan-heterodyne", parents=[common], help="heterodyne variance over psi in [0, 4pi)")
    scan.add_argument("--samples", type=int, default=64, help="grid points when the payload has no 'samples'")
    sub.add_parser("synth", parents=[common], help="Mach-Zehnder or wave-plate settings for a unitary")
    sub.add_parser("octant", parents=[common], help="(a, b) grid with region and boundary flags")
    schema = sub.add_parser("schema", help="print the JSON schema of a command payload")
    schema.add_argument("name", choices=sorted(SCHEMAS))
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "schema":
        sys.stdout.write(_json_text(SCHEMAS[args.name]))
        return EXIT_OK
    try:
        if not args.tol > 0:
            raise CliError("--tol must be positive", EXIT_INPUT)
        payload = _load_payload(args)
        _validate(payload, SCHEMAS[args.command])
        text = COMMANDS[args.command](payload, args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NotSymplecticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (Sp4Error, NotUnitaryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.output:
        _write_atomic(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
