"""Command-line front end.

Usage::

    so3lift <command> [--in FILE|-] [--out FILE|-] [--tol X] [--seeds N]
                      [--oracle N] [--side left|right]

Input and output are JSON documents ``{"kind": ..., "data": ...}``; complex
numbers are ``[re, im]`` pairs. Several inputs are passed as a JSON array.

Exit codes: 0 success, 2 malformed input, 3 invariant violation,
4 internal inconsistency. Diagnostics go to stderr as plain text.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import __version__
from .decomp import diagonalize, symmetrize_one_sided, triangularize
from .errors import ConsistencyError, InvalidInputError, So3LiftError
from .group import SIGN_EPS, adjoint_so3, as_rotation, as_su2, check_orthogonality
from .lift import lift
from .oracle import oracle_check, pi_rotation, random_rotation, roundtrip_residual
from .state import BlochForm, as_density, from_bloch, to_bloch, transform_bloch

EXIT_OK = 0
EXIT_MALFORMED = 2
EXIT_INVARIANT = 3
EXIT_INTERNAL = 4

KINDS = ("rotation", "unitary", "density", "correlation", "bloch", "report")
COMMANDS = ("lift", "adjoint", "diagonalize", "triangularize", "symmetrize",
            "ortho", "transform", "verify")

PAIR_NOTE = "-U induces the same rotation and is an equally valid lift"


class DocumentError(So3LiftError, ValueError):
    """Malformed JSON, unknown kind, wrong shape, or wrong kind for a command."""


@dataclass
class MatrixDocument:
    kind: str
    data: Any
    meta: dict[str, str] = field(default_factory=dict)
    extra: dict[str, Any] = field(default_factory=dict)


# -- parsing ---------------------------------------------------------------

def _real_array(data, shape, what):
    try:
        a = np.array(data, dtype=float)
    except (TypeError, ValueError):
        raise DocumentError(f"{what}: entries must be real numbers") from None
    if a.shape != shape:
        raise DocumentError(f"{what}: expected shape {shape}, got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DocumentError(f"{what}: non-finite entries")
    return a


def _complex_array(data, shape, what):
    if not isinstance(data, list) or len(data) != shape[0]:
        raise DocumentError(f"{what}: expected {shape[0]} rows")
    out = np.empty(shape, dtype=complex)
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != shape[1]:
            raise DocumentError(f"{what}: row {i} must have {shape[1]} entries")
        for j, z in enumerate(row):
            if isinstance(z, (int, float)) and not isinstance(z, bool):
                out[i, j] = z
            elif (isinstance(z, list) and len(z) == 2
                  and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in z)):
                out[i, j] = complex(z[0], z[1])
            else:
                raise DocumentError(f"{what}: entry ({i},{j}) must be [re, im]")
    if not np.all(np.isfinite(out)):
        raise DocumentError(f"{what}: non-finite entries")
    return out


def _from_object(obj, tol) -> MatrixDocument:
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if "data" not in obj:
        raise DocumentError("document has no 'data' field")
    meta = obj.get("meta", {})
    if not isinstance(meta, dict) or not all(isinstance(v, str) for v in meta.values()):
        raise DocumentError("'meta' must be a map of strings")
    extra = {k: v for k, v in obj.items() if k not in ("kind", "data", "meta")}
    data = obj["data"]
    if kind == "rotation":
        value = as_rotation(_real_array(data, (3, 3), "rotation"), tol=tol)
    elif kind == "correlation":
        value = _real_array(data, (3, 3), "correlation")
    elif kind == "unitary":
        value = as_su2(_complex_array(data, (2, 2), "unitary"))
    elif kind == "density":
        value = as_density(_complex_array(data, (4, 4), "density"))
    elif kind == "bloch":
        if not isinstance(data, dict) or set(data) != {"a", "b", "T"}:
            raise DocumentError("bloch data must be an object with keys a, b, T")
        value = BlochForm(_real_array(data["a"], (3,), "bloch a"),
                          _real_array(data["b"], (3,), "bloch b"),
                          _real_array(data["T"], (3, 3), "bloch T"))
    else:
        if not isinstance(data, dict):
            raise DocumentError("report data must be an object")
        value = data
    return MatrixDocument(kind, value, dict(meta), extra)


def parse_documents(text, tol: float = 1e-8) -> list[MatrixDocument]:
    """Parse one document or a JSON array of documents."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"input is not UTF-8: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed JSON: {exc}") from None
    items = obj if isinstance(obj, list) else [obj]
    return [_from_object(o, tol) for o in items]


def parse_document(text, tol: float = 1e-8) -> MatrixDocument:
    docs = parse_documents(text, tol)
    if len(docs) != 1:
        raise DocumentError(f"expected a single document, got {len(docs)}")
    return docs[0]


# -- output ----------------------------------------------------------------

def _num(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ConsistencyError("non-finite number in output")
    if x == 0:
        return "0"
    return format(x, ".17g")


def _complex_nested(a):
    a = np.asarray(a, dtype=complex)
    if a.ndim == 0:
        return [float(a.real), float(a.imag)]
    return [_complex_nested(r) for r in a]


def dumps(obj, indent: int = 0) -> str:
    """JSON text with 17-significant-digit floats and stable layout."""
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{pad}  {json.dumps(str(k))}: {dumps(v, indent + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if all(isinstance(v, (int, float, np.floating, np.integer)) and not isinstance(v, bool)
               for v in obj):
            return "[" + ", ".join(_num(v) for v in obj) + "]"
        if not obj:
            return "[]"
        items = [pad + "  " + dumps(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, np.ndarray):
        return dumps(obj.tolist(), indent)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _num(obj)
    return json.dumps(str(obj))


def _doc(kind, data, **extra) -> dict:
    if kind == "bloch":
        data = {"a": data.a.tolist(), "b": data.b.tolist(), "T": data.T.tolist()}
    elif kind in ("unitary", "density"):
        data = _complex_nested(data)
    elif kind in ("rotation", "correlation"):
        data = np.asarray(data, dtype=float).tolist()
    return {"kind": kind, "data": data, **extra}


# -- commands --------------------------------------------------------------

def _expect(docs, kinds: tuple[tuple[str, ...], ...], command) -> list[MatrixDocument]:
    if len(docs) != len(kinds):
        raise DocumentError(f"{command} expects {len(kinds)} document(s), got {len(docs)}")
    for d, allowed in zip(docs, kinds):
        if d.kind not in allowed:
            raise DocumentError(f"{command} expects kind {' or '.join(allowed)}, got {d.kind!r}")
    return docs


_STATE_KINDS = ("density", "bloch", "correlation")


def _to_bloch(doc) -> BlochForm:
    if doc.kind == "density":
        return to_bloch(doc.data)
    if doc.kind == "correlation":
        return BlochForm.from_correlation(doc.data)
    return doc.data


def _state_doc(kind, bf: BlochForm, **extra) -> dict:
    if kind == "density":
        return _doc("density", from_bloch(bf), **extra)
    if kind == "correlation":
        return _doc("correlation", bf.T, **extra)
    return _doc("bloch", bf, **extra)


def _lift_doc(O, eps) -> dict:
    res = lift(O, eps)
    return _doc("unitary", res.representative,
                branch=res.branch.value,
                quaternion=list(res.quaternion),
                residual=res.residual,
                pair_note=PAIR_NOTE)


def _verify(seeds: int, n_oracle: int) -> tuple[dict, int]:
    worst = max((roundtrip_residual(random_rotation(s)) for s in range(seeds)), default=0.0)
    axes = [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1),
            (1, -2, 3), (-2, 1, 0), (0, 3, -1), (2, 0, -1)]
    worst_vec = max(roundtrip_residual(pi_rotation(n)) for n in axes)
    reports = [oracle_check(random_rotation(s)) for s in range(min(n_oracle, seeds))]
    worst_q = max((r.quaternion_distance for r in reports), default=0.0)
    ok = worst < 1e-9 and worst_vec < 1e-10 and worst_q < 1e-4
    data = {
        "seeds": seeds,
        "max_roundtrip_residual": worst,
        "vector_branch_cases": len(axes),
        "vector_branch_max_residual": worst_vec,
        "oracle_rotations": len(reports),
        "oracle_max_quaternion_distance": worst_q,
        "passed": ok,
    }
    return _doc("report", data, residual=worst), EXIT_OK if ok else EXIT_INTERNAL


def run(command: str, docs: list[MatrixDocument], *, tol: float = SIGN_EPS,
        seeds: int = 1000, oracle: int = 0, side: str = "left") -> tuple[Any, int]:
    """Execute one command on parsed documents; returns (output object, exit code)."""
    if command == "verify":
        return _verify(seeds, oracle)
    if command == "lift":
        (d,) = _expect(docs, (("rotation",),), command)
        return _lift_doc(d.data, tol), EXIT_OK
    if command == "adjoint":
        (d,) = _expect(docs, (("unitary",),), command)
        return _doc("rotation", adjoint_so3(d.data)), EXIT_OK
    if command == "ortho":
        d1, d2 = _expect(docs, (("unitary",), ("unitary",)), command)
        chk = check_orthogonality(d1.data, d2.data, tol)
        data = {"su2_trace": [chk.su2_trace.real, chk.su2_trace.imag],
                "so3_trace": chk.so3_trace, "orthogonal": chk.orthogonal}
        return _doc("report", data, residual=abs(chk.so3_trace + 1) if chk.orthogonal else 0.0), EXIT_OK
    if command == "transform":
        d, dl, dr = _expect(docs, (_STATE_KINDS, ("rotation",), ("rotation",)), command)
        return _state_doc(d.kind, transform_bloch(_to_bloch(d), dl.data, dr.data)), EXIT_OK
    if command == "diagonalize":
        (d,) = _expect(docs, (_STATE_KINDS,), command)
        bf = _to_bloch(d)
        UL, UR, out = diagonalize(bf, eps=tol)
        off = float(np.abs(out.T - np.diag(np.diag(out.T))).max())
        return [_doc("unitary", UL, pair_note=PAIR_NOTE),
                _doc("unitary", UR, pair_note=PAIR_NOTE),
                _state_doc(d.kind, out, residual=off)], EXIT_OK
    if command in ("triangularize", "symmetrize"):
        (d,) = _expect(docs, (_STATE_KINDS,), command)
        bf = _to_bloch(d)
        if command == "triangularize":
            U, out = triangularize(bf, side, eps=tol)
            below = np.tril(out.T, -1) if side == "left" else np.triu(out.T, 1)
            res = float(np.abs(below).max())
        else:
            U, out = symmetrize_one_sided(bf, side, eps=tol)
            res = float(np.abs(out.T - out.T.T).max())
        return [_doc("unitary", U, pair_note=PAIR_NOTE),
                _state_doc(d.kind, out, residual=res)], EXIT_OK
    raise DocumentError(f"unknown command {command!r}")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="so3lift", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--in", dest="inp", default="-", help="input file, '-' for stdin")
    ap.add_argument("--out", default="-", help="output file, '-' for stdout")
    ap.add_argument("--tol", type=float, default=SIGN_EPS, help="sign/zero threshold")
    ap.add_argument("--seeds", type=int, default=1000, help="rotations checked by verify")
    ap.add_argument("--oracle", type=int, default=10,
                    help="rotations also checked against the brute-force oracle by verify")
    ap.add_argument("--side", choices=("left", "right"), default="left")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return ap


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "verify":
            docs = []
        elif args.inp == "-":
            docs = parse_documents(sys.stdin.buffer.read())
        else:
            with open(args.inp, "rb") as fh:
                docs = parse_documents(fh.read())
        out, code = run(args.command, docs, tol=args.tol, seeds=args.seeds,
                        oracle=args.oracle, side=args.side)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except InvalidInputError as exc:
        print(f"error: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ConsistencyError, So3LiftError) as exc:
        print(f"error: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    text = dumps(out) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
