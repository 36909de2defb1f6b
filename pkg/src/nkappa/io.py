"""JSON interchange format for realizations and reports.

Complex scalars are ``[re, im]`` pairs, matrices are row-major lists of
rows.  :func:`dumps` is canonical: sorted keys, no insignificant
whitespace, floats with 17 significant digits, so equal documents serialize
to equal bytes.
"""

import hashlib
import json
import math
from importlib import resources

import numpy as np

from .errors import SchemaError, ValidationError
from .realization import Realization

SCHEMA_VERSION = "1.0"

__all__ = [
    "SCHEMA_VERSION",
    "dumps",
    "encode_matrix",
    "decode_matrix",
    "encode_complex",
    "realization_to_document",
    "realization_from_document",
    "load_realization",
    "fixture_path",
    "load_fixture",
    "digest",
]


def _fmt_float(x):
    if not math.isfinite(x):
        raise ValidationError(f"cannot serialize non-finite value {x}", "finite")
    text = format(x + 0.0, ".17g")
    return text if any(c in text for c in ".en") else text + ".0"


def dumps(obj):
    """Canonical JSON text for ``obj``."""
    if isinstance(obj, dict):
        items = sorted((str(k), v) for k, v in obj.items())
        return "{" + ",".join(json.dumps(k) + ":" + dumps(v) for k, v in items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps(v) for v in obj) + "]"
    if isinstance(obj, (bool, np.bool_)) or obj is None:
        return json.dumps(bool(obj) if obj is not None else None)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return dumps(encode_complex(obj))
    if isinstance(obj, np.ndarray):
        return dumps(obj.tolist())
    if isinstance(obj, str):
        return json.dumps(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def encode_complex(z):
    z = complex(z)
    return [z.real + 0.0, z.imag + 0.0]


def encode_matrix(M):
    M = np.asarray(M, dtype=complex)
    return [[encode_complex(v) for v in row] for row in M]


def _scalar(v, where):
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return complex(v)
    if (isinstance(v, list) and len(v) == 2
            and all(isinstance(t, (int, float)) and not isinstance(t, bool) for t in v)):
        return complex(v[0], v[1])
    raise SchemaError(f"{where}: expected [re, im], got {v!r}")


def decode_matrix(rows, where="matrix", shape=None):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise SchemaError(f"{where}: expected a list of rows")
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise SchemaError(f"{where}: ragged rows")
    M = np.array([[_scalar(v, where) for v in r] for r in rows], dtype=complex)
    if not rows:
        M = np.zeros((0, 0 if shape is None else shape[1]), complex)
    elif M.ndim != 2:
        M = M.reshape(len(rows), -1)
    if shape is not None and M.shape != tuple(shape):
        raise SchemaError(f"{where}: shape {M.shape}, expected {tuple(shape)}")
    return M


def realization_to_document(R, metadata=None):
    doc = {
        "schema_version": SCHEMA_VERSION,
        "space": {"dim": R.n, "J": encode_matrix(R.J.J)},
        "A": encode_matrix(R.A),
        "Gamma": encode_matrix(R.Gamma),
        "metadata": metadata or {},
    }
    if R.S is not None:
        doc["S"] = encode_matrix(R.S)
    return doc


def realization_from_document(doc, tol=None):
    """Validate a document and build the :class:`Realization` it describes."""
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    for key in ("schema_version", "space", "A", "Gamma"):
        if key not in doc:
            raise SchemaError(f"missing key {key!r}")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {doc['schema_version']!r}")
    space = doc["space"]
    if not isinstance(space, dict) or "dim" not in space or "J" not in space:
        raise SchemaError("space must contain 'dim' and 'J'")
    n = space["dim"]
    if not isinstance(n, int) or n < 0:
        raise SchemaError("space.dim must be a nonnegative integer")
    J = decode_matrix(space["J"], "space.J", (n, n) if n else None)
    A = decode_matrix(doc["A"], "A", (n, n) if n else None)
    Gamma = decode_matrix(doc["Gamma"], "Gamma")
    if Gamma.shape[0] != n:
        raise SchemaError(f"Gamma: {Gamma.shape[0]} rows, expected {n}")
    S = doc.get("S")
    if S is not None:
        S = decode_matrix(S, "S", (Gamma.shape[1], Gamma.shape[1]))
    if n == 0:
        J, A = np.zeros((0, 0)), np.zeros((0, 0))
    kwargs = {} if tol is None else {"tol": tol}
    return Realization(J, A, Gamma, S, **kwargs)


def load_realization(path, tol=None):
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: invalid JSON ({exc})") from exc
    return realization_from_document(doc, tol)


def fixture_path(name):
    """Path of a bundled fixture, e.g. ``"example4"``."""
    return resources.files("nkappa") / "data" / f"{name}.json"


def load_fixture(name, tol=None):
    return load_realization(fixture_path(name), tol)


def digest(doc):
    """SHA-256 of the canonical serialization."""
    return hashlib.sha256(dumps(doc).encode()).hexdigest()
