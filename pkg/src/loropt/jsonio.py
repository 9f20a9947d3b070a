"""JSON interchange for matrices and vectors.

Complex arrays encode every entry as ``[re, im]``; real arrays are nested
lists of numbers. Floats use the shortest round-trip representation, integral
values print without a fractional part and negative zero prints as ``0`` so
that identical computations give byte-identical documents.
"""

from __future__ import annotations

import json
import math

import numpy as np


def num(x):
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot encode non-finite value {x!r}")
    if x == 0.0:
        return 0
    if x.is_integer() and abs(x) < 2**53:
        return int(x)
    return x


def encode_real(a):
    a = np.asarray(a)
    if np.iscomplexobj(a):
        a = a.real
    if a.ndim == 0:
        return num(a)
    return [encode_real(row) for row in a]


def encode_complex(a):
    a = np.asarray(a, dtype=complex)
    if a.ndim == 0:
        return [num(a.real), num(a.imag)]
    return [encode_complex(row) for row in a]


def encode(a):
    """Real encoding when the array carries no imaginary part, complex otherwise."""
    a = np.asarray(a)
    if np.iscomplexobj(a) and np.any(a.imag != 0):
        return encode_complex(a)
    return encode_real(a)


def _is_pair(x):
    return (
        isinstance(x, list)
        and len(x) == 2
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in x)
    )


def decode_matrix(obj, shape=None):
    """Decode a real or complex nested list; complex entries are [re, im] pairs."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, list) or not obj:
        raise ValueError("matrix must be a non-empty nested list")
    rows = []
    complex_form = None
    for row in obj:
        if not isinstance(row, list) or not row:
            raise ValueError("matrix rows must be non-empty lists")
        parsed = []
        for entry in row:
            if _is_pair(entry):
                kind = True
                parsed.append(complex(entry[0], entry[1]))
            elif isinstance(entry, (int, float)) and not isinstance(entry, bool):
                kind = False
                parsed.append(float(entry))
            else:
                raise ValueError(f"bad matrix entry {entry!r}")
            if complex_form is None:
                complex_form = kind
            elif complex_form != kind:
                raise ValueError("mixed real and complex entries")
        rows.append(parsed)
    if len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix")
    out = np.array(rows, dtype=complex if complex_form else float)
    if shape is not None and out.shape != tuple(shape):
        raise ValueError(f"expected shape {tuple(shape)}, got {out.shape}")
    return out


def decode_jones(obj):
    """Jones vector ``[[re, im], [re, im]]``."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not (isinstance(obj, list) and len(obj) == 2 and all(_is_pair(e) for e in obj)):
        raise ValueError("Jones vector must be [[re, im], [re, im]]")
    return np.array([complex(*e) for e in obj])


def dumps(doc):
    return json.dumps(doc, separators=(",", ":"), allow_nan=False)
