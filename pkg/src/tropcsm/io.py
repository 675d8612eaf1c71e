"""JSON readers and writers for matroids, fans, cycles, polytopes and triangulations."""

import json
from fractions import Fraction

from .cones import Cone
from .fan import PolyhedralCycle, WeightedFan
from .matroid import MatroidError, from_bases
from .noether import DegenerateInput, UnimodularTriangulation, hull


class InputError(ValueError):
    """Malformed input document; ``code`` is a stable machine-readable tag."""

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError("io-error", f"{path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise InputError("json-parse", f"{path}: line {e.lineno} column {e.colno}: {e.msg}") from e


def _require(doc, key, kind):
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"missing-{key}", f"{kind} document needs a '{key}' field")
    return doc[key]


def _int_vector(v, where, length=None):
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool)
                                          for x in v):
        raise InputError("not-integer-vector", f"{where}: expected a list of integers, got {v!r}")
    if length is not None and len(v) != length:
        raise InputError("wrong-length", f"{where}: expected length {length}, got {len(v)}")
    return tuple(v)


def rational(s):
    if isinstance(s, int) and not isinstance(s, bool):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError):
            pass
    raise InputError("bad-rational", f"cannot read {s!r} as a rational number")


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# -- matroids -------------------------------------------------------------------

def matroid_from_json(doc):
    n = _require(doc, "n", "matroid")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InputError("bad-n", f"'n' must be a nonnegative integer, got {n!r}")
    bases = _require(doc, "bases", "matroid")
    if not isinstance(bases, list):
        raise InputError("bad-bases", "'bases' must be a list of lists")
    rows = [_int_vector(b, f"bases[{i}]") for i, b in enumerate(bases)]
    for b in rows:
        if any(not 0 <= x < n for x in b):
            raise InputError("element-out-of-range", f"basis {list(b)} uses elements outside 0..{n - 1}")
    try:
        return from_bases(n, rows)
    except MatroidError as e:
        raise InputError(type(e).__name__, str(e)) from e


def matroid_to_json(M):
    return {"n": M.n, "bases": sorted(sorted(b) for b in M.bases)}


# -- fans and cycles ------------------------------------------------------------

def _cells(doc):
    n = _require(doc, "ambient_dim", "fan")
    if not isinstance(n, int) or n < 0:
        raise InputError("bad-ambient-dim", "'ambient_dim' must be a nonnegative integer")
    cells = _require(doc, "cells", "fan")
    out = []
    for i, c in enumerate(cells):
        if not isinstance(c, dict):
            raise InputError("bad-cell", f"cells[{i}] must be an object")
        rays = [_int_vector(r, f"cells[{i}].rays", n) for r in c.get("rays", [])]
        lin = [_int_vector(r, f"cells[{i}].lineality", n) for r in c.get("lineality", [])]
        w = c.get("weight", 1)
        if not isinstance(w, int) or isinstance(w, bool):
            raise InputError("bad-weight", f"cells[{i}].weight must be an integer")
        apex = c.get("apex")
        pts = c.get("vertices")
        if apex is not None:
            pts = [apex]
        pts = [[rational(x) for x in p] for p in (pts or [[0] * n])]
        for p in pts:
            if len(p) != n:
                raise InputError("wrong-length", f"cells[{i}] apex has length {len(p)}, expected {n}")
        try:
            cone = Cone.make(n, rays, lin)
        except ValueError as e:
            raise InputError("bad-cone", f"cells[{i}]: {e}") from e
        out.append((pts, cone, w))
    return n, doc.get("dim"), out


def fan_from_json(doc):
    n, dim, cells = _cells(doc)
    if any(any(x for p in pts for x in p) or len(pts) > 1 for pts, _, _ in cells):
        raise InputError("not-a-fan", "cells with a nonzero apex: use a polyhedral cycle")
    return WeightedFan(n, tuple((c, w) for _, c, w in cells), dim)


def cycle_from_json(doc):
    n, dim, cells = _cells(doc)
    return PolyhedralCycle(n, tuple((pts, c, w) for pts, c, w in cells), dim)


def is_fan_document(doc):
    try:
        _, _, cells = _cells(doc)
    except InputError:
        return False
    return all(len(pts) == 1 and not any(pts[0]) for pts, _, _ in cells)


def fan_to_json(F, extra=None):
    return F.to_json(extra)


def cycle_to_json(A):
    cells = []
    for pts, c, w in A.cells:
        cell = {"vertices": [[format_rational(x) for x in p] for p in pts]}
        cell.update(c.to_json())
        cell["weight"] = w
        cells.append(cell)
    return {"ambient_dim": A.ambient_dim, "dim": A.dim, "cells": cells}


# -- polytopes and triangulations -----------------------------------------------

def polytope_from_json(doc):
    verts = _require(doc, "vertices", "polytope")
    pts = [_int_vector(v, f"vertices[{i}]", 3) for i, v in enumerate(verts)]
    try:
        return hull(pts)
    except DegenerateInput as e:
        raise InputError("DegenerateInput", str(e)) from e


def triangulation_from_json(doc):
    pts = [_int_vector(p, f"points[{i}]", 3) for i, p in enumerate(_require(doc, "points",
                                                                               "triangulation"))]
    tets = [_int_vector(t, f"tets[{i}]", 4) for i, t in enumerate(_require(doc, "tets",
                                                                            "triangulation"))]
    for t in tets:
        if any(not 0 <= x < len(pts) for x in t) or len(set(t)) != 4:
            raise InputError("bad-tet", f"tetrahedron {list(t)} does not index four distinct points")
    return UnimodularTriangulation(tuple(pts), tuple(tets))
