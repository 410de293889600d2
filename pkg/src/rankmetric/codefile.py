"""JSON file formats for matrix and vector codes.

Matrix code::

    {"format": "rankmetric-v1", "p": 2, "e": 1, "modulus": [0, 1],
     "n": 3, "m": 3, "basis": [[[0, 1, 0], [1, 0, 0], [0, 0, 0]], ...]}

Vector (Gabidulin) code::

    {"format": "rankmetric-v1", "p": 2, "e": 1, "m": 2, "modulus_base": [0, 1],
     "modulus_ext": [1, 1, 1], "n": 2, "k": 1, "generator": [[1, 2]]}

Field elements are integers whose base-p digits are polynomial coefficients.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path

from .errors import InputError, RankMetricError
from .field import FiniteField, extension, field_make
from .gabidulin import GabidulinCode
from .matspace import MatrixCode

FORMAT = "rankmetric-v1"
_SAFE_INT = 1 << 53

log = logging.getLogger(__name__)


class ParseError(InputError):
    pass


def json_int(x: int):
    """Integers beyond 2^53 become decimal strings so lossy readers keep them."""
    return str(x) if abs(x) > _SAFE_INT else x


def _field_modulus(F: FiniteField) -> list[int]:
    return list(F.modulus)


def code_to_dict(C: MatrixCode) -> dict:
    F = C.field
    return {
        "format": FORMAT,
        "p": F.p,
        "e": F.e,
        "modulus": _field_modulus(F),
        "n": C.n,
        "m": C.m,
        "basis": [[list(row) for row in M] for M in C.basis],
    }


def gabidulin_to_dict(C: GabidulinCode) -> dict:
    return {
        "format": FORMAT,
        "p": C.base.p,
        "e": C.base.e,
        "m": C.m,
        "modulus_base": _field_modulus(C.base),
        "modulus_ext": _field_modulus(C.ext) if C.ext != C.base else [0, 1],
        "n": C.n,
        "k": C.k,
        "generator": [list(r) for r in C.generator],
    }


def dumps(doc: dict) -> str:
    """Stable layout: one key per line, one matrix (or generator row) per line."""
    lines = []
    for key, val in doc.items():
        if key in ("basis", "generator") and val:
            inner = ",\n".join("    " + json.dumps(x) for x in val)
            text = "[\n" + inner + "\n  ]"
        else:
            text = json.dumps(val)
        lines.append(f"  {json.dumps(key)}: {text}")
    return "{\n" + ",\n".join(lines) + "\n}\n"


def _require(doc: dict, *keys):
    missing = [k for k in keys if k not in doc]
    if missing:
        raise ParseError(f"missing keys: {', '.join(missing)}")


def _int(doc, key) -> int:
    v = doc[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"{key!r} must be an integer")
    return v


def _base_field(doc: dict, modulus_key: str) -> FiniteField:
    p, e = _int(doc, "p"), _int(doc, "e")
    modulus = doc.get(modulus_key)
    return field_make(p, e, modulus)


def code_from_dict(doc: dict) -> MatrixCode:
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    fmt = doc.get("format", FORMAT)
    if fmt != FORMAT:
        raise ParseError(f"unsupported format {fmt!r}")
    _require(doc, "p", "e", "n", "m", "basis")
    try:
        F = _base_field(doc, "modulus")
        n, m = _int(doc, "n"), _int(doc, "m")
        basis = doc["basis"]
        if not isinstance(basis, list):
            raise ParseError("'basis' must be a list of matrices")
        C = MatrixCode.span(F, n, m, basis)
    except ParseError:
        raise
    except (RankMetricError, TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from exc
    if C.t < len(basis):
        log.warning("dropped %d dependent basis matrices", len(basis) - C.t)
    return C


def gabidulin_from_dict(doc: dict) -> GabidulinCode:
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    _require(doc, "p", "e", "m", "n", "generator")
    try:
        base = _base_field(doc, "modulus_base")
        m = _int(doc, "m")
        ext = extension(base, m, doc.get("modulus_ext") if m > 1 else None)
        n = _int(doc, "n")
        C = GabidulinCode.from_generator(base, ext, doc["generator"], n)
    except ParseError:
        raise
    except (RankMetricError, TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from exc
    if "k" in doc and doc["k"] != C.k:
        log.warning("generator has rank %d over the extension, file says k=%s", C.k, doc["k"])
    return C


def _load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def is_gabidulin_doc(doc: dict) -> bool:
    return isinstance(doc, dict) and "generator" in doc


def load_code(path) -> MatrixCode:
    return code_from_dict(_load_json(path))


def load_gabidulin(path) -> GabidulinCode:
    return gabidulin_from_dict(_load_json(path))


def save(doc: dict, path) -> None:
    Path(path).write_text(dumps(doc), encoding="utf-8")
