"""JSON wire formats.

* Mukai vector: ``{"r": int, "d": [ints], "eps": 0|1, "t": int}``
* divisor class: ``{"d": [ints], "eps": 0|1}``
* K3 vector: ``{"r": int, "d": [ints], "s": int, "form": "doubled"}``
* curve test set: ``{"curves": [[ints], ...], "cone_ref": [ints]}``
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import MukaiError
from .exceptional_collections import CollectionReport, IsotropicSequence
from .k3 import K3MukaiVector
from .lattice import GramLattice
from .mukai import MukaiVector
from .picard import CurveTestSet, DivisorClass
from .polarization import PolarizationCertificate


class InputError(MukaiError):
    """Malformed input document; ``field`` names the offending entry."""

    invariant = "json_input"

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def load_document(arg: str) -> Any:
    """Inline JSON if the argument looks like JSON, otherwise a path to a JSON file."""
    text = arg.strip()
    if not text.startswith(("{", "[")):
        try:
            text = Path(arg).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError("<document>", f"cannot read {arg!r}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("<document>", f"malformed JSON: {exc}") from None


def _int(doc: dict, key: str, where: str) -> int:
    if key not in doc:
        raise InputError(f"{where}.{key}", "missing")
    val = doc[key]
    if isinstance(val, bool) or not isinstance(val, int):
        raise InputError(f"{where}.{key}", f"expected an integer, got {val!r}")
    return val


def parse_coords(val: Any, where: str, rank: int) -> tuple[int, ...]:
    if not isinstance(val, list):
        raise InputError(where, f"expected a list of {rank} integers")
    if len(val) != rank:
        raise InputError(where, f"expected {rank} entries, got {len(val)}")
    for i, a in enumerate(val):
        if isinstance(a, bool) or not isinstance(a, int):
            raise InputError(f"{where}[{i}]", f"expected an integer, got {a!r}")
    return tuple(val)


def _object(doc: Any, where: str) -> dict:
    if not isinstance(doc, dict):
        raise InputError(where, "expected a JSON object")
    return doc


def _eps(doc: dict, where: str) -> int:
    eps = doc.get("eps", 0)
    if isinstance(eps, bool) or eps not in (0, 1):
        raise InputError(f"{where}.eps", f"expected 0 or 1, got {eps!r}")
    return eps


def parse_divisor(doc: Any, L: GramLattice, where: str = "divisor") -> DivisorClass:
    if isinstance(doc, list):
        return DivisorClass(parse_coords(doc, where, L.rank), 0)
    doc = _object(doc, where)
    if "d" not in doc:
        raise InputError(f"{where}.d", "missing")
    return DivisorClass(parse_coords(doc["d"], f"{where}.d", L.rank), _eps(doc, where))


def parse_vector(doc: Any, L: GramLattice, where: str = "vector") -> MukaiVector:
    doc = _object(doc, where)
    r = _int(doc, "r", where)
    t = _int(doc, "t", where)
    return MukaiVector(r, parse_divisor(doc, L, where), t)


def parse_vector_list(doc: Any, L: GramLattice, where: str = "vectors") -> list[MukaiVector]:
    if not isinstance(doc, list):
        raise InputError(where, "expected a JSON list of vectors")
    return [parse_vector(item, L, f"{where}[{i}]") for i, item in enumerate(doc)]


def parse_test_set(doc: Any, L: GramLattice, where: str = "test_set") -> CurveTestSet:
    doc = _object(doc, where)
    curves = doc.get("curves")
    if not isinstance(curves, list):
        raise InputError(f"{where}.curves", "expected a list of coordinate lists")
    if "cone_ref" not in doc:
        raise InputError(f"{where}.cone_ref", "missing")
    return CurveTestSet(
        tuple(parse_coords(c, f"{where}.curves[{i}]", L.rank) for i, c in enumerate(curves)),
        parse_coords(doc["cone_ref"], f"{where}.cone_ref", L.rank),
        L,
    )


def parse_k3_vector(doc: Any, L: GramLattice, where: str = "k3_vector") -> K3MukaiVector:
    doc = _object(doc, where)
    form = doc.get("form", "doubled")
    if form != "doubled":
        raise InputError(f"{where}.form", f"only 'doubled' is supported, got {form!r}")
    if "d" not in doc:
        raise InputError(f"{where}.d", "missing")
    return K3MukaiVector(_int(doc, "r", where), parse_coords(doc["d"], f"{where}.d", L.rank), _int(doc, "s", where))


def divisor_to_json(D: DivisorClass) -> dict:
    return {"d": list(D.num), "eps": D.eps}


def vector_to_json(v: MukaiVector) -> dict:
    return {"r": v.r, "d": list(v.D.num), "eps": v.D.eps, "t": v.t}


def k3_vector_to_json(w: K3MukaiVector) -> dict:
    return {"r": w.r, "d": list(w.Dnum), "s": w.s, "form": "doubled"}


def curve_test_set_to_json(T: CurveTestSet) -> dict:
    return {"curves": [list(c) for c in T.curves], "cone_ref": list(T.cone_ref)}


def certificate_to_json(cert: PolarizationCertificate) -> dict:
    return {
        "X": list(cert.X),
        "k": cert.k,
        "Hprime": divisor_to_json(cert.Hprime),
        "d": cert.d,
        "gcd_value": cert.gcd_value,
        "r": cert.r,
        "Hseed": divisor_to_json(cert.Hseed),
    }


def sequence_to_json(seq: IsotropicSequence) -> list[list[int]]:
    return [list(c) for c in seq.classes]


def report_to_json(rep: CollectionReport) -> dict:
    return {"chi": rep.chi, "verdict": rep.verdict, "failures": rep.failures}


def parse_certificate(doc: Any, L: GramLattice, where: str = "certificate") -> PolarizationCertificate:
    doc = _object(doc, where)
    if "X" not in doc:
        raise InputError(f"{where}.X", "missing")
    for key in ("Hprime", "Hseed"):
        if key not in doc:
            raise InputError(f"{where}.{key}", "missing")
    return PolarizationCertificate(
        parse_coords(doc["X"], f"{where}.X", L.rank),
        _int(doc, "k", where),
        parse_divisor(doc["Hprime"], L, f"{where}.Hprime"),
        _int(doc, "d", where),
        _int(doc, "gcd_value", where),
        _int(doc, "r", where),
        parse_divisor(doc["Hseed"], L, f"{where}.Hseed"),
    )
