"""JSON documents: polygon inputs and orbit certificates.

Coordinates are exact rationals written as strings ("3", "-7/2"); JSON
integers are accepted in polygon documents, floating-point literals never.
"""
from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .errors import DocumentError
from .geometry import ConvexPolygon, Point, fraction_str
from .orbits import OrbitCertificate

CERTIFICATE_FORMAT = "outer-billiards-certificate/1"
_RATIONAL = re.compile(r"-?\d+(/[1-9]\d*)?\Z")


class _FloatLiteral(str):
    pass


def _loads(text: str, what: str):
    try:
        return json.loads(text, parse_float=_FloatLiteral)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{what}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def parse_rational(value, where: str) -> Fraction:
    if isinstance(value, _FloatLiteral):
        raise DocumentError(f"{where}: floating-point literal {value} is not exact; write it as a fraction")
    if isinstance(value, bool):
        raise DocumentError(f"{where}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.match(value.strip()):
        return Fraction(value.strip())
    raise DocumentError(f"{where}: expected an integer or 'p/q' string, got {value!r}")


def parse_point(value, where: str) -> Point:
    if not isinstance(value, list) or len(value) != 2:
        raise DocumentError(f"{where}: expected a pair [x, y]")
    return Point(parse_rational(value[0], where + "[0]"), parse_rational(value[1], where + "[1]"))


def parse_point_arg(text: str) -> Point:
    """Parse ``"x,y"`` command-line points."""
    parts = text.split(",")
    if len(parts) != 2:
        raise DocumentError(f"point {text!r}: expected 'x,y'")
    return Point(parse_rational(parts[0].strip(), "x"), parse_rational(parts[1].strip(), "y"))


@dataclass(frozen=True)
class PolygonDocument:
    vertices: tuple
    origin: Point | None = None
    name: str | None = None


def load_polygon_document(text: str) -> PolygonDocument:
    data = _loads(text, "polygon document")
    if not isinstance(data, dict):
        raise DocumentError("polygon document: top level must be an object")
    extra = set(data) - {"vertices", "origin", "name"}
    if extra:
        raise DocumentError(f"polygon document: unknown field(s) {sorted(extra)}")
    if "vertices" not in data:
        raise DocumentError("polygon document: missing field 'vertices'")
    verts = data["vertices"]
    if not isinstance(verts, list):
        raise DocumentError("vertices: expected a list of [x, y] pairs")
    vertices = tuple(parse_point(v, f"vertices[{i}]") for i, v in enumerate(verts))
    origin = parse_point(data["origin"], "origin") if data.get("origin") is not None else None
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise DocumentError("name: expected a string")
    return PolygonDocument(vertices, origin, name)


def dump_polygon_document(doc: PolygonDocument) -> str:
    out = {}
    if doc.name is not None:
        out["name"] = doc.name
    out["vertices"] = [v.to_strings() for v in doc.vertices]
    if doc.origin is not None:
        out["origin"] = doc.origin.to_strings()
    return json.dumps(out, indent=2) + "\n"


def polygon_hash(P: ConvexPolygon) -> str:
    text = ";".join(f"{fraction_str(v.x)},{fraction_str(v.y)}" for v in P.vertices)
    return hashlib.sha256(text.encode()).hexdigest()


def _pt(p: Point) -> str:
    return json.dumps(p.to_strings())


def dump_certificate(cert: OrbitCertificate, P: ConvexPolygon) -> str:
    """Deterministic certificate text: same certificate, same bytes."""
    head = [
        ("format", json.dumps(CERTIFICATE_FORMAT)),
        ("tool_version", json.dumps(__version__)),
        ("polygon_sha256", json.dumps(polygon_hash(P))),
        ("origin", _pt(cert.spec.origin)),
        ("p", json.dumps(list(cert.spec.p))),
        ("t2_period", str(cert.t2_period)),
        ("t_period", str(cert.t_period)),
        ("rotation_number", str(cert.rotation_number)),
        ("min_distance_sq", json.dumps(fraction_str(cert.min_distance_sq))),
        ("word", json.dumps([a + 1 for a in cert.word])),
    ]
    lines = ["{"]
    lines += [f'  "{k}": {v},' for k, v in head]
    lines.append('  "cycle": [')
    lines.append(",\n".join("    " + _pt(p) for p in cert.cycle))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CertificateDocument:
    tool_version: str
    polygon_sha256: str
    origin: Point
    p: tuple
    t2_period: int
    t_period: int
    rotation_number: int
    min_distance_sq: Fraction
    word: tuple
    cycle: tuple


_CERT_KEYS = ["format", "tool_version", "polygon_sha256", "origin", "p", "t2_period",
              "t_period", "rotation_number", "min_distance_sq", "word", "cycle"]


def _int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{where}: expected an integer")
    return value


def load_certificate(text: str) -> CertificateDocument:
    data = _loads(text, "certificate")
    if not isinstance(data, dict):
        raise DocumentError("certificate: top level must be an object")
    if list(data) != _CERT_KEYS:
        raise DocumentError(f"certificate: fields must be exactly {_CERT_KEYS}, got {list(data)}")
    if data["format"] != CERTIFICATE_FORMAT:
        raise DocumentError(f"certificate: unknown format {data['format']!r}")
    for key in ("tool_version", "polygon_sha256"):
        if not isinstance(data[key], str):
            raise DocumentError(f"{key}: expected a string")
    for key in ("p", "word", "cycle"):
        if not isinstance(data[key], list):
            raise DocumentError(f"{key}: expected a list")
    if not isinstance(data["min_distance_sq"], str):
        raise DocumentError("min_distance_sq: expected a rational string")
    return CertificateDocument(
        tool_version=data["tool_version"],
        polygon_sha256=data["polygon_sha256"],
        origin=parse_point(data["origin"], "origin"),
        p=tuple(_int(x, f"p[{i}]") for i, x in enumerate(data["p"])),
        t2_period=_int(data["t2_period"], "t2_period"),
        t_period=_int(data["t_period"], "t_period"),
        rotation_number=_int(data["rotation_number"], "rotation_number"),
        min_distance_sq=parse_rational(data["min_distance_sq"], "min_distance_sq"),
        word=tuple(_int(x, f"word[{i}]") - 1 for i, x in enumerate(data["word"])),
        cycle=tuple(parse_point(c, f"cycle[{i}]") for i, c in enumerate(data["cycle"])),
    )
