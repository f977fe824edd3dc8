"""Command-line interface: ``outer-billiards {analyze,orbit,verify,cell,render}``.

Exit codes
    0  success
    2  bad command-line usage (argparse)
    3  document could not be parsed
    4  polygon or origin rejected by validation
    5  orbit search exhausted
    6  certificate verification failed
    7  point is not periodic / lies on a discontinuity
"""
from __future__ import annotations

import argparse
import json
import random
import re
import sys
from pathlib import Path

from . import __version__
from .analysis import density_scan, periodic_cell, perturb_and_retrace, sample_interior
from .asymptotics import far_field_radius, necklace, quasi_rationality
from .billiard import detect_period, step_T
from .documents import (dump_certificate, load_certificate, load_polygon_document,
                        parse_point_arg, parse_rational, polygon_hash)
from .errors import (BilliardError, DocumentError, NotAnOrbit, NotPeriodic, OnDiscontinuity,
                     PolygonError, SearchExhausted, OriginOutside, UndefinedMap)
from .geometry import fraction_str, sqrt_upper, validate_polygon
from .orbits import DEFAULT_CAP, find_orbit, verify_orbit
from .svg import Scene, render_svg

EXIT_OK = 0
EXIT_PARSE = 3
EXIT_INVALID = 4
EXIT_EXHAUSTED = 5
EXIT_VERIFY = 6
EXIT_NOT_PERIODIC = 7


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read(path: str, code: int = EXIT_PARSE) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}", code) from None
    except UnicodeDecodeError as exc:
        raise CliError(f"{path}: not UTF-8 text (byte {exc.start})", code) from None


def _load_polygon(path: str, origin_arg: str | None = None):
    try:
        doc = load_polygon_document(_read(path))
    except DocumentError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None
    try:
        P = validate_polygon(doc.vertices, require_no_parallel_sides=True)
    except PolygonError as exc:
        raise CliError(f"{path}: {type(exc).__name__}: {exc}", EXIT_INVALID) from None
    origin = doc.origin
    if origin_arg is not None:
        try:
            origin = parse_point_arg(origin_arg)
        except DocumentError as exc:
            raise CliError(f"--origin: {exc}", EXIT_PARSE) from None
    try:
        nd = necklace(P, origin)
    except OriginOutside as exc:
        raise CliError(f"{path}: {exc}", EXIT_INVALID) from None
    return doc, P, nd


def _strs(p):
    return p.to_strings()


_FLAT = re.compile(r"\[\s*((?:\"[^\"]*\"|-?\d+|null)(?:,\s*(?:\"[^\"]*\"|-?\d+|null))*)\s*\]")


def to_json(obj) -> str:
    """Indented JSON with arrays of scalars kept on one line."""
    text = json.dumps(obj, indent=2)
    return _FLAT.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text) + "\n"


def _write(text: str, path: str | None, out):
    if path is None or path == "-":
        out.write(text)
    else:
        Path(path).write_text(text)


def necklace_scene(P, nd, scene=None) -> Scene:
    scene = scene or Scene()
    for s in nd.strips:
        scene.region([s.inner, s.outer], fill="#4a90d9", fill_opacity="0.12", stroke="none")
    for L in nd.lines:
        scene.line(L, stroke="#888888", stroke_dasharray="4 4")
    scene.polygon(nd.R.vertices, stroke="#c0392b")
    scene.polygon(P.vertices, fill="#dddddd")
    scene.point(nd.origin, r=2)
    return scene


def analyze_report(doc, P, nd, density_K: int | None = None) -> dict:
    qr = quasi_rationality(nd.times)
    report = {
        "name": doc.name,
        "polygon": [_strs(v) for v in P.vertices],
        "origin": _strs(nd.origin),
        "pairs": [{"direction": p.direction_index + 1, "upper": p.upper + 1,
                   "lower": p.lower + 1} for p in nd.pairs],
        "vectors": [_strs(v) for v in nd.vectors],
        "lines": [{"base": _strs(L.base), "dir": _strs(L.dir)} for L in nd.lines],
        "strips": [{
            "direction": s.direction_index + 1,
            "side": s.side_index + 1,
            "opposite_vertex": s.opposite_vertex + 1,
            "inner": {"base": _strs(s.inner.boundary.base), "dir": _strs(s.inner.boundary.dir)},
            "outer": {"base": _strs(s.outer.boundary.base), "dir": _strs(s.outer.boundary.dir)},
            "half_width_sq": fraction_str(s.half_width_sq()),
        } for s in nd.strips],
        "R": [_strs(v) for v in nd.R.vertices],
        "times": [fraction_str(t) for t in nd.times],
        "quasi_rational": None if qr is None else {
            "multiples": list(qr.multiples), "period": fraction_str(qr.period)},
        "far_field_radius": fraction_str(far_field_radius(P, nd)),
    }
    if density_K is not None:
        d = density_scan(P, nd, density_K)
        report["density"] = {
            "K": d.K,
            "admissible": len(d.admissible),
            "fraction": None if d.fraction is None else fraction_str(d.fraction),
            "smallest": d.smallest,
        }
    return report


def cmd_analyze(args, out) -> int:
    doc, P, nd = _load_polygon(args.polygon, args.origin)
    report = analyze_report(doc, P, nd, args.density_K)
    out.write(to_json(report))
    if args.svg:
        Path(args.svg).write_text(render_svg(necklace_scene(P, nd)))
    return EXIT_OK


def orbit_scene(P, nd, cert) -> Scene:
    scene = Scene()
    for s in nd.strips:
        scene.region([s.inner, s.outer], fill="#4a90d9", fill_opacity="0.12", stroke="none")
    scene.polygon(cert.cycle, stroke="#c0392b")
    for x in cert.cycle:
        scene.point(x, r=1.5, fill="#c0392b", stroke="none")
    scene.polygon(P.vertices, fill="#dddddd")
    return scene


def cmd_orbit(args, out) -> int:
    doc, P, nd = _load_polygon(args.polygon, args.origin)
    try:
        min_scale = parse_rational(args.min_scale, "--min-scale")
    except DocumentError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    try:
        cert = find_orbit(P, nd, min_scale=min_scale, cap=args.cap)
    except SearchExhausted as exc:
        raise CliError(f"{exc}; diagnostics: {json.dumps(exc.diagnostics, default=str)}",
                       EXIT_EXHAUSTED) from None
    _write(dump_certificate(cert, P), args.output, out)
    if args.svg:
        Path(args.svg).write_text(render_svg(orbit_scene(P, nd, cert)))
    if args.trials:
        magnitude = sqrt_upper(P.diameter_sq()) / 10 ** 6
        rep = perturb_and_retrace(P, magnitude, cert.word, args.trials, args.seed, near=cert.cycle[0])
        print(f"perturbation: {rep.successes}/{len(rep.trials)} trials kept the word",
              file=sys.stderr)
    return EXIT_OK


def verify_certificate(poly_path: str, cert_path: str) -> str:
    """Replay a certificate; returns a one-line verdict or raises CliError."""
    _, P, _ = _load_polygon(poly_path)
    text = _read(cert_path, EXIT_VERIFY)
    try:
        doc = load_certificate(text)
    except DocumentError as exc:
        raise CliError(f"{cert_path}: {exc}", EXIT_VERIFY) from None
    if doc.polygon_sha256 != polygon_hash(P):
        raise CliError(f"{cert_path}: polygon-hash mismatch (certificate is for another polygon)",
                       EXIT_VERIFY)
    try:
        nd = necklace(P, doc.origin)
    except OriginOutside as exc:
        raise CliError(f"{cert_path}: {exc}", EXIT_VERIFY) from None
    try:
        cert = verify_orbit(P, doc.cycle, nd)
    except NotAnOrbit as exc:
        raise CliError(f"{cert_path}: replay diverges: {exc}", EXIT_VERIFY) from None
    fresh = dump_certificate(cert, P)
    if fresh != text:
        a, b = fresh.splitlines(), text.splitlines()
        i = next((i for i, (x, y) in enumerate(zip(a, b)) if x != y), min(len(a), len(b)))
        raise CliError(f"{cert_path}: certificate differs from replay at line {i + 1}", EXIT_VERIFY)
    return f"OK: T^2-period {cert.t2_period}, rotation number {cert.rotation_number}, p = {list(cert.spec.p)}"


def cmd_verify(args, out) -> int:
    out.write(verify_certificate(args.polygon, args.certificate) + "\n")
    return EXIT_OK


def cell_scene(P, pc) -> Scene:
    scene = Scene()
    scene.polygon(P.vertices, fill="#dddddd")
    scene.polygon(pc.cell.vertices, fill="#f5b041", fill_opacity="0.5")
    scene.point(pc.point, r=2)
    return scene


def cmd_cell(args, out) -> int:
    _, P, _ = _load_polygon(args.polygon, args.origin)
    try:
        x = parse_point_arg(args.point)
    except DocumentError as exc:
        raise CliError(f"--point: {exc}", EXIT_PARSE) from None
    if P.contains(x):
        raise CliError(f"NotPeriodic: {x!r} is not outside the polygon", EXIT_NOT_PERIODIC)
    period = detect_period(P, x, args.max_steps)
    if period is None:
        raise CliError(f"NotPeriodic: no return of {x!r} within {args.max_steps} steps of T^2",
                       EXIT_NOT_PERIODIC)
    try:
        pc = periodic_cell(P, x, period)
    except (NotPeriodic, OnDiscontinuity) as exc:
        raise CliError(f"{type(exc).__name__}: {exc}", EXIT_NOT_PERIODIC) from None
    rng = random.Random(args.seed)
    samples = sample_interior(pc.cell, args.trials, rng)
    periods = [detect_period(P, y, period) for y in samples]
    report = {
        "point": _strs(x),
        "t2_period": period,
        "t_period": pc.t_period,
        "word": [a + 1 for a in pc.word],
        "cell": [_strs(v) for v in pc.cell.vertices],
        "samples": len(samples),
        "samples_with_same_period": sum(p == period for p in periods),
    }
    out.write(to_json(report))
    if args.svg:
        Path(args.svg).write_text(render_svg(cell_scene(P, pc)))
    return EXIT_OK


def step_scene(P, nd, x, steps: int = 2) -> Scene:
    """P, a point and its first T-iterates, with the reflection segments."""
    scene = necklace_scene(P, nd)
    cur = x
    scene.point(cur, r=3, fill="#27ae60")
    for _ in range(steps):
        try:
            nxt, v = step_T(P, cur)
        except UndefinedMap:
            break
        scene.segment(cur, nxt, stroke="#27ae60")
        scene.point(nxt, r=3, fill="#27ae60")
        cur = nxt
    return scene


def cmd_render(args, out) -> int:
    _, P, nd = _load_polygon(args.polygon, args.origin)
    if args.certificate:
        try:
            doc = load_certificate(_read(args.certificate))
        except DocumentError as exc:
            raise CliError(f"{args.certificate}: {exc}", EXIT_PARSE) from None
        scene = necklace_scene(P, nd)
        scene.polygon(doc.cycle, stroke="#8e44ad")
    elif args.point:
        try:
            x = parse_point_arg(args.point)
        except DocumentError as exc:
            raise CliError(f"--point: {exc}", EXIT_PARSE) from None
        scene = step_scene(P, nd, x, args.steps)
    else:
        scene = necklace_scene(P, nd)
    _write(render_svg(scene), args.svg, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="outer-billiards",
                                 description="Exact outer billiards about rational polygons.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("polygon", help="polygon document (JSON)")
        p.add_argument("--origin", metavar="X,Y", help="override the origin O (rationals)")
        return p

    p = common(sub.add_parser("analyze", help="asymptotic structure of T^2"))
    p.add_argument("--svg", help="write the necklace picture as SVG")
    p.add_argument("--density-K", dest="density_K", type=int, help="also scan k = 1..K")
    p.set_defaults(func=cmd_analyze)

    p = common(sub.add_parser("orbit", help="find and certify a necklace orbit"))
    p.add_argument("--min-scale", default="0", help="minimum distance of the orbit from P")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest scale k to try")
    p.add_argument("-o", "--output", help="certificate path (default: stdout)")
    p.add_argument("--svg", help="write the orbit over the strips as SVG")
    p.add_argument("--trials", type=int, default=0, help="perturbation trials to run")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("verify", help="replay a certificate")
    p.add_argument("polygon")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("cell", help="periodic cell around a periodic point"))
    p.add_argument("--point", required=True, metavar="X,Y")
    p.add_argument("--max-steps", type=int, default=100_000)
    p.add_argument("--trials", type=int, default=100, help="interior sample points to check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--svg")
    p.set_defaults(func=cmd_cell)

    p = common(sub.add_parser("render", help="SVG of the necklace structure"))
    p.add_argument("--certificate", help="overlay the orbit of a certificate")
    p.add_argument("--point", metavar="X,Y", help="draw a point and its T-iterates")
    p.add_argument("--steps", type=int, default=2)
    p.add_argument("--svg", help="output path (default: stdout)")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except BilliardError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
