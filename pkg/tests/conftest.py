import sys
from functools import lru_cache
from pathlib import Path

import pytest

from outer_billiards import find_orbit, necklace, validate_polygon
from outer_billiards.documents import load_polygon_document
from outer_billiards.geometry import sqrt_upper

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
DATA = Path(__file__).resolve().parent / "data"
sys.path.insert(0, str(Path(__file__).resolve().parent))

CORPUS_NAMES = sorted(p.stem for p in CORPUS.glob("*.json"))
TRIANGLES = [n for n in CORPUS_NAMES if "triangle" in n]

# lines printed by the acceptance suite, repeated in the terminal summary
ACCEPTANCE_LINES = []


@lru_cache(maxsize=None)
def load(name):
    doc = load_polygon_document((CORPUS / f"{name}.json").read_text())
    P = validate_polygon(doc.vertices, require_no_parallel_sides=True)
    return P, necklace(P, doc.origin)


def far_scale(P):
    return 1000 * sqrt_upper(P.diameter_sq())


@lru_cache(maxsize=None)
def certificate(name, far=False):
    P, nd = load(name)
    return find_orbit(P, nd, min_scale=far_scale(P) if far else 0)


@pytest.fixture(params=CORPUS_NAMES)
def corpus_name(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
