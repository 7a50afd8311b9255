import sys
from pathlib import Path

import pytest

from ideal_interp import ConditionSet, parse_polynomial, projector_from_conditions, projector_from_corner_images

sys.path.insert(0, str(Path(__file__).parent))

ROOT = Path(__file__).resolve().parent.parent
PROBLEMS = ROOT / "problems"

F1 = "(1-x1)^2+(1-x2)^2+1"
F2 = "x1^3+x2^3"
F3 = "(1-x1)^2+(1-x2)^2+(1-x3)^2+1"
F4 = "x1^3+x2^3+x3^3"

EXAMPLE1_POINTS = [(1, 0), (1, 1), (1, 2), (2, 0)]
EXAMPLE3_POINTS = [(0, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1)]
EXAMPLE4_GROUPS = [
    ((0, 0), [(0, 0), (0, 1), (1, 0)]),
    ((0, 1), [(0, 0), (1, 0)]),
    ((1, 0), [(0, 0), (1, 0)]),
]
EXAMPLE2_IMAGES = {
    (2, 1): "0",
    (0, 3): "x2",
    (1, 2): "x1*x2",
    (4, 0): "2*x1^3-x1^2",
}


def p(src, dim=2):
    return parse_polynomial(src, dim)


def example1_conditions():
    return ConditionSet.lagrange(EXAMPLE1_POINTS)


def example3_conditions():
    return ConditionSet.lagrange(EXAMPLE3_POINTS)


def example4_conditions():
    return ConditionSet.hermite(EXAMPLE4_GROUPS)


def example2_projector():
    return projector_from_corner_images({a: p(img) for a, img in EXAMPLE2_IMAGES.items()})


# universal-class condition sets beyond the four worked examples
EXTRA_UNIVERSAL = {
    "taylor3": ConditionSet.hermite([((0, 0, 0), [(0, 0, 0)])]),
    "grid2x3": ConditionSet.lagrange([(a, b) for a in (0, 1) for b in (0, 1, 2)]),
    "hermite_shifted": ConditionSet.hermite([((1, -2), [(0, 0), (1, 0), (0, 1), (2, 0)])]),
    "grid_rational": ConditionSet.lagrange([(0, 0), ("1/2", 0), (0, "2/3")]),
}

# condition sets whose vanishing ideal is outside the class
NEGATIVE_CONDITIONS = {
    "two_points": ConditionSet.lagrange([(0, 0), (1, 1)]),
    "diagonal3": ConditionSet.lagrange([(0, 0), (1, 1), (2, 2)]),
    "skew3": ConditionSet.lagrange([(0, 0), (1, 2), (2, 1)]),
}


def condition_corpus():
    corpus = {
        "example1": example1_conditions(),
        "example3": example3_conditions(),
        "example4": example4_conditions(),
    }
    corpus.update(EXTRA_UNIVERSAL)
    return corpus


def projector_corpus():
    """name -> (projector, conditions or None)"""
    out = {name: (projector_from_conditions(c), c) for name, c in condition_corpus().items()}
    out["example2"] = (example2_projector(), None)
    return dict(sorted(out.items()))


@pytest.fixture(scope="session")
def corpus():
    return projector_corpus()


@pytest.fixture
def ex1():
    return projector_from_conditions(example1_conditions())


@pytest.fixture
def ex2():
    return example2_projector()


@pytest.fixture
def ex3():
    return projector_from_conditions(example3_conditions())


@pytest.fixture
def ex4():
    return projector_from_conditions(example4_conditions())
