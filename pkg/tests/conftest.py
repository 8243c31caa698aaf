"""
Shared fixtures for the surface_bundles test suite.
"""

import logging
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

import pytest

from surface_bundles.bundles import generate_torus_bundle, generate_xn
from surface_bundles.enums import WordOrder
from surface_bundles.models import LabeledGraph, MonodromyFactorization, TwistWord
from surface_bundles.raag import opposite_graph


def twist(genus: int, *letters: tuple[int, int], order: WordOrder = WordOrder.LEFT) -> TwistWord:
    """TwistWord from (index, exponent) pairs."""
    return TwistWord(genus=genus, letters=tuple(letters), order=order)


def commuting_factorization(genus: int = 2, base_genus: int = 2) -> MonodromyFactorization:
    """Every pair (T1, T3): disjoint curves, so each commutator is trivial."""
    pair = (twist(genus, (1, 1)), twist(genus, (3, 1)))
    return MonodromyFactorization(fiber_genus=genus, base_genus=base_genus, pairs=(pair,) * base_genus)


@pytest.fixture(autouse=True)
def _reset_package_logger():
    """The CLI attaches its own handler and stops propagation; undo that after each test."""
    yield
    log = logging.getLogger("surface_bundles")
    for handler in list(log.handlers):
        log.removeHandler(handler)
    log.propagate = True
    log.setLevel(logging.NOTSET)


@pytest.fixture(scope="session")
def c5bar() -> LabeledGraph:
    return opposite_graph(LabeledGraph.cycle(5))


@pytest.fixture(scope="session")
def x3_22() -> MonodromyFactorization:
    """X_3(2, 2), the smallest instance of the construction."""
    return generate_xn(2, 2, 3)


@pytest.fixture(scope="session")
def torus_2_5() -> MonodromyFactorization:
    return generate_torus_bundle(2, 5)


@pytest.fixture
def commuting() -> MonodromyFactorization:
    return commuting_factorization()
