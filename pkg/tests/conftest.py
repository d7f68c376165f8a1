"""Shared fixtures: a seeded generator and random exact inputs."""

import random
from fractions import Fraction
from typing import Callable, Dict

import pytest

SEED = 20240611


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


@pytest.fixture
def random_rational(rng) -> Callable[..., Fraction]:
    def make(span: int = 6, nonzero: bool = False) -> Fraction:
        while True:
            value = Fraction(rng.randint(-span, span), rng.randint(1, span))
            if value or not nonzero:
                return value
    return make


@pytest.fixture
def random_terms(rng, random_rational) -> Callable[..., Dict[int, Fraction]]:
    """Random Laurent polynomial as exponent -> coefficient, at least one nonzero term."""
    def make(low: int = -3, high: int = 3, density: float = 0.6) -> Dict[int, Fraction]:
        terms = {n: random_rational() for n in range(low, high + 1) if rng.random() < density}
        terms = {n: c for n, c in terms.items() if c}
        if not terms:
            terms[rng.randint(low, high)] = random_rational(nonzero=True)
        return terms
    return make
