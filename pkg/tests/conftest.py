import random
from fractions import Fraction

import pytest


def rand_state(rng: random.Random, k: int, lo: int = -12, hi: int = 24, den: int = 12):
    """Random rational window with bounded numerators over a fixed denominator."""
    return tuple(Fraction(rng.randint(lo, hi), den) for _ in range(k))


def rand_nonneg_state(rng: random.Random, k: int, hi: int = 24, den: int = 12):
    return tuple(Fraction(rng.randint(0, hi), den) for _ in range(k))


@pytest.fixture
def rng():
    return random.Random(20240811)
