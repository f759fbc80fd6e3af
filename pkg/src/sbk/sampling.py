"""Seeded exact sampling of rational parameters."""

from __future__ import annotations

import itertools
import os
import random
from fractions import Fraction

DEFAULT_SEED = 42
NUM_RANGE = 97


def default_seed() -> int:
    env = os.environ.get("SBK_SEED")
    return int(env) if env not in (None, "") else DEFAULT_SEED


def make_rng(seed: int | None = None) -> random.Random:
    return random.Random(default_seed() if seed is None else seed)


def random_rational(rng: random.Random, num_range: int = NUM_RANGE) -> Fraction:
    """Nonzero p/q with p, q uniform in [1, num_range] and a uniform sign."""
    p = rng.randint(1, num_range)
    q = rng.randint(1, num_range)
    return Fraction(p if rng.random() < 0.5 else -p, q)


def grid(params, continuous=(0, 1, 2), binary=(0, 1)):
    """Every assignment over a {0,1,2} grid per continuous and {0,1} per binary parameter.

    ``params`` is a sequence of ``(name, kind)`` pairs.
    """
    names = [name for name, _ in params]
    axes = [binary if kind == "binary" else continuous for _, kind in params]
    for values in itertools.product(*axes):
        yield {name: Fraction(v) for name, v in zip(names, values)}
