import cmath
import math
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from itereq import IterativeEquation, RootSet, from_roots  # noqa: E402


def make_rootset(
    rng,
    max_order=6,
    moduli=(0.5, 2.0),
    max_mult=2,
    min_sep=0.05,
    min_order=2,
):
    """Random conjugate-closed root set with pairwise separation >= min_sep."""
    target = int(rng.integers(min_order, max_order + 1))
    entries = []

    def far_enough(z):
        return all(
            abs(z - r) >= min_sep and abs(z - r.conjugate()) >= min_sep
            for r, _ in entries
        )

    guard = 0
    order = 0
    while order < target and guard < 200:
        guard += 1
        remaining = target - order
        want_pair = remaining >= 2 and rng.random() < 0.5
        if want_pair:
            mult = int(rng.integers(1, min(max_mult, remaining // 2) + 1))
            rho = rng.uniform(*moduli)
            phi = rng.uniform(0.3, math.pi - 0.3)
            z = rho * cmath.exp(1j * phi)
            if far_enough(z):
                entries.append((z, mult))
                entries.append((z.conjugate(), mult))
                order += 2 * mult
        else:
            mult = int(rng.integers(1, min(max_mult, remaining) + 1))
            val = float(rng.choice([-1.0, 1.0])) * rng.uniform(*moduli)
            if far_enough(complex(val)):
                entries.append((complex(val), mult))
                order += mult
    if order == 0:
        entries.append((complex(rng.uniform(*moduli)), 1))
    return RootSet(entries)


@pytest.fixture
def random_rootsets():
    def gen(count, seed=0, **kwargs):
        rng = np.random.default_rng(seed)
        return [make_rootset(rng, **kwargs) for _ in range(count)]

    return gen


@pytest.fixture
def random_equations(random_rootsets):
    def gen(count, seed=0, **kwargs):
        rng = np.random.default_rng(seed + 1)
        eqs = []
        for rs in random_rootsets(count, seed=seed, **kwargs):
            scale = float(rng.choice([-1.0, 1.0])) * rng.uniform(0.5, 2.0)
            eqs.append(IterativeEquation(scale * from_roots(rs)))
        return eqs

    return gen
