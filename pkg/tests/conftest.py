import random

import hypothesis.strategies as st

from triprod import BINARY64, EXACT, hnum


def rand_hnum(rng: random.Random, dim: int, backend: str = EXACT, coeff_range: int = 9):
    """One random value with integer coefficients in [-coeff_range, coeff_range]."""
    return hnum([rng.randint(-coeff_range, coeff_range) for _ in range(dim)], backend)


def rand_tuple(rng: random.Random, count: int, dim: int, backend: str = EXACT,
               coeff_range: int = 9):
    return tuple(rand_hnum(rng, dim, backend, coeff_range) for _ in range(count))


def hnums(dim: int, backend: str = EXACT, max_coeff: int = 9):
    """Hypothesis strategy: integer-coefficient values of the given dimension."""
    coeff = st.integers(min_value=-max_coeff, max_value=max_coeff)
    return st.lists(coeff, min_size=dim, max_size=dim).map(lambda cs: hnum(cs, backend))


def as_binary64(u):
    return hnum([float(c) for c in u.coeffs], BINARY64)
