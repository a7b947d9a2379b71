from itertools import permutations as iter_permutations

import pytest
from hypothesis import strategies as st

from avoid1342 import Permutation


@st.composite
def perm_strategy(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    vals = draw(st.permutations(list(range(1, n + 1))))
    return Permutation(tuple(vals))


@pytest.fixture(scope="session")
def all_perms_by_n():
    """Every permutation of every length up to 6, as raw tuples."""
    return {n: list(iter_permutations(range(1, n + 1))) for n in range(0, 7)}
