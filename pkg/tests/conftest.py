from fractions import Fraction

import pytest

from covsig import Comparison, RatMatrix, compare_locations

TREFOIL = RatMatrix([[-1, 1], [0, -1]])
# Seifert matrix of the (2,5) torus knot
T25 = RatMatrix([
    [-1, 1, 0, 0],
    [0, -1, 1, 0],
    [0, 0, -1, 1],
    [0, 0, 0, -1],
])
# 2x2 matrix whose pencil determinant 2w^2 - 3w + 2 has unimodular roots
# that are not roots of unity (cos theta = 3/4): exercises the algebraic path
ALG = RatMatrix([[1, 1], [0, 2]])


def same_jumps(f, g, check_period=True):
    """Exact multiset equality of two jump functions."""
    if check_period and f.period != g.period:
        return False
    if len(f.points) != len(g.points):
        return False
    return all(
        a.value == b.value and compare_locations(a.loc, b.loc) is Comparison.EQ
        for a, b in zip(f.points, g.points)
    )


@pytest.fixture
def trefoil():
    return TREFOIL


@pytest.fixture
def t25():
    return T25
