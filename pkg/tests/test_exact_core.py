"""Ground-layer tests: Gaussian rationals, rational matrices, polynomials,
and real algebraic numbers."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covsig import (
    AlgReal,
    Comparison,
    GaussRat,
    NotHermitian,
    RatMatrix,
    SingularMatrix,
    alg_compare,
    block_matrix,
    hermitian_signature,
    isolate_real_roots,
    mat_inverse,
)
from covsig.exact import poly as P
from covsig.exact.gauss import I

rationals = st.fractions(
    min_value=Fraction(-10), max_value=Fraction(10), max_denominator=12
)
gauss = st.builds(GaussRat, rationals, rationals)
small_ints = st.integers(min_value=-4, max_value=4)


# ---------------------------------------------------------------------------
# GaussRat


def test_gauss_basics():
    z = GaussRat(Fraction(1, 2), 3)
    assert z.conj() == GaussRat(Fraction(1, 2), -3)
    assert z.norm() == Fraction(1, 4) + 9
    assert I * I == -1
    assert GaussRat(2) + 3 == GaussRat(5)
    assert (1 - I) * (1 + I) == 2
    assert not GaussRat(0, 0)
    assert GaussRat(0, 1).is_real is False
    assert GaussRat(7).is_real


def test_gauss_division():
    z = GaussRat(3, 4)
    assert z / z == 1
    assert 1 / I == -I
    with pytest.raises(ZeroDivisionError):
        z / GaussRat(0)


def test_gauss_immutable():
    z = GaussRat(1, 2)
    with pytest.raises(AttributeError):
        z.re = Fraction(5)


@given(gauss, gauss, gauss)
def test_gauss_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a - a == GaussRat(0)


@given(gauss)
def test_gauss_norm_is_conj_product(z):
    assert z * z.conj() == GaussRat(z.norm())
    if z:
        assert z * (1 / z) == 1


# ---------------------------------------------------------------------------
# RatMatrix


def test_matrix_shapes_and_ops():
    m = RatMatrix([[1, 2], [3, 4]])
    assert m.shape == (2, 2)
    assert m.transpose().rows == [[1, 3], [2, 4]]
    assert (m + m).rows == (m.scale(2)).rows
    assert (-m).rows == m.scale(-1).rows
    assert (m @ RatMatrix.identity(2)) == m
    assert m.det() == -2
    assert m.pow(0) == RatMatrix.identity(2)
    assert m.pow(3) == m @ m @ m


def test_matrix_inverse_and_singular():
    m = RatMatrix([[2, 1], [1, 1]])
    assert mat_inverse(m) @ m == RatMatrix.identity(2)
    with pytest.raises(SingularMatrix):
        mat_inverse(RatMatrix([[1, 2], [2, 4]]))


def test_nullspace():
    m = RatMatrix([[1, 2, 3], [2, 4, 6]])
    basis = m.nullspace()
    assert len(basis) == 2
    for v in basis:
        assert all(
            sum(row[j] * v[j] for j in range(3)) == 0 for row in m.rows
        )


def test_block_matrix_layout():
    a = RatMatrix([[1]])
    b = RatMatrix([[2, 3]])
    c = RatMatrix([[4], [5]])
    d = RatMatrix([[6, 7], [8, 9]])
    m = block_matrix([[a, b], [c, d]])
    assert m.rows == [[1, 2, 3], [4, 6, 7], [5, 8, 9]]


@given(
    st.lists(st.lists(small_ints, min_size=3, max_size=3), min_size=3, max_size=3),
    st.lists(st.lists(small_ints, min_size=3, max_size=3), min_size=3, max_size=3),
)
def test_det_multiplicative(ra, rb):
    a, b = RatMatrix(ra), RatMatrix(rb)
    assert (a @ b).det() == a.det() * b.det()


# ---------------------------------------------------------------------------
# hermitian signatures


def test_signature_diagonal():
    assert hermitian_signature([[1, 0], [0, -1]]) == 0
    assert hermitian_signature([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 3
    assert hermitian_signature([[0]]) == 0


def test_signature_offdiagonal_block_pivot():
    # hyperbolic form: all-zero diagonal, signature 0
    h = GaussRat(1, 1)
    assert hermitian_signature([[GaussRat(0), h], [h.conj(), GaussRat(0)]]) == 0


def test_signature_rejects_nonhermitian():
    with pytest.raises(NotHermitian):
        hermitian_signature([[0, 1], [0, 0]])
    with pytest.raises(NotHermitian):
        hermitian_signature([[GaussRat(0, 1)]])


@given(
    st.lists(st.lists(small_ints, min_size=3, max_size=3), min_size=3, max_size=3),
    st.lists(st.sampled_from([-1, 0, 1]), min_size=3, max_size=3),
)
@settings(max_examples=40)
def test_signature_congruence_invariant(rows, diag):
    """sigma(S^* D S) = sigma(D) whenever S is invertible (Sylvester)."""
    s = RatMatrix(rows)
    if s.det() == 0:
        return
    d = RatMatrix([[diag[i] if i == j else 0 for j in range(3)] for i in range(3)])
    m = s.transpose() @ d @ s
    got = hermitian_signature([[GaussRat(x) for x in row] for row in m.rows])
    assert got == sum(diag)


# ---------------------------------------------------------------------------
# polynomials


def test_poly_arith_roundtrip():
    p = [Fraction(2), Fraction(0), Fraction(1)]  # x^2 + 2
    q = [Fraction(-1), Fraction(1)]  # x - 1
    prod = P.mul(p, q)
    assert P.div_exact(prod, q) == p
    quot, rem = P.divmod_poly(p, q)
    assert P.add(P.mul(quot, q), rem) == p
    assert P.eval_at(p, Fraction(3)) == 11


def test_poly_gcd_and_square_free():
    x_minus_1 = [Fraction(-1), Fraction(1)]
    p = P.mul(P.mul(x_minus_1, x_minus_1), [Fraction(1), Fraction(1)])
    g = P.gcd(p, P.derivative(p))
    assert g == x_minus_1
    sf = P.square_free_part(p)
    assert sf == P.mul(x_minus_1, [Fraction(1), Fraction(1)])


def test_cyclotomic():
    assert P.cyclotomic(1) == [Fraction(-1), Fraction(1)]
    assert P.cyclotomic(4) == [Fraction(1), Fraction(0), Fraction(1)]
    # phi_12 = x^4 - x^2 + 1
    assert P.cyclotomic(12) == [Fraction(c) for c in (1, 0, -1, 0, 1)]


def test_sturm_root_count():
    # (x^2 - 2)(x^2 - 3): four real roots, two positive
    p = P.mul([Fraction(-2), 0, Fraction(1)], [Fraction(-3), 0, Fraction(1)])
    chain = P.sturm_chain(p)
    assert P.count_roots(chain, "-inf", "inf") == 4
    assert P.count_roots(chain, Fraction(0), "inf") == 2
    assert P.count_roots(chain, Fraction(7, 5), Fraction(3, 2)) == 1  # sqrt2


def test_content_primitive():
    c, prim = P.content_primitive([Fraction(2, 3), Fraction(4, 3)])
    assert c == Fraction(2, 3)
    assert prim == [1, 2]
    # content carries the sign of the leading coefficient
    c, prim = P.content_primitive([Fraction(2), Fraction(-4)])
    assert prim[-1] > 0 and c < 0


@given(st.lists(small_ints, min_size=2, max_size=5), st.lists(small_ints, min_size=2, max_size=4))
@settings(max_examples=40)
def test_gcd_divides_both(pc, qc):
    p, q = P.trim([Fraction(c) for c in pc]), P.trim([Fraction(c) for c in qc])
    g = P.gcd(p, q)
    if P.is_zero(g):
        assert P.is_zero(p) and P.is_zero(q)
    else:
        assert P.divides(g, p) and P.divides(g, q)


# ---------------------------------------------------------------------------
# algebraic reals


def test_algreal_sqrt2():
    r = AlgReal([-2, 0, 1], 1, 2)
    r.refine_to(Fraction(1, 10**6))
    assert r.lo < Fraction(141421357, 10**8) < r.hi
    assert r.sign() == 1
    assert r.neg().sign() == -1


def test_algreal_validation():
    with pytest.raises(ValueError):
        AlgReal([-2, 0, 1], -2, 2)  # two roots inside
    with pytest.raises(ValueError):
        AlgReal([1], 0, 1)  # constant
    with pytest.raises(ValueError):
        AlgReal([0, 0, 1], -1, 1)  # not square-free (x^2)


def test_algreal_from_rational_and_scaled():
    q = AlgReal.from_rational(Fraction(3, 7))
    assert q.is_rational and q.rational_value() == Fraction(3, 7)
    s = AlgReal([-2, 0, 1], 1, 2).scaled(Fraction(-3))
    # -3*sqrt(2) is a root of x^2 - 18
    assert P.monic(s.poly) == [Fraction(-18), 0, Fraction(1)]
    assert s.hi < 0


def test_isolate_real_roots():
    # (x-1)(x-2)(x-3)
    p = P.mul(P.mul([-1, 1], [-2, 1]), [-3, 1])
    roots = isolate_real_roots([Fraction(c) for c in p])
    assert len(roots) == 3
    for r, val in zip(roots, (1, 2, 3)):
        r.refine_to(Fraction(1, 100))
        assert r.lo < val < r.hi
    windowed = isolate_real_roots([Fraction(c) for c in p], window=(Fraction(3, 2), Fraction(5, 2)))
    assert len(windowed) == 1


def test_alg_compare_certificates():
    a = AlgReal([-2, 0, 1], 1, 2)
    # same root of a different defining polynomial: x(x^2-2)
    b = AlgReal([0, -2, 0, 1], Fraction(1, 2), Fraction(3, 2))
    assert alg_compare(a, b) is Comparison.EQ
    c = AlgReal([-3, 0, 1], 1, 2)  # sqrt3
    assert alg_compare(a, c) is Comparison.LT
    assert alg_compare(c, a) is Comparison.GT
    # scaled comparison: 2*sqrt2 > sqrt3
    assert alg_compare((a, Fraction(2)), c) is Comparison.GT
    assert alg_compare((a, Fraction(2)), (a, Fraction(2))) is Comparison.EQ


@given(st.fractions(min_value=Fraction(-5), max_value=Fraction(5), max_denominator=9))
@settings(max_examples=30)
def test_algreal_rational_sign(q):
    r = AlgReal.from_rational(q)
    assert r.sign() == (q > 0) - (q < 0)
