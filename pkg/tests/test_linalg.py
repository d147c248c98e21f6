from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from gkmkirwan.linalg import (
    Echelon,
    LinalgError,
    MultiPoly,
    Subspace,
    count_monomials,
    divmod_linear,
    format_fraction,
    in_convex_hull,
    monomials,
    nullspace,
    poly_add,
    poly_divides,
    poly_mul,
    primitive,
    rank,
    rref,
    solve_linear,
    subspace_member,
    subspace_span,
    subspace_sum,
    to_fraction,
)
from oracles import sympy_poly

X1 = MultiPoly.variable(2, 0)
X2 = MultiPoly.variable(2, 1)


# ---------------------------------------------------------------- rationals


def test_fraction_parsing_is_exact():
    assert to_fraction("5/4") == Fraction(5, 4)
    assert to_fraction("-3") == Fraction(-3)
    assert to_fraction(Fraction(6, 8)) == Fraction(3, 4)
    assert format_fraction(Fraction(10, 4)) == "5/2"
    assert format_fraction(Fraction(0)) == "0"


@pytest.mark.parametrize("bad", [1.5, "1.5", "1e3", "nan"])
def test_floats_are_refused(bad):
    with pytest.raises(LinalgError):
        to_fraction(bad)


def test_primitive_vectors():
    assert primitive((4, -6)) == (2, -3)
    assert primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)


# ---------------------------------------------------------------- polynomials


def test_monomial_product():
    p = poly_mul(X1, X2)
    assert p == MultiPoly(2, {(1, 1): 1})
    assert p.cohomological_degree == 4


def test_product_with_zero():
    assert poly_mul(X1 * X1 + X2, MultiPoly.zero(2)).is_zero()


def test_difference_of_squares():
    got = poly_mul(X1 - X2, X1 + X2)
    assert sympy_poly(got) == sympy.expand(sympy.Symbol("x1") ** 2 - sympy.Symbol("x2") ** 2)
    assert got == X1 ** 2 - X2 ** 2


def test_rank_mismatch():
    with pytest.raises(LinalgError):
        poly_add(X1, MultiPoly.variable(3, 0))


def test_no_zero_coefficients_stored():
    p = (X1 + X2) - X2
    assert p.terms == {(1, 0): Fraction(1)}


def test_divides_factor():
    ok, q = poly_divides(X1, X1 ** 2 - X1 * X2)
    assert ok and q == X1 - X2


def test_does_not_divide():
    ok, q = poly_divides(X1, X2)
    assert not ok and q is None


def test_divides_linear_difference():
    ok, q = poly_divides(X1 - X2, X1 ** 2 - X2 ** 2)
    assert ok and q == X1 + X2


def test_zero_divisor_rejected():
    with pytest.raises(LinalgError):
        poly_divides(MultiPoly.zero(2), X1)


def test_nonlinear_divisor_rejected():
    with pytest.raises(LinalgError):
        poly_divides(X1 * X2, X1)


def test_remainder_is_restriction_to_hyperplane():
    # dividing by x1 - 2 x2 leaves what the dividend is on x1 = 2 x2
    f = X1 ** 3 + 5 * X1 * X2 - X2 ** 3
    _, r = divmod_linear(f, X1 - 2 * X2)
    s = sympy.Symbol("s")
    on_plane = sympy_poly(f).subs({sympy.Symbol("x1"): 2 * s, sympy.Symbol("x2"): s})
    assert sympy.expand(sympy_poly(r).subs({sympy.Symbol("x1"): 2 * s, sympy.Symbol("x2"): s}) - on_plane) == 0


def test_monomial_enumeration_counts():
    # C(k + d - 1, d - 1)
    assert [count_monomials(3, k) for k in range(5)] == [1, 3, 6, 10, 15]
    assert len(monomials(2, 3)) == 4
    assert monomials(2, 2) == ((2, 0), (1, 1), (0, 2))


def test_substitution_pulls_back_along_linear_map():
    p = X1 * X2 + X1
    q = p.substitute_linear([[1], [2]])  # x1 -> s, x2 -> 2s
    assert q == MultiPoly(1, {(2,): 2, (1,): 1})


coeff = st.integers(-5, 5)
small_poly = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)), coeff, max_size=4
).map(lambda t: MultiPoly(2, t))
linear = st.tuples(coeff, coeff).filter(lambda v: v != (0, 0)).map(MultiPoly.linear_form)


@given(small_poly, small_poly, small_poly)
def test_distributivity(a, b, c):
    assert (a + b) * c == a * c + b * c


@given(small_poly, small_poly)
def test_multiplication_matches_sympy(a, b):
    assert sympy.expand(sympy_poly(a * b) - sympy_poly(a) * sympy_poly(b)) == 0


@given(linear, small_poly)
def test_divides_round_trip(ell, q):
    ok, got = poly_divides(ell, ell * q)
    assert ok and got == q


@given(linear, small_poly)
def test_division_identity(ell, f):
    q, r = divmod_linear(f, ell)
    assert q * ell + r == f


# ---------------------------------------------------------------- linear algebra


def test_rref_idempotent_and_rank():
    rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    red, piv = rref(rows)
    assert rref(red)[0] == red
    assert rank(rows) == len(piv) == sympy.Matrix(rows).rank()


def test_nullspace_annihilates():
    rows = [[1, 2, 3, 4], [0, 1, 1, 1]]
    ns = nullspace(rows, 4)
    assert len(ns) == 2
    for v in ns:
        assert all(sum(Fraction(a) * b for a, b in zip(r, v)) == 0 for r in rows)


def test_solve_linear():
    sol = solve_linear([[2, 1], [1, 3]], [3, 5])
    assert tuple(sol) == (Fraction(4, 5), Fraction(7, 5))
    assert solve_linear([[1, 1], [2, 2]], [1, 3]) is None


def test_span_dims():
    assert subspace_span([(1, 0), (0, 1)]).dim == 2
    a = subspace_span([(1, 0)])
    assert subspace_sum(a, a).dim == 1
    assert subspace_member((2, 2), subspace_span([(1, 1)]))
    assert not subspace_member((1, 2), subspace_span([(1, 1)]))


def test_dimension_mismatch():
    with pytest.raises(LinalgError):
        subspace_sum(Subspace.zero(2), Subspace.zero(3))
    with pytest.raises(LinalgError):
        subspace_member((1, 2, 3), subspace_span([(1, 1)]))


def test_intersection_and_coordinates():
    a = subspace_span([(1, 0, 0), (0, 1, 0)])
    b = subspace_span([(0, 1, 0), (0, 0, 1)])
    c = a.intersection(b)
    assert c.dim == 1 and c.contains((0, 5, 0))
    coords = a.coordinates((3, 4, 0))
    assert coords is not None
    assert [sum(x * v[i] for x, v in zip(coords, a.basis)) for i in range(3)] == [3, 4, 0]
    assert a.coordinates((0, 0, 1)) is None


def test_echelon_nullspace_matches_dense():
    e = Echelon(4)
    for r in ([1, 1, 0, 0], [0, 1, 1, 0], [1, 2, 1, 0]):
        e.add({i: Fraction(v) for i, v in enumerate(r) if v})
    assert e.rank == 2
    assert len(e.nullspace()) == 2


def test_convex_hull_membership():
    tri = [(0, 0), (1, 0), (0, 1)]
    assert in_convex_hull((Fraction(1, 4), Fraction(1, 4)), tri)
    assert in_convex_hull((Fraction(1, 2), Fraction(1, 2)), tri)
    assert not in_convex_hull((1, 1), tri)


vectors = st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=1, max_size=5)


@given(vectors)
def test_row_reduction_preserves_span(rows):
    s = subspace_span(rows, 3)
    assert all(s.contains(r) for r in rows)
    assert s.dim == sympy.Matrix(rows).rank()


@given(vectors, vectors)
def test_sum_contains_both(a_rows, b_rows):
    a, b = subspace_span(a_rows, 3), subspace_span(b_rows, 3)
    s = subspace_sum(a, b)
    assert all(s.contains(v) for v in a.basis + b.basis)
    assert s.dim == sympy.Matrix(a_rows + b_rows).rank()
    assert s.dim <= a.dim + b.dim
    assert a.intersection(b).dim == a.dim + b.dim - s.dim
