import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import hamming3
from oracles import charpoly_by_interpolation, det_cofactor
from trigraph.errors import NotLocallyLinear
from trigraph.generators import friendship, paley9, random_locally_linear, triangular_snake
from trigraph.graph import complete_bipartite, complete_graph, path_graph
from trigraph.poly import (
    IntPolynomial,
    format_expanded,
    format_factored,
    poly_shift,
    real_roots,
    root_decimals,
)
from trigraph.spectral import (
    charpoly_exact,
    half_laplacian_like,
    star_adjacency_plus_3i,
    verify_theorem1,
)

X = IntPolynomial.x()


# --- polynomials ------------------------------------------------------------


def test_poly_arithmetic():
    p = IntPolynomial.from_roots([1, 2])
    assert p.coeffs == (2, -3, 1)
    assert (p * (X + 3)).coeffs == (6, -7, 0, 1)
    assert (p - p).is_zero()
    assert (X + 3) ** 2 == IntPolynomial((9, 6, 1))
    assert p(5) == 12


def test_shift_examples():
    assert poly_shift(X**2, 3).coeffs == (9, 6, 1)
    p = IntPolynomial((4, -1, 7, 2))
    assert poly_shift(p, 0) == p


@given(st.lists(st.integers(-20, 20), max_size=8), st.integers(-5, 5), st.integers(-6, 6))
def test_shift_evaluates_correctly(coeffs, c, x):
    p = IntPolynomial(coeffs)
    assert p.shift(c)(x) == p(x + c)


@given(st.lists(st.integers(-9, 9), max_size=7), st.lists(st.integers(-4, 4), min_size=1, max_size=4))
def test_divmod_monic(coeffs, divisor):
    p = IntPolynomial(coeffs)
    d = IntPolynomial(divisor + [1])
    q, r = p.divmod_monic(d)
    assert q * d + r == p and r.degree < d.degree


def test_formatting():
    p = IntPolynomial.from_roots([4, 1, 1, 1, 1, -2, -2, -2, -2])
    assert format_factored(p) == "(x - 4)*(x - 1)^4*(x + 2)^4"
    assert format_expanded(IntPolynomial((0, 3, 0, -4, 0, 1))) == "x^5 - 4*x^3 + 3*x"
    assert format_factored(IntPolynomial((-3, 0, 1))) == "(x^2 - 3)"


def test_real_roots_exact_isolation():
    p = IntPolynomial((6, -6, 1)) * X**2
    roots = real_roots(p, tol=Fraction(1, 10**15))
    assert [m for _, m in roots] == [2, 1, 1]
    assert abs(float(roots[1][0]) - (3 - 3**0.5)) < 1e-12
    assert abs(float(roots[2][0]) - (3 + 3**0.5)) < 1e-12


# --- characteristic polynomials -------------------------------------------


def test_charpoly_zero_matrix():
    assert charpoly_exact([[0, 0], [0, 0]]) == X**2


def test_charpoly_paley9():
    expected = IntPolynomial.from_roots([4] + [1] * 4 + [-2] * 4)
    assert charpoly_exact(paley9().adjacency_matrix()) == expected


def test_charpoly_k33():
    expected = IntPolynomial.from_roots([3, -3, 0, 0, 0, 0])
    assert charpoly_exact(complete_bipartite(3, 3).adjacency_matrix()) == expected
    assert expected.coeffs == (0, 0, 0, 0, -9, 0, 1)


def test_charpoly_p5():
    assert charpoly_exact(path_graph(5).adjacency_matrix()).coeffs == (0, 3, 0, -4, 0, 1)


def test_charpoly_empty():
    assert charpoly_exact([]) == IntPolynomial((1,))


def test_charpoly_rejects_non_square():
    with pytest.raises(ValueError):
        charpoly_exact([[1, 2]])


def _random_symmetric(rng, s, lo=-3, hi=3):
    m = [[0] * s for _ in range(s)]
    for i in range(s):
        for j in range(i, s):
            m[i][j] = m[j][i] = rng.randint(lo, hi)
    return m


def test_charpoly_against_cofactor_oracle():
    rng = random.Random(2024)
    for _ in range(300):
        mat = _random_symmetric(rng, rng.randint(1, 6))
        assert list(charpoly_exact(mat).coeffs) == charpoly_by_interpolation(mat)


@settings(max_examples=200)
@given(st.integers(1, 5).flatmap(lambda s: st.lists(st.lists(st.integers(-3, 3), min_size=s, max_size=s), min_size=s, max_size=s)))
def test_charpoly_trace_and_determinant(mat):
    # non-symmetric matrices too: the recurrence does not need symmetry
    s = len(mat)
    p = charpoly_exact(mat)
    assert p.degree == s and p.is_monic()
    full = list(p.coeffs) + [0] * (s + 1 - len(p.coeffs))
    assert full[s - 1] == -sum(mat[i][i] for i in range(s))
    assert full[0] == (-1) ** s * det_cofactor(mat)


def test_charpoly_large_entries():
    mat = [[10**20, 3], [3, -(10**20)]]
    assert charpoly_exact(mat).coeffs == (-(10**40) - 9, 0, 1)


# --- matrices tied to the incidence matrix ----------------------------------


def test_half_laplacian_k3():
    assert half_laplacian_like(complete_graph(3)) == [[1, 1, 1]] * 3


def test_half_laplacian_paley9_is_a_plus_2i():
    g = paley9()
    a = g.adjacency_matrix()
    for i in range(9):
        a[i][i] = 2
    assert half_laplacian_like(g) == a


def test_half_laplacian_snake_spectrum():
    p = charpoly_exact(half_laplacian_like(triangular_snake(5)))
    assert p == X**6 * IntPolynomial.from_roots([2, 3, 4]) * IntPolynomial((6, -6, 1))
    assert root_decimals(p) == ["4.732", "4.000", "3.000", "2.000", "1.268"] + ["0.000"] * 6


def test_half_laplacian_requires_local_linearity():
    with pytest.raises(NotLocallyLinear):
        half_laplacian_like(complete_graph(4))


def test_star_plus_3i_examples():
    assert star_adjacency_plus_3i(complete_graph(3)) == [[3]]
    assert star_adjacency_plus_3i(friendship(2)) == [[3, 1], [1, 3]]
    m = star_adjacency_plus_3i(paley9())
    assert len(m) == 6 and all(m[i][i] == 3 for i in range(6))
    off = [[m[i][j] if i != j else 0 for j in range(6)] for i in range(6)]
    assert charpoly_exact(off) == IntPolynomial.from_roots([3, -3, 0, 0, 0, 0])


def test_shifted_paley_chain():
    # P_{A+2I}(x) = (x-6)(x-3)^4 x^4, shifted by 3
    p = charpoly_exact(half_laplacian_like(paley9()))
    assert p == IntPolynomial.from_roots([6] + [3] * 4 + [0] * 4)
    assert poly_shift(p, 3) == IntPolynomial.from_roots([3] + [0] * 4 + [-3] * 4)


# --- the identity ------------------------------------------------------------


def test_theorem_paley9():
    rep = verify_theorem1(paley9())
    assert (rep.n, rep.m) == (9, 6) and rep.holds and rep.cross_multiplied
    assert rep.p_star == IntPolynomial.from_roots([0, 0, 0, 0, 3, -3])
    assert rep.lhs == rep.p_star * (X + 3) ** 3
    assert rep.regular_case.k == 4 and rep.regular_case.alt_holds
    assert rep.regular_case.alt_rhs == rep.rhs


def test_theorem_snake5():
    rep = verify_theorem1(triangular_snake(5))
    assert (rep.n, rep.m) == (11, 5) and rep.holds
    assert rep.p_star.coeffs == (0, 3, 0, -4, 0, 1)
    assert rep.regular_case is None
    assert root_decimals(rep.p_star) == ["1.732", "1.000", "0.000", "-1.000", "-1.732"]


def test_snake_adjacency_roots():
    # sum of roots is the trace, 0; the root near -1.594 is what makes it vanish
    p = charpoly_exact(triangular_snake(5).adjacency_matrix())
    assert root_decimals(p) == [
        "3.027", "2.446", "1.631", "0.797", "0.201",
        "-1.000", "-1.000", "-1.265", "-1.370", "-1.594", "-1.872",
    ]


def test_theorem_k3():
    rep = verify_theorem1(complete_graph(3))
    assert (rep.n, rep.m) == (3, 1)
    assert rep.p_star == X
    assert rep.lhs == X * (X + 3) ** 2 == rep.rhs
    assert rep.regular_case.k == 2 and rep.regular_case.alt_holds


@pytest.mark.parametrize("d", [3, 4])
def test_theorem_hamming_direct_branch(d):
    rep = verify_theorem1(hamming3(d))
    assert rep.m >= rep.n and not rep.cross_multiplied
    assert rep.holds and rep.regular_case.alt_holds


def test_theorem_random_instance():
    assert verify_theorem1(random_locally_linear(20, 0.5, 42)).holds


def test_theorem_on_suite(instances):
    for name, g in instances:
        rep = verify_theorem1(g)
        assert rep.holds, name
        if rep.m < rep.n:
            q, r = rep.p_half.shift(3).divmod_monic((X + 3) ** (rep.n - rep.m))
            assert r.is_zero(), name
        if rep.regular_case is not None:
            assert rep.regular_case.alt_rhs == rep.rhs, name


def test_theorem_rejects_non_locally_linear():
    with pytest.raises(NotLocallyLinear):
        verify_theorem1(complete_graph(4))
