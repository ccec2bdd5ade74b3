"""Exact characteristic polynomials and the spectral identity relating G to G*."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import OddDegree
from .graph import Graph
from .linear import require_locally_linear, triangle_incidence
from .poly import IntPolynomial
from .star import star_graph

IntMatrix = list[list[int]]


def charpoly_exact(mat: Sequence[Sequence[int]]) -> IntPolynomial:
    """``det(xI - M)`` over the integers by the Faddeev-LeVerrier recurrence.

    With ``N_k = M N_{k-1} + c_{s-k+1} I`` the next coefficient is
    ``c_{s-k} = -tr(M N_k) / k``; for integer M every such division is exact,
    which is asserted.  Products are taken row-sparse in M, so 0/1 graph
    matrices cost O(s * nnz * s) instead of O(s^4).
    """
    s = len(mat)
    if any(len(row) != s for row in mat):
        raise ValueError("matrix is not square")
    rows = [[(j, a) for j, a in enumerate(row) if a] for row in mat]
    coeffs = [0] * (s + 1)
    coeffs[s] = 1
    # prod holds M @ N_k; N_1 = I so M @ N_1 = M
    prod = [[int(a) for a in row] for row in mat]
    for k in range(1, s + 1):
        trace = sum(prod[i][i] for i in range(s))
        c, r = divmod(-trace, k)
        assert r == 0, f"inexact division at step {k}"
        coeffs[s - k] = c
        if k == s:
            break
        # N_{k+1} = M N_k + c I, then prod = M N_{k+1}
        nxt = [list(row) for row in prod]
        for i in range(s):
            nxt[i][i] += c
        prod = [_row_combination(r_i, nxt, s) for r_i in rows]
    return IntPolynomial(coeffs)


def _row_combination(terms, mat, s):
    out = [0] * s
    for j, a in terms:
        src = mat[j]
        if a == 1:
            for col in range(s):
                out[col] += src[col]
        else:
            for col in range(s):
                out[col] += a * src[col]
    return out


def identity(s: int) -> IntMatrix:
    return [[int(i == j) for j in range(s)] for i in range(s)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def transpose(a: Sequence[Sequence[int]]) -> IntMatrix:
    return [list(col) for col in zip(*a)]


def half_laplacian_like(g: Graph) -> IntMatrix:
    """``A + D/2``, checked entrywise against ``B B^T``."""
    require_locally_linear(g)
    mat = g.adjacency_matrix()
    for v in g.vertices():
        d = g.degree(v)
        if d % 2:
            raise OddDegree(f"vertex {v} has odd degree {d} in a locally linear graph")
        mat[v][v] = d // 2
    b = triangle_incidence(g)
    if g.n and b[0]:
        check = matmul(b, transpose(b))
    else:
        check = [[0] * g.n for _ in range(g.n)]
    assert check == mat, "B B^T differs from A + D/2"
    return mat


def star_adjacency_plus_3i(g: Graph) -> IntMatrix:
    """``B^T B`` from the incidence matrix, checked against ``A* + 3I``."""
    b = triangle_incidence(g)
    btb = matmul(transpose(b), b)
    expected = star_graph(g).star.adjacency_matrix()
    for i in range(len(expected)):
        expected[i][i] += 3
    assert btb == expected, "B^T B differs from A* + 3I"
    return btb


@dataclass(frozen=True)
class RegularCase:
    k: int
    alt_rhs: IntPolynomial
    alt_holds: bool


@dataclass(frozen=True)
class TheoremReport:
    """Both sides of the identity between ``P_{A*}`` and ``P_{A+D/2}``.

    When ``m >= n`` the sides are ``P_{A*}(x)`` and
    ``(x+3)^(m-n) P_{A+D/2}(x+3)``.  When ``m < n`` the power of ``x + 3`` moves
    to the left, so ``lhs = (x+3)^(n-m) P_{A*}(x)`` and
    ``rhs = P_{A+D/2}(x+3)``.
    """

    n: int
    m: int
    lhs: IntPolynomial
    rhs: IntPolynomial
    holds: bool
    p_star: IntPolynomial
    p_half: IntPolynomial
    p_adj: IntPolynomial
    regular_case: RegularCase | None = None

    @property
    def cross_multiplied(self) -> bool:
        return self.m < self.n


def verify_theorem1(g: Graph) -> TheoremReport:
    require_locally_linear(g)
    n = g.n
    star = star_graph(g).star
    m = star.n
    p_star = charpoly_exact(star.adjacency_matrix())
    p_half = charpoly_exact(half_laplacian_like(g))
    p_adj = charpoly_exact(g.adjacency_matrix())
    star_adjacency_plus_3i(g)

    x_plus_3 = IntPolynomial((3, 1))
    if m >= n:
        lhs = p_star
        rhs = x_plus_3 ** (m - n) * p_half.shift(3)
    else:
        lhs = x_plus_3 ** (n - m) * p_star
        rhs = p_half.shift(3)
    holds = lhs == rhs

    regular = None
    degrees = set(g.degrees())
    if len(degrees) == 1:
        (k,) = degrees
        if k % 2:
            raise OddDegree(f"regular locally linear graph with odd valency {k}")
        shifted = p_adj.shift(3 - k // 2)
        alt_rhs = x_plus_3 ** (m - n) * shifted if m >= n else shifted
        regular = RegularCase(k, alt_rhs, lhs == alt_rhs)

    return TheoremReport(n, m, lhs, rhs, holds, p_star, p_half, p_adj, regular)
