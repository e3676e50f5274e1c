from qsphere.scalars import ZERO, ONE, Q, QINV, RatFunc, qpow
from qsphere.linalg import (charpoly_tridiag, in_span, mat, matmul, nullity,
                            rank, solve, solve_with_rank, transpose, xp_eq,
                            xp_mul, xp_sub, xp_trailing_zeros)


def test_rank_and_nullity():
    m = mat([[1, 2], [2, 4]])
    assert rank(m) == 1
    assert nullity(m) == 1
    m = mat([[1, 0, 1], [0, 1, 1]])
    assert rank(m) == 2


def test_rank_with_rational_functions():
    m = [[Q, ONE], [Q * Q, Q]]
    assert rank(m) == 1
    m = [[Q, ONE], [ONE, Q]]
    assert rank(m) == 2


def test_solve_consistent_and_inconsistent():
    a = mat([[1, 1], [0, 1], [1, 0]])
    x = solve(a, [RatFunc.from_int(3), RatFunc.from_int(1), RatFunc.from_int(2)])
    assert x == [RatFunc.from_int(2), ONE]
    assert solve(a, [RatFunc.from_int(3), ONE, ONE]) is None


def test_solve_with_rank_multi():
    a = mat([[1, 0], [0, 1], [1, 1]])
    r, sols = solve_with_rank(a, [[ONE, ZERO, ONE], [ONE, ONE, ONE]])
    assert r == 2
    assert sols[0] == [ONE, ZERO]
    assert sols[1] is None


def test_in_span():
    v1 = [ONE, ZERO, Q]
    v2 = [ZERO, ONE, ONE]
    coeffs = in_span([v1, v2], [Q, ONE, Q * Q + 1])
    assert coeffs == [Q, ONE]
    assert in_span([v1, v2], [ZERO, ZERO, ONE]) is None


def test_charpoly_tridiag_2x2():
    # det(xI - [[a, b], [c, d]]) = x^2 - (a+d)x + (ad - bc)
    a, b, c, d = Q, ONE, QINV, Q * Q
    p = charpoly_tridiag([a, d], [b], [c])
    want = [a * d - b * c, -(a + d), ONE]
    assert xp_eq(p, want)


def test_charpoly_tridiag_3x3_against_dense():
    diag = [Q, ZERO, QINV]
    sup = [ONE, Q]
    sub = [Q * Q, ONE]
    p = charpoly_tridiag(diag, sup, sub)
    # brute expansion of det(xI - M) for the 3x3 tridiagonal
    a0 = -(diag[0] * diag[1] * diag[2]
           - diag[0] * sup[1] * sub[1] - diag[2] * sup[0] * sub[0])
    a1 = (diag[0] * diag[1] + diag[0] * diag[2] + diag[1] * diag[2]
          - sup[0] * sub[0] - sup[1] * sub[1])
    a2 = -(diag[0] + diag[1] + diag[2])
    assert xp_eq(p, [-a0 if False else a0, a1, a2, ONE])


def test_xp_helpers():
    p = xp_mul([ONE, ONE], [ONE, ONE])
    assert xp_eq(p, [ONE, 2 * ONE, ONE])
    assert xp_trailing_zeros([ZERO, ZERO, ONE]) == 2
    assert xp_trailing_zeros([ZERO, ZERO]) == 0
    assert xp_eq(xp_sub(p, p), [])
