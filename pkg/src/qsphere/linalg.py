"""Exact linear algebra over Q(t).

Matrices are plain lists of rows of RatFunc.  Everything here is small
(dimensions in the tens), so straightforward Gaussian elimination with
reduced fractions at every step is both exact and fast enough.
"""

from .scalars import ZERO, ONE, RatFunc


def mat(rows):
    return [[RatFunc.coerce(x) for x in row] for row in rows]


def zeros(n, m):
    return [[ZERO] * m for _ in range(n)]


def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = ONE
    return out


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        for j in range(m):
            s = ZERO
            for p in range(k):
                if ai[p] and b[p][j]:
                    s = s + ai[p] * b[p][j]
            out[i][j] = s
    return out


def matsub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def matadd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scalmul(c, a):
    return [[c * x for x in row] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def is_zero_matrix(a):
    return all(not x for row in a for x in row)


def mat_eq(a, b):
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def rank(rows):
    """Exact rank; the input is not modified."""
    m = [list(r) for r in rows]
    nr = len(m)
    if nr == 0:
        return 0
    nc = len(m[0])
    r = 0
    for col in range(nc):
        piv = None
        for i in range(r, nr):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col].inv()
        m[r] = [x * inv for x in m[r]]
        for i in range(nr):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == nr:
            break
    return r


def nullity(rows):
    if not rows:
        return 0
    return len(rows[0]) - rank(rows)


def _entry_weight(x):
    return len(x.num) + len(x.den)


def solve_with_rank(a_rows, b_cols):
    """One elimination pass: (rank of A, per-column solution or None).

    Pivots are chosen by smallest entry complexity, which keeps the
    rational-function growth of the elimination in check.
    """
    nr = len(a_rows)
    nc = len(a_rows[0]) if nr else 0
    aug = [list(a_rows[i]) + [col[i] for col in b_cols] for i in range(nr)]
    aug = [row for row in aug if any(row)]
    nr = len(aug)
    pivots = []
    r = 0
    for col in range(nc):
        piv = None
        best = None
        for i in range(r, nr):
            if aug[i][col]:
                w = _entry_weight(aug[i][col])
                if best is None or w < best:
                    piv, best = i, w
                    if w <= 2:
                        break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = aug[r][col].inv()
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nr):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == nr:
            break
    sols = []
    for k in range(len(b_cols)):
        bad = any(aug[i][nc + k] for i in range(r, nr))
        if bad:
            sols.append(None)
            continue
        x = [ZERO] * nc
        for i, col in enumerate(pivots):
            x[col] = aug[i][nc + k]
        sols.append(x)
    return r, sols


def solve(a_rows, b):
    """One exact solution x of A x = b, or None if inconsistent.

    Free variables are set to zero.  `b` may be a vector or a list of
    columns (then a list of solutions is returned).
    """
    multi = b and isinstance(b[0], list)
    bc = b if multi else [b]
    _, sols = solve_with_rank(a_rows, bc)
    if multi:
        return None if any(s is None for s in sols) else sols
    return sols[0]


def in_span(vectors, target):
    """Coefficients expressing target in the span of `vectors`, or None."""
    if not vectors:
        return [] if all(not x for x in target) else None
    cols = transpose(vectors)
    return solve(cols, list(target))


# ---------------------------------------------------------------------------
# polynomials in an auxiliary variable x with RatFunc coefficients
# (dense lists, low degree first) -- enough for characteristic polynomials

def xp_trim(p):
    n = len(p)
    while n and not p[n - 1]:
        n -= 1
    return p[:n]


def xp_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = out[i] + x
    return xp_trim(out)


def xp_sub(a, b):
    return xp_add(a, [-x for x in b])


def xp_mul(a, b):
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return xp_trim(out)


def xp_eq(a, b):
    return xp_trim(list(a)) == xp_trim(list(b))


def xp_trailing_zeros(p):
    """Multiplicity of the root x = 0."""
    k = 0
    while k < len(p) and not p[k]:
        k += 1
    return k if k < len(p) else 0


def charpoly_tridiag(diag, sup, sub):
    """det(x I - M) for a tridiagonal matrix via the three-term recurrence."""
    n = len(diag)
    pm1 = [ONE]
    if n == 0:
        return pm1
    p = [-diag[0], ONE]
    for k in range(1, n):
        head = xp_mul([-diag[k], ONE], p)
        tail = xp_mul([sup[k - 1] * sub[k - 1]], pm1)
        pm1, p = p, xp_sub(head, tail)
    return p
