"""Elementary divisor calculus for finite-index sublattices.

A lattice of rank g is given by a square integer matrix whose columns are a
basis. For nested lattices M <= L the basis change L^-1 M is an integer
matrix and the p-adic valuations of its Smith normal form diagonal are the
elementary divisors of the inclusion over Z_p; their sum plays the role of
a conductor. Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from .errors import (NotASublattice, PreconditionFailed, ShapeMismatch,
                     SingularMatrix)


def _as_matrix(M):
    rows = [list(r) for r in M]
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ShapeMismatch("matrix rows must be nonempty and equal length")
    for r in rows:
        for x in r:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ShapeMismatch(f"matrix entries must be integers, got {x!r}")
    return rows


def _square(M):
    rows = _as_matrix(M)
    if len(rows) != len(rows[0]):
        raise ShapeMismatch("expected a square matrix")
    return rows


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    if len(A[0]) != k:
        raise ShapeMismatch("inner dimensions do not match")
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def det(M):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = [row[:] for row in _square(M)]
    n = len(A)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _adjugate(M):
    n = len(M)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[M[r][c] for c in range(n) if c != j]
                     for r in range(n) if r != i]
            adj[j][i] = (-1) ** (i + j) * det(minor)
    return adj


def lattice_quotient(outer, inner):
    """The integer matrix X with outer . X = inner.

    Raises SingularMatrix if outer is not a basis and NotASublattice if the
    column lattice of inner is not contained in that of outer.
    """
    outer = _square(outer)
    inner = _square(inner)
    if len(outer) != len(inner):
        raise ShapeMismatch("lattices must have the same rank")
    d = det(outer)
    if d == 0:
        raise SingularMatrix("outer basis matrix is singular")
    num = matmul(_adjugate(outer), inner)
    X = []
    for row in num:
        out = []
        for x in row:
            q, r = divmod(x, d)
            if r != 0:
                raise NotASublattice("inner lattice is not inside the outer one")
            out.append(q)
        X.append(out)
    return X


def smith_normal_form(M):
    """(U, D, V) with U . M . V = D diagonal, d_1 | d_2 | ... | d_n > 0,
    and U, V unimodular. M must be square and nonsingular."""
    A = [row[:] for row in _square(M)]
    n = len(A)
    if det(A) == 0:
        raise SingularMatrix("matrix is singular")
    U = identity(n)
    V = identity(n)

    def row_op(i, j, q):  # row_i -= q * row_j
        A[i] = [a - q * b for a, b in zip(A[i], A[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(n):
            A[r][i] -= q * A[r][j]
        for r in range(n):
            V[r][i] -= q * V[r][j]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in range(n):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    for t in range(n):
        while True:
            # Bring the smallest nonzero entry of the trailing block to (t, t).
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if A[i][j] != 0 and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            bi, bj = best
            if bi != t:
                swap_rows(t, bi)
            if bj != t:
                swap_cols(t, bj)
            dirty = False
            for i in range(t + 1, n):
                if A[i][t] != 0:
                    row_op(i, t, A[i][t] // A[t][t])
                    if A[i][t] != 0:
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j] != 0:
                    col_op(j, t, A[t][j] // A[t][t])
                    if A[t][j] != 0:
                        dirty = True
            if dirty:
                continue
            # Pivot divides every remaining entry, or fold a bad row in.
            bad = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if A[i][j] % A[t][t] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_op(t, bad, -1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return U, A, V


def diagonal(D):
    return [D[i][i] for i in range(len(D))]


def _valuation(x, p):
    if x == 0:
        raise SingularMatrix("zero has no finite valuation")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _check_prime(p):
    if not isinstance(p, int) or p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise PreconditionFailed(f"p must be prime, got {p!r}")


def elementary_divisors(inner, outer, p):
    """Non-decreasing tuple of p-adic valuations of the elementary divisors
    of the inclusion inner <= outer."""
    _check_prime(p)
    X = lattice_quotient(outer, inner)
    _, D, _ = smith_normal_form(X)
    return tuple(_valuation(d, p) for d in diagonal(D))


def conductor(inner, outer, p):
    """Sum of the elementary divisor valuations of inner <= outer at p."""
    return sum(elementary_divisors(inner, outer, p))


def check_sandwich(l0, l1, l2, p, n):
    """Divisor bounds for a sandwich p^n L1 <= L0 <= L1 <= L2.

    Returns True iff c_i(L2/L1) <= c_i(L2/L0) <= c_i(L2/L1) + n holds for
    every i. Raises PreconditionFailed when the lattices are not nested
    that way.
    """
    _check_prime(p)
    if not isinstance(n, int) or n < 0:
        raise PreconditionFailed(f"n must be a non-negative integer, got {n!r}")
    try:
        lattice_quotient(l1, l0)
        lattice_quotient(l2, l1)
        scaled = [[p ** n * x for x in row] for row in _square(l1)]
        lattice_quotient(l0, scaled)
    except (NotASublattice, SingularMatrix) as exc:
        raise PreconditionFailed(f"sandwich precondition fails: {exc}") from exc
    c1 = elementary_divisors(l1, l2, p)
    c0 = elementary_divisors(l0, l2, p)
    return all(a <= b <= a + n for a, b in zip(c1, c0))


def chain_complement(v, w):
    """Divisors of M inside N from those of N inside L, for M <= N <= L
    with c(L/M) = v of the shape (0, ..., 0, a, ..., a).

    The complement reverses the nontrivial block: entry i of the tail
    becomes a - w[g - 1 - i].
    """
    v = tuple(v)
    w = tuple(w)
    if len(v) != len(w):
        raise ShapeMismatch("v and w must have the same length")
    if any(not isinstance(x, int) or isinstance(x, bool) for x in v):
        raise ShapeMismatch("v must be a tuple of integers")
    g = len(v)
    zeros = 0
    while zeros < g and v[zeros] == 0:
        zeros += 1
    a = v[zeros] if zeros < g else 0
    if any(x != a for x in v[zeros:]) or a < 0:
        raise ShapeMismatch("v must look like (0, ..., 0, a, ..., a) with a >= 0")
    if any(not isinstance(x, int) or isinstance(x, bool) for x in w):
        raise PreconditionFailed("w must be a tuple of integers")
    if any(w[i] > w[i + 1] for i in range(g - 1)):
        raise PreconditionFailed("w must be non-decreasing")
    if any(not 0 <= w[i] <= v[i] for i in range(g)):
        raise PreconditionFailed("w must satisfy 0 <= w_i <= v_i")
    return tuple([0] * zeros + [a - w[g - 1 - t] for t in range(g - zeros)])


def column_hnf(M):
    """Staircase basis of the column lattice of an integer matrix.

    Returns (columns, pivot_rows): the basis vectors as tuples and the row
    index of each column's leading entry.
    """
    rows = _as_matrix(M)
    r = len(rows)
    cols = [list(col) for col in zip(*rows)]
    t = 0
    pivots = []
    for row in range(r):
        while True:
            active = [j for j in range(t, len(cols)) if cols[j][row] != 0]
            if not active:
                break
            j0 = min(active, key=lambda j: abs(cols[j][row]))
            cols[t], cols[j0] = cols[j0], cols[t]
            done = True
            for j in range(t + 1, len(cols)):
                if cols[j][row] != 0:
                    q = cols[j][row] // cols[t][row]
                    cols[j] = [a - q * b for a, b in zip(cols[j], cols[t])]
                    if cols[j][row] != 0:
                        done = False
            if done:
                break
        if t < len(cols) and cols[t][row] != 0:
            if cols[t][row] < 0:
                cols[t] = [-a for a in cols[t]]
            pivots.append(row)
            t += 1
    return [tuple(c) for c in cols[:t]], pivots


# -- random instances for the verification suites ----------------------------

def random_unimodular(rng, n, steps=8):
    """Product of random shears and swaps; determinant is +-1."""
    U = identity(n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if n > 1 and rng.random() < 0.8:
            c = rng.choice([-2, -1, 1, 2])
            U[i] = [a + c * b for a, b in zip(U[i], U[j])]
        elif n > 1:
            U[i], U[j] = U[j], U[i]
        if rng.random() < 0.2:
            k = rng.randrange(n)
            U[k] = [-a for a in U[k]]
    return U


def _twisted_diagonal(rng, n, diag):
    return matmul(matmul(random_unimodular(rng, n), [[diag[i] if i == j else 0
                                                      for j in range(n)]
                                                     for i in range(n)]),
                  random_unimodular(rng, n))


def random_sandwich_instance(rng, g, p, n):
    """(l0, l1, l2) with p^n L1 <= L0 <= L1 <= L2, by construction."""
    l2 = random_unimodular(rng, g)
    m1 = _twisted_diagonal(rng, g, [rng.choice([1, p, p * p, rng.randrange(1, 7)])
                                    for _ in range(g)])
    l1 = matmul(l2, m1)
    m0 = _twisted_diagonal(rng, g, [p ** rng.randint(0, n) for _ in range(g)])
    l0 = matmul(l1, m0)
    return l0, l1, l2


def random_complement_instance(rng, g, p):
    """(l1, l2, l3, v) with L1 <= L2 <= L3 and c(L3/L1) = v of the shape
    (0, ..., 0, a, ..., a)."""
    zeros = rng.randint(0, g - 1)
    a = rng.randint(1, 3)
    v = tuple([0] * zeros + [a] * (g - zeros))
    l3 = random_unimodular(rng, g)
    l1 = matmul(l3, _twisted_diagonal(rng, g, [p ** c for c in v]))
    k = rng.randint(1, g)
    T = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(g)]
    extra = matmul(l3, T)
    stacked = [l1[i] + extra[i] for i in range(g)]
    cols, _ = column_hnf(stacked)
    l2 = [[c[i] for c in cols] for i in range(g)]
    return l1, l2, l3, v
