"""Dense linear algebra over an :class:`InvolutiveField`.

Matrices are tuples of row tuples of element codes; vectors are tuples.
Everything here is exact and returns fresh immutable values.
"""
from itertools import product

from .errors import DivisionByZero, LengthMismatch


def zeros(r, c):
    return tuple((0,) * c for _ in range(r))


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(A, ncols=None):
    if not A:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*A))


def star_transpose(F, A, ncols=None):
    """Entrywise involution followed by transposition (A^{*T})."""
    s = F.star_table
    return tuple(tuple(s[x] for x in col) for col in transpose(A, ncols))


def mat_star(F, A):
    s = F.star_table
    return tuple(tuple(s[x] for x in row) for row in A)


def dot(F, u, v):
    add, mul = F.add, F.mul
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = add(acc, mul(a, b))
    return acc


def mat_mul(F, A, B):
    if not A:
        return ()
    if not B:
        return tuple(() for _ in A)
    cols = tuple(zip(*B))
    add, mul = F.add, F.mul
    out = []
    for row in A:
        new = []
        for col in cols:
            acc = 0
            for a, b in zip(row, col):
                if a and b:
                    acc = add(acc, mul(a, b))
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def mat_vec(F, A, v):
    return tuple(dot(F, row, v) for row in A)


def mat_add(F, A, B):
    add = F.add
    return tuple(tuple(add(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(F, A, B):
    sub = F.sub
    return tuple(tuple(sub(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_neg(F, A):
    neg = F.neg
    return tuple(tuple(neg(a) for a in row) for row in A)


def mat_scale(F, c, A):
    mul = F.mul
    return tuple(tuple(mul(c, a) for a in row) for row in A)


def vec_add(F, u, v):
    return tuple(F.add(a, b) for a, b in zip(u, v))


def vec_scale(F, c, v):
    return tuple(F.mul(c, a) for a in v)


def check_length(v, n):
    if len(v) != n:
        raise LengthMismatch(f"expected length {n}, got {len(v)}")


def rref(F, rows, ncols=None):
    """Reduced row-echelon form.

    Returns ``(basis, pivots)`` where ``basis`` holds only the nonzero rows.
    """
    M = [list(r) for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    for c in range(ncols):
        pr = next((i for i in range(r, len(M)) if M[i][c]), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        piv = M[r]
        ic = inv(piv[c])
        if ic != 1:
            piv = [mul(ic, x) for x in piv]
            M[r] = piv
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = neg(M[i][c])
                row = M[i]
                M[i] = [add(x, mul(f, y)) if y else x for x, y in zip(row, piv)]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return tuple(tuple(row) for row in M[:r]), tuple(pivots)


def rank(F, A):
    return len(rref(F, A)[1])


def nullspace(F, A, ncols):
    """Basis (list of vectors) of {x : A x = 0}, in RREF-derived order."""
    R, pivots = rref(F, A, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for row, pc in zip(R, pivots):
            if row[f]:
                x[pc] = F.neg(row[f])
        basis.append(tuple(x))
    return basis


def inverse(F, A):
    n = len(A)
    if n == 0:
        return ()
    aug = [tuple(A[i]) + tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    R, pivots = rref(F, aug, 2 * n)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise DivisionByZero("matrix is singular")
    return tuple(row[n:] for row in R)


def is_invertible(F, A):
    return rank(F, A) == len(A)


def solve_left(F, B, X, ncols):
    """Coefficients c with sum_i c_i B[i] == X, or None if X is not in the row space."""
    # rows of B are vectors; solve B^T c = X
    r = len(B)
    aug = [tuple(B[i][j] for i in range(r)) + (X[j],) for j in range(ncols)]
    R, pivots = rref(F, aug, r + 1)
    if r in pivots:
        return None
    c = [0] * r
    for row, pc in zip(R, pivots):
        c[pc] = row[r]
    return tuple(c)


def all_vectors(F, n):
    return product(range(F.q), repeat=n)


def all_matrices(F, r, c):
    for flat in product(range(F.q), repeat=r * c):
        yield tuple(tuple(flat[i * c:(i + 1) * c]) for i in range(r))


def is_zero(A):
    return all(not x for row in A for x in row)
