"""Exact Gaussian elimination over any polylab field."""
from __future__ import annotations


def rref(rows, ncols: int):
    """Reduced row echelon form.  Returns ``(reduced_rows, pivot_columns)``."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows, ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols: int, one=1):
    """Basis of the right null space ``{v : rows @ v = 0}``."""
    reduced, pivots = rref(rows, ncols)
    zero = one - one
    basis = []
    free = [c for c in range(ncols) if c not in pivots]
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def det3(a, b, c):
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def matmul3(a, b):
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(1, 3)), a[i][0] * b[0][j])
                       for j in range(3)) for i in range(3))


def matvec3(a, v):
    return tuple(a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2] for i in range(3))


def adjugate3(a):
    """Adjugate (transpose of the cofactor matrix); ``a @ adj(a) = det(a) I``."""
    cols = [tuple(a[i][j] for i in range(3)) for j in range(3)]
    # rows of adj(a) are cross products of pairs of columns of a
    r0 = cross(cols[1], cols[2])
    r1 = cross(cols[2], cols[0])
    r2 = cross(cols[0], cols[1])
    return (r0, r1, r2)


def transpose3(a):
    return tuple(tuple(a[i][j] for i in range(3)) for j in range(3))
