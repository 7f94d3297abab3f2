"""Exact linear algebra: numpy kernels for F_p, plain Python for any FieldSpec."""

import numpy as np


# -- F_p with numpy ------------------------------------------------------------


def rref_mod_p(A, p):
    """Reduced row echelon form of an integer matrix mod p.

    Returns (R, pivots) where R has the nonzero rows first.
    """
    R = np.array(A, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        inv = pow(int(R[r, c]), -1, p)
        R[r] = (R[r] * inv) % p
        col = R[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            R[nzr] = (R[nzr] - np.outer(col[nzr], R[r])) % p
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank_mod_p(A, p):
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref_mod_p(A, p)[1])


def nullspace_mod_p(A, p):
    """Basis of {x : A x = 0} as rows of a matrix."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    R, piv = rref_mod_p(A, p)
    free = [c for c in range(cols) if c not in set(piv)]
    N = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        N[i, fc] = 1
        for r, pc in enumerate(piv):
            N[i, pc] = (-R[r, fc]) % p
    return N


def row_basis_mod_p(A, p):
    """Rows of the reduced echelon form: a canonical basis of the row space."""
    A = np.asarray(A, dtype=np.int64)
    if A.shape[0] == 0:
        return A.reshape(0, A.shape[1] if A.ndim == 2 else 0)
    return rref_mod_p(A, p)[0]


# -- generic fields ------------------------------------------------------------


def rref(rows, F):
    """Reduced row echelon form of a list of raw-value rows over F."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        k = next((i for i in range(r, len(M)) if not F.is_zero(M[i][c])), None)
        if k is None:
            continue
        M[r], M[k] = M[k], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(x, inv) for x in M[r]]
        for i in range(len(M)):
            if i != r and not F.is_zero(M[i][c]):
                f = M[i][c]
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows, F):
    return len(rref(rows, F)[1])


def nullspace(rows, F, ncols=None):
    if not rows:
        n = ncols or 0
        return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    R, piv = rref(rows, F)
    ncols = len(rows[0])
    ps = set(piv)
    out = []
    for fc in range(ncols):
        if fc in ps:
            continue
        v = [F.zero] * ncols
        v[fc] = F.one
        for r, pc in enumerate(piv):
            v[pc] = F.neg(R[r][fc])
        out.append(v)
    return out


class IncrementalBasis:
    """Echelon basis grown one vector at a time.

    add(v) returns None when v is independent of the vectors so far (and
    stores it); otherwise the coefficients expressing v in the added vectors.
    """

    def __init__(self, F, dim):
        self.F = F
        self.dim = dim
        self.rows = []   # (pivot, echelon row, combination of added vectors)
        self.count = 0

    def add(self, v):
        F = self.F
        v = list(v)
        comb = [F.zero] * self.count + [F.one]
        for piv, row, rc in self.rows:
            c = v[piv]
            if not F.is_zero(c):
                v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, row)]
                comb = [F.sub(x, F.mul(c, y)) for x, y in zip(comb, rc + [F.zero] * (len(comb) - len(rc)))]
        piv = next((i for i, x in enumerate(v) if not F.is_zero(x)), None)
        if piv is None:
            # v - sum(...) = 0 with comb's last entry 1: v = -sum comb[:-1] * added
            return [F.neg(x) for x in comb[:-1]]
        inv = F.inv(v[piv])
        v = [F.mul(x, inv) for x in v]
        comb = [F.mul(x, inv) for x in comb]
        self.rows.append((piv, v, comb))
        self.count += 1
        return None
