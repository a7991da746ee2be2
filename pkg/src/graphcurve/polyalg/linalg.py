"""Exact linear algebra over GF(p) (numpy int64) and over QQ (Fractions).

Matrices are 2-d arrays (GF(p)) or lists of lists (QQ).  Only row reduction
is needed: rank, reduced row echelon form, null spaces and row-space tests.
"""

from fractions import Fraction

import numpy as np
from numba import njit


@njit(cache=True)
def _stream_rref(M, p, E, piv, r, stop):
    """Insert rows of M into the reduced echelon rows E[:r] (pivot columns piv).

    E is kept fully reduced: each row has a leading 1 at its pivot and zeros
    in every other pivot column.  Stops once r reaches ``stop``.
    """
    ncols = M.shape[1]
    row = np.empty(ncols, dtype=np.int64)
    for i in range(M.shape[0]):
        if r >= stop:
            break
        for t in range(ncols):
            row[t] = M[i, t] % p
        for k in range(r):
            f = row[piv[k]]
            if f != 0:
                for t in range(ncols):
                    if E[k, t] != 0:
                        row[t] = (row[t] - f * E[k, t]) % p
        c = -1
        for t in range(ncols):
            if row[t] != 0:
                c = t
                break
        if c < 0:
            continue
        # modular inverse by Fermat
        inv = 1
        base = row[c]
        e = p - 2
        while e > 0:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
        for t in range(ncols):
            row[t] = row[t] * inv % p
        for k in range(r):
            f = E[k, c]
            if f != 0:
                for t in range(ncols):
                    if row[t] != 0:
                        E[k, t] = (E[k, t] - f * row[t]) % p
        for t in range(ncols):
            E[r, t] = row[t]
        piv[r] = c
        r += 1
    return r


class Echelon:
    """Growing row space over GF(p), kept in reduced echelon form."""

    def __init__(self, ncols, p, capacity=None):
        self.p = p
        self.ncols = ncols
        cap = ncols if capacity is None else min(capacity, ncols)
        self._E = np.zeros((cap, ncols), dtype=np.int64)
        self._piv = np.zeros(cap, dtype=np.int64)
        self.rank = 0

    def add(self, rows, stop=None):
        """Add rows; returns the new rank."""
        rows = np.ascontiguousarray(np.asarray(rows, dtype=np.int64).reshape(-1, self.ncols))
        stop = self._E.shape[0] if stop is None else min(stop, self._E.shape[0])
        self.rank = int(_stream_rref(rows, self.p, self._E, self._piv, self.rank, stop))
        return self.rank

    def reduce(self, v):
        w = np.asarray(v, dtype=np.int64) % self.p
        for k in range(self.rank):
            f = w[self._piv[k]]
            if f:
                w = (w - f * self._E[k]) % self.p
        return w

    def contains(self, v):
        return not self.reduce(v).any()

    def rows(self):
        order = np.argsort(self._piv[:self.rank], kind="stable")
        return self._E[:self.rank][order].copy(), [int(c) for c in self._piv[:self.rank][order]]


def as_matrix(rows, p, ncols=None):
    if p:
        if ncols is not None and len(rows) == 0:
            return np.zeros((0, ncols), dtype=np.int64)
        return np.asarray(rows, dtype=np.int64) % p
    return [[Fraction(x) for x in row] for row in rows]


def rref(M, p):
    """Reduced row echelon form; returns (R, pivot_columns) with zero rows dropped."""
    if not p:
        return _rref_qq(M)
    A = np.asarray(M, dtype=np.int64)
    if A.ndim != 2 or A.size == 0:
        return A.reshape(0, A.shape[1] if A.ndim == 2 else 0), []
    ech = Echelon(A.shape[1], p, capacity=A.shape[0])
    ech.add(A)
    return ech.rows()


def rank(M, p):
    if not p:
        return len(_rref_qq(M)[1])
    A = np.asarray(M, dtype=np.int64)
    if A.ndim != 2 or A.size == 0:
        return 0
    # eliminate on the smaller side
    if A.shape[0] > A.shape[1]:
        A = A.T
    return Echelon(A.shape[1], p, capacity=A.shape[0]).add(A)


def nullspace(M, p, ncols=None):
    """Basis (as rows) of {v : M v = 0}."""
    if p:
        A = np.asarray(M, dtype=np.int64)
        n = A.shape[1] if A.ndim == 2 and A.size else (ncols if ncols is not None else 0)
        if A.size == 0:
            return np.eye(n, dtype=np.int64)
        R, pivots = rref(A, p)
        free = [c for c in range(n) if c not in set(pivots)]
        basis = np.zeros((len(free), n), dtype=np.int64)
        for idx, fc in enumerate(free):
            basis[idx, fc] = 1
            for r, pc in enumerate(pivots):
                basis[idx, pc] = (-R[r, fc]) % p
        return basis
    n = len(M[0]) if M else (ncols or 0)
    R, pivots = _rref_qq(M) if M else ([], [])
    free = [c for c in range(n) if c not in set(pivots)]
    out = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -R[r][fc]
        out.append(v)
    return out


def row_space_contains(basis_rref, pivots, vectors, p):
    """True for each vector lying in the row space of a matrix given in rref."""
    out = []
    for v in vectors:
        w = np.array(v, dtype=np.int64) % p
        for r, c in enumerate(pivots):
            if w[c]:
                w = (w - w[c] * basis_rref[r]) % p
        out.append(not w.any())
    return out


def _rref_qq(M):
    A = [[Fraction(x) for x in row] for row in M]
    if not A:
        return [], []
    nrows, ncols = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A[:r], pivots
