"""Linear algebra over F_q on small dense matrices.

Matrices are numpy arrays of element codes (uint8).  Prime fields go
through integer arithmetic mod p; extension fields go through the field's
lookup tables.  For q = 2 there is a bit-packed fast path used by the
enumeration-heavy callers.
"""

from __future__ import annotations

import numpy as np

from .errors import SingularMatrix


# ---------------------------------------------------------------- GF(2) bitsets

def rows_to_ints(M):
    """Pack each row of a 0/1 matrix into a python int (column j -> bit j)."""
    return [int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")
            for row in np.asarray(M, dtype=np.uint8)]


def ints_to_rows(ints, n):
    nbytes = (n + 7) // 8
    out = np.zeros((len(ints), n), dtype=np.uint8)
    for i, v in enumerate(ints):
        raw = np.frombuffer(v.to_bytes(nbytes, "little"), dtype=np.uint8)
        out[i] = np.unpackbits(raw, bitorder="little")[:n]
    return out


class Gf2RowReducer:
    """Incremental row echelon form over GF(2) on bit-packed rows."""

    def __init__(self):
        self.pivots = {}  # pivot bit index -> reduced row

    def residual(self, vec):
        while vec:
            low = vec & -vec
            bit = low.bit_length() - 1
            piv = self.pivots.get(bit)
            if piv is None:
                return vec
            vec ^= piv
        return 0

    def add(self, vec):
        """Insert a row; return True if it increased the rank."""
        res = self.residual(vec)
        if res == 0:
            return False
        bit = (res & -res).bit_length() - 1
        self.pivots[bit] = res
        return True

    @property
    def rank(self):
        return len(self.pivots)


def gf2_rank(M):
    red = Gf2RowReducer()
    for v in rows_to_ints(M):
        red.add(v)
    return red.rank


# ------------------------------------------------------------- generic over F_q

def rref(M, F):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    R = np.array(M, dtype=np.uint8, copy=True)
    rows, cols = R.shape
    pivots = []
    r = 0
    if F.t == 1:
        p = F.p
        Ri = R.astype(np.int64)
        inv = F.inv_table
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(Ri[r:, c])[0]
            if nz.size == 0:
                continue
            pr = r + int(nz[0])
            Ri[[r, pr]] = Ri[[pr, r]]
            Ri[r] = (Ri[r] * int(inv[Ri[r, c]])) % p
            factors = Ri[:, c].copy()
            factors[r] = 0
            mask = factors != 0
            if mask.any():
                Ri[mask] = (Ri[mask] - factors[mask, None] * Ri[r][None, :]) % p
            pivots.append(c)
            r += 1
        return Ri.astype(np.uint8), pivots
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        R[[r, pr]] = R[[pr, r]]
        R[r] = F.mul(int(F.inv_table[R[r, c]]), R[r])
        factors = R[:, c].copy()
        factors[r] = 0
        mask = factors != 0
        if mask.any():
            elim = F.mul(factors[mask, None], R[r][None, :])
            R[mask] = F.sub(R[mask], elim)
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M, F):
    M = np.asarray(M, dtype=np.uint8)
    if M.size == 0:
        return 0
    if F.q == 2:
        return gf2_rank(M)
    return len(rref(M, F)[1])


def reduce_against(vec, R, pivots, F):
    """Reduce a vector against an rref; zero residual means rowspace membership."""
    v = np.array(vec, dtype=np.uint8, copy=True)
    for i, c in enumerate(pivots):
        f = int(v[c])
        if f:
            v = F.sub(v, F.mul(f, R[i]))
    return v


def in_rowspace(vec, R, pivots, F):
    return not reduce_against(vec, R, pivots, F).any()


def nullspace(M, F):
    """Rows form a basis of the right kernel {x : M x = 0}."""
    M = np.asarray(M, dtype=np.uint8)
    n = M.shape[1]
    R, pivots = rref(M, F)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for i, c in enumerate(pivots):
            basis[bi, c] = F.neg(int(R[i, fc]))
    return basis


def matmul(A, B, F):
    """Matrix product over F_q."""
    A = np.asarray(A, dtype=np.uint8)
    B = np.asarray(B, dtype=np.uint8)
    if F.t == 1:
        return ((A.astype(np.int64) @ B.astype(np.int64)) % F.p).astype(np.uint8)
    acc = np.zeros((A.shape[0], B.shape[1]), dtype=np.uint8)
    for i in range(A.shape[1]):
        acc = F.add(acc, F.mul(A[:, i][:, None], B[i, :][None, :]))
    return acc


def inv_matrix(A, F):
    A = np.asarray(A, dtype=np.uint8)
    n = A.shape[0]
    if A.shape != (n, n):
        raise SingularMatrix("not a square matrix")
    aug = np.concatenate([A, np.eye(n, dtype=np.uint8)], axis=1)
    R, pivots = rref(aug, F)
    if len(pivots) < n or pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return R[:, n:]


def is_invertible(A, F):
    A = np.asarray(A, dtype=np.uint8)
    return A.shape[0] == A.shape[1] and rank(A, F) == A.shape[0]


def rowspace_equal(A, B, F):
    A = np.asarray(A, dtype=np.uint8)
    B = np.asarray(B, dtype=np.uint8)
    ra, rb = rank(A, F), rank(B, F)
    if ra != rb:
        return False
    return rank(np.concatenate([A, B]), F) == ra
