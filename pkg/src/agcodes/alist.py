"""MacKay alist export of sparse parity-check matrices.

Layout: line 1 "n m", line 2 "max_col_wt max_row_wt", then the n column
weights, the m row weights, per-column 1-based row indices (zero-padded to
the maximum column weight), and per-row 1-based column indices (zero-padded
likewise).  For q > 2 a companion ".qval" file lists the nonzero entry
values in the same traversal order, one line per column then one per row.
"""

from __future__ import annotations

import numpy as np


def write_alist(H, path):
    """Write the m x n matrix H (nonzero pattern only) to an alist file."""
    H = np.asarray(H)
    m, n = H.shape
    col_idx = [list(np.nonzero(H[:, j])[0] + 1) for j in range(n)]
    row_idx = [list(np.nonzero(H[i, :])[0] + 1) for i in range(m)]
    max_col = max((len(c) for c in col_idx), default=0)
    max_row = max((len(r) for r in row_idx), default=0)

    def padded(idx, width):
        return " ".join(str(v) for v in idx + [0] * (width - len(idx)))

    with open(path, "w") as fh:
        fh.write(f"{n} {m}\n")
        fh.write(f"{max_col} {max_row}\n")
        fh.write(" ".join(str(len(c)) for c in col_idx) + "\n")
        fh.write(" ".join(str(len(r)) for r in row_idx) + "\n")
        for c in col_idx:
            fh.write(padded(c, max_col) + "\n")
        for r in row_idx:
            fh.write(padded(r, max_row) + "\n")


def write_qval(H, path):
    """Companion value file for q > 2: the nonzero entries in the same
    traversal order as the alist index lists (columns first, then rows)."""
    H = np.asarray(H)
    m, n = H.shape
    with open(path, "w") as fh:
        for j in range(n):
            vals = H[np.nonzero(H[:, j])[0], j]
            fh.write(" ".join(str(int(v)) for v in vals) + "\n")
        for i in range(m):
            vals = H[i, np.nonzero(H[i, :])[0]]
            fh.write(" ".join(str(int(v)) for v in vals) + "\n")


def export_parity_alist(H, path, q):
    """Write H as alist; for q > 2 also write the .qval companion."""
    write_alist(H, path)
    if q > 2:
        write_qval(H, str(path) + ".qval")


def read_alist(path):
    """Parse an alist file back into a dense 0/1 uint8 matrix."""
    with open(path) as fh:
        tokens_by_line = [line.split() for line in fh]
    n, m = map(int, tokens_by_line[0])
    col_wts = list(map(int, tokens_by_line[2]))
    H = np.zeros((m, n), dtype=np.uint8)
    for j in range(n):
        idx = [int(v) for v in tokens_by_line[4 + j] if int(v) != 0]
        if len(idx) != col_wts[j]:
            raise ValueError(f"column {j} weight mismatch")
        for i in idx:
            H[i - 1, j] = 1
    return H
