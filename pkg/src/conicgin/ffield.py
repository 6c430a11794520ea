"""Dense exact linear algebra over a prime field GF(p).

Matrices carry an ordered list of column labels; row reduction scans columns
in that stored order with no pivoting heuristics, so the pivot labels are
reproducible. Entries live in int64 numpy arrays: with p < 2^31.5 a single
product of two reduced residues cannot overflow, and we reduce mod p after
every multiply.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ZeroInverse


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def modular_inverse(a: int, p: int) -> int:
    """Inverse of a mod p; raises ZeroInverse on a == 0 mod p."""
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


@dataclass(frozen=True)
class FFMatrix:
    """Matrix over GF(p) with ordered, distinct column labels."""

    p: int
    entries: np.ndarray
    column_labels: tuple

    def __post_init__(self):
        if not 2 <= self.p < 2**31:
            # products of two residues must stay below 2^63
            raise ValueError(f"modulus {self.p} out of the int64-safe range")
        ent = np.asarray(self.entries, dtype=np.int64) % self.p
        object.__setattr__(self, "entries", ent)
        if ent.ndim != 2:
            raise ValueError("entries must be a 2-D array")
        if len(self.column_labels) != ent.shape[1]:
            raise ValueError("column_labels length must equal the column count")
        if len(set(self.column_labels)) != len(self.column_labels):
            raise ValueError("column labels must be distinct")

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]


def ffmatrix(p: int, rows, column_labels=None) -> FFMatrix:
    """Build an FFMatrix from nested lists; labels default to 0..cols-1."""
    ent = np.array(rows, dtype=np.int64)
    if ent.ndim == 1:
        # a flat list is one row; an empty list is the 0x0 matrix
        ent = ent.reshape(1, -1) if ent.size else ent.reshape(0, 0)
    if column_labels is None:
        column_labels = tuple(range(ent.shape[1]))
    return FFMatrix(p, ent, tuple(column_labels))


@dataclass
class RowReduction:
    rank: int
    pivot_indices: list[int]
    pivot_columns: list
    kernel_basis: list[np.ndarray]
    rref: np.ndarray


def row_reduce(mat: FFMatrix) -> RowReduction:
    """Reduced row echelon form scanning columns left to right.

    pivot_columns are the labels of the pivot positions in scan order;
    kernel_basis spans the right null space (rank + len(kernel) == cols).
    """
    p = mat.p
    A = mat.entries.copy()
    nrows, ncols = A.shape
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        nz = np.nonzero(A[row:, col])[0]
        if nz.size == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            A[[row, pr]] = A[[pr, row]]
        inv = modular_inverse(int(A[row, col]), p)
        A[row] = A[row] * inv % p
        colvals = A[:, col].copy()
        colvals[row] = 0
        mask = colvals != 0
        if mask.any():
            A[mask] = (A[mask] - np.outer(colvals[mask], A[row])) % p
        pivots.append((row, col))
        row += 1

    pivot_cols = [c for _, c in pivots]
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    kernel = []
    for f in free_cols:
        v = np.zeros(ncols, dtype=np.int64)
        v[f] = 1
        for pr, pc in pivots:
            v[pc] = (-int(A[pr, f])) % p
        kernel.append(v)
    return RowReduction(
        rank=len(pivots),
        pivot_indices=pivot_cols,
        pivot_columns=[mat.column_labels[c] for c in pivot_cols],
        kernel_basis=kernel,
        rref=A,
    )


def random_invertible_3x3(p: int, rng) -> list[list[int]]:
    """Uniform-ish invertible 3x3 matrix mod p (rejection on det == 0)."""
    while True:
        g = [[rng.randrange(p) for _ in range(3)] for _ in range(3)]
        det = (
            g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
            - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
            + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
        ) % p
        if det:
            return g


def apply_matrix_3(g, v, p: int) -> tuple[int, int, int]:
    return tuple(sum(g[i][j] * v[j] for j in range(3)) % p for i in range(3))
