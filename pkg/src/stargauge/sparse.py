"""Compressed sparse row matrices used for document-term features.

The canonical layout is three parallel arrays: ``row_offsets`` (length
``n_rows + 1``), ``col_indices`` and ``values``. Row ``i`` owns the slice
``row_offsets[i]:row_offsets[i+1]``; within a row columns are strictly
increasing and no explicit zeros are stored. ``validate`` enforces all of
that and is called by the operations that build matrices.

scipy.sparse does the heavy arithmetic (matmuls, per-class reductions)
behind this type; conversion is zero-copy in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp


class SparseFormatError(ValueError):
    """A CsrMatrix violated its structural invariants."""


@dataclass
class CsrMatrix:
    n_rows: int
    n_cols: int
    row_offsets: np.ndarray
    col_indices: np.ndarray
    values: np.ndarray

    @property
    def nnz(self) -> int:
        return len(self.values)

    def validate(self) -> "CsrMatrix":
        """Check structural invariants; raises SparseFormatError."""
        ro, ci, vals = self.row_offsets, self.col_indices, self.values
        if self.n_rows < 0 or self.n_cols < 0:
            raise SparseFormatError("negative dimensions")
        if len(ro) != self.n_rows + 1:
            raise SparseFormatError(
                f"row_offsets length {len(ro)} != n_rows + 1 = {self.n_rows + 1}"
            )
        if len(ci) != len(vals):
            raise SparseFormatError("col_indices and values length mismatch")
        if self.n_rows >= 0 and len(ro) > 0:
            if ro[0] != 0:
                raise SparseFormatError("row_offsets must start at 0")
            if np.any(np.diff(ro) < 0):
                raise SparseFormatError("row_offsets must be non-decreasing")
            if ro[-1] != len(vals):
                raise SparseFormatError("last row offset must equal nnz")
        if len(ci) > 0:
            if ci.min() < 0 or ci.max() >= self.n_cols:
                raise SparseFormatError("column index out of range")
            for i in range(self.n_rows):
                row = ci[ro[i]: ro[i + 1]]
                if len(row) > 1 and np.any(np.diff(row) <= 0):
                    raise SparseFormatError(
                        f"row {i}: column indices not strictly increasing"
                    )
        if np.any(vals == 0.0):
            raise SparseFormatError("explicit zeros are not allowed")
        if not np.all(np.isfinite(vals)):
            raise SparseFormatError("non-finite value stored")
        return self

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.n_rows, self.n_cols), dtype=np.float64)
        for i in range(self.n_rows):
            lo, hi = self.row_offsets[i], self.row_offsets[i + 1]
            out[i, self.col_indices[lo:hi]] = self.values[lo:hi]
        return out

    def to_scipy(self) -> sp.csr_matrix:
        return sp.csr_matrix(
            (self.values, self.col_indices, self.row_offsets),
            shape=(self.n_rows, self.n_cols),
        )

    def row(self, i: int) -> tuple[np.ndarray, np.ndarray]:
        """(columns, values) of row i."""
        lo, hi = self.row_offsets[i], self.row_offsets[i + 1]
        return self.col_indices[lo:hi], self.values[lo:hi]


def from_scipy(m: sp.spmatrix) -> CsrMatrix:
    csr = m.tocsr()
    csr.sort_indices()
    csr.eliminate_zeros()
    return CsrMatrix(
        n_rows=csr.shape[0],
        n_cols=csr.shape[1],
        row_offsets=np.asarray(csr.indptr, dtype=np.int64),
        col_indices=np.asarray(csr.indices, dtype=np.int64),
        values=np.asarray(csr.data, dtype=np.float64),
    )


def from_dense(a) -> CsrMatrix:
    return from_scipy(sp.csr_matrix(np.asarray(a, dtype=np.float64)))


def from_rows(rows: list[list[tuple[int, float]]], n_cols: int) -> CsrMatrix:
    """Build from per-row (column, value) pairs; pairs must be column-sorted."""
    offsets = np.zeros(len(rows) + 1, dtype=np.int64)
    cols: list[int] = []
    vals: list[float] = []
    for i, row in enumerate(rows):
        for c, v in row:
            if v != 0.0:
                cols.append(c)
                vals.append(v)
        offsets[i + 1] = len(vals)
    return CsrMatrix(
        n_rows=len(rows),
        n_cols=n_cols,
        row_offsets=offsets,
        col_indices=np.asarray(cols, dtype=np.int64),
        values=np.asarray(vals, dtype=np.float64),
    )
