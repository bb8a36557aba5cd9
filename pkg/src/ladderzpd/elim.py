"""Exact Gaussian elimination: rank, echelon forms, null spaces.

Two complementary representations are used.  Dense rows (plain lists of
scalars) feed the reduced-row-echelon routine used for small systems
such as centralizer computations and explicit kernel bases.  Sparse rows
(column -> scalar dicts) feed an incremental echelon accumulator used
where the column count is large but rows are mostly empty: tensor
coordinate rows and the mu matrix.  Both are deterministic: pivoting is
always first nonzero row/column, pivots normalized to 1.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from .fields import Field, Scalar


def rref(rows: Sequence[Sequence[Scalar]], field: Field
         ) -> Tuple[List[List[Scalar]], List[int]]:
    """Reduced row echelon form and 0-based pivot columns.

    First-nonzero pivoting with immediate normalization; input rows are
    not modified.  Ragged rows are rejected.
    """
    work = [list(r) for r in rows]
    if work:
        ncols = len(work[0])
        if any(len(r) != ncols for r in work):
            raise ValueError("ragged rows")
    else:
        ncols = 0
    zero = field.zero
    pivots: List[int] = []
    pr = 0
    for col in range(ncols):
        src = next((r for r in range(pr, len(work)) if work[r][col]), None)
        if src is None:
            continue
        work[pr], work[src] = work[src], work[pr]
        inv = field.one / work[pr][col]
        if inv != field.one:
            work[pr] = [inv * x for x in work[pr]]
        for r in range(len(work)):
            if r != pr and work[r][col]:
                c = work[r][col]
                row, prow = work[r], work[pr]
                work[r] = [a - c * b for a, b in zip(row, prow)]
        pivots.append(col)
        pr += 1
        if pr == len(work):
            break
    # echelon: pivot rows first, then explicit zero rows
    for r in range(pr, len(work)):
        work[r] = [zero] * ncols
    return work, pivots


def rank_of_rows(rows: Sequence[Sequence[Scalar]], field: Field) -> int:
    return len(rref(rows, field)[1])


class RowSpace:
    """A list of equal-length dense rows with cached echelon data."""

    def __init__(self, rows: Sequence[Sequence[Scalar]], field: Field):
        self.rows = [list(r) for r in rows]
        self.field = field
        if self.rows:
            ncols = len(self.rows[0])
            if any(len(r) != ncols for r in self.rows):
                raise ValueError("ragged rows")
            self.ncols = ncols
        else:
            self.ncols = 0
        self._echelon: List[List[Scalar]] | None = None
        self._pivots: List[int] | None = None

    def _eliminate(self) -> None:
        if self._echelon is None:
            self._echelon, self._pivots = rref(self.rows, self.field)

    @property
    def echelon(self) -> List[List[Scalar]]:
        self._eliminate()
        return self._echelon

    @property
    def pivots(self) -> List[int]:
        self._eliminate()
        return self._pivots

    @property
    def rank(self) -> int:
        return len(self.pivots)


def kernel_of_rows(map_rows: Sequence[Sequence[Scalar]], domain_dim: int,
                   field: Field) -> List[List[Scalar]]:
    """Null space basis of the linear map whose r-th row is the image of
    the r-th domain basis vector.

    The kernel consists of the coefficient vectors c with
    sum_r c_r * row_r = 0, i.e. the null space of the transposed matrix.
    Returns domain_dim - rank vectors, one per free column in ascending
    order, each carrying a 1 at its free coordinate.
    """
    if len(map_rows) != domain_dim:
        raise ValueError(
            f"expected {domain_dim} rows (one per domain basis vector), "
            f"got {len(map_rows)}")
    zero, one = field.zero, field.one
    if domain_dim == 0:
        return []
    codim = len(map_rows[0])
    if any(len(r) != codim for r in map_rows):
        raise ValueError("ragged rows")
    transposed = [[map_rows[r][c] for r in range(domain_dim)]
                  for c in range(codim)]
    reduced, pivots = rref(transposed, field)
    pivot_set = set(pivots)
    basis: List[List[Scalar]] = []
    for free in range(domain_dim):
        if free in pivot_set:
            continue
        vec = [zero] * domain_dim
        vec[free] = one
        for prow, pcol in enumerate(pivots):
            c = reduced[prow][free]
            if c:
                vec[pcol] = -c
        basis.append(vec)
    return basis


SparseRow = Dict[int, Scalar]


class IncrementalEchelon:
    """Row echelon form maintained under one-row-at-a-time insertion.

    Rows are sparse column -> scalar maps over a fixed (implicit) column
    range.  Each stored pivot row is normalized so its leading entry is
    1; insertion reduces the candidate's leading column against stored
    pivots until it either vanishes (dependent) or lands on a fresh
    column (rank grows by one).  This is plain echelon, not reduced
    echelon: stored rows may have entries at other pivot columns, which
    is harmless for rank tracking and keeps fill-in down.
    """

    def __init__(self, field: Field):
        self.field = field
        self.pivot_rows: Dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def insert(self, row: SparseRow) -> bool:
        """Reduce a copy of row against the accumulated rows; keep it if
        independent.  Returns True when the rank increased."""
        work = {c: v for c, v in row.items() if v}
        while work:
            lead = min(work)
            prow = self.pivot_rows.get(lead)
            if prow is None:
                coeff = work[lead]
                inv = self.field.one / coeff
                if inv != self.field.one:
                    work = {c: inv * v for c, v in work.items()}
                self.pivot_rows[lead] = work
                return True
            factor = work[lead]
            for c, v in prow.items():
                s = work.get(c)
                t = -factor * v if s is None else s - factor * v
                if t:
                    work[c] = t
                elif s is not None:
                    del work[c]
        return False

    def reduces_to_zero(self, row: SparseRow) -> bool:
        """True when row is already in the accumulated row space.

        Read-only companion to insert: performs the same reduction on a
        copy and reports whether anything is left.
        """
        work = {c: v for c, v in row.items() if v}
        while work:
            lead = min(work)
            prow = self.pivot_rows.get(lead)
            if prow is None:
                return False
            factor = work[lead]
            for c, v in prow.items():
                s = work.get(c)
                t = -factor * v if s is None else s - factor * v
                if t:
                    work[c] = t
                elif s is not None:
                    del work[c]
        return True
