"""The tensor square of a matrix algebra and the multiplication map mu.

An algebra here is a span of elementary matrices at a fixed position
set, with the basis ordered row-major.  The tensor square gets the
ordered basis b_s (x) b_t indexed by the global column rule
column(s, t) = s*d + t with s, t 0-based; certificates depend on this
rule, so it is fixed here and nowhere else.  mu sends a tensor to the
product of its factors, extended linearly; its kernel dimension is the
quantity every certificate is measured against.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .elim import IncrementalEchelon, kernel_of_rows
from .fields import Field, QQ, Scalar
from .ladders import LadderSpace
from .matrices import (Position, PRODUCT_KINDS, SparseMatrix, diagonal_unit,
                       elementary, mat_product)


class MembershipError(ValueError):
    """A matrix was used where a member of the spanned subspace is required."""


class ClosureError(ValueError):
    """A product of basis elements escaped the subspace."""


class TensorSpace:
    """Tensor square of the span of elementary matrices at given positions.

    The algebra basis is e_{i,j} for (i, j) in the sorted position set;
    coordinates of members are read off entry-by-entry.
    """

    __slots__ = ("n", "field", "positions", "index_of", "d")

    def __init__(self, n: int, positions: Sequence[Position],
                 field: Field = QQ):
        pos = tuple(sorted(set((int(i), int(j)) for i, j in positions)))
        for i, j in pos:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"position ({i},{j}) out of range for n={n}")
        if not pos:
            raise ValueError("empty position set spans no algebra")
        self.n = n
        self.field = field
        self.positions = pos
        self.index_of = {p: k for k, p in enumerate(pos)}
        self.d = len(pos)

    @classmethod
    def from_ladder(cls, space: LadderSpace, field: Field = QQ) -> "TensorSpace":
        return cls(space.n, space.positions, field)

    @classmethod
    def gl(cls, m: int, field: Field = QQ) -> "TensorSpace":
        if m < 1:
            raise ValueError(f"gl size must be positive, got {m}")
        return cls(m, [(i, j) for i in range(1, m + 1)
                       for j in range(1, m + 1)], field)

    def basis_matrix(self, k: int) -> SparseMatrix:
        i, j = self.positions[k]
        return elementary(self.n, i, j, self.field)

    def basis_matrices(self) -> List[SparseMatrix]:
        return [self.basis_matrix(k) for k in range(self.d)]

    def diagonal_unit(self) -> SparseMatrix:
        """Sum of e_{i,i} over diagonal positions of the set (may be zero)."""
        return diagonal_unit(self.n, self.positions, self.field)

    def contains(self, mat: SparseMatrix) -> bool:
        return all(pos in self.index_of for pos in mat.entries)

    def coords_of(self, mat: SparseMatrix) -> Dict[int, Scalar]:
        """Sparse coordinates of a member against the elementary basis."""
        if mat.n != self.n or mat.field != self.field:
            raise MembershipError(
                f"matrix over n={mat.n}, {mat.field!r} does not live in "
                f"this space (n={self.n}, {self.field!r})")
        coords: Dict[int, Scalar] = {}
        for pos, c in mat.entries.items():
            k = self.index_of.get(pos)
            if k is None:
                raise MembershipError(
                    f"support at {pos} is outside the position set")
            coords[k] = c
        return coords

    def from_coords(self, coords: Dict[int, Scalar]) -> SparseMatrix:
        entries = {self.positions[k]: c for k, c in coords.items() if c}
        return SparseMatrix(self.n, self.field, entries)

    def column_index(self, s: int, t: int) -> int:
        """Column of the basis tensor b_s (x) b_t: s*d + t, 0-based."""
        return s * self.d + t

    def rank_one(self, u: SparseMatrix, v: SparseMatrix,
                 label: str) -> "RankOneTensor":
        """Validated constructor: both factors in the span, neither zero."""
        if u.is_zero() or v.is_zero():
            raise ValueError("rank-one tensor factors must be nonzero")
        self.coords_of(u)
        self.coords_of(v)
        return RankOneTensor(u, v, label)

    def __eq__(self, other):
        if not isinstance(other, TensorSpace):
            return NotImplemented
        return (self.n == other.n and self.field == other.field
                and self.positions == other.positions)

    def __hash__(self):
        return hash((self.n, self.field, self.positions))

    def __repr__(self):
        return f"TensorSpace(n={self.n}, d={self.d}, field={self.field!r})"


class RankOneTensor:
    """u (x) v with a family tag; factors are matrices in a common algebra."""

    __slots__ = ("u", "v", "label")

    def __init__(self, u: SparseMatrix, v: SparseMatrix, label: str):
        self.u = u
        self.v = v
        self.label = label

    def swapped(self, label: Optional[str] = None) -> "RankOneTensor":
        return RankOneTensor(self.v, self.u, label or self.label)

    def __eq__(self, other):
        if not isinstance(other, RankOneTensor):
            return NotImplemented
        return (self.u, self.v, self.label) == (other.u, other.v, other.label)

    def __hash__(self):
        return hash((self.u, self.v, self.label))

    def __repr__(self):
        return f"RankOneTensor({self.u!r}, {self.v!r}, label={self.label!r})"


def tensor_coords(t: RankOneTensor, space: TensorSpace) -> Dict[int, Scalar]:
    """Sparse coordinates of u (x) v in the tensor-square basis: the
    outer product of the factor coordinate vectors, entry (s, t) at
    column s*d + t."""
    ucoords = space.coords_of(t.u)
    vcoords = space.coords_of(t.v)
    d = space.d
    return {s * d + tt: us * vt
            for s, us in ucoords.items() for tt, vt in vcoords.items()}


class MuMap:
    """The multiplication map on the tensor square, as an explicit matrix.

    Column s*d + t holds the coordinates of the product of b_s and b_t
    in the algebra basis.  Rank (hence kernel dimension) is computed on
    demand by sparse elimination and cached; the explicit kernel basis
    is assembled only when asked for.
    """

    __slots__ = ("space", "kind", "columns", "_rank", "_kernel")

    def __init__(self, space: TensorSpace, kind: str,
                 columns: List[Dict[int, Scalar]]):
        self.space = space
        self.kind = kind
        self.columns = columns
        self._rank: Optional[int] = None
        self._kernel: Optional[List[List[Scalar]]] = None

    @property
    def domain_dim(self) -> int:
        return self.space.d * self.space.d

    @property
    def rank(self) -> int:
        if self._rank is None:
            ech = IncrementalEchelon(self.space.field)
            for col in self.columns:
                if col:
                    ech.insert(col)
            self._rank = ech.rank
        return self._rank

    @property
    def kernel_dim(self) -> int:
        return self.domain_dim - self.rank

    def apply_to_coords(self, tcoords: Dict[int, Scalar]) -> Dict[int, Scalar]:
        """Image of a tensor (given in sparse tensor coordinates) in the
        algebra basis."""
        acc: Dict[int, Scalar] = {}
        for col, c in tcoords.items():
            for k, v in self.columns[col].items():
                s = acc.get(k)
                t = c * v if s is None else s + c * v
                if t:
                    acc[k] = t
                elif s is not None:
                    del acc[k]
        return acc

    def kernel_basis(self) -> List[List[Scalar]]:
        """Dense null space basis, deterministic free-variable order.

        Quadratic in the domain dimension; intended for small algebras.
        """
        if self._kernel is None:
            zero = self.space.field.zero
            dd = self.domain_dim
            ad = self.space.d
            rows = []
            for col in self.columns:
                dense = [zero] * ad
                for k, v in col.items():
                    dense[k] = v
                rows.append(dense)
            self._kernel = kernel_of_rows(rows, dd, self.space.field)
        return self._kernel


def build_mu(space: TensorSpace, kind: str = "lie") -> MuMap:
    """Assemble mu for the given product, verifying closure on the way:
    every product of two basis elements must stay in the span."""
    if kind not in PRODUCT_KINDS:
        raise ValueError(f"unknown product kind: {kind!r}")
    basis = space.basis_matrices()
    columns: List[Dict[int, Scalar]] = []
    for s in range(space.d):
        for t in range(space.d):
            prod = mat_product(basis[s], basis[t], kind)
            try:
                columns.append(space.coords_of(prod))
            except MembershipError as exc:
                bs, bt = space.positions[s], space.positions[t]
                raise ClosureError(
                    f"product of basis elements e_{bs} and e_{bt} leaves "
                    f"the span: {exc}") from None
    return MuMap(space, kind, columns)


def in_kernel(t: RankOneTensor, mu: MuMap) -> bool:
    """True iff mu kills the tensor.

    Computed twice: directly as the product of the factors, and through
    the coordinate matrix of mu.  The two routes must agree exactly.
    """
    direct = mat_product(t.u, t.v, mu.kind).is_zero()
    via_mu = not mu.apply_to_coords(tensor_coords(t, mu.space))
    if direct != via_mu:
        raise AssertionError(
            "mu routes disagree: direct product and coordinate image "
            f"differ for {t!r}")
    return direct
