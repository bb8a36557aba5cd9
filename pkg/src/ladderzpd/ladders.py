"""Ladders, ladder matrix spaces, upper-triangularity, and closure.

A ladder is a set of steps (i_t, j_t) with strictly increasing rows and
strictly increasing columns.  Each step contributes every position with
row <= i_t and column >= j_t; the ladder matrix space M_L is the span of
the elementary matrices at the union of those positions.  A ladder is
upper triangular when consecutive steps satisfy i_t < j_{t+1}; these are
exactly the ladders whose space is closed under matrix multiplication,
and closure under the bracket follows.  One-step ladders with i1 >= j1
carry the block profile (n1, n2, n3) = (j1 - 1, i1 - j1 + 1, n - i1)
that drives the certificate construction; i1 < j1 gives an abelian
space.
"""

from __future__ import annotations

from itertools import combinations
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .fields import Field, QQ
from .matrices import Position, SparseMatrix, elementary, mat_product


class Ladder:
    """A step set {(i_t, j_t)}, strictly increasing in both coordinates."""

    __slots__ = ("n", "steps")

    def __init__(self, n: int, steps: Sequence[Tuple[int, int]]):
        if n < 1:
            raise ValueError(f"ambient size must be positive, got {n}")
        ordered = tuple(sorted((int(i), int(j)) for i, j in steps))
        if not ordered:
            raise ValueError("a ladder needs at least one step")
        for i, j in ordered:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"step ({i},{j}) out of range for n={n}")
        for (i1, j1), (i2, j2) in zip(ordered, ordered[1:]):
            if not (i1 < i2 and j1 < j2):
                raise ValueError(
                    f"steps must increase strictly in both coordinates: "
                    f"({i1},{j1}) then ({i2},{j2})")
        self.n = n
        self.steps = ordered

    def __eq__(self, other):
        if not isinstance(other, Ladder):
            return NotImplemented
        return self.n == other.n and self.steps == other.steps

    def __hash__(self):
        return hash((self.n, self.steps))

    def __repr__(self):
        return f"Ladder(n={self.n}, steps={list(self.steps)})"


def is_upper_triangular(ladder: Ladder) -> bool:
    """True iff i_t < j_{t+1} for consecutive steps (vacuous for one step)."""
    return all(ladder.steps[t][0] < ladder.steps[t + 1][1]
               for t in range(len(ladder.steps) - 1))


class LadderSpace:
    """The span of elementary matrices at a ladder's position set.

    Positions: (i, j) is allowed iff some step (i_t, j_t) has i <= i_t
    and j_t <= j <= n.  The basis is ordered row-major over the position
    set, fixing coordinates shared by every other module.
    """

    __slots__ = ("ladder", "n", "positions", "index_of")

    def __init__(self, ladder: Ladder):
        self.ladder = ladder
        self.n = ladder.n
        allowed = set()
        for i_t, j_t in ladder.steps:
            for i in range(1, i_t + 1):
                for j in range(j_t, ladder.n + 1):
                    allowed.add((i, j))
        self.positions: Tuple[Position, ...] = tuple(sorted(allowed))
        self.index_of = {pos: k for k, pos in enumerate(self.positions)}

    @property
    def dim(self) -> int:
        return len(self.positions)

    def basis_matrices(self, field: Field = QQ) -> List[SparseMatrix]:
        return [elementary(self.n, i, j, field) for i, j in self.positions]

    def __repr__(self):
        return f"LadderSpace({self.ladder!r}, dim={self.dim})"


def ladder_space(ladder: Ladder) -> LadderSpace:
    return LadderSpace(ladder)


def is_closed(space: LadderSpace, kind: str, field: Field = QQ) -> bool:
    """True iff every product of two basis elements stays in the space."""
    allowed = set(space.positions)
    basis = space.basis_matrices(field)
    for x in basis:
        for y in basis:
            prod = mat_product(x, y, kind)
            if any(pos not in allowed for pos in prod.entries):
                return False
    return True


def partition_to_ladder(partition: Sequence[int]) -> Ladder:
    """The upper triangular ladder whose space is the block upper
    triangular algebra of the partition.

    Step t sits at (sum of the first t parts, 1 + sum of the first t-1
    parts).
    """
    parts = list(partition)
    if not parts:
        raise ValueError("empty partition")
    if any(p < 1 for p in parts):
        raise ValueError(f"nonpositive part in partition {parts}")
    n = sum(parts)
    steps = []
    running = 0
    for p in parts:
        steps.append((running + p, running + 1))
        running += p
    return Ladder(n, steps)


def enumerate_ladders(n: int, k: int) -> List[Ladder]:
    """All C(n,k)^2 k-step ladders on n, ordered lexicographically by
    (row tuple, column tuple)."""
    if not (1 <= k <= n):
        raise ValueError(f"step count {k} out of range for n={n}")
    out = []
    for rows in combinations(range(1, n + 1), k):
        for cols in combinations(range(1, n + 1), k):
            out.append(Ladder(n, list(zip(rows, cols))))
    return out


class BlockProfile(NamedTuple):
    """Block sizes of a non-abelian one-step ladder; n1 + n2 + n3 = n."""
    n1: int
    n2: int
    n3: int

    @property
    def n(self) -> int:
        return self.n1 + self.n2 + self.n3


def block_profile(ladder: Ladder) -> Optional[BlockProfile]:
    """Block sizes (n1, n2, n3) of a one-step ladder, or None when it is
    abelian (i1 < j1, every product of basis elements vanishes)."""
    if len(ladder.steps) != 1:
        raise ValueError("block profiles are defined for one-step ladders only")
    (i1, j1), = ladder.steps
    if i1 < j1:
        return None
    return BlockProfile(j1 - 1, i1 - j1 + 1, ladder.n - i1)
