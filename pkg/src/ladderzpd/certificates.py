"""Rank-one spanning certificates for Ker mu, their verification, and
the generic greedy search that finds them.

A certificate is a finite claim: this list of rank-one tensors spans the
kernel of mu on the named algebra.  Verification rebuilds everything
from the algebra descriptor and trusts nothing in the file: it checks
that every tensor's factors commute (so the tensor is in Ker mu, both
computation routes agreeing), that the tensor coordinate rows are
linearly independent, and that their count equals the independently
computed kernel dimension.  A certificate that passes proves the
algebra is zero product determined; a failed search proves nothing.
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .elim import IncrementalEchelon, kernel_of_rows
from .fields import Field, QQ
from .ladders import Ladder, ladder_space
from .matrices import SparseMatrix, mat_product
from .tensors import (MuMap, RankOneTensor, TensorSpace, build_mu, in_kernel,
                      tensor_coords)

PROVEN_ZPD = "proven-zpd"
FAILED_KERNEL_MEMBERSHIP = "failed-kernel-membership"
FAILED_SPAN = "failed-span"
COUNT_MISMATCH = "count-mismatch"

VERDICTS = (PROVEN_ZPD, FAILED_KERNEL_MEMBERSHIP, FAILED_SPAN, COUNT_MISMATCH)


class Certificate:
    """A labeled list of rank-one tensors claimed to span Ker mu.

    algebra: {"kind": "ladder-lie", "n": n, "steps": [(i,j), ...]}
             or {"kind": "gl-lie", "m": m}
    families: (label, expected count) pairs; counts must sum to the
    number of tensors.  kernel_dim is the writer's claim; verification
    recomputes it and never trusts this number.
    """

    __slots__ = ("algebra", "field", "kernel_dim", "families", "tensors")

    def __init__(self, algebra: dict, field: Field, kernel_dim: int,
                 families: Sequence[Tuple[str, int]],
                 tensors: Sequence[RankOneTensor]):
        families = [(str(label), int(count)) for label, count in families]
        tensors = list(tensors)
        total = sum(count for _, count in families)
        if total != len(tensors):
            raise ValueError(
                f"family counts sum to {total} but there are "
                f"{len(tensors)} tensors")
        self.algebra = dict(algebra)
        self.field = field
        self.kernel_dim = int(kernel_dim)
        self.families = families
        self.tensors = tensors

    def __eq__(self, other):
        if not isinstance(other, Certificate):
            return NotImplemented
        return (self.algebra == other.algebra and self.field == other.field
                and self.kernel_dim == other.kernel_dim
                and self.families == other.families
                and self.tensors == other.tensors)

    def __repr__(self):
        return (f"Certificate(algebra={self.algebra!r}, "
                f"kernel_dim={self.kernel_dim}, tensors={len(self.tensors)})")


class VerificationReport:
    """Outcome of verifying one certificate, all quantities recomputed."""

    __slots__ = ("kernel_dim", "tensor_count", "span_rank",
                 "first_noncommuting", "verdict")

    def __init__(self, kernel_dim: int, tensor_count: int, span_rank: int,
                 first_noncommuting: Optional[int], verdict: str):
        self.kernel_dim = kernel_dim
        self.tensor_count = tensor_count
        self.span_rank = span_rank
        self.first_noncommuting = first_noncommuting
        self.verdict = verdict

    @property
    def proven(self) -> bool:
        return self.verdict == PROVEN_ZPD

    def summary(self) -> str:
        line = (f"{self.tensor_count} tensors, span rank {self.span_rank}, "
                f"kernel dim {self.kernel_dim}: {self.verdict}")
        if self.first_noncommuting is not None:
            line += f" (first non-commuting tensor at index {self.first_noncommuting})"
        return line

    def __repr__(self):
        return f"VerificationReport({self.summary()})"


def ladder_algebra_descriptor(ladder: Ladder) -> dict:
    return {"kind": "ladder-lie", "n": ladder.n,
            "steps": [list(s) for s in ladder.steps]}


def gl_algebra_descriptor(m: int) -> dict:
    return {"kind": "gl-lie", "m": m}


def algebra_space(descriptor: dict, field: Field) -> TensorSpace:
    """Reconstruct the tensor square named by an algebra descriptor."""
    kind = descriptor.get("kind")
    if kind == "ladder-lie":
        ladder = Ladder(descriptor["n"],
                        [tuple(s) for s in descriptor["steps"]])
        return TensorSpace.from_ladder(ladder_space(ladder), field)
    if kind == "gl-lie":
        return TensorSpace.gl(descriptor["m"], field)
    raise ValueError(f"unknown algebra descriptor kind: {kind!r}")


def verify_certificate(cert: Certificate) -> VerificationReport:
    """Rebuild mu from the descriptor and check the certificate against it.

    Checks, in order of the verdict they produce:
      - every tensor is in Ker mu (factors commute; the direct product
        and the mu-coordinate routes are both computed and must agree);
      - the tensor rows span the whole kernel (rank = dim Ker mu);
      - the tensors are independent (count = rank), so the list is a
        basis, not a multiset.
    All three hold iff the verdict is proven-zpd.
    """
    space = algebra_space(cert.algebra, cert.field)
    mu = build_mu(space, "lie")
    kdim = mu.kernel_dim
    first_bad: Optional[int] = None
    ech = IncrementalEchelon(space.field)
    for idx, t in enumerate(cert.tensors):
        if not in_kernel(t, mu) and first_bad is None:
            first_bad = idx
        ech.insert(tensor_coords(t, space))
    span_rank = ech.rank
    count = len(cert.tensors)
    if first_bad is not None:
        verdict = FAILED_KERNEL_MEMBERSHIP
    elif span_rank < kdim:
        verdict = FAILED_SPAN
    elif count != span_rank:
        verdict = COUNT_MISMATCH
    else:
        verdict = PROVEN_ZPD
    return VerificationReport(kdim, count, span_rank, first_bad, verdict)


def centralizer(u: SparseMatrix, space: TensorSpace) -> List[SparseMatrix]:
    """Basis of {v in the algebra : [u, v] = 0}.

    The map v -> [u, v] is restricted to the algebra and its exact null
    space computed; basis vectors come out in free-variable order, each
    normalized with a 1 at its free coordinate.
    """
    space.coords_of(u)
    zero = space.field.zero
    d = space.d
    rows = []
    for k in range(space.d):
        img = space.coords_of(mat_product(u, space.basis_matrix(k), "lie"))
        dense = [zero] * d
        for a, c in img.items():
            dense[a] = c
        rows.append(dense)
    return [space.from_coords({k: c for k, c in enumerate(vec) if c})
            for vec in kernel_of_rows(rows, d, space.field)]


def candidate_pool(space: TensorSpace) -> Iterator[SparseMatrix]:
    """Deterministic first factors for the greedy search.

    In order: the basis elements; two-term sums and differences
    b_s + b_t / b_s - b_t in lexicographic (s, t, sign) order; directed
    three-cycle sums e_{i,j} + e_{j,k} + e_{k,i} for i < j < k (both
    orientations) whenever all three positions are present; and finally
    the diagonal unit of the position set when it is nonzero.

    The cycle candidates are what reach the antisymmetric part of the
    kernel: combinations such as e_{1,2} (x) e_{2,1} - e_{1,3} (x)
    e_{3,1} + e_{2,3} (x) e_{3,2} lie in Ker mu but cannot be written
    with factors supported on fewer than three positions (any commuting
    pair inside span{e_{i,j}, e_{j,i}} has proportional factors, which
    only yields the symmetric cross terms), so a pool of one- and
    two-term factors stalls strictly below the kernel dimension on gl_m
    for m >= 3.
    """
    basis = space.basis_matrices()
    yield from basis
    for s in range(space.d):
        for t in range(s + 1, space.d):
            yield basis[s] + basis[t]
            yield basis[s] - basis[t]
    present = set(space.positions)
    indices = sorted({i for i, _ in space.positions}
                     | {j for _, j in space.positions})
    field = space.field
    for a in range(len(indices)):
        for b in range(a + 1, len(indices)):
            for c in range(b + 1, len(indices)):
                i, j, k = indices[a], indices[b], indices[c]
                for cycle in (((i, j), (j, k), (k, i)),
                              ((i, k), (k, j), (j, i))):
                    if all(pos in present for pos in cycle):
                        yield SparseMatrix(
                            space.n, field,
                            {pos: field.one for pos in cycle})
    ident = space.diagonal_unit()
    if not ident.is_zero():
        yield ident


def default_budget(space: TensorSpace) -> int:
    return 50 * space.d * space.d


def search_spanning(space: TensorSpace, mu: MuMap, descriptor: dict,
                    budget: Optional[int] = None,
                    label: str = "gl") -> Optional[Certificate]:
    """Greedy deterministic search for a rank-one spanning set of Ker mu.

    Iterates first factors u over candidate_pool; for each u every
    member v of its centralizer basis gives a candidate tensor u (x) v,
    kept iff it strictly increases the rank of the accumulated rows.
    Returns a certificate as soon as the rank reaches dim Ker mu, or
    None when the pool or the candidate budget runs out first.  The
    budget counts candidate tensors tried.
    """
    if budget is None:
        budget = default_budget(space)
    target = mu.kernel_dim
    ech = IncrementalEchelon(space.field)
    chosen: List[RankOneTensor] = []
    tried = 0
    for u in candidate_pool(space):
        for v in centralizer(u, space):
            if tried >= budget:
                return None
            tried += 1
            t = RankOneTensor(u, v, label)
            if ech.insert(tensor_coords(t, space)):
                chosen.append(t)
                if ech.rank == target:
                    return Certificate(descriptor, space.field, target,
                                       [(label, len(chosen))], chosen)
    return None


def abelian_certificate(space: TensorSpace, descriptor: dict) -> Certificate:
    """The trivial certificate for an algebra with zero product: all d^2
    elementary tensors b_s (x) b_t.  Requires mu to vanish identically."""
    mu = build_mu(space, "lie")
    if any(col for col in mu.columns):
        raise ValueError("mu is not identically zero on this algebra")
    d = space.d
    tensors = [RankOneTensor(space.basis_matrix(s), space.basis_matrix(t),
                             "abelian")
               for s in range(d) for t in range(d)]
    return Certificate(descriptor, space.field, d * d,
                       [("abelian", d * d)], tensors)


_GL_CACHE: Dict[Tuple[int, Field, int], Certificate] = {}


def gl_certificate(m: int, field: Field = QQ,
                   budget: Optional[int] = None) -> Optional[Certificate]:
    """Searched-and-verified certificate for gl_m under the bracket.

    Results are memoized per (m, field, effective budget); the same
    certificate object is returned on repeat calls, which the block
    construction relies on to avoid re-searching identical gl blocks.
    """
    space = TensorSpace.gl(m, field)
    if budget is None:
        budget = default_budget(space)
    key = (m, field, budget)
    if key not in _GL_CACHE:
        mu = build_mu(space, "lie")
        cert = search_spanning(space, mu, gl_algebra_descriptor(m),
                               budget=budget, label="gl")
        if cert is None:
            return None
        _GL_CACHE[key] = cert
    return _GL_CACHE[key]
