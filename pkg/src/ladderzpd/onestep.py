"""Certificate construction for one-step ladder matrix Lie algebras.

A non-abelian one-step ladder (i1 >= j1) splits into four blocks sized
by (n1, n2, n3) = (j1 - 1, i1 - j1 + 1, n - i1):

    h: rows and cols (n1, n1+n2]      the middle square, a full gl_{n2}
    l: rows (0, n1], cols (n1, n1+n2]
    r: rows (n1, n1+n2], cols (n1+n2, n]
    a: rows (0, n1], cols (n1+n2, n]

The bracket obeys [h,h] in h, [h,l] in l, [h,r] in r, [l,r] in a, and
kills every other block pairing.  Ker mu then has a dimension given by
a closed-form polynomial in (n1, n2, n3), and is spanned by rank-one
tensors drawn from: the nine zero-bracket block pairings, a searched
certificate for the gl block, and the explicit two- and three-block
families built here (T/S/R between h and r, their mirrors between h and
l, and U/V/W between l and r).  Assembly concatenates them all and the
result is checked by the generic certificate verifier, never trusted.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .certificates import (Certificate, abelian_certificate, gl_certificate,
                           ladder_algebra_descriptor)
from .fields import Field, QQ
from .ladders import BlockProfile, Ladder, block_profile, ladder_space
from .matrices import Position, SparseMatrix, elementary, mat_product
from .tensors import RankOneTensor, TensorSpace

FAMILY_ORDER = (
    "pair-h-a", "pair-l-a", "pair-r-a", "pair-a-a", "pair-l-l", "pair-r-r",
    "gl-h",
    "T", "S", "R",
    "T-mirror", "S-mirror", "R-mirror",
    "U", "V", "W",
)


class SearchExhaustedError(RuntimeError):
    """The gl block search ran out of budget; the certificate cannot be
    assembled (this is surfaced, never silently skipped)."""


def kernel_dim_polynomial(p: BlockProfile) -> int:
    """Dimension of Ker mu for the profile, as the closed-form
    polynomial in (n1, n2, n3); equals d^2 - d + 1 for
    d = (n1+n2)(n2+n3)."""
    n1, n2, n3 = p
    return (n1**2 * n2**2 + 2 * n1**2 * n2 * n3 + n1**2 * n3**2
            + 2 * n1 * n2**3 + 4 * n1 * n2**2 * n3 + 2 * n1 * n2 * n3**2
            - n1 * n2 - n1 * n3
            + n2**4 + 2 * n2**3 * n3 + n2**2 * n3**2
            - n2**2 - n2 * n3 + 1)


def _mid_range(p: BlockProfile) -> range:
    return range(p.n1 + 1, p.n1 + p.n2 + 1)


def _top_range(p: BlockProfile) -> range:
    return range(1, p.n1 + 1)


def _right_range(p: BlockProfile) -> range:
    return range(p.n1 + p.n2 + 1, p.n + 1)


def block_positions(p: BlockProfile) -> Dict[str, List[Position]]:
    """The four disjoint position blocks, row-major within each block."""
    top, mid, right = _top_range(p), _mid_range(p), _right_range(p)
    return {
        "h": [(i, j) for i in mid for j in mid],
        "l": [(i, j) for i in top for j in mid],
        "r": [(i, j) for i in mid for j in right],
        "a": [(i, j) for i in top for j in right],
    }


# bracket containment: ordered block pair -> block the result must lie
# in (pairs absent from the map must bracket to zero)
_BRACKET_TARGET = {
    ("h", "h"): "h",
    ("h", "l"): "l", ("l", "h"): "l",
    ("h", "r"): "r", ("r", "h"): "r",
    ("l", "r"): "a", ("r", "l"): "a",
}


def multiplication_table_check(p: BlockProfile, space,
                               field: Field = QQ) -> bool:
    """Brute-force check of the block containment table against every
    elementary pair, plus the block partition itself: the four blocks
    must be disjoint and cover the ladder position set exactly."""
    blocks = block_positions(p)
    union: set = set()
    total = 0
    for posns in blocks.values():
        union.update(posns)
        total += len(posns)
    if total != len(union) or union != set(space.positions):
        return False
    n = p.n
    for name1, pos1 in blocks.items():
        for name2, pos2 in blocks.items():
            target = _BRACKET_TARGET.get((name1, name2))
            allowed = set(blocks[target]) if target is not None else set()
            for i, j in pos1:
                e1 = elementary(n, i, j, field)
                for k, l in pos2:
                    prod = mat_product(e1, elementary(n, k, l, field), "lie")
                    if any(pos not in allowed for pos in prod.entries):
                        return False
    return True


def pairing_families(p: BlockProfile, field: Field = QQ) -> List[RankOneTensor]:
    """All elementary tensors for the nine zero-bracket block pairings.

    Labels cover both directions: pair-h-a holds h (x) a followed by
    a (x) h, and likewise for pair-l-a and pair-r-a; the same-block
    pairings a-a, l-l, r-r already contain every ordered pair once.
    """
    blocks = block_positions(p)
    n = p.n

    def elem(pos: Position) -> SparseMatrix:
        return elementary(n, pos[0], pos[1], field)

    out: List[RankOneTensor] = []
    for label, b1, b2 in (("pair-h-a", "h", "a"), ("pair-l-a", "l", "a"),
                          ("pair-r-a", "r", "a")):
        for pos1 in blocks[b1]:
            for pos2 in blocks[b2]:
                out.append(RankOneTensor(elem(pos1), elem(pos2), label))
        for pos2 in blocks[b2]:
            for pos1 in blocks[b1]:
                out.append(RankOneTensor(elem(pos2), elem(pos1), label))
    for label, b in (("pair-a-a", "a"), ("pair-l-l", "l"), ("pair-r-r", "r")):
        for pos1 in blocks[b]:
            for pos2 in blocks[b]:
                out.append(RankOneTensor(elem(pos1), elem(pos2), label))
    return out


def families_h_r(p: BlockProfile, field: Field = QQ) -> List[RankOneTensor]:
    """The T, S, R families between the gl block and the right block.

    T: e_{i,j} (x) e_{l,q} and its swap, i,j,l in the middle range with
    j != l, q in the right range.  S: (e_{i,j} - e_{i,j+1}) (x)
    (e_{j,q} + e_{j+1,q}) and its swap, j below the top of the middle
    range.  R: (e_{i,i} + e_{i,q}) (x) itself.
    """
    n = p.n
    mid, right = _mid_range(p), _right_range(p)
    out: List[RankOneTensor] = []
    for i in mid:
        for j in mid:
            for l in mid:
                if j == l:
                    continue
                for q in right:
                    x = elementary(n, i, j, field)
                    y = elementary(n, l, q, field)
                    out.append(RankOneTensor(x, y, "T"))
                    out.append(RankOneTensor(y, x, "T"))
    for i in mid:
        for j in range(p.n1 + 1, p.n1 + p.n2):
            for q in right:
                x = elementary(n, i, j, field) - elementary(n, i, j + 1, field)
                y = elementary(n, j, q, field) + elementary(n, j + 1, q, field)
                out.append(RankOneTensor(x, y, "S"))
                out.append(RankOneTensor(y, x, "S"))
    for i in mid:
        for q in right:
            x = elementary(n, i, i, field) + elementary(n, i, q, field)
            out.append(RankOneTensor(x, x, "R"))
    return out


def families_h_l(p: BlockProfile, field: Field = QQ) -> List[RankOneTensor]:
    """The mirror families between the gl block and the left block.

    T-mirror: e_{j,k} (x) e_{p,i} and its swap, row p in the top range,
    i,j,k in the middle range with i != j (the bracket is
    -delta_{i,j} e_{p,k}, so it vanishes exactly when i != j).
    S-mirror: (e_{p,j} + e_{p,j+1}) (x) (e_{j,k} - e_{j+1,k}) and its
    swap.  R-mirror: (e_{p,i} + e_{i,i}) (x) itself.
    """
    n = p.n
    top, mid = _top_range(p), _mid_range(p)
    out: List[RankOneTensor] = []
    for prow in top:
        for i in mid:
            for j in mid:
                if i == j:
                    continue
                for k in mid:
                    x = elementary(n, j, k, field)
                    y = elementary(n, prow, i, field)
                    out.append(RankOneTensor(x, y, "T-mirror"))
                    out.append(RankOneTensor(y, x, "T-mirror"))
    for prow in top:
        for j in range(p.n1 + 1, p.n1 + p.n2):
            for k in mid:
                x = elementary(n, prow, j, field) + elementary(n, prow, j + 1, field)
                y = elementary(n, j, k, field) - elementary(n, j + 1, k, field)
                out.append(RankOneTensor(x, y, "S-mirror"))
                out.append(RankOneTensor(y, x, "S-mirror"))
    for prow in top:
        for i in mid:
            x = elementary(n, prow, i, field) + elementary(n, i, i, field)
            out.append(RankOneTensor(x, x, "R-mirror"))
    return out


def families_l_r(p: BlockProfile, field: Field = QQ) -> List[RankOneTensor]:
    """The U, V, W families between the left and right blocks.

    U: e_{i,j} (x) e_{l,q} and its swap, row i in the top range, j,l in
    the middle range with j != l, q in the right range.  V: like S with
    the first factor moved to the left block.  W: (e_{i,n1+n2} +
    e_{n1+n2,q}) (x) itself.
    """
    n = p.n
    top, mid, right = _top_range(p), _mid_range(p), _right_range(p)
    corner = p.n1 + p.n2
    out: List[RankOneTensor] = []
    for i in top:
        for j in mid:
            for l in mid:
                if j == l:
                    continue
                for q in right:
                    x = elementary(n, i, j, field)
                    y = elementary(n, l, q, field)
                    out.append(RankOneTensor(x, y, "U"))
                    out.append(RankOneTensor(y, x, "U"))
    for i in top:
        for j in range(p.n1 + 1, p.n1 + p.n2):
            for q in right:
                x = elementary(n, i, j, field) - elementary(n, i, j + 1, field)
                y = elementary(n, j, q, field) + elementary(n, j + 1, q, field)
                out.append(RankOneTensor(x, y, "V"))
                out.append(RankOneTensor(y, x, "V"))
    for i in top:
        for q in right:
            x = elementary(n, i, corner, field) + elementary(n, corner, q, field)
            out.append(RankOneTensor(x, x, "W"))
    return out


def gl_block_tensors(p: BlockProfile, field: Field = QQ,
                     budget: Optional[int] = None) -> List[RankOneTensor]:
    """Rank-one spanning tensors for the gl block: a searched
    certificate for gl_{n2}, translated into the middle index range."""
    cert = gl_certificate(p.n2, field, budget)
    if cert is None:
        raise SearchExhaustedError(
            f"search budget exhausted on the gl_{p.n2} block")
    n = p.n
    return [RankOneTensor(t.u.shifted(p.n1, n), t.v.shifted(p.n1, n), "gl-h")
            for t in cert.tensors]


def expected_counts(p: BlockProfile) -> List[Tuple[str, int]]:
    """Closed-form tensor count for every family, in assembly order;
    the counts sum to kernel_dim_polynomial(p)."""
    n1, n2, n3 = p
    return [
        ("pair-h-a", 2 * n1 * n2**2 * n3),
        ("pair-l-a", 2 * n1**2 * n2 * n3),
        ("pair-r-a", 2 * n1 * n2 * n3**2),
        ("pair-a-a", n1**2 * n3**2),
        ("pair-l-l", n1**2 * n2**2),
        ("pair-r-r", n2**2 * n3**2),
        ("gl-h", n2**4 - n2**2 + 1),
        ("T", 2 * n2**3 * n3 - 2 * n2**2 * n3),
        ("S", 2 * n2**2 * n3 - 2 * n2 * n3),
        ("R", n2 * n3),
        ("T-mirror", 2 * n1 * n2**3 - 2 * n1 * n2**2),
        ("S-mirror", 2 * n1 * n2**2 - 2 * n1 * n2),
        ("R-mirror", n1 * n2),
        ("U", 2 * n1 * n2**2 * n3 - 2 * n1 * n2 * n3),
        ("V", 2 * n1 * n2 * n3 - 2 * n1 * n3),
        ("W", n1 * n3),
    ]


def remainder_count(p: BlockProfile) -> int:
    """Tensors left to construct after the block pairings and the gl
    block: the explicit T/S/R, mirror, and U/V/W families combined."""
    n1, n2, n3 = p
    return (2 * n1 * n2**3 + 2 * n2**3 * n3 + 2 * n1 * n2**2 * n3
            - n1 * n2 - n1 * n3 - n2 * n3)


def assemble_one_step_certificate(n: int, i1: int, j1: int,
                                  field: Field = QQ,
                                  budget: Optional[int] = None) -> Certificate:
    """Build the full rank-one spanning certificate for the one-step
    ladder {(i1, j1)} on n.

    Abelian case (i1 < j1): the all-elementary-tensors certificate.
    Otherwise: block pairings, the searched gl block, and the explicit
    families, concatenated in a fixed order.  The claimed kernel
    dimension is the closed-form polynomial; verification recomputes it.
    """
    ladder = Ladder(n, [(i1, j1)])
    descriptor = ladder_algebra_descriptor(ladder)
    space = TensorSpace.from_ladder(ladder_space(ladder), field)
    profile = block_profile(ladder)
    if profile is None:
        return abelian_certificate(space, descriptor)

    tensors: List[RankOneTensor] = []
    tensors.extend(pairing_families(profile, field))
    tensors.extend(gl_block_tensors(profile, field, budget))
    tensors.extend(families_h_r(profile, field))
    tensors.extend(families_h_l(profile, field))
    tensors.extend(families_l_r(profile, field))

    kdim = kernel_dim_polynomial(profile)
    if len(tensors) != kdim:
        raise AssertionError(
            f"assembled {len(tensors)} tensors but the kernel dimension "
            f"polynomial gives {kdim} at {tuple(profile)}")
    counts: List[Tuple[str, int]] = []
    for label in FAMILY_ORDER:
        counts.append((label, sum(1 for t in tensors if t.label == label)))
    return Certificate(descriptor, field, kdim, counts, tensors)
