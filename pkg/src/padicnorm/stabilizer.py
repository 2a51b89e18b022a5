"""The order attached to a split norm and its filtration.

Slot conventions, fixed once for the whole package: for an
endomorphism h of Q^n and a splitting basis e_1, ..., e_n with values
a_1, ..., a_n, write h(e_i) = sum_j h_ij e_j.  The weight of slot
(i, j) is

    a_j - a_i - val(h_ij),

and hom_norm is the maximum slot weight (bottom for h = 0).  The order
of the norm consists of the h with hom_norm <= 0, equivalently the h
carrying every closed ball into itself, and its unit group is the
stabilizer.  Slot (i, j) can only carry weights congruent to a_j - a_i
mod 1, which grades the order by value classes represented in (-1, 0];
the strictly negative part of one period is the unipotent direction of
the special fiber and the class-0 part contributes the Levi blocks,
one block per value class of the norm.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import DimensionMismatchError, PreconditionError
from .norms import BallChainPeriod, SplitNorm, ball_basis
from .valuation import BOTTOM, Value, degree_rep, frac_part, pval


@dataclass(frozen=True)
class GradedOrderSummary:
    """Slot counts of the order, by value class represented in (-1, 0]."""

    dim: int
    class_dims: dict[Fraction, int]

    @property
    def total(self) -> int:
        return sum(self.class_dims.values())


@dataclass(frozen=True)
class FiberStructure:
    """Shape of the special fiber of the stabilizer scheme.

    levi_blocks are the value-class multiplicities of the norm (sorted
    descending), unipotent_dim counts the strictly negative slot
    classes of one period, and total_dim is n^2.
    """

    levi_blocks: tuple[int, ...]
    unipotent_dim: int
    total_dim: int


def _in_splitting_coords(norm: SplitNorm, h) -> linalg.Matrix:
    h = linalg.mat(h)
    n = norm.dim
    if len(h) != n or any(len(row) != n for row in h):
        raise DimensionMismatchError(f"matrix must be {n}x{n}")
    return linalg.matmul(norm.inv_basis, linalg.matmul(h, norm.basis))


def hom_norm(norm: SplitNorm, h) -> Value:
    """Operator size of h with respect to the norm; bottom at h = 0.

    Computed slotwise: the matrix of h in the splitting basis has the
    coefficient of e_j in h(e_i) at row j, column i, contributing
    a_j - a_i - val of that coefficient.
    """
    coeffs = _in_splitting_coords(norm, h)
    p = norm.cfg.prime
    a = norm.values
    best: Fraction | None = None
    for j in range(norm.dim):
        for i in range(norm.dim):
            x = coeffs[j][i]
            if x == 0:
                continue
            w = a[j] - a[i] - pval(x, p)
            if best is None or w > best:
                best = w
    return BOTTOM if best is None else Value(best)


def is_stabilizer_element(norm: SplitNorm, g) -> bool:
    """Does g preserve the norm (equivalently every ball lattice)?

    True iff both g and its inverse have hom_norm <= 0.  Raises on a
    singular matrix.
    """
    g = linalg.mat(g)
    g_inv = linalg.inverse(g)
    return hom_norm(norm, g) <= 0 and hom_norm(norm, g_inv) <= 0


def graded_dims(norm: SplitNorm) -> GradedOrderSummary:
    """Slot counts per value class; classes with no slots are omitted."""
    counts: Counter[Fraction] = Counter()
    for ai in norm.values:
        for aj in norm.values:
            counts[degree_rep(frac_part(ai - aj))] += 1
    return GradedOrderSummary(norm.dim, dict(sorted(counts.items(), reverse=True)))


def fiber_structure(norm: SplitNorm) -> FiberStructure:
    """Levi blocks, unipotent dimension, and total dimension n^2."""
    class_counts = Counter(frac_part(a) for a in norm.values)
    blocks = tuple(sorted(class_counts.values(), reverse=True))
    summary = graded_dims(norm)
    unipotent = sum(v for k, v in summary.class_dims.items() if k < 0)
    return FiberStructure(blocks, unipotent, norm.dim * norm.dim)


def chain_period(norm: SplitNorm) -> BallChainPeriod:
    """One period of ball lattices, in ascending class order."""
    classes = norm.value_classes
    return BallChainPeriod(classes, tuple(ball_basis(norm, g) for g in classes))


def chain_certificates(period: BallChainPeriod) -> tuple[linalg.Matrix, ...]:
    """Integral transition matrices certifying the chain inclusions.

    One certificate per consecutive pair (smaller ball inside larger),
    plus the wrap-around: p times the last lattice inside the first.
    """
    lats = period.lattices
    if not lats:
        return ()
    certs = [
        linalg.matmul(lats[k + 1].inv, lats[k].matrix) for k in range(len(lats) - 1)
    ]
    p = lats[0].cfg.prime
    certs.append(linalg.matmul(lats[0].inv, linalg.scalar_mul(p, lats[-1].matrix)))
    return tuple(certs)


def filtration_level(norm: SplitNorm, g) -> Value:
    """Depth of a stabilizer element in the congruence filtration.

    The level is hom_norm(g - id).  Levels at or below -1 mean the
    element reduces to the identity in the special fiber; these all
    collapse to bottom, so the result is either bottom or a value in
    the interval (-1, 0].
    """
    g = linalg.mat(g)
    if not is_stabilizer_element(norm, g):
        raise PreconditionError("filtration level requires a stabilizer element")
    n = norm.dim
    difference = tuple(
        tuple(g[i][j] - (1 if i == j else 0) for j in range(n)) for i in range(n)
    )
    level = hom_norm(norm, difference)
    if level <= -1:
        return BOTTOM
    return level
