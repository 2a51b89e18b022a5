"""Gradings of a split norm under virtual extensions of the base.

The weight multiset of a norm records how many splitting values fall
into each class mod 1; it is the diagonal-character data of the norm
and is insensitive to the presentation.  Squaring and summing the
multiplicities gives the dimension of the centralizer of that
character inside n x n matrices; the complement inside n^2 is the
unipotent kernel dimension, matching the fiber structure of the
stabilizer.

A virtual extension is described only by its ramification index e:
1 leaves everything unchanged, finite e refines value classes to
cosets of (1/e)Z, and None models a fully surjective value group,
under which every split norm becomes a lattice norm (a single class).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import PreconditionError
from .norms import SplitNorm, ball_basis, ball_basis_open
from .stabilizer import fiber_structure
from .valuation import degree_rep, frac_part, pval

WeightMultiset = dict[Fraction, int]


@dataclass(frozen=True)
class VirtualExtension:
    """Totally ramified virtual extension, known only by its index.

    ram_index None means the extension's value group is all of Q.
    """

    ram_index: int | None = None

    def __post_init__(self) -> None:
        e = self.ram_index
        if e is not None and (not isinstance(e, int) or e < 1):
            raise PreconditionError(f"ram_index must be a positive int or None, got {e!r}")

    @property
    def is_unramified(self) -> bool:
        return self.ram_index == 1


def chi_weights(norm: SplitNorm) -> WeightMultiset:
    """Multiset of splitting-value classes mod 1, keys ascending in [0, 1)."""
    counts = Counter(frac_part(a) for a in norm.values)
    return dict(sorted(counts.items()))


def extension_value_classes(norm: SplitNorm, ext: VirtualExtension) -> WeightMultiset:
    """Value-class multiset after refining by the extension's index.

    For index 1 this is chi_weights; for a surjective value group all
    classes collapse to a single one and the norm becomes a lattice
    norm over the extension.
    """
    e = ext.ram_index
    if e is None:
        return {Fraction(0): norm.dim} if norm.dim else {}
    period = Fraction(1, e)
    counts = Counter(frac_part(a * e) / e for a in norm.values)
    assert all(0 <= c < period for c in counts)
    return dict(sorted(counts.items()))


def is_lattice_norm_over(norm: SplitNorm, ext: VirtualExtension) -> bool:
    """Does the norm become a lattice norm over the extension?"""
    classes = extension_value_classes(norm, ext)
    return len(classes) <= 1 and all(c == 0 for c in classes)


def centralizer_dim(norm: SplitNorm) -> int:
    """Dimension of the centralizer of the weight character: sum of
    squared class multiplicities."""
    return sum(m * m for m in chi_weights(norm).values())


def kernel_dim(norm: SplitNorm) -> int:
    """Dimension of the unipotent kernel of the base-change comparison
    map; equals the unipotent dimension of the special fiber."""
    return fiber_structure(norm).unipotent_dim


def graded_ball_dims(norm: SplitNorm, g) -> dict[Fraction, tuple[int, int]]:
    """Two computations of each graded piece of the ball at level g.

    For each degree d in (-1, 0] with a nonzero piece, the left entry
    is the index of the open ball inside the closed ball at g + d
    (computed from determinant valuations), the right entry is the
    weight multiplicity of the class of g + d.  The two must agree.
    """
    g = linalg.to_fraction(g)
    p = norm.cfg.prime
    weights = chi_weights(norm)
    out: dict[Fraction, tuple[int, int]] = {}
    for cls in norm.value_classes:
        d = degree_rep(frac_part(cls - g))
        closed = ball_basis(norm, g + d)
        opened = ball_basis_open(norm, g + d)
        lhs = pval(linalg.det(opened.matrix), p) - pval(linalg.det(closed.matrix), p)
        rhs = weights.get(frac_part(g + d), 0)
        out[d] = (lhs, rhs)
    return dict(sorted(out.items(), reverse=True))
