"""Apartment coordinates, relative position, and the rank-2 tree.

The standard apartment consists of the norms split by the standard
basis; a rational vector of coordinates is the corresponding tuple of
values.  A norm lies in the apartment of a frame exactly when the
frame splits it, which is decidable: evaluate the norm on the frame
columns and test the resulting candidate for equality.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from . import linalg
from .errors import DimensionMismatchError, PreconditionError
from .norms import (
    SplitNorm,
    ball_basis,
    common_splitting_basis,
    equals,
    evaluate,
)
from .valuation import FieldConfig, frac_part, val


def norm_from_apartment(coords, cfg: FieldConfig) -> SplitNorm:
    """The standard-apartment norm with the given coordinate vector."""
    coords = linalg.vec(coords)
    return SplitNorm(cfg, len(coords), linalg.identity(len(coords)), coords)


def apartment_coords(norm: SplitNorm, frame=None) -> tuple[Fraction, ...] | None:
    """Coordinates of the norm in the frame's apartment, or None.

    The only candidate coordinates are the sizes of the frame columns;
    the norm lies in the apartment iff the frame with those values
    reproduces it.
    """
    if frame is None:
        frame = linalg.identity(norm.dim)
    frame = linalg.mat(frame)
    n = norm.dim
    if len(frame) != n or any(len(row) != n for row in frame):
        raise DimensionMismatchError(f"frame must be {n}x{n}")
    linalg.inverse(frame)
    cols = linalg.columns(frame)
    candidate = []
    for c in cols:
        size = evaluate(norm, c)
        if size.is_bottom:
            raise PreconditionError("frame contains the zero vector")
        candidate.append(size.mag)
    candidate = tuple(candidate)
    if equals(SplitNorm(norm.cfg, n, frame, candidate), norm):
        return candidate
    return None


def torus_translation(t, cfg: FieldConfig) -> tuple[Fraction, ...]:
    """Translation vector of a diagonal torus element: the valuations
    of its diagonal entries."""
    t = linalg.mat(t)
    n = len(t)
    if any(len(row) != n for row in t):
        raise DimensionMismatchError("torus element must be square")
    for i in range(n):
        for j in range(n):
            if i != j and t[i][j] != 0:
                raise PreconditionError("torus element must be diagonal")
        if t[i][i] == 0:
            raise PreconditionError("torus element must be invertible")
    return tuple(val(t[i][i], cfg).mag for i in range(n))


def cartan_position(a: SplitNorm, b: SplitNorm) -> tuple[Fraction, ...]:
    """Relative position of two norms: the value differences over a
    common splitting basis, sorted descending.

    For two lattice norms this is the list of elementary divisor
    exponents of the transition matrix.  Swapping the arguments negates
    and reverses the vector.
    """
    _, a_vals, b_vals = common_splitting_basis(a, b)
    return tuple(sorted((bv - av for av, bv in zip(a_vals, b_vals)), reverse=True))


def point_type(norm: SplitNorm) -> tuple[int, ...]:
    """Value-class multiplicities, ordered by ascending class in [0, 1).

    Length 1 with class zero means hyperspecial; length n means the
    barycenter of a chamber.
    """
    counts = Counter(frac_part(a) for a in norm.values)
    return tuple(counts[c] for c in sorted(counts))


def tree_neighbors(norm: SplitNorm) -> tuple[SplitNorm, ...]:
    """The p + 1 neighbors of a vertex of the rank-2 tree.

    The norm must have dimension 2 and a single value class s; its
    vertex lattice is the ball at s.  The neighbors are the index-p
    sublattices, returned as lattice norms shifted by s: first the
    sublattice scaling the first column, then one per residue c with
    second column scaled and c times the second column added to the
    first.
    """
    if norm.dim != 2:
        raise PreconditionError("tree neighbors are defined for dimension 2 only")
    classes = norm.value_classes
    if len(classes) != 1:
        raise PreconditionError("tree vertices carry a single value class")
    s = classes[0]
    p = norm.cfg.prime
    f1, f2 = linalg.columns(ball_basis(norm, s).matrix)
    sublattices = [linalg.from_columns([linalg.vec(p * x for x in f1), f2])]
    for c in range(p):
        first = linalg.vec(x + c * y for x, y in zip(f1, f2))
        second = linalg.vec(p * y for y in f2)
        sublattices.append(linalg.from_columns([first, second]))
    return tuple(SplitNorm(norm.cfg, 2, m, (s, s)) for m in sublattices)


def homothetic(a: SplitNorm, b: SplitNorm) -> bool:
    """Are two norms equal up to an integer shift of all values?

    The shift is pinned down by the determinant norm: the sum of the
    values plus the valuation of the splitting determinant is the same
    in every presentation, and a shift by k moves it by n*k.
    """
    if a.cfg != b.cfg or a.dim != b.dim:
        return False
    if a.dim == 0:
        return True

    def total(norm: SplitNorm) -> Fraction:
        return sum(norm.values) + val(linalg.det(norm.basis), norm.cfg).mag

    k = (total(a) - total(b)) / a.dim
    if k.denominator != 1:
        return False
    shifted = SplitNorm(b.cfg, b.dim, b.basis, tuple(v + k for v in b.values))
    return equals(a, shifted)


__all__ = [
    "norm_from_apartment",
    "apartment_coords",
    "torus_translation",
    "cartan_position",
    "point_type",
    "tree_neighbors",
    "homothetic",
]
