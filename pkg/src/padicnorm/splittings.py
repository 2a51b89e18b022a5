"""Lattice-and-weights presentations of split norms.

A splitting pair is a full lattice together with one rational weight
per lattice column.  The associated norm takes each column to its
weight; conversely every split norm has a canonical pair whose weights
lie in [0, 1), obtained by scaling each splitting vector into that
window by a power of p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import ConfigMismatchError, DimensionMismatchError
from .norms import LatticeBasis, SplitNorm, equals, _plant


@dataclass(frozen=True)
class SplittingPair:
    lattice: LatticeBasis
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        weights = linalg.vec(self.weights)
        if len(weights) != self.lattice.dim:
            raise DimensionMismatchError(
                f"expected {self.lattice.dim} weights, got {len(weights)}"
            )
        _plant(self, "weights", weights)

    @property
    def dim(self) -> int:
        return self.lattice.dim

    @property
    def is_canonical(self) -> bool:
        return all(0 <= w < 1 for w in self.weights)


def norm_from_pair(pair: SplittingPair) -> SplitNorm:
    """The norm sending each lattice column to its weight."""
    return SplitNorm(pair.lattice.cfg, pair.dim, pair.lattice.matrix, pair.weights)


def pair_from_norm(norm: SplitNorm) -> SplittingPair:
    """Canonical pair of a norm: weights in [0, 1).

    Column i of the lattice is p^floor(a_i) times splitting vector i,
    which has size equal to the fractional part of a_i.
    """
    p = norm.cfg.prime
    shifts = [math.floor(a) for a in norm.values]
    scale = [Fraction(p) ** k for k in shifts]
    matrix = tuple(
        tuple(row[i] * scale[i] for i in range(norm.dim)) for row in norm.basis
    )
    inv = tuple(
        tuple(x / scale[i] for x in norm.inv_basis[i]) for i in range(norm.dim)
    )
    lattice = LatticeBasis(norm.cfg, matrix)
    _plant(lattice, "_inv", inv)
    weights = tuple(a - k for a, k in zip(norm.values, shifts))
    return SplittingPair(lattice, weights)


def translate_pair(g, pair: SplittingPair) -> SplittingPair:
    """Transport a pair along an invertible matrix: lattice moves, weights stay."""
    g = linalg.mat(g)
    n = pair.dim
    if len(g) != n or any(len(row) != n for row in g):
        raise DimensionMismatchError(f"acting matrix must be {n}x{n}")
    linalg.inverse(g)
    return SplittingPair(
        LatticeBasis(pair.lattice.cfg, linalg.matmul(g, pair.lattice.matrix)),
        pair.weights,
    )


def verify_splitting(norm: SplitNorm, pair: SplittingPair) -> bool:
    """Does the pair present exactly this norm?"""
    if norm.cfg != pair.lattice.cfg:
        raise ConfigMismatchError("prime mismatch between norm and pair")
    if norm.dim != pair.dim:
        raise DimensionMismatchError("dimension mismatch between norm and pair")
    return equals(norm, norm_from_pair(pair))
