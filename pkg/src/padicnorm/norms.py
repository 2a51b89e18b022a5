"""Splittable non-archimedean norms on Q^n, in exact arithmetic.

A split norm is presented by an invertible matrix whose columns form a
splitting basis together with one rational value per column.  Writing
a_1, ..., a_n for the values, the size of a vector v = sum l_i e_i is

    max_i (a_i - val(l_i)),

with the maximum over the nonzero coordinates and bottom at v = 0.
All operations keep this presentation; no other representation of a
norm exists in the package.

Why comparing closed balls over one period decides equality
-----------------------------------------------------------
The closed ball of a split norm at level g is the lattice spanned by
p^(ceil(a_i - g)) e_i, and shifting g by -1 multiplies the ball by p.
A split norm is recovered from its ball chain: the size of a nonzero v
is the least g with v in ball(g), and that chain can only jump at
levels congruent mod 1 to one of the a_i.  If two norms differ at some
vector v, they differ at g = min of the two sizes of v, which is a
value of one of them; hence comparing balls at one representative of
every value class of either norm (we take representatives in [0, 1))
is both sound and complete.

The subspace and common-basis computations below are a valuated
version of Gaussian elimination.  Row operations rewrite the ambient
splitting basis and are admissible only when they preserve its values;
column operations rewrite the incoming spanning set (freely for a
subspace, value-compatibly for a second norm).  Choosing a pivot of
maximal weight makes every elimination step admissible, and a final
reconstruction check guards the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (
    ConfigMismatchError,
    DimensionMismatchError,
    RankDeficiencyError,
    SelfCheckError,
)
from .linalg import Matrix, Vector
from .valuation import BOTTOM, FieldConfig, Value, frac_part, is_integral, pval


def _plant(obj, name: str, value) -> None:
    object.__setattr__(obj, name, value)


@dataclass(frozen=True)
class SplitNorm:
    """A norm on Q^n given by a splitting basis and its values.

    basis: n x n invertible matrix, columns are the splitting vectors.
    values: value of the norm on each basis column, in column order.
    """

    cfg: FieldConfig
    dim: int
    basis: Matrix
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        basis = linalg.mat(self.basis)
        values = linalg.vec(self.values)
        n = self.dim
        if not isinstance(n, int) or n < 0:
            raise DimensionMismatchError(f"dim must be a nonnegative int, got {n!r}")
        if len(basis) != n or any(len(row) != n for row in basis):
            raise DimensionMismatchError(f"basis must be {n}x{n}")
        if len(values) != n:
            raise DimensionMismatchError(f"expected {n} values, got {len(values)}")
        _plant(self, "basis", basis)
        _plant(self, "values", values)

    @property
    def inv_basis(self) -> Matrix:
        try:
            return self._inv  # type: ignore[attr-defined]
        except AttributeError:
            inv = linalg.inverse(self.basis)
            _plant(self, "_inv", inv)
            return inv

    @property
    def basis_columns(self) -> tuple[Vector, ...]:
        return linalg.columns(self.basis)

    @property
    def value_classes(self) -> tuple[Fraction, ...]:
        """Distinct classes mod 1 of the values, ascending in [0, 1)."""
        try:
            return self._classes  # type: ignore[attr-defined]
        except AttributeError:
            classes = tuple(sorted({frac_part(a) for a in self.values}))
            _plant(self, "_classes", classes)
            return classes


def _with_inverse(cfg: FieldConfig, dim: int, basis: Matrix, values, inv: Matrix) -> SplitNorm:
    norm = SplitNorm(cfg, dim, basis, values)
    _plant(norm, "_inv", inv)
    return norm


@dataclass(frozen=True)
class LatticeBasis:
    """A full-rank lattice over the valuation ring, spanned by the columns."""

    cfg: FieldConfig
    matrix: Matrix

    def __post_init__(self) -> None:
        m = linalg.mat(self.matrix)
        if any(len(row) != len(m) for row in m):
            raise DimensionMismatchError("lattice matrix must be square")
        _plant(self, "matrix", m)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def inv(self) -> Matrix:
        try:
            return self._inv  # type: ignore[attr-defined]
        except AttributeError:
            inv = linalg.inverse(self.matrix)
            _plant(self, "_inv", inv)
            return inv


@dataclass(frozen=True)
class BallChainPeriod:
    """One period of the closed-ball chain: classes ascending in [0, 1),
    with the lattice of each class.  Shifting the class by -1 multiplies
    the lattice by p."""

    classes: tuple[Fraction, ...]
    lattices: tuple[LatticeBasis, ...]


def _check_compatible(a: SplitNorm, b: SplitNorm) -> None:
    if a.cfg != b.cfg:
        raise ConfigMismatchError(f"prime mismatch: {a.cfg.prime} vs {b.cfg.prime}")
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimension mismatch: {a.dim} vs {b.dim}")


def evaluate(norm: SplitNorm, v) -> Value:
    """Size of a vector, bottom at the zero vector."""
    v = linalg.vec(v)
    if len(v) != norm.dim:
        raise DimensionMismatchError(f"vector has length {len(v)}, norm has dim {norm.dim}")
    coords = linalg.matvec(norm.inv_basis, v)
    p = norm.cfg.prime
    best: Fraction | None = None
    for a, c in zip(norm.values, coords):
        if c == 0:
            continue
        w = a - pval(c, p)
        if best is None or w > best:
            best = w
    return BOTTOM if best is None else Value(best)


def lattice_norm(lattice: LatticeBasis) -> SplitNorm:
    """The norm whose unit ball is exactly the given lattice."""
    n = lattice.dim
    return SplitNorm(lattice.cfg, n, lattice.matrix, (Fraction(0),) * n)


def _scaled_ball(norm: SplitNorm, exponents: list[int]) -> LatticeBasis:
    p = norm.cfg.prime
    scale = [Fraction(p) ** k for k in exponents]
    matrix = tuple(
        tuple(row[i] * scale[i] for i in range(norm.dim)) for row in norm.basis
    )
    inv = tuple(
        tuple(x / scale[i] for x in norm.inv_basis[i]) for i in range(norm.dim)
    )
    lat = LatticeBasis(norm.cfg, matrix)
    _plant(lat, "_inv", inv)
    return lat


def ball_basis(norm: SplitNorm, g) -> LatticeBasis:
    """Lattice of vectors of size at most g: spanned by p^ceil(a_i - g) e_i."""
    g = linalg.to_fraction(g)
    return _scaled_ball(norm, [math.ceil(a - g) for a in norm.values])


def ball_basis_open(norm: SplitNorm, g) -> LatticeBasis:
    """Lattice of vectors of size strictly below g."""
    g = linalg.to_fraction(g)
    return _scaled_ball(norm, [math.floor(a - g) + 1 for a in norm.values])


def _all_integral(m: Matrix, p: int) -> bool:
    return all(is_integral(x, p) for row in m for x in row)


def lattice_contains(outer: LatticeBasis, inner: LatticeBasis) -> bool:
    """Containment certified by an integral transition matrix."""
    if outer.cfg != inner.cfg:
        raise ConfigMismatchError("prime mismatch between lattices")
    if outer.dim != inner.dim:
        raise DimensionMismatchError("lattice dimension mismatch")
    return _all_integral(linalg.matmul(outer.inv, inner.matrix), outer.cfg.prime)


def lattices_equal(a: LatticeBasis, b: LatticeBasis) -> bool:
    return lattice_contains(a, b) and lattice_contains(b, a)


def equals(a: SplitNorm, b: SplitNorm) -> bool:
    """Exact equality of norms, decided over one period of ball levels."""
    _check_compatible(a, b)
    if a.basis == b.basis and a.values == b.values:
        return True
    levels = sorted(set(a.value_classes) | set(b.value_classes))
    return all(lattices_equal(ball_basis(a, g), ball_basis(b, g)) for g in levels)


def act(g, norm: SplitNorm) -> SplitNorm:
    """Transport the norm along an invertible matrix g (v -> size of g^-1 v)."""
    g = linalg.mat(g)
    n = norm.dim
    if len(g) != n or any(len(row) != n for row in g):
        raise DimensionMismatchError(f"acting matrix must be {n}x{n}")
    g_inv = linalg.inverse(g)
    return _with_inverse(
        norm.cfg,
        n,
        linalg.matmul(g, norm.basis),
        norm.values,
        linalg.matmul(norm.inv_basis, g_inv),
    )


def tensor(a: SplitNorm, b: SplitNorm) -> SplitNorm:
    """Tensor product norm; the pairwise basis tensors split it."""
    if a.cfg != b.cfg:
        raise ConfigMismatchError(f"prime mismatch: {a.cfg.prime} vs {b.cfg.prime}")
    values = tuple(x + y for x in a.values for y in b.values)
    return _with_inverse(
        a.cfg,
        a.dim * b.dim,
        linalg.kron(a.basis, b.basis),
        values,
        linalg.kron(a.inv_basis, b.inv_basis),
    )


def dual(a: SplitNorm) -> SplitNorm:
    """Dual norm on the dual space, split by the dual basis."""
    basis = linalg.transpose(a.inv_basis)
    inv = linalg.transpose(a.basis)
    return _with_inverse(a.cfg, a.dim, basis, tuple(-x for x in a.values), inv)


def direct_sum(a: SplitNorm, b: SplitNorm) -> SplitNorm:
    """Max-of-components norm on the direct sum."""
    if a.cfg != b.cfg:
        raise ConfigMismatchError(f"prime mismatch: {a.cfg.prime} vs {b.cfg.prime}")
    return _with_inverse(
        a.cfg,
        a.dim + b.dim,
        linalg.block_diag(a.basis, b.basis),
        a.values + b.values,
        linalg.block_diag(a.inv_basis, b.inv_basis),
    )


def _monomialize(row_values, m: Matrix, p: int, col_values=None):
    """Reduce m to one nonzero entry per used row and column.

    Entry (i, j) is weighted row_values[i] - val(m_ij) - col_values[j]
    (col term only when given).  The pivot of maximal weight, ties to
    the lowest (row, column), keeps every elimination step admissible:
    row operations never disturb the ambient splitting values, column
    operations never disturb the column values.

    Returns (sigma, m, col_acc, basis_acc): sigma maps each column to
    its pivot row; the reduced matrix equals basis_acc^-1 applied to
    the original times col_acc, with basis_acc recording the ambient
    basis change (new basis = old basis @ basis_acc) and col_acc the
    accumulated column operations.
    """
    n = len(m)
    d = len(m[0]) if m else 0
    M = [list(row) for row in m]
    C = [list(row) for row in linalg.identity(d)]
    U = [list(row) for row in linalg.identity(n)]
    active_rows = [True] * n
    active_cols = [True] * d
    sigma: dict[int, int] = {}
    for _ in range(d):
        best: tuple[Fraction, int, int] | None = None
        for i in range(n):
            if not active_rows[i]:
                continue
            for j in range(d):
                if not active_cols[j] or M[i][j] == 0:
                    continue
                w = row_values[i] - pval(M[i][j], p)
                if col_values is not None:
                    w = w - col_values[j]
                if best is None or w > best[0]:
                    best = (w, i, j)
        if best is None:
            raise RankDeficiencyError("columns do not have full rank")
        _, pi, pj = best
        piv = M[pi][pj]
        for j in range(d):
            if j == pj or not active_cols[j] or M[pi][j] == 0:
                continue
            f = M[pi][j] / piv
            for r in range(n):
                M[r][j] -= f * M[r][pj]
            for r in range(d):
                C[r][j] -= f * C[r][pj]
        for i in range(n):
            if i == pi or not active_rows[i] or M[i][pj] == 0:
                continue
            f = M[i][pj] / piv
            for c in range(d):
                M[i][c] -= f * M[pi][c]
            for r in range(n):
                U[r][pi] += f * U[r][i]
        active_rows[pi] = False
        active_cols[pj] = False
        sigma[pj] = pi
    freeze = lambda rows: tuple(tuple(r) for r in rows)
    return sigma, freeze(M), freeze(C), freeze(U)


def _split_subspace(norm: SplitNorm, span):
    """Split a subspace against the norm.

    span is an n x d matrix whose columns span the subspace.  Returns
    (d, combo, sub_values, comp_rows, comp_matrix) where combo is the
    d x d column-operation matrix (subspace splitting vectors are
    span @ combo), sub_values are their sizes, and comp_matrix holds a
    complementary set of ambient splitting vectors indexed by
    comp_rows.  The reconstruction from both parts is checked against
    the norm before returning.
    """
    span = linalg.mat(span)
    n = norm.dim
    if len(span) != n:
        raise DimensionMismatchError(f"span matrix must have {n} rows, got {len(span)}")
    d = len(span[0]) if span else 0
    if d > n:
        raise RankDeficiencyError("more spanning columns than the dimension allows")
    p = norm.cfg.prime
    coords = linalg.matmul(norm.inv_basis, span)
    sigma, reduced, combo, basis_acc = _monomialize(norm.values, coords, p)
    sub_values = tuple(
        norm.values[sigma[j]] - pval(reduced[sigma[j]][j], p) for j in range(d)
    )
    comp_rows = tuple(i for i in range(n) if i not in sigma.values())
    ambient = linalg.matmul(norm.basis, basis_acc)
    ambient_cols = linalg.columns(ambient)
    comp_matrix = linalg.from_columns([ambient_cols[i] for i in comp_rows]) if comp_rows else ()
    split_cols = linalg.columns(linalg.matmul(span, combo)) if d else ()
    full = linalg.from_columns(tuple(split_cols) + tuple(ambient_cols[i] for i in comp_rows))
    full_values = sub_values + tuple(norm.values[i] for i in comp_rows)
    if not equals(SplitNorm(norm.cfg, n, full, full_values), norm):
        raise SelfCheckError("subspace splitting failed reconstruction")
    return d, combo, sub_values, comp_rows, comp_matrix


def restrict(norm: SplitNorm, span) -> SplitNorm:
    """Restriction of the norm to the column span, as a norm on Q^d.

    The returned norm, pushed forward along the span matrix, agrees
    with the ambient norm on the subspace: its basis records which
    combinations of the spanning columns split the restriction.
    """
    d, combo, sub_values, _, _ = _split_subspace(norm, span)
    if d == 0:
        return SplitNorm(norm.cfg, 0, (), ())
    return SplitNorm(norm.cfg, d, combo, sub_values)


def quotient(norm: SplitNorm, span) -> SplitNorm:
    """Image norm on the quotient by the column span.

    The quotient is presented in the basis of the computed complement:
    coordinate i of the result is the image of the i-th complementary
    splitting vector, and the minimum over lifts is attained at the
    complementary component.
    """
    d, _, _, comp_rows, _ = _split_subspace(norm, span)
    k = norm.dim - d
    return SplitNorm(norm.cfg, k, linalg.identity(k), tuple(norm.values[i] for i in comp_rows))


def common_splitting_basis(a: SplitNorm, b: SplitNorm):
    """A basis splitting both norms at once.

    Returns (basis, a_values, b_values): the columns of basis split a
    with a_values and b with b_values.  Columns are scaled so that
    a_values lie in [0, 1).  Both reconstructions are checked via
    equals before returning.
    """
    _check_compatible(a, b)
    n = a.dim
    p = a.cfg.prime
    if n == 0:
        return (), (), ()
    transition = linalg.matmul(a.inv_basis, b.basis)
    sigma, reduced, col_ops, _ = _monomialize(a.values, transition, p, col_values=b.values)
    raw_cols = linalg.columns(linalg.matmul(b.basis, col_ops))
    cols = []
    a_vals = []
    b_vals = []
    for j in range(n):
        av = a.values[sigma[j]] - pval(reduced[sigma[j]][j], p)
        shift = math.floor(av)
        scale = Fraction(p) ** shift
        cols.append(tuple(x * scale for x in raw_cols[j]))
        a_vals.append(av - shift)
        b_vals.append(b.values[j] - shift)
    basis = linalg.from_columns(cols)
    a_vals = tuple(a_vals)
    b_vals = tuple(b_vals)
    if not equals(SplitNorm(a.cfg, n, basis, a_vals), a):
        raise SelfCheckError("common basis failed to reconstruct the first norm")
    if not equals(SplitNorm(b.cfg, n, basis, b_vals), b):
        raise SelfCheckError("common basis failed to reconstruct the second norm")
    return basis, a_vals, b_vals


def distance(a: SplitNorm, b: SplitNorm) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Sup-distance and the full sorted difference vector.

    The difference vector lists (b-value - a-value) over a common
    splitting basis, sorted descending; its largest absolute entry is
    the distance.
    """
    _, a_vals, b_vals = common_splitting_basis(a, b)
    diffs = tuple(sorted((bv - av for av, bv in zip(a_vals, b_vals)), reverse=True))
    d_inf = max((abs(x) for x in diffs), default=Fraction(0))
    return d_inf, diffs
