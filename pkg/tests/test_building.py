import random
from fractions import Fraction

import pytest

from padicnorm import FieldConfig, SplitNorm, linalg
from padicnorm.building import (
    apartment_coords,
    cartan_position,
    homothetic,
    norm_from_apartment,
    point_type,
    torus_translation,
    tree_neighbors,
)
from padicnorm.errors import (
    DimensionMismatchError,
    PreconditionError,
    SingularMatrixError,
)
from padicnorm.norms import LatticeBasis, act, equals, lattice_norm

import fuzz

F = Fraction
CFG2 = FieldConfig(2)
ALPHA0 = SplitNorm(CFG2, 2, linalg.identity(2), (F(0), F(1, 2)))
BETA = SplitNorm(CFG2, 2, linalg.identity(2), (F(0), F(0)))


def test_norm_from_apartment_examples():
    assert equals(norm_from_apartment((0, 0), CFG2), BETA)
    assert equals(norm_from_apartment((F(0), F(1, 2)), CFG2), ALPHA0)
    two_e1 = lattice_norm(LatticeBasis(CFG2, linalg.from_columns([(2, 0), (0, 1)])))
    assert equals(norm_from_apartment((1, 0), CFG2), two_e1)


def test_apartment_coords_examples():
    assert apartment_coords(ALPHA0) == (F(0), F(1, 2))
    lat = lattice_norm(LatticeBasis(CFG2, linalg.from_columns([(1, 0), (0, 2)])))
    assert apartment_coords(lat) == (F(0), F(1))
    # a frame that fails to split the norm yields None
    assert apartment_coords(ALPHA0, frame=linalg.from_columns([(1, 1), (0, 1)])) is None


def test_apartment_coords_bad_frames():
    with pytest.raises(SingularMatrixError):
        apartment_coords(ALPHA0, frame=((1, 1), (1, 1)))
    with pytest.raises(DimensionMismatchError):
        apartment_coords(ALPHA0, frame=linalg.identity(3))


def test_torus_translation_examples():
    assert torus_translation(linalg.identity(3), CFG2) == (0, 0, 0)
    assert torus_translation(((4, 0), (0, 1)), CFG2) == (F(2), F(0))
    assert torus_translation(((F(1, 2), 0), (0, 1)), CFG2) == (F(-1), F(0))
    with pytest.raises(PreconditionError):
        torus_translation(((1, 1), (0, 1)), CFG2)
    with pytest.raises(PreconditionError):
        torus_translation(((1, 0), (0, 0)), CFG2)


def test_point_type_examples():
    assert point_type(BETA) == (2,)
    assert point_type(ALPHA0) == (1, 1)
    mixed = SplitNorm(CFG2, 3, linalg.identity(3), (F(0), F(0), F(1, 2)))
    assert point_type(mixed) == (2, 1)


def test_point_type_invariance():
    rng = random.Random(91)
    for _ in range(150):
        nrm = fuzz.norm(rng)
        parts = point_type(nrm)
        assert sum(parts) == nrm.dim
        assert all(part > 0 for part in parts)
        g = fuzz.elementary_product(rng, nrm.dim, nrm.cfg.prime)
        assert point_type(act(g, nrm)) == parts


def test_tree_neighbors_frozen():
    nbrs = tree_neighbors(BETA)
    assert len(nbrs) == 3
    expected = [
        lattice_norm(LatticeBasis(CFG2, linalg.from_columns([(2, 0), (0, 1)]))),
        lattice_norm(LatticeBasis(CFG2, linalg.from_columns([(1, 0), (0, 2)]))),
        lattice_norm(LatticeBasis(CFG2, linalg.from_columns([(1, 1), (0, 2)]))),
    ]
    for got, want in zip(nbrs, expected):
        assert equals(got, want)
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1 :]:
            assert not equals(a, b)


def test_tree_neighbors_properties():
    for p in (2, 3, 5):
        origin = SplitNorm(FieldConfig(p), 2, linalg.identity(2), (F(0), F(0)))
        nbrs = tree_neighbors(origin)
        assert len(nbrs) == p + 1
        for i, a in enumerate(nbrs):
            assert cartan_position(origin, a) == (F(1), F(0))
            for b in nbrs[i + 1 :]:
                assert not equals(a, b)
        # stepping back from a neighbor reaches the origin up to homothety
        back = tree_neighbors(nbrs[0])
        assert sum(homothetic(x, origin) for x in back) == 1


def test_tree_neighbors_shifted_vertex():
    vertex = SplitNorm(CFG2, 2, linalg.identity(2), (F(1, 2), F(1, 2)))
    nbrs = tree_neighbors(vertex)
    assert len(nbrs) == 3
    for a in nbrs:
        assert a.value_classes == (F(1, 2),)
        assert cartan_position(vertex, a) == (F(1), F(0))


def test_tree_neighbors_preconditions():
    with pytest.raises(PreconditionError):
        tree_neighbors(ALPHA0)
    with pytest.raises(PreconditionError):
        tree_neighbors(SplitNorm(CFG2, 3, linalg.identity(3), (F(0),) * 3))


def test_homothetic_examples():
    shifted = SplitNorm(CFG2, 2, linalg.identity(2), (F(1), F(1)))
    assert homothetic(BETA, shifted)
    assert homothetic(BETA, BETA)
    assert not homothetic(BETA, ALPHA0)
    half = SplitNorm(CFG2, 2, linalg.identity(2), (F(1, 2), F(1, 2)))
    assert not homothetic(BETA, half)


def test_apartment_round_trip():
    rng = random.Random(92)
    for _ in range(150):
        n = rng.randint(1, 5)
        cfg = FieldConfig(rng.choice(fuzz.PRIMES))
        x = fuzz.values(rng, n)
        assert apartment_coords(norm_from_apartment(x, cfg)) == x


def test_torus_equivariance():
    rng = random.Random(93)
    for _ in range(150):
        n = rng.randint(1, 4)
        cfg = FieldConfig(rng.choice(fuzz.PRIMES))
        x = fuzz.values(rng, n)
        t = fuzz.diagonal(rng, n, cfg.prime)
        moved = act(t, norm_from_apartment(x, cfg))
        shift = torus_translation(t, cfg)
        assert apartment_coords(moved) == tuple(a + s for a, s in zip(x, shift))


def test_frame_equivariance():
    rng = random.Random(94)
    for _ in range(100):
        n = rng.randint(1, 4)
        cfg = FieldConfig(rng.choice(fuzz.PRIMES))
        x = fuzz.values(rng, n)
        g = fuzz.invertible(rng, n)
        assert apartment_coords(act(g, norm_from_apartment(x, cfg)), frame=g) == x
