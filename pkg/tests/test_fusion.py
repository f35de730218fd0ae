from fractions import Fraction

import numpy as np
import pytest

from qinv.errors import QinvError
from qinv.fusion import (
    FusionRing,
    check_ring_axioms,
    check_semisimple,
    frobenius_data,
    fusion_decompose,
    fusion_ring,
    multiply,
    surface_invariant,
)
from qinv.ring import find_truncation_level

LEVELS = [(6, 3), (16, 4), (10, 5), (14, 7)]


def test_unit_color():
    N, k = fusion_decompose(0, 2, 10)
    assert N == (0, 0, 1, 0) and k == 0


def test_decompose_examples():
    assert fusion_decompose(1, 1, 10) == ((1, 0, 1, 0), 0)
    assert fusion_decompose(3, 3, 10) == ((1, 0, 0, 0), 3)
    assert fusion_decompose(1, 1, 6) == ((1, 0), 1)


def test_color_out_of_range():
    with pytest.raises(QinvError, match="out of truncated range"):
        fusion_decompose(4, 1, 10)


@pytest.mark.parametrize("m,ell", LEVELS)
def test_dimension_bookkeeping(m, ell):
    for a in range(ell - 1):
        for b in range(ell - 1):
            N, k = fusion_decompose(a, b, m)
            assert sum((c + 1) * n for c, n in enumerate(N)) + k * ell == (a + 1) * (b + 1)


@pytest.mark.parametrize("m,ell", LEVELS)
def test_ring_axioms(m, ell):
    R = fusion_ring(m)
    assert R.ell == ell and R.rank == ell - 1
    assert check_ring_axioms(R) is None


def test_table_symmetry_ell5():
    R = fusion_ring(10)
    for a in range(4):
        for b in range(4):
            for c in range(4):
                n = R.table[a][b][c]
                assert n == R.table[b][a][c] == R.table[a][c][b] == R.table[c][b][a]


def test_ell3_table():
    R = fusion_ring(6)
    assert R.rank == 2
    assert R.table[1][1] == (1, 0)  # V_1 x V_1 = V_0


def test_broken_table_detected():
    R = fusion_ring(10)
    rows = [list(map(list, row)) for row in R.table]
    rows[1][1][0] = 0  # delete V_0 from V_1 x V_1
    broken = FusionRing(R.ell, tuple(tuple(tuple(r) for r in row) for row in rows))
    assert check_ring_axioms(broken) is not None


@pytest.mark.parametrize("m,ell", LEVELS)
def test_frobenius(m, ell):
    R = fusion_ring(m)
    F = frobenius_data(R)
    rank = R.rank
    assert F.eta[0] == 1 and all(x == 0 for x in F.eta[1:])
    # self-dual simples: theta is the identity matrix
    assert F.gram == tuple(tuple(1 if a == b else 0 for b in range(rank)) for a in range(rank))
    # theta(a,b) = eta(x_a x_b)
    for a in range(rank):
        for b in range(rank):
            prod = multiply(R, _unit_vec(rank, a), _unit_vec(rank, b))
            assert sum(e * x for e, x in zip(F.eta, prod)) == F.gram[a][b]
    # handle element: sum of squares of the classes
    want = [Fraction(0)] * rank
    for a in range(rank):
        sq = multiply(R, _unit_vec(rank, a), _unit_vec(rank, a))
        want = [w + s for w, s in zip(want, sq)]
    assert list(F.handle) == want


def _unit_vec(rank, a):
    return tuple(Fraction(1 if i == a else 0) for i in range(rank))


def test_theta_degenerate_rejected():
    R = fusion_ring(10)
    rows = [list(map(list, row)) for row in R.table]
    for b in range(4):
        rows[3][b] = [0, 0, 0, 0]
        rows[b][3] = [0, 0, 0, 0]
    broken = FusionRing(R.ell, tuple(tuple(tuple(r) for r in row) for row in rows))
    with pytest.raises(QinvError, match="theta degenerate"):
        frobenius_data(broken)


@pytest.mark.parametrize("m,ell", LEVELS)
def test_torus_invariant_is_rank(m, ell):
    F = frobenius_data(fusion_ring(m))
    assert surface_invariant(1, F) == ell - 1


def test_sphere_invariant():
    F = frobenius_data(fusion_ring(10))
    assert surface_invariant(0, F) == 1


@pytest.mark.parametrize("m", [6, 10, 16])
def test_genus_oracle(m):
    """Numeric idempotent decomposition of the regular representation."""
    R = fusion_ring(m)
    F = frobenius_data(R)
    rank = R.rank
    rng = np.random.default_rng(1)
    comb = sum(
        rng.random() * np.array([[float(R.table[a][b][c]) for b in range(rank)] for c in range(rank)])
        for a in range(rank)
    )
    _, P = np.linalg.eig(comb)
    thetas = []
    for i in range(rank):
        vec = P[:, i].real
        prod = np.zeros(rank)
        for a in range(rank):
            for b in range(rank):
                for c in range(rank):
                    prod[c] += vec[a] * vec[b] * R.table[a][b][c]
        lam = next(prod[c] / vec[c] for c in range(rank) if abs(vec[c]) > 1e-8)
        thetas.append(vec[0] / lam)  # eta of the idempotent
    for genus in range(4):
        numeric = sum(t ** (1 - genus) for t in thetas)
        exact = surface_invariant(genus, F)
        assert abs(numeric - float(exact)) < 1e-6


def test_surface_multiplicativity():
    """Disjoint unions multiply: compute a two-component surface in the
    tensor-square algebra and compare with the product of the pieces."""
    R = fusion_ring(6)
    F = frobenius_data(R)
    rank = R.rank
    rank2 = rank * rank
    table2 = tuple(
        tuple(
            tuple(
                R.table[a1][b1][c1] * R.table[a2][b2][c2]
                for c1 in range(rank)
                for c2 in range(rank)
            )
            for b1 in range(rank)
            for b2 in range(rank)
        )
        for a1 in range(rank)
        for a2 in range(rank)
    )
    assert len(table2) == rank2
    eta2 = tuple(F.eta[i // rank] * F.eta[i % rank] for i in range(rank2))
    for g in range(3):
        for h in range(3):
            hg = _power_vec(R, F.handle, g)
            hh = _power_vec(R, F.handle, h)
            pair = tuple(hg[i // rank] * hh[i % rank] for i in range(rank2))
            value = sum(e * x for e, x in zip(eta2, pair))
            assert value == surface_invariant(g, F) * surface_invariant(h, F)


def _power_vec(R, handle, g):
    acc = tuple(Fraction(1 if c == 0 else 0) for c in range(R.rank))
    for _ in range(g):
        acc = multiply(R, acc, handle)
    return acc


@pytest.mark.parametrize("m,ell", LEVELS)
def test_semisimple(m, ell):
    assert check_semisimple(fusion_ring(m))


def test_semisimple_rejects_zero_row():
    R = fusion_ring(10)
    rows = [list(map(list, row)) for row in R.table]
    for b in range(4):
        rows[2][b] = [0, 0, 0, 0]
        rows[b][2] = [0, 0, 0, 0]
    broken = FusionRing(R.ell, tuple(tuple(tuple(r) for r in row) for row in rows))
    assert not check_semisimple(broken)


def test_closed_form_cross_check():
    # truncated Clebsch-Gordan rule, validated against the Jordan route
    for m, ell in LEVELS:
        R = fusion_ring(m)
        for a in range(R.rank):
            for b in range(R.rank):
                for c in range(R.rank):
                    expected = int(
                        (a + b - c) % 2 == 0 and abs(a - b) <= c <= min(a + b, 2 * (ell - 2) - a - b)
                    )
                    assert R.table[a][b][c] == expected
