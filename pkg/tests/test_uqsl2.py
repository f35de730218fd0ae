import pytest

from qinv.errors import DimensionCapError, QinvError
from qinv.ring import CyclotomicRing, Laurent, quantum_integer
from qinv.smatrix import SMat
from qinv.uqsl2 import (
    check_relations,
    dual_rep,
    jordan_type_E,
    make_rep,
    tensor_action,
    tensor_pair,
)


def test_trivial_rep():
    r = make_rep(0)
    assert r.dim == 1 and r.E.is_zero() and r.F.is_zero()
    assert r.K == SMat.identity(1, Laurent.from_int(1))
    assert check_relations(r) is None


def test_v1_matrices():
    r = make_rep(1)
    assert r.K.entries == {(0, 0): Laurent.q_power(1), (1, 1): Laurent.q_power(-1)}
    assert r.E.entries == {(0, 1): Laurent.from_int(1)}
    assert r.F.entries == {(1, 0): Laurent.from_int(1)}


@pytest.mark.parametrize("n", range(7))
def test_relations_generic(n):
    assert check_relations(make_rep(n)) is None


@pytest.mark.parametrize("m", [6, 16, 10, 14])
def test_relations_specialized(m):
    from qinv.ring import find_truncation_level

    ell = find_truncation_level(m)
    ring = CyclotomicRing(m)
    for n in range(ell - 1):
        assert check_relations(make_rep(n, ring)) is None


def test_commutator_diagonal():
    # [E,F] acts on each weight vector by the quantum integer of its weight
    for n in range(5):
        r = make_rep(n)
        comm = r.E @ r.F - r.F @ r.E
        for j, w in enumerate(r.weights):
            assert comm.entries.get((j, j), Laurent()) == quantum_integer(w)


def test_middle_weight_commutator_vanishes():
    r = make_rep(2)
    comm = r.E @ r.F - r.F @ r.E
    assert (1, 1) not in comm.entries  # weight 0 vector


def test_mutated_rep_fails():
    r = make_rep(2)
    bad_entries = dict(r.E.entries)
    bad_entries[0, 1] = bad_entries[0, 1] + Laurent.from_int(1)
    import dataclasses

    bad = dataclasses.replace(r, E=SMat(r.dim, r.dim, bad_entries))
    failure = check_relations(bad)
    assert failure is not None
    name, witness = failure
    assert witness is not None


def test_tensor_relations_and_K():
    t = tensor_pair(make_rep(1), make_rep(1))
    assert check_relations(t) is None
    assert t.K.entries == {
        (0, 0): Laurent.q_power(2),
        (1, 1): Laurent.from_int(1),
        (2, 2): Laurent.from_int(1),
        (3, 3): Laurent.q_power(-2),
    }
    # E kills the highest weight vector
    assert all(col != 0 for (_, col) in t.E.entries)


def test_coassociativity_three_and_four_factors():
    a, b, c, d = (make_rep(n) for n in (1, 2, 1, 2))
    left = tensor_pair(tensor_pair(a, b), c)
    right = tensor_pair(a, tensor_pair(b, c))
    for attr in ("E", "F", "K", "Kinv"):
        assert getattr(left, attr) == getattr(right, attr)
    l4 = tensor_pair(tensor_pair(tensor_pair(a, b), c), d)
    r4 = tensor_pair(a, tensor_pair(b, tensor_pair(c, d)))
    m4 = tensor_pair(tensor_pair(a, b), tensor_pair(c, d))
    for attr in ("E", "F", "K"):
        assert getattr(l4, attr) == getattr(r4, attr) == getattr(m4, attr)


def test_tensor_action_left_nested():
    reps = [make_rep(1), make_rep(1), make_rep(2)]
    t = tensor_action(reps)
    assert t.dim == 2 * 2 * 3
    assert check_relations(t) is None


def test_dimension_cap(monkeypatch):
    monkeypatch.setenv("QINV_DIM_CAP", "8")
    with pytest.raises(DimensionCapError):
        tensor_pair(make_rep(2), make_rep(2))


def test_dual_rep():
    for n in range(4):
        d = dual_rep(make_rep(n))
        assert check_relations(d) is None
        assert d.weights == tuple(-w for w in make_rep(n).weights)
    assert dual_rep(make_rep(0)).K == make_rep(0).K


def test_dual_K_spectrum_inverted():
    from collections import Counter

    n = 3
    r, d = make_rep(n), dual_rep(make_rep(n))

    def spectrum(rep):
        return Counter(frozenset(v.coeffs.items()) for v in rep.K.entries.values())

    inverted = Counter(frozenset(v.bar().coeffs.items()) for v in r.K.entries.values())
    assert spectrum(d) == inverted


@pytest.mark.parametrize(
    "m,a,b,expected",
    [
        (10, 1, 1, {3: 1, 1: 1}),
        (10, 3, 3, {1: 1, 5: 3}),
        (6, 1, 1, {1: 1, 3: 1}),
        (16, 1, 2, {2: 1, 4: 1}),
    ],
)
def test_jordan_type(m, a, b, expected):
    ring = CyclotomicRing(m)
    from qinv.ring import find_truncation_level

    ell = find_truncation_level(m)
    t = tensor_pair(make_rep(a, ring), make_rep(b, ring))
    assert jordan_type_E(t, ell) == expected


def test_jordan_single_block():
    from qinv.ring import find_truncation_level

    m = 10
    ell = find_truncation_level(m)
    ring = CyclotomicRing(m)
    for n in range(ell - 1):
        assert jordan_type_E(make_rep(n, ring), ell) == {n + 1: 1}


def test_jordan_requires_nilpotent():
    ring = CyclotomicRing(10)
    t = make_rep(3, ring)
    with pytest.raises(QinvError):
        jordan_type_E(t, 2)  # E^2 != 0 on the 4-dimensional simple


def test_jordan_requires_cyclotomic():
    with pytest.raises(QinvError):
        jordan_type_E(make_rep(1), 5)
