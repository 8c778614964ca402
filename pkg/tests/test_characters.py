import numpy as np
import pytest

from delsarte.arith import cyclic_subgroup, multiplicative_order, units
from delsarte.characters import (CharacterVector, aH_bruteforce, alpha0_closed_form, character_kernel,
                                 enumerate_aset, find_alpha0, is_member, low_slope_members,
                                 newton_low_slope_count, norm)
from delsarte.core import SHAPES, WeightSystem, from_fermat, from_quasidiagonal, links_from_exponents, validate
from delsarte.errors import CapacityError, DomainError, IntegrityError
from delsarte.height import reduce_alpha0

from oracles import char_norm, fermat_aset
from test_core import SHAPE_EXAMPLES

QUINTIC = from_fermat((1, 1, 1, 1, 1))
OCTIC = from_fermat((1, 1, 1, 1, 4))
QD84 = from_quasidiagonal(WeightSystem((1, 1, 12, 28, 42), 84), (83, 84, 7, 3, 2))
FAMILY = [QUINTIC, OCTIC, QD84] + [links_from_exponents(SHAPE_EXAMPLES[s], SHAPES[s]) for s in sorted(SHAPES)]


def members(x):
    return {tuple(int(v) for v in row) for row in enumerate_aset(x).members}


def test_norm_examples():
    assert norm(CharacterVector((1, 1, 1, 1, 1), 5)) == 0
    assert norm(CharacterVector((4, 4, 4, 4, 4), 5)) == 3
    assert norm(CharacterVector((5, 5, 5, 5, 4), 8)) == 2
    assert CharacterVector((-1, 6, 1, 1, 3), 5).entries == (4, 1, 1, 1, 3)
    with pytest.raises(DomainError):
        CharacterVector((1, 1, 1, 1, 0), 5)
    with pytest.raises(DomainError):
        CharacterVector((1, 1, 1, 1, 2), 5)


def test_quintic_set():
    cs = enumerate_aset(QUINTIC)
    assert cs.count == 204
    assert cs.graded_counts == (1, 101, 101, 1)
    d, oracle = fermat_aset((5, 5, 5, 5, 5))
    assert d == 3125 and members(QUINTIC) == set(oracle)


def test_octic_set():
    d, oracle = fermat_aset((8, 8, 8, 8, 2))
    assert len(oracle) == 300
    cs = enumerate_aset(OCTIC)
    assert cs.count == 300
    assert members(OCTIC) == set(oracle)
    assert cs.graded_counts == tuple(sum(1 for a in oracle if char_norm(a, d) == k) for k in range(4))


def test_streaming_matches_kept():
    a = enumerate_aset(QD84, keep=False)
    b = enumerate_aset(QD84)
    assert a.count == b.count == len(b.members) == 984
    assert a.graded_counts == b.graded_counts
    assert a.members is None
    with pytest.raises(ValueError):
        list(a)


def test_capacity_error_reports_predicted_order():
    with pytest.raises(CapacityError) as info:
        enumerate_aset(QUINTIC, cap=100)
    # multiples of 625 with zero sum: 5**4 solutions
    assert info.value.predicted == character_kernel(QUINTIC).order == 625


@pytest.mark.parametrize("x", FAMILY, ids=lambda x: f"{x.family}{x.weights.weights}")
def test_set_invariants(x):
    d = x.d
    ms = members(x)
    cs = enumerate_aset(x)
    g = cs.graded_counts
    assert g == g[::-1]
    assert g[0] == 1
    for a in ms:
        assert all(0 < v < d for v in a) and is_member(x, a)
        assert char_norm(tuple(-v for v in a), d) == 3 - char_norm(a, d)
    for t in [u for u in units(d)[:8]] + [d - 1]:
        assert {tuple(t * v % d for v in a) for a in ms} == ms


@pytest.mark.parametrize("x", FAMILY, ids=lambda x: f"{x.family}{x.weights.weights}")
def test_alpha0(x):
    a0 = find_alpha0(x)
    assert sum(a0.entries) == x.d
    assert alpha0_closed_form(x) == a0


def test_alpha0_examples():
    assert find_alpha0(QUINTIC).entries == (625,) * 5
    assert find_alpha0(OCTIC).entries == (1024, 1024, 1024, 1024, 4096)


def test_alpha0_above_cap_uses_checked_closed_form():
    big = from_fermat((1, 42, 258, 602, 903))
    a0 = find_alpha0(big, cap=1000)
    assert is_member(big, a0.entries) and a0.norm == 0
    rc = reduce_alpha0(a0)
    assert (rc.d_A, rc.alpha_A) == (1806, (1, 42, 258, 602, 903))


def test_alpha0_rejects_non_calabi_yau():
    x = from_fermat(WeightSystem((1, 1, 1, 1, 1), 6))
    with pytest.raises(IntegrityError, match="not a Calabi-Yau"):
        find_alpha0(x)


def test_aH_examples():
    a = CharacterVector((1, 1, 1, 1, 1), 5)
    assert aH_bruteforce(a, 1) == 0
    a0 = find_alpha0(QUINTIC)
    assert aH_bruteforce(a0, 11) < multiplicative_order(11, 3125)
    assert aH_bruteforce(a0, 2) >= multiplicative_order(2, 3125)
    with pytest.raises(DomainError):
        aH_bruteforce(a0, 5)


def test_newton_counts():
    assert newton_low_slope_count(QUINTIC, 11) == 1
    assert newton_low_slope_count(QUINTIC, 2) == 0
    assert newton_low_slope_count(OCTIC, 3) == 2


def _valid_primes(x, bound):
    from delsarte.arith import is_prime

    return [p for p in range(2, bound) if is_prime(p) and validate(x, p).ok]


@pytest.mark.parametrize("x", [QUINTIC, OCTIC], ids=["quintic", "octic"])
def test_orbit_of_alpha0_law(x):
    d = x.d
    a0 = find_alpha0(x).entries
    for p in _valid_primes(x, 60):
        low = low_slope_members(x, p)
        orbit = {tuple(t * v % d for v in a0) for t in cyclic_subgroup(p, d)}
        assert low == set() or low == orbit


@pytest.mark.parametrize("x", FAMILY, ids=lambda x: f"{x.family}{x.weights.weights}")
def test_full_and_reduced_norms_agree(x):
    a0 = find_alpha0(x)
    rc = reduce_alpha0(a0)
    for t in units(rc.d_A)[:40]:
        # lift t to a unit mod d in the same class mod d_A
        s = next(s for s in range(t, x.d, rc.d_A) if np.gcd(s, x.d) == 1)
        for i in range(multiplicative_order(t, rc.d_A)):
            ti = pow(s, i, x.d)
            assert a0.scale(ti).norm == rc.norm_at(pow(t, i, rc.d_A))
