"""End-to-end acceptance checks, one group of tests per criterion.

Run with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per criterion
is printed in the terminal summary.
"""

from fractions import Fraction

import pytest

from delsarte.arith import cyclic_subgroup, is_prime, multiplicative_order
from delsarte.catalog import (classify_finite_heights, enumerate_fermat_weights, enumerate_quasidiagonal_weights,
                              fermat_records, mirror_obstruction_flag)
from delsarte.characters import aH_bruteforce, enumerate_aset, find_alpha0, newton_low_slope_count
from delsarte.core import WeightSystem, from_fermat, from_quasidiagonal, validate
from delsarte.height import INFINITE, height, height_class, reduced_character, spectrum, spectrum_for

from test_height import test_shortcuts_agree_with_general_path as _random_shortcuts

QUINTIC = from_fermat((1, 1, 1, 1, 1))
OCTIC = from_fermat((1, 1, 1, 1, 4))


PROPERTIES = "property suites: norm symmetry, graded counts, slope identity, fast paths"


def criterion(n, title):
    return pytest.mark.criterion(n, title)


def valid_primes(x, bound):
    return [p for p in range(2, bound) if is_prime(p) and validate(x, p).ok]


@criterion(1, "quintic spectrum mod 5")
def test_quintic_spectrum():
    rc = reduced_character(QUINTIC)
    assert rc.d_A == 5
    assert spectrum(rc).heights == {1: 1, 2: INFINITE, 3: INFINITE, 4: INFINITE}


@criterion(2, "octic spectrum mod 8 with residue-5 witness")
def test_octic_spectrum():
    rc = reduced_character(OCTIC)
    assert spectrum(rc).heights == {1: 1, 3: 2, 5: INFINITE, 7: INFINITE}
    r5 = height_class(5, rc)
    assert (r5.failing_index, r5.failing_norm) == (1, 2)
    assert rc.norm_at(5) == 2
    assert 7 not in cyclic_subgroup(5, 8)


@criterion(3, "m = 966, residue 43 has height 22")
def test_966():
    x = from_fermat((2, 21, 138, 322, 483))
    rc = reduced_character(x)
    assert rc.d_A == 966
    assert height_class(43, rc).h == 22


@criterion(4, "m = 1806 grouped class counts")
def test_1806():
    sp = spectrum_for(from_fermat((1, 42, 258, 602, 903)))
    assert sp.counts() == {1: 1, 2: 3, 3: 6, 6: 6, 7: 6, 14: 6, 21: 12, 42: 12, INFINITE: 452}
    assert sum(sp.counts().values()) == sp.phi == 504


@criterion(5, "quasi-diagonal example, d_A = 3486 and listed residues")
def test_qd84():
    x = from_quasidiagonal(WeightSystem((1, 1, 12, 28, 42), 84), (83, 84, 7, 3, 2))
    rc = reduced_character(x)
    assert rc.d_A == 3486
    expected = {1: 1, 1163: 2, 3319: 2, 43: 82, 85: 82, 211: 82, 127: 41, 169: 41, 253: 41}
    assert {t: height_class(t, rc).height for t in expected} == expected


@criterion(6, "Fermat finite-height set")
def test_fermat_heights():
    assert classify_finite_heights(fermat_records()) == [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 16, 18, 20,
                                                         21, 22, 42]


@criterion(7, "quasi-diagonal finite-height set")
def test_quasidiagonal_heights():
    assert classify_finite_heights(enumerate_quasidiagonal_weights()) == [
        1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 18, 20, 21, 22, 23, 24, 27, 28, 30, 41, 42, 46, 82]


@criterion(8, "catalog counts 147 and 137")
def test_catalog_counts():
    assert len(enumerate_fermat_weights()) == 147
    assert len(enumerate_quasidiagonal_weights()) == 137


@criterion(9, "Newton-slope oracle equals height for all valid p < 200")
@pytest.mark.parametrize("x", [QUINTIC, OCTIC], ids=["quintic", "octic"])
def test_oracle_equivalence(x):
    rc = reduced_character(x)
    for p in valid_primes(x, 200):
        res = height(x, p, rc=rc)
        assert newton_low_slope_count(x, p) == (res.h if res.finite else 0), p


@criterion(10, PROPERTIES)
@pytest.mark.parametrize("x", [QUINTIC, OCTIC, from_fermat((2, 21, 138, 322, 483)),
                               from_quasidiagonal((1, 1, 12, 28, 42))], ids=["quintic", "octic", "966", "qd84"])
def test_norm_symmetry(x):
    cs = enumerate_aset(x)
    for a in cs:
        assert (-a).norm == 3 - a.norm
    assert cs.graded_counts == cs.graded_counts[::-1]


@criterion(10, PROPERTIES)
def test_quintic_counts():
    assert enumerate_aset(QUINTIC).graded_counts == (1, 101, 101, 1)


@criterion(10, PROPERTIES)
@pytest.mark.parametrize("x", [QUINTIC, OCTIC], ids=["quintic", "octic"])
def test_slope_identity(x):
    a0 = find_alpha0(x)
    rc = reduced_character(x)
    for p in valid_primes(x, 100):
        f = multiplicative_order(p, x.d)
        f_a = multiplicative_order(p, rc.d_A)
        rhs = Fraction(f, f_a) * sum(a0.scale(pow(p, i, x.d)).norm for i in range(f_a))
        assert aH_bruteforce(a0, p) == rhs


@criterion(10, PROPERTIES)
def test_fast_paths():
    _random_shortcuts()


@criterion(11, "mirror obstruction flag for (82, 11, 491)")
def test_mirror_flag():
    assert mirror_obstruction_flag(82, 11, 491) is True


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
