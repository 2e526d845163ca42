import numpy as np
import pytest

from cl33 import (
    CovectorResidue,
    E,
    E_STAR,
    GENERATORS,
    I_FULL,
    I_MINUS,
    I_PLUS,
    Multivector,
    NonParavectorResidue,
    OMEGA_V,
    Paravector,
    embed_covector,
    embed_paravector,
    embed_vector,
    extract_paravector,
    normalize_point,
    paravector_sub,
    sector_vector,
    star_conjugate,
)

EP1, EP2, EP3, EM1, EM2, EM3 = GENERATORS


def test_embed_vector_examples():
    assert embed_vector([1, 0, 0]).approx_eq(0.5 * (EP1 + EM1))
    assert embed_vector([0, 0, 0]).is_zero()
    v = embed_vector([3, -2, 5])
    assert (v * v).is_zero(1e-12)


def test_embed_covector_is_star_of_vector():
    rng = np.random.default_rng(0)
    for _ in range(100):
        v = rng.normal(size=3)
        assert embed_covector(v).approx_eq(star_conjugate(embed_vector(v)))


def test_star_conjugate_examples():
    assert star_conjugate(E[0]).approx_eq(E_STAR[0])
    assert star_conjugate(Multivector.scalar(1.0)).approx_eq(1.0)
    # the minus-sector pseudoscalar flips the sign of the covector
    assert (I_MINUS * E[0] * I_MINUS).approx_eq(-1.0 * E_STAR[0])
    # applying the conjugation twice returns the embedded vector
    rng = np.random.default_rng(1)
    v = embed_vector(rng.normal(size=3))
    assert star_conjugate(star_conjugate(v)).approx_eq(v)


def test_pseudoscalar_invariants():
    assert (I_PLUS * I_PLUS).approx_eq(-1.0)
    assert (I_MINUS * I_MINUS).approx_eq(1.0)
    rng = np.random.default_rng(2)
    for _ in range(1000):
        v = embed_vector(rng.normal(size=3))
        assert (I_FULL * v + v * I_FULL).is_zero(1e-12)


def test_volume_trivector_annihilated_by_embedded_basis():
    for i in range(3):
        assert (E[i] * OMEGA_V).is_zero()
        assert (OMEGA_V * E[i]).is_zero()


def test_embed_paravector_coefficients():
    m = embed_paravector(Paravector(1.0, [2, 0, 0]))
    assert m.coeff(0) == 1.0
    assert m.coeff(1) == 1.0   # e1p
    assert m.coeff(8) == 1.0   # e1m
    assert np.count_nonzero(m.coeffs) == 3


def test_extract_round_trip():
    rng = np.random.default_rng(3)
    for _ in range(1000):
        p = Paravector(rng.uniform(-3, 3), rng.uniform(-3, 3, 3))
        q = extract_paravector(embed_paravector(p))
        assert q.approx_eq(p)


def test_extract_covector_residue():
    with pytest.raises(CovectorResidue):
        extract_paravector(1.0 + E_STAR[0])


def test_extract_high_grade_residue():
    with pytest.raises(NonParavectorResidue):
        extract_paravector(1.0 + EP1 * EP2)


def test_normalize_point():
    p = normalize_point(Paravector(3.0, [3, 6, 9]))
    assert p.weight == 1.0 and np.allclose(p.vector, [1, 2, 3])
    q = Paravector(1.0, [4, 5, 6])
    assert normalize_point(q).approx_eq(q)
    inf = normalize_point(Paravector(0.0, [0, 0, -1]))
    assert inf.is_at_infinity
    assert np.allclose(inf.vector, [0, 0, -1])
    neg = normalize_point(Paravector(-2.0, [2, 0, 0]))
    assert neg.weight == -1.0 and np.allclose(neg.vector, [1, 0, 0])


def test_location_semantics():
    assert np.allclose(Paravector(2.0, [2, 4, 6]).location(), [1, 2, 3])
    # negative weight: location is p / |w|
    assert np.allclose(Paravector(-2.0, [2, 0, 0]).location(), [1, 0, 0])
    with pytest.raises(ZeroDivisionError):
        Paravector(0.0, [1, 0, 0]).location()


def test_paravector_sub():
    p, e = np.array([1.0, 2, 3]), np.array([0.5, 0, -1])
    d = paravector_sub(Paravector(1, p), Paravector(1, e))
    assert d.weight == 0.0 and np.allclose(d.vector, p - e)
    z = Paravector(1, [1, 2, 3]) - Paravector(1, [1, 2, 3])
    assert z.weight == 0.0 and np.allclose(z.vector, 0)
    d2 = Paravector(2, p) - Paravector(1, e)
    assert d2.weight == 1.0 and np.allclose(d2.vector, p - e)


def test_paravector_reversion_symmetry():
    from cl33 import reversion

    rng = np.random.default_rng(4)
    m = embed_paravector(Paravector(rng.uniform(-2, 2), rng.normal(size=3)))
    assert reversion(m).approx_eq(m)


def test_sector_vector():
    v = [1.0, 2.0, 3.0]
    plus = sector_vector(v, +1)
    assert plus.coeff(1) == 1.0 and plus.coeff(2) == 2.0 and plus.coeff(4) == 3.0
    minus = sector_vector(v, -1)
    assert minus.coeff(8) == 1.0 and minus.coeff(16) == 2.0 and minus.coeff(32) == 3.0
