import numpy as np
import pytest

from cl33 import (
    E,
    I_FULL,
    Multivector,
    NotLinearError,
    OMEGA_V,
    Paravector,
    Sandwich,
    Transform,
    affine_matrix,
    classify_infinitesimal,
    composed_family_report,
    compose,
    cotranslation,
    cotranslation_matrix,
    embed_covector,
    embed_paravector,
    embed_vector,
    correction_terms,
    g,
    grade_parts,
    hodge_star,
    outer_product,
    paravector_conditions,
    probe_points,
    projective_matrix_probe,
    reflection_versor,
    reversion,
    rotation_versor,
    scale_versor,
    shear_versor,
    translation_versor,
)
from cl33.analysis import (
    ACCEPT,
    INCONCLUSIVE,
    MatrixTransform,
    REJECT,
    family_two_mixed,
    family_two_vectors,
    family_vector_mixed,
)
from cl33.blades import GRADES
from cl33.versors import PerspectiveMap
from helpers import perspective_oracle_matrix, rand_orthonormal, rand_unit

W = outer_product


def random_homogeneous(rng, k):
    return Multivector(np.where(GRADES == k, rng.normal(size=64), 0.0))


# -- grade parts -----------------------------------------------------------------

def test_grade_parts_examples():
    parts = grade_parts(1.0 + E[0])
    assert parts[0].approx_eq(1.0)
    assert parts[1].approx_eq(E[0])
    assert all(parts[k].is_zero() for k in range(2, 7))

    t = translation_versor([0.4, -0.2, 1.0])
    parts = grade_parts(t.U)
    assert parts[0].approx_eq(1.0)
    assert parts[1].approx_eq(0.5 * embed_vector([0.4, -0.2, 1.0]))
    assert all(parts[k].is_zero() for k in range(2, 7))

    refl = reflection_versor([0, 0, 1])
    parts = grade_parts(refl.U)
    assert not parts[2].is_zero()
    assert all(parts[k].is_zero() for k in (1, 3, 4, 5, 6))
    assert sum(parts[1:], parts[0]).approx_eq(refl.U)


def test_grade_parts_reconstruct():
    rng = np.random.default_rng(0)
    psi = Multivector(rng.normal(size=64))
    total = Multivector()
    for part in grade_parts(psi):
        total = total + part
    assert total.approx_eq(psi)


# -- correction terms --------------------------------------------------------------

def test_corrections_vanish_without_high_grades():
    parts = grade_parts(1.0 + embed_vector([1, 2, 3]) + W(E[0], embed_covector([0, 1, 0])))
    p = embed_vector([0.3, 0.7, -0.2])
    d1, d2, d3, d4 = correction_terms(parts, p)
    assert d1.is_zero() and d2.is_zero() and d3.is_zero() and d4.is_zero()


def test_family_two_reduction_terms_vanish():
    rng = np.random.default_rng(1)
    v, a, b = rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)
    psi = family_vector_mixed(0.1, 0.01, v, a, b)
    parts = grade_parts(psi)
    for p in probe_points(extra=4):
        pm = embed_vector(p)
        assert (parts[2] * pm * parts[3]).grade(4).is_zero(1e-14)
        assert (parts[3] * pm * parts[3]).grade(5).is_zero(1e-14)


def test_family_three_reduction_terms_vanish():
    rng = np.random.default_rng(2)
    u, v, a, b = (rng.uniform(-1, 1, 3) for _ in range(4))
    psi = family_two_mixed(0.1, 0.1, u, v, a, b)
    parts = grade_parts(psi)
    assert (parts[2] * parts[4]).grade(4).is_zero(1e-14)
    for p in probe_points(extra=4):
        pm = embed_vector(p)
        assert (parts[4] * pm * parts[4]).grade(5).is_zero(1e-15)


def test_family_displayed_grade_parts():
    rng = np.random.default_rng(3)
    eps, eta = 0.1, 0.01
    v, u, a, b = (rng.uniform(-1, 1, 3) for _ in range(4))
    psi = family_vector_mixed(eps, eta, v, a, b)
    mv, ma, mbs = embed_vector(v), embed_vector(a), embed_covector(b)
    assert psi.grade(0).approx_eq(1.0)
    assert psi.grade(1).approx_eq(eps * mv - 0.5 * eps * eta * g(v, b) * ma)
    assert psi.grade(2).approx_eq(eta * W(ma, mbs))
    assert psi.grade(3).approx_eq(eps * eta * W(W(mv, ma), mbs))

    psi = family_two_mixed(eps, eta, u, v, a, b)
    mu, mvs = embed_vector(u), embed_covector(v)
    assert psi.grade(0).approx_eq(1.0 + 0.25 * eps * eta * g(u, b) * g(v, a))
    want2 = (eps * W(mu, mvs) + eta * W(ma, mbs)
             + 0.5 * eps * eta * (g(v, a) * W(mu, mbs) + g(u, b) * W(mvs, ma)))
    assert psi.grade(2).approx_eq(want2)
    assert psi.grade(4).approx_eq(eps * eta * W(W(W(mu, mvs), ma), mbs))

    psi = family_two_vectors(eps, eta, v, u)
    assert psi.grade(1).approx_eq(eps * mv + eta * mu)
    assert psi.grade(2).approx_eq(eps * eta * W(mv, mu))


# -- conditions ---------------------------------------------------------------------

def test_conditions_vanish_for_every_sandwich_versor():
    rng = np.random.default_rng(4)
    u, v = rand_orthonormal(rng)
    versors = [reflection_versor(rand_unit(rng)), rotation_versor(u, v, 1.2),
               shear_versor(u, v, 0.8), scale_versor(u, -0.5),
               translation_versor(rng.normal(size=3))]
    for versor in versors:
        for p in probe_points(extra=4):
            rep = paravector_conditions(versor.U, p)
            assert rep.max_residual() < 1e-11, versor.kind


def test_conditions_covector_residual_detected():
    psi = 1.0 + 0.01 * W(embed_covector([1, 0, 0]), embed_covector([0, 1, 0]))
    rep = paravector_conditions(psi, [0.3, 0.5, -0.2])
    assert rep.r1.is_zero(1e-15) and rep.r2.is_zero(1e-15)
    assert rep.covector_residual.max_abs() > 1e-4


def test_conditions_mixed_bivector_exact():
    rng = np.random.default_rng(5)
    a, b = rng.normal(size=3), rng.normal(size=3)
    psi = 1.0 + 0.01 * W(embed_vector(a), embed_covector(b))
    for p in probe_points(extra=4):
        rep = paravector_conditions(psi, p)
        assert rep.max_residual() < 1e-14


def test_conditions_detect_grade3():
    rng = np.random.default_rng(6)
    psi = 1.0 + 0.01 * random_homogeneous(rng, 3)
    worst = max(paravector_conditions(psi, p).max_residual() for p in probe_points())
    assert worst > 1e-6


def test_conditions_equal_direct_grade_parts():
    # on arbitrary operators the four conditions are exactly the grade-4/5
    # parts of Psi (rev Psi) and Psi p (rev Psi)
    rng = np.random.default_rng(60)
    for _ in range(20):
        psi = Multivector(rng.normal(size=64))
        p = rng.normal(size=3)
        rep = paravector_conditions(psi, p)
        pm = embed_vector(p)
        sym = psi * reversion(psi)
        mid = psi * pm * reversion(psi)
        scale = 1e-9 * max(1.0, psi.max_abs() ** 2 * 64)
        assert rep.r1.approx_eq(sym.grade(4), atol=scale)
        assert rep.r2.approx_eq(sym.grade(5), atol=scale)
        assert rep.r3.approx_eq(mid.grade(4), atol=scale)
        assert rep.r4.approx_eq(mid.grade(5), atol=scale)


def test_conditions_vanish_for_mixed_composites():
    # composites carrying both a scalar and a grade-5 part (rotation fused
    # with translation) still satisfy every condition
    rng = np.random.default_rng(61)
    u, v = rand_orthonormal(rng)
    composite = translation_versor(rng.normal(size=3)).U * rotation_versor(u, v, 0.8).U
    assert not composite.grade(5).is_zero(1e-12)
    for p in probe_points(extra=4):
        rep = paravector_conditions(composite, p)
        assert rep.max_residual() < 1e-12


# -- classification -----------------------------------------------------------------

def test_classify_accepts_stated_generators():
    rng = np.random.default_rng(7)
    assert classify_infinitesimal(0, Multivector.scalar(1.3)).verdict == ACCEPT
    res = classify_infinitesimal(1, embed_vector(rng.normal(size=3)))
    assert res.verdict == ACCEPT and not res.acts_as_identity
    mixed = W(embed_vector(rng.normal(size=3)), embed_covector(rng.normal(size=3)))
    assert classify_infinitesimal(2, mixed).verdict == ACCEPT


def test_classify_vector_vector_bivector_is_null_action():
    res = classify_infinitesimal(2, W(E[0], E[1]))
    assert res.verdict == ACCEPT
    assert res.acts_as_identity


def test_classify_rejects_high_grades_and_covectors():
    rng = np.random.default_rng(8)
    for k in (3, 4, 5, 6):
        res = classify_infinitesimal(k, random_homogeneous(rng, k))
        assert res.verdict == REJECT, k
        assert res.max_residual > 1e-6
    cov = W(embed_covector([1, 0, 0]), embed_covector([0, 1, 0]))
    assert classify_infinitesimal(2, cov).verdict == REJECT
    covec = embed_covector(rng.normal(size=3))
    assert classify_infinitesimal(1, covec).verdict == REJECT


def test_classify_validates_homogeneity():
    with pytest.raises(ValueError):
        classify_infinitesimal(2, 1.0 + E[0])


def test_classify_inconclusive_band_exists():
    # a tiny grade-5 generator lands between the accept and reject thresholds
    rng = np.random.default_rng(9)
    psi = 1e-8 * random_homogeneous(rng, 5)
    res = classify_infinitesimal(5, psi)
    assert res.verdict == INCONCLUSIVE
    assert res.detail


# -- matrices -----------------------------------------------------------------------

def test_affine_matrix_identity_at_zero():
    assert np.allclose(affine_matrix([0, 0, 0], [0, 0, 0], [0, 0, 0], 0.1), np.eye(4))
    assert np.allclose(cotranslation_matrix([0, 0, 0], [0, 0, 0], [0, 0, 0], 0.1), np.eye(4))


def test_affine_matrix_structure():
    m = affine_matrix([1, 2, 3], [1, 0, 0], [0, 1, 0], 0.1)
    assert np.allclose(m[0], [1, 0, 0, 0])
    assert np.allclose(m[1:, 0], [0.2, 0.4, 0.6])
    want_block = np.eye(3)
    want_block[0, 1] = 0.1
    assert np.allclose(m[1:, 1:], want_block)


def test_cotranslation_matrix_structure():
    v, a, b, eps = [1, 2, 3], [1, 0, 0], [0, 1, 0], 0.1
    m = cotranslation_matrix(v, a, b, eps)
    assert np.allclose(m[0], [1, 0.2, 0.4, 0.6])
    assert np.allclose(m[1:, 0], 0)
    want_block = np.eye(3)
    want_block[1, 0] = -0.1  # -eps a^j b^i at row i=2, column j=1
    assert np.allclose(m[1:, 1:], want_block)


def test_first_order_matrices_against_direct_evaluation():
    rng = np.random.default_rng(10)
    eps = 1e-4
    worst = 0.0
    for _ in range(40):
        v, a, b = (rng.uniform(-1, 1, 3) for _ in range(3))
        psi = (1.0 + eps * embed_vector(v)) * \
            (1.0 + eps * W(embed_vector(a), embed_covector(b)))
        maff = affine_matrix(v, a, b, eps)
        mcot = cotranslation_matrix(v, a, b, eps)
        for _ in range(3):
            p = rng.uniform(-1, 1, 3)
            hom = np.concatenate(([1.0], p))
            from cl33 import extract_paravector

            direct = extract_paravector(
                psi * embed_paravector(Paravector(1.0, p)) * reversion(psi))
            got = np.concatenate(([direct.weight], direct.vector))
            worst = max(worst, float(np.max(np.abs(got - maff @ hom))))
            inner = psi * hodge_star(embed_paravector(Paravector(1.0, p))) * reversion(psi)
            directc = extract_paravector(hodge_star(inner))
            gotc = np.concatenate(([directc.weight], directc.vector))
            worst = max(worst, float(np.max(np.abs(gotc - mcot @ hom))))
    assert worst <= 1e-6


def test_star_sandwich_bracket_identities():
    # the exact first-order building blocks of the star-sandwich matrix
    rng = np.random.default_rng(11)
    for _ in range(25):
        v, p, a, b = (rng.normal(size=3) for _ in range(4))
        mv, mp = embed_vector(v), embed_vector(p)
        ma, mbs = embed_vector(a), embed_covector(b)
        s1 = hodge_star(Multivector.scalar(1.0))
        sp = hodge_star(mp)
        bivec = W(ma, mbs)
        assert hodge_star(mv * s1 + s1 * mv).is_zero(1e-12)
        # the weight picks up twice the metric pairing (the versor carries
        # half the displacement)
        assert hodge_star(mv * sp + sp * mv).approx_eq(2.0 * g(v, p), atol=1e-10)
        assert hodge_star(bivec * s1 - s1 * bivec).approx_eq(g(a, b), atol=1e-10)
        want = g(a, b) * mp - g(a, p) * embed_vector(b)
        assert hodge_star(bivec * sp - sp * bivec).approx_eq(want, atol=1e-10)


def test_projective_matrix_probe_translation():
    tr = compose([Sandwich(translation_versor([1, 2, 3]))])
    m = projective_matrix_probe(tr)
    want = np.eye(4)
    want[1:, 0] = [1, 2, 3]
    assert np.allclose(m, want, atol=1e-12)


def test_projective_matrix_probe_cotranslation():
    tr = compose([cotranslation([0.5, -1.0, 2.0])])
    m = projective_matrix_probe(tr)
    want = np.eye(4)
    want[0, 1:] = [0.5, -1.0, 2.0]
    assert np.allclose(m, want, atol=1e-12)


def test_projective_matrix_probe_perspective():
    eye = Paravector(1.0, [0.2, -0.3, 0.0])
    n = np.array([0.0, 0.0, 1.0])
    c = 1.0
    tr = PerspectiveMap(eye, n, c)
    m = projective_matrix_probe(tr)
    # rank deficient, and the eye maps to the zero 4-vector
    assert np.linalg.matrix_rank(m, tol=1e-9) == 3
    assert np.allclose(m @ np.array([1.0, 0.2, -0.3, 0.0]), 0.0, atol=1e-12)
    # agrees with the homogeneous oracle up to overall scale
    oracle = perspective_oracle_matrix(eye.vector, n, c)
    ratio = m[np.abs(oracle) > 1e-9] / oracle[np.abs(oracle) > 1e-9]
    assert np.allclose(ratio, ratio.flat[0], atol=1e-9)


def test_matrix_probe_idempotent():
    rng = np.random.default_rng(12)
    u, v = rand_orthonormal(rng)
    tr = compose([Sandwich(rotation_versor(u, v, 0.7)),
                  Sandwich(scale_versor(u, 0.3)),
                  cotranslation([0.1, 0.2, 0.3])])
    m = projective_matrix_probe(tr)
    again = projective_matrix_probe(MatrixTransform(m))
    assert np.allclose(m, again, atol=1e-10)


def test_matrix_probe_rejects_nonlinear():
    class Quadratic(Transform):
        def apply(self, p):
            return Paravector(p.weight, p.vector * float(np.sum(p.vector)))

    with pytest.raises(NotLinearError):
        projective_matrix_probe(Quadratic())


# -- identities and reports ------------------------------------------------------------

def test_grade4_wedge_identity():
    rng = np.random.default_rng(13)
    for _ in range(15):
        a4 = random_homogeneous(rng, 4)
        p = embed_vector(rng.normal(size=3))
        lhs = (a4 * p * a4).grade(5)
        rhs = -1.0 * W((a4 * a4).grade(4), p)
        assert lhs.approx_eq(rhs, atol=1e-9 * max(1.0, lhs.max_abs()))


def test_even_versors_do_not_mix_weight_and_vector():
    rng = np.random.default_rng(14)
    u, v = rand_orthonormal(rng)
    n = rand_unit(rng)
    refl = reflection_versor(n)
    evens = [rotation_versor(u, v, 0.8).U, shear_versor(u, v, 1.1).U,
             scale_versor(u, 0.4).U, refl.U * refl.U]
    for uu in evens:
        p = embed_vector(rng.normal(size=3))
        assert (uu * p * reversion(uu)).grade(0).is_zero(1e-12)
        assert (uu * reversion(uu)).grade(1).is_zero(1e-12)


def test_composed_family_report_all_pass():
    for res in composed_family_report():
        assert res.passed, res


def test_probe_points_deterministic():
    a = probe_points()
    b = probe_points()
    assert len(a) == 12
    assert all(np.array_equal(x, y) for x, y in zip(a, b))


def test_conditions_report_direct_parts():
    # for a point-preserving operator the direct grade-4/5 parts vanish too
    versor = translation_versor([1, 1, 1])
    rep = paravector_conditions(versor.U, [0.2, 0.4, 0.8])
    assert rep.direct4.is_zero(1e-12)
    assert rep.direct5.is_zero(1e-12)
    # a raw grade-6 insertion shows up in the direct residuals
    rep = paravector_conditions(1.0 + 0.01 * I_FULL, [0.2, 0.4, 0.8])
    assert rep.direct5.max_abs() > 1e-4
    assert rep.r4.max_abs() > 1e-4


def test_volume_identity_i_squared():
    assert (I_FULL * I_FULL).approx_eq(1.0)
    assert (OMEGA_V * OMEGA_V).is_zero()
