"""Which operators keep points points: preservation conditions, classification
of infinitesimal generators, and 4x4 matrix extraction.

A general sandwich P -> Psi P (reversed Psi) lands back in the point subspace
only if four grade-balance conditions on the grade parts of Psi hold, the
grade 4 and 5 parts of the image vanish, and the image's vector part is free
of covector components.  The checker below evaluates all of these as explicit
residual multivectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotLinearError
from .euclid import (
    Paravector,
    embed_covector,
    embed_paravector,
    embed_vector,
    g,
)
from .multivector import (
    Multivector,
    outer_product,
    reversion,
    tolerance,
    vector_contract,
)
from .versors import Transform

#: Classification thresholds: residuals at or below ACCEPT_FACTOR * scale are
#: exact-to-rounding; residuals above REJECT_FACTOR * scale^2 are genuine.
#: The band in between yields an "inconclusive" verdict.
ACCEPT_FACTOR = 1e-12
REJECT_FACTOR = 1e-6


def grade_parts(psi: Multivector) -> tuple[Multivector, ...]:
    """The seven homogeneous parts of psi; their sum reconstructs psi."""
    return tuple(psi.grade(k) for k in range(7))


def correction_terms(parts, p: Multivector):
    """The four higher-grade cross terms entering the preservation conditions.

    ``parts`` are the grade parts of Psi and ``p`` is an embedded grade-1
    probe (ignored by the first two terms).
    """
    P = parts
    g4 = lambda m: m.grade(4)
    g5 = lambda m: m.grade(5)
    d1 = (2 * g4(P[1] * P[5]) + 2 * g4(P[2] * (P[4] - P[6]))
          + g4(P[3] * (-1 * P[3] + 2 * P[5])) + g4(P[4] * P[4]))
    d2 = (2 * g5(P[1] * (P[4] - P[6])) + 2 * g5(P[2] * (-1 * P[3] + P[5]))
          + 2 * g5(P[3] * P[4]))
    d3 = (2 * g4(P[1] * p * (P[4] - P[6])) + 2 * g4(P[2] * p * (-1 * P[3] + P[5]))
          + 2 * g4(P[3] * p * (P[4] - P[6])) + 2 * g4(P[4] * p * P[5]))
    d4 = (2 * g5(P[1] * p * P[5]) + 2 * g5(P[2] * p * (P[4] - P[6]))
          + g5(P[3] * p * (-1 * P[3] + 2 * P[5])) + g5(P[4] * p * P[4]))
    return d1, d2, d3, d4


@dataclass(frozen=True)
class ConditionReport:
    """Residuals of the point-preservation analysis at one probe point.

    ``r1``..``r4`` are the four condition left-hand sides, which equal the
    grade-4/5 parts of Psi (rev Psi) and Psi p (rev Psi) respectively;
    ``direct4`` and ``direct5`` are the grade-4 and grade-5 parts of the
    transformed point (their sum); ``covector_residual`` collects the
    covector components of its vector part.  All must vanish for the image
    to be a point.
    """

    r1: Multivector
    r2: Multivector
    r3: Multivector
    r4: Multivector
    covector_residual: Multivector
    direct4: Multivector
    direct5: Multivector

    def max_residual(self) -> float:
        return max(m.max_abs() for m in
                   (self.r1, self.r2, self.r3, self.r4,
                    self.covector_residual, self.direct4, self.direct5))


def paravector_conditions(psi: Multivector, p) -> ConditionReport:
    """Evaluate every preservation residual for Psi at the probe point p."""
    parts = grade_parts(psi)
    pm = embed_vector(p)
    d1, d2, d3, d4 = correction_terms(parts, pm)
    P = parts
    r1 = 2 * (P[0] * P[4]) - outer_product(P[2], P[2]) - 2 * outer_product(P[1], P[3]) + d1
    r2 = 2 * (P[0] * P[5]) + d2
    # the scalar/grade-5 cross term completes the third condition; without it
    # operators carrying both parts (e.g. rotation composed with translation)
    # would be flagged even though their images stay points
    r3 = (outer_product(2 * (P[0] * P[3]), pm)
          - outer_product(2 * outer_product(P[1], P[2]), pm)
          + 2 * (P[0] * vector_contract(pm, P[5])) + d3)
    r4 = (outer_product(2 * (P[0] * P[4]), pm)
          - outer_product(outer_product(P[2], P[2]), pm)
          + outer_product(2 * outer_product(P[1], P[3]), pm)
          - 2 * (P[0] * vector_contract(pm, P[6])) + d4)
    image = psi * embed_paravector(Paravector(1.0, p)) * reversion(psi)
    cov = (image.coeffs[1] - image.coeffs[8]) * embed_covector([1, 0, 0]) \
        + (image.coeffs[2] - image.coeffs[16]) * embed_covector([0, 1, 0]) \
        + (image.coeffs[4] - image.coeffs[32]) * embed_covector([0, 0, 1])
    return ConditionReport(r1, r2, r3, r4, cov, image.grade(4), image.grade(5))


def probe_points(extra=8, seed=51966):
    """Deterministic probe set: the zero vector, the three axes, and
    ``extra`` seeded points with coordinates in [-1, 1]."""
    rng = np.random.default_rng(seed)
    pts = [np.zeros(3), np.eye(3)[0], np.eye(3)[1], np.eye(3)[2]]
    pts.extend(rng.uniform(-1.0, 1.0, size=3) for _ in range(extra))
    return pts


ACCEPT = "accept"
REJECT = "reject"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Classification:
    verdict: str
    max_residual: float
    acts_as_identity: bool
    detail: str = ""


def classify_infinitesimal(k: int, psi: Multivector, eps: float = 1e-2) -> Classification:
    """Decide whether 1 + eps * psi (psi homogeneous of grade k) preserves
    points, by evaluating the residuals over the probe set.

    Residual at rounding level: accepted (with a flag when the action is the
    identity, as for plain vector-vector bivector generators).  Residual
    clearly above rounding: rejected.  The band between the two thresholds
    reports an inconclusive verdict instead of guessing.
    """
    if not psi.is_homogeneous(k, tol=tolerance(psi.max_abs())):
        raise ValueError(f"psi must be homogeneous of grade {k}")
    phi = 1.0 + eps * psi
    scale = max(1.0, phi.max_abs())
    worst = 0.0
    identity = True
    for p in probe_points():
        rep = paravector_conditions(phi, p)
        worst = max(worst, rep.max_residual())
        image = phi * embed_paravector(Paravector(1.0, p)) * reversion(phi)
        delta = image - embed_paravector(Paravector(1.0, p))
        if delta.max_abs() > tolerance(scale ** 2):
            identity = False
    if worst <= ACCEPT_FACTOR * scale:
        return Classification(ACCEPT, worst, identity)
    if worst > REJECT_FACTOR * scale * scale:
        return Classification(REJECT, worst, False)
    return Classification(
        INCONCLUSIVE, worst, False,
        detail=f"residual {worst:.3e} falls between the accept and reject thresholds")


# -- matrices ----------------------------------------------------------------

def affine_matrix(v, a, b, eps) -> np.ndarray:
    """First-order matrix of the sandwich with (1 + eps v)(1 + eps a ^ b*):
    weight row (1,0,0,0), translation column 2 eps v, block I + eps a b^T."""
    v = np.asarray(v, dtype=np.float64).reshape(3)
    a = np.asarray(a, dtype=np.float64).reshape(3)
    b = np.asarray(b, dtype=np.float64).reshape(3)
    m = np.eye(4)
    m[1:, 0] = 2.0 * eps * v
    m[1:, 1:] += eps * np.outer(a, b)
    return m


def cotranslation_matrix(v, a, b, eps) -> np.ndarray:
    """First-order matrix of the star-sandwich with the same operator:
    weight row picks up 2 eps v, block I - eps b a^T, plus eps g(a,b) times
    the identity."""
    v = np.asarray(v, dtype=np.float64).reshape(3)
    a = np.asarray(a, dtype=np.float64).reshape(3)
    b = np.asarray(b, dtype=np.float64).reshape(3)
    m = np.eye(4)
    m[0, 1:] = 2.0 * eps * v
    m[1:, 1:] -= eps * np.outer(b, a)
    return m + eps * g(a, b) * np.eye(4)


def projective_matrix_probe(transform: Transform, check_points=10, seed=7151,
                            rtol=1e-9) -> np.ndarray:
    """Extract the 4x4 matrix of a transform by probing the basis of
    (weight, vector) space, then verify it against the transform on random
    weighted points.  Raises NotLinearError on mismatch.
    """
    probes = [Paravector(1.0, np.zeros(3)),
              Paravector(0.0, [1, 0, 0]),
              Paravector(0.0, [0, 1, 0]),
              Paravector(0.0, [0, 0, 1])]
    m = np.empty((4, 4))
    for j, pr in enumerate(probes):
        out = transform.apply(pr)
        m[0, j] = out.weight
        m[1:, j] = out.vector
    rng = np.random.default_rng(seed)
    for _ in range(check_points):
        p = Paravector(rng.uniform(-1, 1), rng.uniform(-1, 1, 3))
        got = transform.apply(p)
        want = m @ np.concatenate(([p.weight], p.vector))
        dev = max(abs(got.weight - want[0]), float(np.max(np.abs(got.vector - want[1:]))))
        scale = max(1.0, float(np.max(np.abs(want))))
        if dev > rtol * scale:
            raise NotLinearError(
                f"transform deviates from its probe matrix by {dev:.3e} at a random point")
    return m


@dataclass(frozen=True)
class MatrixTransform(Transform):
    """A plain 4x4 matrix acting on (weight, vector), wrapped as a transform."""

    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "matrix",
                           np.asarray(self.matrix, dtype=np.float64).reshape(4, 4))

    def apply(self, p: Paravector) -> Paravector:
        out = self.matrix @ np.concatenate(([p.weight], p.vector))
        return Paravector(out[0], out[1:])


# -- composed infinitesimal families ------------------------------------------

def family_two_vectors(eps, eta, v, u):
    """(1 + eps v)(1 + eta u): grades 0..2, with a vector-vector bivector."""
    return (1.0 + eps * embed_vector(v)) * (1.0 + eta * embed_vector(u))


def family_vector_mixed(eps, eta, v, a, b):
    """(1 + eps v)(1 + eta a ^ b*): grades 0..3."""
    return (1.0 + eps * embed_vector(v)) * \
        (1.0 + eta * outer_product(embed_vector(a), embed_covector(b)))


def family_two_mixed(eps, eta, u, v, a, b):
    """(1 + eps u ^ v*)(1 + eta a ^ b*): grades 0, 2, 4."""
    return (1.0 + eps * outer_product(embed_vector(u), embed_covector(v))) * \
        (1.0 + eta * outer_product(embed_vector(a), embed_covector(b)))


@dataclass(frozen=True)
class FamilyResult:
    family: str
    eps: float
    eta: float
    max_residual: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.threshold


def composed_family_report(eps_values=(0.1, 0.01), draws=3, seed=60221) -> list:
    """Evaluate the preservation residuals of the three composed infinitesimal
    families over random parameter draws and the probe set.

    Every family preserves points exactly, so every residual must sit at
    rounding level (1e-12 times the scale).
    """
    rng = np.random.default_rng(seed)
    probes = probe_points()
    results = []
    for eps in eps_values:
        for eta in eps_values:
            for _ in range(draws):
                v, u, a, b = (rng.uniform(-1, 1, 3) for _ in range(4))
                fams = [
                    ("two-vectors", family_two_vectors(eps, eta, v, u)),
                    ("vector-and-mixed-bivector", family_vector_mixed(eps, eta, v, a, b)),
                    ("two-mixed-bivectors", family_two_mixed(eps, eta, u, v, a, b)),
                ]
                for name, psi in fams:
                    scale = (1.0 + psi.max_abs()) ** 2 * 2.0
                    worst = max(paravector_conditions(psi, p).max_residual()
                                for p in probes)
                    results.append(FamilyResult(name, eps, eta, worst,
                                                ACCEPT_FACTOR * scale))
    return results
