"""Transformation versors and the two ways of applying them to points.

Sandwich transforms act as P' = epsilon U P (reversed U); reflection carries
epsilon = -1, everything else +1.  Cotranslation is the star-conjugated
sandwich P' = star^-1[T (star P) (reversed T)], which adds g(p, v) to the
weight and is the building block of perspective and pseudo-perspective.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateConfigurationError, DomainError, NotHodgeCompatible
from .euclid import (
    OMEGA_V,
    Paravector,
    embed_paravector,
    embed_vector,
    extract_paravector,
    g,
    sector_vector,
    star_conjugate,
)
from .hodge import hodge_star, hodge_star_inverse
from .multivector import Multivector, reversion, tolerance

#: Tolerance for unit-length / orthogonality preconditions.
PRECONDITION_TOL = 1e-9

REFLECTION = "reflection"
ROTATION = "rotation"
HYPERBOLIC = "hyperbolic"
SHEAR = "shear"
SCALE = "scale"
TRANSLATION = "translation"
COMPOSITE = "composite"
IDENTITY = "identity"


def _check_unit(name, v):
    v = np.asarray(v, dtype=np.float64).reshape(3)
    if abs(g(v, v) - 1.0) > PRECONDITION_TOL:
        raise DomainError(f"{name} must be a unit vector, |{name}|^2 = {g(v, v):.12g}")
    return v


def _check_orthogonal(u, v):
    if abs(g(u, v)) > PRECONDITION_TOL:
        raise DomainError(f"u and v must be orthogonal, g(u, v) = {g(u, v):.12g}")


@dataclass(frozen=True)
class Versor:
    """A sandwich operator: multivector U, sign epsilon, and a kind tag.

    Constructed versors satisfy epsilon * U * (reversed U) = 1; for
    reflection U (reversed U) = -1 and epsilon = -1.
    """

    U: Multivector
    epsilon: int
    kind: str

    def sandwich(self, m: Multivector) -> Multivector:
        out = self.U * m * reversion(self.U)
        return -out if self.epsilon < 0 else out


def identity_versor() -> Versor:
    return Versor(Multivector.scalar(1.0), +1, IDENTITY)


# -- generators (arguments of the exponential forms) -----------------------

def reflection_generator(n):
    """Not an exponential: the reflection operator n+ n- itself."""
    n = _check_unit("n", n)
    return sector_vector(n, +1) * sector_vector(n, -1)


def rotation_generator(u, v, theta):
    up, vp = sector_vector(u, +1), sector_vector(v, +1)
    um, vm = sector_vector(u, -1), sector_vector(v, -1)
    return (theta / 2.0) * (up * vp - um * vm)


def hyperbolic_generator(u, v, eta):
    um, vp = sector_vector(u, -1), sector_vector(v, +1)
    vm, up = sector_vector(v, -1), sector_vector(u, +1)
    return (eta / 2.0) * (um * vp + vm * up)


def shear_generator(u, v, t):
    su = sector_vector(u, +1) + sector_vector(u, -1)
    sv = sector_vector(v, +1) - sector_vector(v, -1)
    return (t / 4.0) * (su * sv)


def scale_generator(u, t):
    return (t / 2.0) * (sector_vector(u, -1) * sector_vector(u, +1))


def translation_generator(v):
    return 0.5 * embed_vector(v)


# -- constructors (closed forms of the exponentials) -----------------------

def reflection_versor(n) -> Versor:
    """Reflection across the plane through the origin with unit normal n."""
    return Versor(reflection_generator(n), -1, REFLECTION)


def rotation_versor(u, v, theta) -> Versor:
    """Rotation by theta in the plane of the orthonormal pair (u, v).

    The generator splits into commuting sector exponentials, each a circular
    rotor; the resulting map takes v toward u for theta > 0
    (u -> cos(theta) u - sin(theta) v, v -> cos(theta) v + sin(theta) u).
    """
    u = _check_unit("u", u)
    v = _check_unit("v", v)
    _check_orthogonal(u, v)
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    up, vp = sector_vector(u, +1), sector_vector(v, +1)
    um, vm = sector_vector(u, -1), sector_vector(v, -1)
    U = (c + s * (up * vp)) * (c - s * (um * vm))
    return Versor(U, +1, ROTATION)


def hyperbolic_versor(u, v, eta) -> Versor:
    """Hyperbolic rotation by eta in the plane of the orthonormal pair (u, v)."""
    u = _check_unit("u", u)
    v = _check_unit("v", v)
    _check_orthogonal(u, v)
    ch, sh = math.cosh(eta / 2.0), math.sinh(eta / 2.0)
    um, vp = sector_vector(u, -1), sector_vector(v, +1)
    vm, up = sector_vector(v, -1), sector_vector(u, +1)
    U = (ch + sh * (um * vp)) * (ch + sh * (vm * up))
    return Versor(U, +1, HYPERBOLIC)


def shear_versor(u, v, t) -> Versor:
    """Shear p -> p + t p_v u in the plane of the orthogonal pair (u, v).

    The generator is nilpotent, so the exponential terminates after the
    linear term.
    """
    u = np.asarray(u, dtype=np.float64).reshape(3)
    v = np.asarray(v, dtype=np.float64).reshape(3)
    _check_orthogonal(u, v)
    return Versor(1.0 + shear_generator(u, v, t), +1, SHEAR)


def scale_versor(u, t) -> Versor:
    """Non-uniform scale by e^t along the unit direction u."""
    u = _check_unit("u", u)
    ch, sh = math.cosh(t / 2.0), math.sinh(t / 2.0)
    U = ch + sh * (sector_vector(u, -1) * sector_vector(u, +1))
    return Versor(U, +1, SCALE)


def translation_versor(v) -> Versor:
    """Translation by v; the generator v/2 squares to zero."""
    return Versor(1.0 + translation_generator(v), +1, TRANSLATION)


# -- application -----------------------------------------------------------

def apply_sandwich(versor: Versor, p: Paravector, atol=None, rtol=None) -> Paravector:
    """epsilon U P (reversed U), extracted back to a weighted point.

    Residue errors propagate from extraction when the sandwich does not
    preserve the point subspace (it does for every constructed versor).
    """
    out = versor.sandwich(embed_paravector(p))
    kwargs = {}
    if atol is not None:
        kwargs["atol"] = atol
    if rtol is not None:
        kwargs["rtol"] = rtol
    return extract_paravector(out, **kwargs)


def apply_cotranslation(v, p: Paravector) -> Paravector:
    """star^-1[T (star P) (reversed T)] with T the translation versor of v.

    Adds g(p, v) to the weight and leaves the vector part unchanged.
    """
    t = translation_versor(v)
    inner = t.U * hodge_star(embed_paravector(p)) * reversion(t.U)
    return extract_paravector(hodge_star_inverse(inner))


# -- Hodge-conjugate form ---------------------------------------------------

@dataclass(frozen=True)
class HodgeVersor:
    """A versor for star-sandwich application: P' = star^-1[U' (star P) (rev U')].

    For a sandwich versor U satisfying the volume-scaling condition, the
    equivalent U' is lam * (star conjugate of U) with lam > 0.
    """

    uprime: Multivector
    lam: float


def cotranslation_versor(v) -> HodgeVersor:
    """The translation versor of v packaged for star-sandwich application."""
    return HodgeVersor(translation_versor(v).U, 1.0)


def hodge_conjugate_versor(versor: Versor) -> HodgeVersor:
    """Build the star-sandwich equivalent (lam U*, lam) of a sandwich versor.

    U* is the pseudoscalar conjugate of U, and lam^2 is read off
    (reversed U*) Omega_V U* = lam^2 Omega_V.  When the left side is not
    proportional to Omega_V (translations), raises NotHodgeCompatible with
    the offending residual magnitude attached.
    """
    ustar = star_conjugate(versor.U)
    m = reversion(ustar) * OMEGA_V * ustar
    om = OMEGA_V.coeffs
    lam2 = float(np.dot(m.coeffs, om) / np.dot(om, om))
    residual = m - lam2 * OMEGA_V
    worst = residual.max_abs()
    tol = tolerance(max(1.0, m.max_abs()))
    if worst > tol or lam2 <= 0.0:
        raise NotHodgeCompatible(
            f"volume-scaling condition fails for kind={versor.kind!r}: "
            f"residual {worst:.3e}, lam^2 = {lam2:.6g}", residual=worst)
    lam = math.sqrt(lam2)
    return HodgeVersor(lam * ustar, lam)


def apply_hodge_sandwich(h: HodgeVersor, p: Paravector) -> Paravector:
    """star^-1[U' (star P) (reversed U')] extracted back to a point."""
    inner = h.uprime * hodge_star(embed_paravector(p)) * reversion(h.uprime)
    return extract_paravector(hodge_star_inverse(inner))


# -- projections ------------------------------------------------------------

def perspective_project(eye: Paravector, n, c, p: Paravector) -> Paravector:
    """Perspective projection of p from the eye onto the plane x . n = c.

    Implemented as translate-to-eye, cotranslate by n/a, translate back,
    applied to p - w_p * eye, with a = c - g(n, e).  The result is a weighted
    point on the plane whose weight is g(p - e, n)/a for affine p; points
    behind the eye come back with negative weight and are conjugated
    (vector part negated) so that their represented location is still the
    intersection with the plane.

    Raises DegenerateConfigurationError when the eye lies on the plane
    (a = 0).
    """
    n = np.asarray(n, dtype=np.float64).reshape(3)
    e = np.asarray(eye.vector, dtype=np.float64)
    if abs(eye.weight - 1.0) > PRECONDITION_TOL:
        raise DomainError(f"eye must be an affine point, weight = {eye.weight:g}")
    a = float(c) - g(n, e)
    if abs(a) <= tolerance(max(abs(c), float(np.max(np.abs(n))), float(np.max(np.abs(e))))):
        raise DegenerateConfigurationError(
            f"eye lies on the projection plane (c - n.e = {a:.3e})")
    out = _perspective_linear(eye, n, a, p)
    if out.weight < 0.0:
        return Paravector(out.weight, -out.vector)
    return out


def _perspective_linear(eye: Paravector, n, a, p: Paravector) -> Paravector:
    """The linear (un-conjugated) perspective map on weighted points."""
    e = eye.vector
    q = Paravector(p.weight - p.weight * eye.weight, p.vector - p.weight * e)
    q = apply_sandwich(translation_versor(-e), q)
    q = apply_cotranslation(n / a, q)
    return apply_sandwich(translation_versor(e), q)


def pseudo_perspective(n, p: Paravector) -> Paravector:
    """Cotranslation by the unit view direction n.

    Sends the eye point (weight 1, position -n) to the point at infinity in
    direction -n and maps a view frustum to a box.
    """
    n = _check_unit("n", n)
    return apply_cotranslation(n, p)


# -- composition ------------------------------------------------------------

class Transform:
    """A point transformation; concrete forms below."""

    def apply(self, p: Paravector) -> Paravector:
        raise NotImplementedError


@dataclass(frozen=True)
class Sandwich(Transform):
    versor: Versor

    def apply(self, p: Paravector) -> Paravector:
        return apply_sandwich(self.versor, p)


@dataclass(frozen=True)
class HodgeSandwich(Transform):
    hodge: HodgeVersor

    def apply(self, p: Paravector) -> Paravector:
        return apply_hodge_sandwich(self.hodge, p)


def cotranslation(v) -> HodgeSandwich:
    return HodgeSandwich(cotranslation_versor(v))


@dataclass(frozen=True)
class PerspectiveMap(Transform):
    """Perspective as a pipeline stage: the linear map, no orientation
    conjugation, so that the action has a well-defined 4x4 matrix."""

    eye: Paravector
    n: np.ndarray
    c: float

    def __post_init__(self):
        n = np.asarray(self.n, dtype=np.float64).reshape(3)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "c", float(self.c))

    @property
    def a(self) -> float:
        return self.c - g(self.n, self.eye.vector)

    def apply(self, p: Paravector) -> Paravector:
        a = self.a
        if abs(a) <= tolerance(max(abs(self.c), float(np.max(np.abs(self.n))),
                                   float(np.max(np.abs(self.eye.vector))))):
            raise DegenerateConfigurationError(
                f"eye lies on the projection plane (c - n.e = {a:.3e})")
        return _perspective_linear(self.eye, self.n, a, p)


@dataclass(frozen=True)
class Composed(Transform):
    stages: tuple

    def apply(self, p: Paravector) -> Paravector:
        for stage in self.stages:
            p = stage.apply(p)
        return p


def _append(stages, stage):
    if isinstance(stage, Sandwich) and stages and isinstance(stages[-1], Sandwich):
        prev = stages[-1].versor
        fused = Versor(stage.versor.U * prev.U, stage.versor.epsilon * prev.epsilon, COMPOSITE)
        return stages[:-1] + [Sandwich(fused)]
    if isinstance(stage, HodgeSandwich) and stages and isinstance(stages[-1], HodgeSandwich):
        prev = stages[-1].hodge
        return stages[:-1] + [HodgeSandwich(HodgeVersor(stage.hodge.uprime * prev.uprime,
                                                        stage.hodge.lam * prev.lam))]
    return stages + [stage]


def compose(transforms) -> Composed:
    """Fuse a transform sequence stage by stage.

    Adjacent sandwiches fuse into one versor (U21 = U2 U1, epsilons
    multiplied); adjacent star-sandwiches fuse the same way.  Mixed
    sequences stay as a stage list, applied in order.  An empty input is the
    identity.
    """
    stages: list[Transform] = []
    for t in transforms:
        if isinstance(t, Composed):
            for s in t.stages:
                stages = _append(stages, s)
        elif isinstance(t, Transform):
            stages = _append(stages, t)
        else:
            raise TypeError(f"not a Transform: {t!r}")
    return Composed(tuple(stages))


# -- sector behavior ---------------------------------------------------------

@dataclass(frozen=True)
class SectorReport:
    """How a versor's sandwich treats points whose vector part lives in one
    generator sector: largest coefficient leaking outside each sector and the
    resulting verdicts."""

    plus_off_sector: float
    minus_off_sector: float
    preserves_plus: bool
    preserves_minus: bool

    @property
    def plus_image(self) -> str:
        return "preserved" if self.preserves_plus else "mixed"

    @property
    def minus_image(self) -> str:
        return "preserved" if self.preserves_minus else "mixed"


def sector_image(versor: Versor, probes=8, seed=8451) -> SectorReport:
    """Probe the sandwich with points carrying single-sector vector parts.

    A sector is preserved when every image stays inside scalar + that
    sector's vector span, within tolerance.
    """
    rng = np.random.default_rng(seed)
    worst = {+1: 0.0, -1: 0.0}
    allowed = {+1: np.array([0, 1, 2, 4]), -1: np.array([0, 8, 16, 32])}
    for sector in (+1, -1):
        off = np.ones(64, dtype=bool)
        off[allowed[sector]] = False
        for _ in range(probes):
            coords = rng.uniform(-1.0, 1.0, size=3)
            m = 1.0 + sector_vector(coords, sector)
            image = versor.sandwich(m)
            worst[sector] = max(worst[sector],
                                float(np.max(np.abs(image.coeffs[off]))))
    scale = max(1.0, versor.U.max_abs() ** 2)
    return SectorReport(
        plus_off_sector=worst[+1],
        minus_off_sector=worst[-1],
        preserves_plus=worst[+1] <= tolerance(scale),
        preserves_minus=worst[-1] <= tolerance(scale),
    )
