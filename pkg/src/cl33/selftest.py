"""Self-contained acceptance checks, runnable from the CLI or the test suite.

Each check returns (passed, detail).  ``run_selftest`` executes all of them,
prints one line per check, and reports the wall-clock total (budget: under a
minute on an ordinary machine).
"""

from __future__ import annotations

import time

import numpy as np

from . import analysis, pipeline
from .blades import BLADE_COUNT, SQUARES, blade_geometric_product
from .errors import DegenerateConfigurationError, NotHodgeCompatible
from .euclid import (
    E,
    OMEGA_V,
    Paravector,
    embed_covector,
    embed_paravector,
    embed_vector,
    extract_paravector,
    g,
    normalize_point,
)
from .hodge import hodge_star
from .multivector import Multivector, exponential, outer_product, reversion
from .versors import (
    HodgeSandwich,
    Sandwich,
    apply_cotranslation,
    apply_hodge_sandwich,
    apply_sandwich,
    compose,
    cotranslation_versor,
    hodge_conjugate_versor,
    hyperbolic_versor,
    perspective_project,
    pseudo_perspective,
    reflection_versor,
    rotation_generator,
    rotation_versor,
    scale_versor,
    sector_image,
    shear_versor,
    translation_versor,
)


def _rand_unit(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def _rand_orthonormal(rng):
    a = _rand_unit(rng)
    b = rng.normal(size=3)
    b -= (b @ a) * a
    return a, b / np.linalg.norm(b)


def _rel_dev(got: Paravector, want_w, want_p) -> float:
    num = max(abs(got.weight - want_w), float(np.max(np.abs(got.vector - want_p))))
    scale = max(1.0, abs(want_w), float(np.max(np.abs(want_p))))
    return num / scale


def _naive_blade_product(a, b, squares):
    factors = [i for i in range(6) if a >> i & 1] + [i for i in range(6) if b >> i & 1]
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            if factors[i] > factors[i + 1]:
                factors[i], factors[i + 1] = factors[i + 1], factors[i]
                sign = -sign
                changed = True
    out = []
    i = 0
    while i < len(factors):
        if i + 1 < len(factors) and factors[i] == factors[i + 1]:
            sign *= squares[factors[i]]
            i += 2
        else:
            out.append(factors[i])
            i += 1
    mask = 0
    for f in out:
        mask |= 1 << f
    return sign, mask


def check_algebra_axioms(squares=SQUARES, triples=1000, seed=11):
    """Blade products against a sorted-list oracle, the defining generator
    relations, associativity, and the derived embedded-basis relations."""
    for a in range(BLADE_COUNT):
        for b in range(BLADE_COUNT):
            if blade_geometric_product(a, b) != _naive_blade_product(a, b, squares):
                return False, f"blade product mismatch at masks ({a}, {b})"
    gens = [Multivector.blade(1 << i) for i in range(6)]
    for i in range(6):
        for j in range(6):
            anti = gens[i] * gens[j] + gens[j] * gens[i]
            if i < 3 and j < 3:
                want = 2.0 * (i == j) * squares[i]
            elif i >= 3 and j >= 3:
                want = 2.0 * (i == j) * squares[i]
            else:
                want = 0.0
            if not anti.approx_eq(want):
                return False, f"defining relation fails for generators ({i}, {j})"
    rng = np.random.default_rng(seed)
    for _ in range(triples):
        a, b, c = (Multivector(rng.normal(size=BLADE_COUNT)) for _ in range(3))
        lhs, rhs = (a * b) * c, a * (b * c)
        scale = a.max_abs() * b.max_abs() * c.max_abs() * BLADE_COUNT
        if not lhs.approx_eq(rhs, atol=1e-12 + 1e-9 * scale):
            return False, "associativity failure on random triple"
        u, v = rng.normal(size=3), rng.normal(size=3)
        mu, mv = embed_vector(u), embed_vector(v)
        su, sv = embed_covector(u), embed_covector(v)
        if not (mu * mv + mv * mu).approx_eq(0.0, atol=1e-10):
            return False, "embedded vectors fail to anticommute"
        if not (su * sv + sv * su).approx_eq(0.0, atol=1e-10):
            return False, "embedded covectors fail to anticommute"
        if not (mu * sv + sv * mu).approx_eq(g(u, v), atol=1e-10):
            return False, "vector/covector anticommutator is not the metric"
    return True, f"oracle x4096 blade pairs, {triples} random triples"


def check_transform_formulas(count=1000, seed=12):
    """Sandwich results against the closed-form right-hand sides."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(count):
        p = rng.uniform(-2, 2, 3)
        P = Paravector(1.0, p)
        n = _rand_unit(rng)
        out = apply_sandwich(reflection_versor(n), P)
        worst = max(worst, _rel_dev(out, 1.0, p - 2 * (p @ n) * n))
        u, v = _rand_orthonormal(rng)
        th = rng.uniform(-np.pi, np.pi)
        series = exponential(rotation_generator(u, v, th))
        out = apply_sandwich(rotation_versor(u, v, th), P)
        ser = extract_paravector(series * embed_paravector(P) * reversion(series))
        worst = max(worst, _rel_dev(out, ser.weight, ser.vector))
        eta = rng.uniform(-2, 2)
        out = apply_sandwich(hyperbolic_versor(u, v, eta), P)
        pu, pv = p @ u, p @ v
        hyp = (u * (pu * np.cosh(eta) + pv * np.sinh(eta))
               + v * (pv * np.cosh(eta) + pu * np.sinh(eta))
               + (p - pu * u - pv * v))
        worst = max(worst, _rel_dev(out, 1.0, hyp))
        t = rng.uniform(-3, 3)
        out = apply_sandwich(shear_versor(u, v, t), P)
        worst = max(worst, _rel_dev(out, 1.0, p + t * (p @ v) * u))
        t = rng.uniform(-2, 2)
        out = apply_sandwich(scale_versor(u, t), P)
        ppar = (p @ u) * u
        worst = max(worst, _rel_dev(out, 1.0, (p - ppar) + np.exp(t) * ppar))
        w = rng.uniform(-2, 2, 3)
        out = apply_sandwich(translation_versor(w), P)
        worst = max(worst, _rel_dev(out, 1.0, p + w))
        out = apply_cotranslation(w, P)
        worst = max(worst, _rel_dev(out, 1.0 + g(p, w), p))
    ok = worst <= 1e-9
    return ok, f"{count} draws per transform, worst relative deviation {worst:.2e}"


def check_hodge_star(count=1000, seed=13):
    """Star twice is the identity on the Euclidean exterior algebra, plus the
    three fixed values with their exact factors."""
    w = outer_product
    basis = [Multivector.scalar(1.0), E[0], E[1], E[2],
             w(E[0], E[1]), w(E[0], E[2]), w(E[1], E[2]), OMEGA_V]
    rng = np.random.default_rng(seed)
    for _ in range(count):
        a = Multivector()
        for coeff, b in zip(rng.normal(size=8), basis):
            a = a + float(coeff) * b
        if not hodge_star(hodge_star(a)).approx_eq(a):
            return False, "star twice is not the identity on a random element"
    if not hodge_star(Multivector.scalar(1.0)).approx_eq(OMEGA_V):
        return False, "star of 1 is not the volume trivector"
    gens = [Multivector.blade(1 << i) for i in range(6)]
    sector_sum_12 = Multivector()
    for sa in (0, 3):
        for sb in (0, 3):
            sector_sum_12 = sector_sum_12 + w(gens[0 + sa], gens[1 + sb])
    if not hodge_star(sector_sum_12).approx_eq(2.0 * (gens[2] + gens[5])):
        return False, "sector-sum bivector star value is off"
    v = rng.normal(size=3)
    triple = w(sector_sum_12, embed_vector(v))
    if not hodge_star(triple).approx_eq(4.0 * v[2], atol=1e-12, rtol=1e-12):
        return False, "sector-sum trivector star value is off"
    return True, f"{count} random round trips, fixed values exact"


def check_perspective(count=100, seed=14):
    """Projection against the line-plane intersection oracle; degenerate
    configurations rejected; pseudo-perspective maps the eye to infinity and
    matches its homogeneous matrix."""
    rng = np.random.default_rng(seed)
    done = 0
    while done < count:
        e = rng.uniform(-2, 2, 3)
        n = _rand_unit(rng)
        c = rng.uniform(-2, 2)
        a = c - n @ e
        if abs(a) < 0.1:
            continue
        q = rng.normal(size=3)
        q -= (q @ n) * n
        p = e + rng.uniform(0.1, 3.0) * (a * n + q)
        out = perspective_project(Paravector(1.0, e), n, c, Paravector(1.0, p))
        if out.weight <= 0:
            return False, "front point produced non-positive weight"
        loc = normalize_point(out).vector
        ell = e + a * (p - e) / (n @ (p - e))
        if np.max(np.abs(loc - ell)) > 1e-9 * max(1.0, np.max(np.abs(ell))):
            return False, "projection disagrees with the intersection oracle"
        if abs(n @ loc - c) > 1e-9 * max(1.0, abs(c)):
            return False, "projected point is off the plane"
        done += 1
    try:
        perspective_project(Paravector(1.0, [0, 0, 1]), [0, 0, 1], 1.0,
                            Paravector(1.0, [1, 1, 2]))
        return False, "eye-on-plane configuration was not rejected"
    except DegenerateConfigurationError:
        pass
    n = np.array([0.0, 0.0, 1.0])
    eye_image = pseudo_perspective(n, Paravector(1.0, -n))
    if not (eye_image.is_at_infinity and np.allclose(eye_image.vector, -n, atol=1e-15)):
        return False, "pseudo-perspective does not send the eye to infinity"
    for _ in range(count):
        n = _rand_unit(rng)
        p = rng.uniform(-2, 2, 3)
        out = pseudo_perspective(n, Paravector(1.0, p))
        m = np.eye(4)
        m[0, 1:] = n
        hom = m @ np.concatenate(([1.0], p))
        if _rel_dev(out, hom[0], hom[1:]) > 1e-9:
            return False, "pseudo-perspective disagrees with its matrix"
    return True, f"{count} configurations per projection"


def check_hodge_equivalence(count=100, seed=15):
    """Sandwich and star-sandwich forms agree for the five compatible kinds.

    The scale row needs the Hodge versor e^{t/2} D(u; -t): the prefactor is
    determined by the volume-scaling condition (rev U*) Omega U* = lam^2
    Omega, and any other scale changes the output weight.
    """
    rng = np.random.default_rng(seed)
    t = 0.9
    u, v = _rand_orthonormal(rng)
    rows = [
        ("reflection", reflection_versor(_rand_unit(rng)), 1.0),
        ("rotation", rotation_versor(u, v, 1.2), 1.0),
        ("hyperbolic", hyperbolic_versor(u, v, -0.8), 1.0),
        ("shear", shear_versor(u, v, 1.5), 1.0),
        ("scale", scale_versor(u, t), float(np.exp(t / 2))),
    ]
    for name, versor, lam_expected in rows:
        h = hodge_conjugate_versor(versor)
        if abs(h.lam - lam_expected) > 1e-12 * max(1.0, lam_expected):
            return False, f"{name}: lam = {h.lam:.12g}, expected {lam_expected:.12g}"
        for _ in range(count):
            p = Paravector(rng.uniform(-1, 1), rng.uniform(-2, 2, 3))
            a1 = apply_sandwich(versor, p)
            a2 = apply_hodge_sandwich(h, p)
            if _rel_dev(a2, a1.weight, a1.vector) > 1e-9:
                return False, f"{name}: forms disagree"
    return True, f"5 kinds x {count} points; lam = (1, 1, 1, 1, e^(t/2))"


def check_translation_incompatibility(count=50, seed=16):
    """Translations fail the volume-scaling condition with a visible residual."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        v = rng.uniform(-2, 2, 3)
        if np.linalg.norm(v) < 0.1:
            continue
        try:
            hodge_conjugate_versor(translation_versor(v))
            return False, "translation accepted as Hodge-compatible"
        except NotHodgeCompatible as exc:
            if exc.residual <= 1e-6:
                return False, f"translation residual too small: {exc.residual:.3e}"
    return True, f"{count} random translations rejected"


def check_classification(seed=17):
    """Composed families accepted at rounding level; generators of grades
    3..6 and covector bivectors rejected; grades 0, 1 and rank-1 mixed
    bivectors accepted."""
    for res in analysis.composed_family_report():
        if not res.passed:
            return False, (f"family {res.family} (eps={res.eps}, eta={res.eta}) "
                           f"residual {res.max_residual:.3e}")
    rng = np.random.default_rng(seed)
    from .blades import GRADES

    for k in (3, 4, 5, 6):
        coeffs = np.where(GRADES == k, rng.normal(size=BLADE_COUNT), 0.0)
        verdict = analysis.classify_infinitesimal(k, Multivector(coeffs))
        if verdict.verdict != analysis.REJECT or verdict.max_residual <= 1e-6:
            return False, f"grade-{k} generator not rejected"
    cov2 = outer_product(embed_covector(rng.normal(size=3)),
                         embed_covector(rng.normal(size=3)))
    if analysis.classify_infinitesimal(2, cov2).verdict != analysis.REJECT:
        return False, "covector bivector not rejected"
    if analysis.classify_infinitesimal(0, Multivector.scalar(0.7)).verdict != analysis.ACCEPT:
        return False, "scalar generator not accepted"
    if analysis.classify_infinitesimal(1, embed_vector(rng.normal(size=3))).verdict \
            != analysis.ACCEPT:
        return False, "vector generator not accepted"
    mixed = outer_product(embed_vector(rng.normal(size=3)),
                          embed_covector(rng.normal(size=3)))
    if analysis.classify_infinitesimal(2, mixed).verdict != analysis.ACCEPT:
        return False, "rank-1 mixed bivector not accepted"
    null2 = outer_product(E[0], E[1])
    c2 = analysis.classify_infinitesimal(2, null2)
    if not (c2.verdict == analysis.ACCEPT and c2.acts_as_identity):
        return False, "vector-vector bivector should be accepted as a null action"
    return True, "families at rounding; grade/covector rejections confirmed"


def check_projective_matrices(count=100, points=1000, seed=18):
    """First-order matrices against direct evaluation at eps = 1e-4, and
    probe matrices against the transforms they summarize."""
    rng = np.random.default_rng(seed)
    eps = 1e-4
    worst = 0.0
    for _ in range(count):
        v, a, b = (rng.uniform(-1, 1, 3) for _ in range(3))
        psi = (1.0 + eps * embed_vector(v)) * \
            (1.0 + eps * outer_product(embed_vector(a), embed_covector(b)))
        maff = analysis.affine_matrix(v, a, b, eps)
        mcot = analysis.cotranslation_matrix(v, a, b, eps)
        for _ in range(3):
            p = rng.uniform(-1, 1, 3)
            hom = np.concatenate(([1.0], p))
            direct = extract_paravector(
                psi * embed_paravector(Paravector(1.0, p)) * reversion(psi))
            want = maff @ hom
            worst = max(worst, abs(direct.weight - want[0]),
                        float(np.max(np.abs(direct.vector - want[1:]))))
            hs = hodge_star(psi * hodge_star(embed_paravector(Paravector(1.0, p)))
                            * reversion(psi))
            directc = extract_paravector(hs)
            wantc = mcot @ hom
            worst = max(worst, abs(directc.weight - wantc[0]),
                        float(np.max(np.abs(directc.vector - wantc[1:]))))
    if worst > 1e-6:
        return False, f"first-order matrix deviation {worst:.3e} exceeds 1e-6"
    u, w2 = _rand_orthonormal(rng)
    pipelines = [
        compose([Sandwich(translation_versor([1, 2, 3]))]),
        compose([Sandwich(rotation_versor(u, w2, 0.8)),
                 Sandwich(scale_versor(u, 0.5)),
                 HodgeSandwich(cotranslation_versor([0.3, -0.2, 0.7]))]),
        compose([Sandwich(reflection_versor(_rand_unit(rng))),
                 Sandwich(shear_versor(u, w2, 1.1))]),
    ]
    n_each = -(-points // len(pipelines))
    for tr in pipelines:
        m = analysis.projective_matrix_probe(tr)
        for _ in range(n_each):
            p = Paravector(rng.uniform(-1, 1), rng.uniform(-2, 2, 3))
            got = tr.apply(p)
            want = m @ np.concatenate(([p.weight], p.vector))
            if _rel_dev(got, want[0], want[1:]) > 1e-9:
                return False, "probe matrix disagrees with its transform"
    return True, f"{count} parameter draws; {n_each * len(pipelines)} matrix points"


def check_sector_behavior(seed=19):
    """Reflection and rotation preserve the sector subspaces; hyperbolic,
    shear, scale, and translation leak across with visible coefficients."""
    rng = np.random.default_rng(seed)
    u, v = _rand_orthonormal(rng)
    keep = [reflection_versor(_rand_unit(rng)), rotation_versor(u, v, 1.3)]
    for versor in keep:
        rep = sector_image(versor)
        if not (rep.preserves_plus and rep.preserves_minus):
            return False, f"{versor.kind} failed to preserve the sectors"
        if max(rep.plus_off_sector, rep.minus_off_sector) > 1e-12:
            return False, f"{versor.kind} off-sector leakage above 1e-12"
    mix = [hyperbolic_versor(u, v, 0.9), shear_versor(u, v, 1.2),
           scale_versor(u, 0.7), translation_versor(rng.uniform(-1, 1, 3))]
    for versor in mix:
        rep = sector_image(versor)
        if min(rep.plus_off_sector, rep.minus_off_sector) <= 1e-6:
            return False, f"{versor.kind} did not mix the sectors"
    return True, "reflection/rotation preserve; the other four mix"


def check_cli_round_trip(points=1000, seed=20):
    """Pipeline + inverse returns the input; the printed matrix reproduces
    apply; the documented exit codes fire on fixture inputs."""
    import tempfile
    from pathlib import Path

    from .cli import main

    rng = np.random.default_rng(seed)
    src = ("rotate u=(1,0,0) v=(0,1,0) theta=0.7\n"
           "scale u=(0,0,1) t=0.4\n"
           "translate v=(0.5,-1,2)\n"
           "shear u=(0,1,0) v=(0,0,1) t=0.9\n")
    pipe = pipeline.parse_pipeline(src)
    fwd = pipe.composed()
    bwd = pipeline.inverse_pipeline(pipe).composed()
    pts = [Paravector(1.0, rng.uniform(-2, 2, 3)) for _ in range(points)]
    for p in pts:
        back = bwd.apply(fwd.apply(p))
        if _rel_dev(back, p.weight, p.vector) > 1e-9:
            return False, "pipeline + inverse does not return the input"
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        (tmp / "pipe.txt").write_text(src)
        (tmp / "pts.txt").write_text(pipeline.format_points(pts))
        out_lines = []
        code = main(["apply", "--pipeline", str(tmp / "pipe.txt"),
                     "--points", str(tmp / "pts.txt")], _capture=out_lines)
        if code != 0:
            return False, f"apply exited {code}"
        matrix_lines = []
        code = main(["matrix", "--pipeline", str(tmp / "pipe.txt")], _capture=matrix_lines)
        if code != 0:
            return False, f"matrix exited {code}"
        m = np.array([[float(x) for x in row.split()] for row in matrix_lines])
        applied = pipeline.parse_points("\n".join(out_lines))
        for p, got in zip(pts, applied):
            want = m @ np.concatenate(([p.weight], p.vector))
            if _rel_dev(got, want[0], want[1:]) > 1e-9:
                return False, "matrix output disagrees with apply output"
        (tmp / "bad.txt").write_text("rotate u=(1,0,0) v=(1,0,0) theta=1\n")
        if main(["check", "--pipeline", str(tmp / "bad.txt")], _capture=[]) != 2:
            return False, "semantic error did not exit 2"
        (tmp / "degen.txt").write_text("perspective eye=(0,0,1) n=(0,0,1) c=1\n")
        if main(["apply", "--pipeline", str(tmp / "degen.txt"),
                 "--points", str(tmp / "pts.txt")], _capture=[]) != 3:
            return False, "degenerate geometry did not exit 3"
        if main(["apply", "--pipeline", str(tmp / "pipe.txt"),
                 "--points", str(tmp / "pts.txt"), "--perturb", "7:0.01"],
                _capture=[]) != 4:
            return False, "residue did not exit 4"
        if main(["check", "--pipeline", str(tmp / "pipe.txt"),
                 "--perturb", "7:0.01"], _capture=[]) != 5:
            return False, "condition failure did not exit 5"
    return True, f"{points} round-trip points; exit codes 2, 3, 4, 5 exercised"


ACCEPTANCE_CHECKS = (
    ("algebra-axioms", check_algebra_axioms),
    ("transform-formulas", check_transform_formulas),
    ("hodge-star", check_hodge_star),
    ("perspective", check_perspective),
    ("hodge-equivalence", check_hodge_equivalence),
    ("translation-incompatibility", check_translation_incompatibility),
    ("infinitesimal-classification", check_classification),
    ("projective-matrices", check_projective_matrices),
    ("sector-behavior", check_sector_behavior),
    ("cli-round-trip", check_cli_round_trip),
)


def run_selftest(perturb_signature=False, emit=print) -> bool:
    """Run every acceptance check; one line each; True iff all pass."""
    start = time.perf_counter()
    all_ok = True
    for name, fn in ACCEPTANCE_CHECKS:
        if name == "algebra-axioms" and perturb_signature:
            flipped = (-1,) + SQUARES[1:]
            ok, detail = fn(squares=flipped)
        else:
            ok, detail = fn()
        all_ok &= ok
        emit(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    elapsed = time.perf_counter() - start
    emit(f"{'PASS' if all_ok else 'FAIL'} total ({elapsed:.1f}s)")
    return all_ok
