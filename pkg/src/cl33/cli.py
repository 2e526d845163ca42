"""Command-line front end.

Commands::

    cl33 apply  --pipeline FILE --points FILE [--normalize | --keep-weights]
    cl33 matrix --pipeline FILE
    cl33 check  --pipeline FILE
    cl33 selftest

Exit codes: 0 ok, 2 parse or semantic error, 3 degenerate geometry,
4 residue error (result left the point subspace), 5 preservation-condition
failure.
"""

from __future__ import annotations

import argparse
import sys

from . import analysis, pipeline
from .errors import (
    CovectorResidue,
    DegenerateConfigurationError,
    DomainError,
    NonParavectorResidue,
    PipelineError,
)
from .euclid import Paravector
from .multivector import Multivector
from .versors import Sandwich, Versor

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_RESIDUE = 4
EXIT_CONDITION = 5


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="cl33",
        description="Apply geometric-algebra transform pipelines to weighted points.")
    sub = ap.add_subparsers(dest="command", required=True)

    p_apply = sub.add_parser("apply", help="transform a point file")
    p_apply.add_argument("--pipeline", required=True, help="pipeline source file")
    p_apply.add_argument("--points", required=True, help="point file (w x y z per line)")
    mode = p_apply.add_mutually_exclusive_group()
    mode.add_argument("--normalize", action="store_true",
                      help="divide each output point by its weight")
    mode.add_argument("--keep-weights", action="store_true",
                      help="emit raw weighted points (default)")
    p_apply.add_argument("--perturb", metavar="MASK:VALUE", action="append", default=[],
                         help="testing hook: add VALUE to blade MASK of every "
                              "sandwich versor before applying")

    p_matrix = sub.add_parser("matrix", help="print the 4x4 matrix of a pipeline")
    p_matrix.add_argument("--pipeline", required=True)

    p_check = sub.add_parser("check", help="verify the point-preservation conditions")
    p_check.add_argument("--pipeline", required=True)
    p_check.add_argument("--perturb", metavar="MASK:VALUE", action="append", default=[],
                         help="testing hook: add VALUE to blade MASK of every "
                              "sandwich versor before checking")

    p_self = sub.add_parser("selftest", help="run the acceptance checks")
    p_self.add_argument("--perturb-signature", action="store_true",
                        help="testing hook: flip one generator square so the "
                             "axiom suite fails")
    return ap


def _read(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise PipelineError(f"cannot read {path}: {exc}") from exc


def _parse_perturbations(specs):
    out = []
    for spec in specs:
        try:
            mask_s, _, val_s = spec.partition(":")
            out.append((int(mask_s, 0), float(val_s)))
        except ValueError as exc:
            raise PipelineError(f"bad --perturb spec {spec!r}: {exc}") from exc
    return out


def _perturbed_stages(pipe, perturbations):
    stages = list(pipe.composed().stages)
    if not perturbations:
        return stages
    for i, stage in enumerate(stages):
        if isinstance(stage, Sandwich):
            coeffs = stage.versor.U.coeffs.copy()
            for mask, value in perturbations:
                coeffs[mask] += value
            stages[i] = Sandwich(Versor(Multivector(coeffs),
                                        stage.versor.epsilon, stage.versor.kind))
    return stages


def _cmd_apply(args, emit):
    pipe = pipeline.parse_pipeline(_read(args.pipeline))
    points = pipeline.parse_points(_read(args.points))
    stages = _perturbed_stages(pipe, _parse_perturbations(args.perturb))
    out = []
    for p in points:
        for stage in stages:
            p = stage.apply(p)
        if args.normalize and not p.is_at_infinity:
            p = Paravector(1.0, p.vector / p.weight)
        out.append(p)
    for line in pipeline.format_points(out).splitlines():
        emit(line)
    return EXIT_OK


def _cmd_matrix(args, emit):
    pipe = pipeline.parse_pipeline(_read(args.pipeline))
    m = analysis.projective_matrix_probe(pipe.composed())
    for row in m:
        emit(" ".join(f"{x:.17g}" for x in row))
    return EXIT_OK


def _cmd_check(args, emit):
    pipe = pipeline.parse_pipeline(_read(args.pipeline))
    stages = _perturbed_stages(pipe, _parse_perturbations(args.perturb))
    probes = analysis.probe_points()
    failed = False
    checked = 0
    for idx, stage in enumerate(stages, start=1):
        if not isinstance(stage, Sandwich):
            emit(f"stage {idx}: skipped (not a sandwich form)")
            continue
        checked += 1
        psi = stage.versor.U
        scale = max(1.0, psi.max_abs()) ** 2 * 2.0
        names = ("cond1", "cond2", "cond3", "cond4", "covector", "grade45")
        worst = dict.fromkeys(names, 0.0)
        for p in probes:
            rep = analysis.paravector_conditions(psi, p)
            for name, mv in zip(names, (rep.r1, rep.r2, rep.r3, rep.r4,
                                        rep.covector_residual, None)):
                if mv is not None:
                    worst[name] = max(worst[name], mv.max_abs())
            worst["grade45"] = max(worst["grade45"], rep.direct4.max_abs(),
                                   rep.direct5.max_abs())
        tol = 1e-9 * scale
        verdicts = []
        for name in names:
            ok = worst[name] <= tol
            failed |= not ok
            verdicts.append(f"{name} {'PASS' if ok else 'FAIL'}")
        emit(f"stage {idx} (sandwich): " + "  ".join(verdicts))
    if checked == 0:
        emit("no sandwich stages; PASS")
    return EXIT_CONDITION if failed else EXIT_OK


def _cmd_selftest(args, emit):
    from .selftest import run_selftest

    ok = run_selftest(perturb_signature=args.perturb_signature, emit=emit)
    return EXIT_OK if ok else 1


def main(argv=None, _capture=None) -> int:
    """Entry point; returns the exit code.  ``_capture`` (a list) collects
    output lines instead of printing, for in-process use."""
    emit = _capture.append if _capture is not None else print

    def fail(message):
        if _capture is not None:
            _capture.append(message)
        else:
            print(message, file=sys.stderr)

    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else 0
    try:
        if args.command == "apply":
            return _cmd_apply(args, emit)
        if args.command == "matrix":
            return _cmd_matrix(args, emit)
        if args.command == "check":
            return _cmd_check(args, emit)
        return _cmd_selftest(args, emit)
    except PipelineError as exc:
        fail(f"error: {exc}")
        return EXIT_PARSE
    except DegenerateConfigurationError as exc:
        fail(f"error: degenerate geometry: {exc}")
        return EXIT_DEGENERATE
    except (NonParavectorResidue, CovectorResidue, DomainError) as exc:
        fail(f"error: residue: {exc}")
        return EXIT_RESIDUE


if __name__ == "__main__":
    sys.exit(main())
