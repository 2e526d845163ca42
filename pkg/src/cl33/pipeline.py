"""Line-oriented DSL for transform pipelines, and the point-file format.

One step per non-empty line; ``#`` starts a comment.  Vectors are written
``key=(x,y,z)`` with no interior spaces, scalars ``key=value``.  Point files
hold one ``w x y z`` quadruple per line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PipelineError
from .euclid import Paravector
from .versors import (
    HodgeSandwich,
    PerspectiveMap,
    Sandwich,
    Transform,
    cotranslation_versor,
    hyperbolic_versor,
    reflection_versor,
    rotation_versor,
    scale_versor,
    shear_versor,
    translation_versor,
    _check_unit,
    compose,
)

_FLOAT = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"
_VEC_RE = re.compile(rf"^\(({_FLOAT}),({_FLOAT}),({_FLOAT})\)$")
_NUM_RE = re.compile(rf"^{_FLOAT}$")

#: op name -> (vector params, scalar params)
GRAMMAR = {
    "reflect": (("n",), ()),
    "rotate": (("u", "v"), ("theta",)),
    "hrotate": (("u", "v"), ("eta",)),
    "shear": (("u", "v"), ("t",)),
    "scale": (("u",), ("t",)),
    "translate": (("v",), ()),
    "cotranslate": (("v",), ()),
    "perspective": (("eye", "n"), ("c",)),
    "pseudo": (("n",), ()),
}


@dataclass(frozen=True)
class PipelineStep:
    op: str
    params: dict
    line: int

    def transform(self) -> Transform:
        return _STEP_BUILDERS[self.op](self.params)


@dataclass(frozen=True)
class Pipeline:
    steps: tuple

    def transforms(self) -> list:
        return [s.transform() for s in self.steps]

    def composed(self):
        return compose(self.transforms())

    def __eq__(self, other):
        if not isinstance(other, Pipeline):
            return NotImplemented
        if len(self.steps) != len(other.steps):
            return False
        for a, b in zip(self.steps, other.steps):
            if a.op != b.op or a.params.keys() != b.params.keys():
                return False
            for k in a.params:
                if not np.array_equal(np.asarray(a.params[k]), np.asarray(b.params[k])):
                    return False
        return True


_STEP_BUILDERS = {
    "reflect": lambda p: Sandwich(reflection_versor(p["n"])),
    "rotate": lambda p: Sandwich(rotation_versor(p["u"], p["v"], p["theta"])),
    "hrotate": lambda p: Sandwich(hyperbolic_versor(p["u"], p["v"], p["eta"])),
    "shear": lambda p: Sandwich(shear_versor(p["u"], p["v"], p["t"])),
    "scale": lambda p: Sandwich(scale_versor(p["u"], p["t"])),
    "translate": lambda p: Sandwich(translation_versor(p["v"])),
    "cotranslate": lambda p: HodgeSandwich(cotranslation_versor(p["v"])),
    "perspective": lambda p: PerspectiveMap(Paravector(1.0, p["eye"]), p["n"], p["c"]),
    "pseudo": lambda p: HodgeSandwich(cotranslation_versor(_check_unit("n", p["n"]))),
}


def _strip_comment(line: str) -> str:
    idx = line.find("#")
    return line if idx < 0 else line[:idx]


def _parse_step(raw: str, lineno: int) -> PipelineStep:
    tokens = []
    for m in re.finditer(r"\S+", raw):
        tokens.append((m.group(0), m.start() + 1))
    op, col = tokens[0]
    if op not in GRAMMAR:
        raise PipelineError(f"unknown operation {op!r}", lineno, col)
    vec_keys, num_keys = GRAMMAR[op]
    params = {}
    for tok, col in tokens[1:]:
        if "=" not in tok:
            raise PipelineError(f"expected key=value, got {tok!r}", lineno, col)
        key, _, val = tok.partition("=")
        if key in params:
            raise PipelineError(f"duplicate parameter {key!r}", lineno, col)
        if key in vec_keys:
            m = _VEC_RE.match(val)
            if not m:
                raise PipelineError(
                    f"parameter {key!r} must be a vector (x,y,z), got {val!r}", lineno, col)
            params[key] = np.array([float(m.group(i)) for i in (1, 2, 3)])
        elif key in num_keys:
            if not _NUM_RE.match(val):
                raise PipelineError(
                    f"parameter {key!r} must be a number, got {val!r}", lineno, col)
            params[key] = float(val)
        else:
            raise PipelineError(f"operation {op!r} takes no parameter {key!r}", lineno, col)
    missing = [k for k in (*vec_keys, *num_keys) if k not in params]
    if missing:
        raise PipelineError(f"operation {op!r} missing parameter(s) {missing}", lineno, col)
    step = PipelineStep(op, params, lineno)
    try:
        step.transform()  # semantic validation (unit length, orthogonality)
    except DomainError as exc:
        raise PipelineError(str(exc), lineno) from exc
    return step


def parse_pipeline(text: str) -> Pipeline:
    """Parse pipeline source; raises PipelineError with line/column on
    syntax errors and line on semantic (precondition) errors."""
    steps = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = _strip_comment(line)
        if not body.strip():
            continue
        steps.append(_parse_step(body, lineno))
    return Pipeline(tuple(steps))


def _fmt(x) -> str:
    return f"{float(x):.17g}"


def format_pipeline(p: Pipeline) -> str:
    lines = []
    for s in p.steps:
        vec_keys, num_keys = GRAMMAR[s.op]
        parts = [s.op]
        for k in vec_keys:
            x, y, z = s.params[k]
            parts.append(f"{k}=({_fmt(x)},{_fmt(y)},{_fmt(z)})")
        for k in num_keys:
            parts.append(f"{k}={_fmt(s.params[k])}")
        lines.append(" ".join(parts))
    return "\n".join(lines) + ("\n" if lines else "")


_INVERTERS = {
    "reflect": lambda p: p,
    "rotate": lambda p: {**p, "theta": -p["theta"]},
    "hrotate": lambda p: {**p, "eta": -p["eta"]},
    "shear": lambda p: {**p, "t": -p["t"]},
    "scale": lambda p: {**p, "t": -p["t"]},
    "translate": lambda p: {"v": -p["v"]},
    "cotranslate": lambda p: {"v": -p["v"]},
}


def inverse_pipeline(p: Pipeline) -> Pipeline:
    """Steps reversed with negated parameters (reflection is its own
    inverse).  Projections are not invertible and raise PipelineError."""
    steps = []
    for s in reversed(p.steps):
        if s.op not in _INVERTERS:
            raise PipelineError(f"operation {s.op!r} is not invertible", s.line)
        steps.append(PipelineStep(s.op, _INVERTERS[s.op](s.params), s.line))
    return Pipeline(tuple(steps))


def parse_points(text: str) -> list:
    """Point file: one ``w x y z`` per line, ``#`` comments."""
    points = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = _strip_comment(line)
        if not body.strip():
            continue
        fields = body.split()
        if len(fields) != 4:
            raise PipelineError(
                f"expected 4 fields 'w x y z', got {len(fields)}", lineno)
        try:
            vals = [float(f) for f in fields]
        except ValueError as exc:
            raise PipelineError(f"bad number: {exc}", lineno) from exc
        points.append(Paravector(vals[0], vals[1:]))
    return points


def format_points(points) -> str:
    lines = []
    for p in points:
        x, y, z = p.vector
        lines.append(f"{_fmt(p.weight)} {_fmt(x)} {_fmt(y)} {_fmt(z)}")
    return "\n".join(lines) + ("\n" if lines else "")
