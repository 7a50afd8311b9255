"""
JSON problem files.

Layout (all rationals are strings, e.g. ``"3"`` or ``"-1/2"``)::

    {
      "variables": ["x1", "x2"],            # optional, defaults to x1..xd
      "kind": "lagrange" | "hermite" | "projector",
      "points": [["1", "0"], ...],           # lagrange
      "conditions": [                        # hermite
        {"point": ["0", "0"], "derivatives": [[0, 0], [0, 1]]}, ...
      ],
      "corner_images": [                     # projector
        {"corner": [2, 1], "image": "0"}, ...
      ],
      "test_functions": ["(1-x1)^2+(1-x2)^2+1", ...],
      "options": {"degree_bound": 6, "order": "lex1"}
    }
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .conditions import ConditionSet
from .errors import DimensionMismatch, SchemaError
from .parser import default_variables, parse_polynomial
from .poly import Exponent, MonomialOrder, Polynomial

KINDS = ("lagrange", "hermite", "projector")
_RATIONAL = re.compile(r"^\s*[-+]?\d+(\s*/\s*\d+)?\s*$")


@dataclass
class ProblemSpec:
    variables: tuple[str, ...]
    kind: str
    conditions: ConditionSet | None = None
    corner_images: dict[Exponent, Polynomial] = field(default_factory=dict)
    test_functions: tuple[str, ...] = ()
    options: dict[str, Any] = field(default_factory=dict)
    source: str | None = None

    @property
    def dim(self) -> int:
        return len(self.variables)

    def parse(self, expr: str) -> Polynomial:
        return parse_polynomial(expr, self.variables)

    @property
    def order(self) -> MonomialOrder:
        return MonomialOrder.from_name(self.options.get("order", "lex1"), self.dim)


def parse_rational(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise SchemaError(f"{where}: rationals must be given as strings, got {value!r}")
    text = str(value)
    if not _RATIONAL.match(text):
        raise SchemaError(f"{where}: {text!r} is not a rational literal")
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError:
        raise SchemaError(f"{where}: zero denominator in {text!r}") from None


def _point(raw: Any, dim: int, where: str) -> tuple[Fraction, ...]:
    if not isinstance(raw, list):
        raise SchemaError(f"{where}: a point must be a list")
    if len(raw) != dim:
        raise SchemaError(f"{where}: point has {len(raw)} coordinates, expected {dim}")
    return tuple(parse_rational(v, where) for v in raw)


def _exponent(raw: Any, dim: int, where: str) -> Exponent:
    if not isinstance(raw, list) or len(raw) != dim:
        raise SchemaError(f"{where}: expected a list of {dim} nonnegative integers")
    if not all(isinstance(k, int) and not isinstance(k, bool) and k >= 0 for k in raw):
        raise SchemaError(f"{where}: entries must be nonnegative integers")
    return tuple(raw)


def _infer_dim(doc: dict) -> int:
    try:
        return _guess_dim(doc)
    except (TypeError, AttributeError, IndexError, KeyError):
        raise SchemaError("malformed payload: cannot determine the number of variables") from None


def _guess_dim(doc: dict) -> int:
    if "variables" in doc:
        return len(doc["variables"])
    if doc.get("points"):
        return len(doc["points"][0])
    if doc.get("conditions"):
        return len(doc["conditions"][0].get("point", []))
    if doc.get("corner_images"):
        return len(doc["corner_images"][0].get("corner", []))
    raise SchemaError("cannot determine the number of variables")


def problem_from_dict(doc: Any, source: str | None = None) -> ProblemSpec:
    if not isinstance(doc, dict):
        raise SchemaError("problem file must contain a JSON object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise SchemaError(f"'kind' must be one of {', '.join(KINDS)}; got {kind!r}")
    dim = _infer_dim(doc)
    if dim < 1:
        raise SchemaError("at least one variable is required")
    variables = doc.get("variables", default_variables(dim))
    if not isinstance(variables, list) or not all(isinstance(v, str) and v.isidentifier() for v in variables):
        raise SchemaError("'variables' must be a list of identifiers")
    if len(set(variables)) != len(variables):
        raise SchemaError("variable names must be distinct")

    spec = ProblemSpec(tuple(variables), kind, source=source)

    if kind == "lagrange":
        points = doc.get("points")
        if not isinstance(points, list) or not points:
            raise SchemaError("lagrange problems need a nonempty 'points' list")
        spec.conditions = ConditionSet.lagrange(_point(p, dim, f"points[{i}]") for i, p in enumerate(points))
    elif kind == "hermite":
        conds = doc.get("conditions")
        if not isinstance(conds, list) or not conds:
            raise SchemaError("hermite problems need a nonempty 'conditions' list")
        groups = []
        for i, c in enumerate(conds):
            if not isinstance(c, dict) or "point" not in c or "derivatives" not in c:
                raise SchemaError(f"conditions[{i}] needs 'point' and 'derivatives'")
            pt = _point(c["point"], dim, f"conditions[{i}].point")
            ders = c["derivatives"]
            if not isinstance(ders, list) or not ders:
                raise SchemaError(f"conditions[{i}].derivatives must be a nonempty list")
            groups.append((pt, [_exponent(a, dim, f"conditions[{i}].derivatives") for a in ders]))
        spec.conditions = ConditionSet.hermite(groups)
    else:
        items = doc.get("corner_images")
        if not isinstance(items, list) or not items:
            raise SchemaError("projector problems need a nonempty 'corner_images' list")
        for i, item in enumerate(items):
            if not isinstance(item, dict) or "corner" not in item or "image" not in item:
                raise SchemaError(f"corner_images[{i}] needs 'corner' and 'image'")
            corner = _exponent(item["corner"], dim, f"corner_images[{i}].corner")
            if corner in spec.corner_images:
                raise SchemaError(f"corner_images[{i}]: corner {list(corner)} listed twice")
            if not isinstance(item["image"], str):
                raise SchemaError(f"corner_images[{i}].image must be an expression string")
            spec.corner_images[corner] = spec.parse(item["image"])

    tests = doc.get("test_functions", [])
    if not isinstance(tests, list) or not all(isinstance(t, str) for t in tests):
        raise SchemaError("'test_functions' must be a list of expression strings")
    for t in tests:
        spec.parse(t)
    spec.test_functions = tuple(tests)

    options = doc.get("options", {})
    if not isinstance(options, dict):
        raise SchemaError("'options' must be an object")
    if "degree_bound" in options and not (isinstance(options["degree_bound"], int) and options["degree_bound"] >= 0):
        raise SchemaError("options.degree_bound must be a nonnegative integer")
    if "order" in options:
        try:
            MonomialOrder.from_name(str(options["order"]), dim)
        except ValueError as exc:
            raise SchemaError(f"options.order: {exc}") from None
    spec.options = dict(options)
    return spec


def load_problem(path: str | Path) -> ProblemSpec:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror or exc}") from None
    except UnicodeDecodeError:
        raise SchemaError(f"{path} is not valid UTF-8") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    try:
        return problem_from_dict(doc, str(path))
    except DimensionMismatch as exc:
        raise SchemaError(str(exc)) from None
