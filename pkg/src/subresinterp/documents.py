"""JSON problem/result documents. All scalars travel as strings."""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd, lcm

from .field import FieldError, FieldSpec, field_parse, small_factorial
from .interp import InterpolationProblem, NoSolution, ProblemError, Solution, ZeroFunction
from .poly import Polynomial

TAYLOR = "taylor"
DERIVATIVE = "derivative"


class DocumentError(ValueError):
    pass


def dumps(doc) -> str:
    """Compact, key-order-preserving encoding: byte-stable for equal inputs."""
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=True)


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed JSON: {exc.msg} at line {exc.lineno} column {exc.colno}") from None


def _require(doc: dict, key: str, kind):
    if key not in doc:
        raise DocumentError(f"missing key {key!r}")
    value = doc[key]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise DocumentError(f"{key!r} must be an integer")
    if kind is not int and not isinstance(value, kind):
        raise DocumentError(f"{key!r} must be of type {kind.__name__}")
    return value


def parse_field(obj) -> FieldSpec:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise DocumentError("'field' must be an object with a 'kind'")
    kind = obj["kind"]
    if kind == "rational":
        return FieldSpec.rational()
    if kind == "prime":
        raw = obj.get("modulus")
        if isinstance(raw, bool) or not isinstance(raw, (str, int)):
            raise DocumentError("prime field needs a decimal 'modulus'")
        try:
            modulus = int(raw)
        except ValueError:
            raise DocumentError(f"modulus {raw!r} is not a decimal integer") from None
        try:
            return FieldSpec.prime(modulus)
        except FieldError:
            raise DocumentError(f"modulus {modulus} is not prime") from None
    raise DocumentError(f"unknown field kind {kind!r}")


def field_to_json(field: FieldSpec) -> dict:
    if field.kind == "rational":
        return {"kind": "rational"}
    return {"kind": "prime", "modulus": str(field.modulus)}


def parse_scalar(text, field: FieldSpec, where: str):
    try:
        return field_parse(text, field)
    except FieldError as exc:
        raise DocumentError(f"{where}: {exc}") from None


def parse_poly(arr, field: FieldSpec, where: str) -> Polynomial:
    if not isinstance(arr, list):
        raise DocumentError(f"{where} must be an array of scalar strings")
    return Polynomial(field, [parse_scalar(s, field, f"{where}[{i}]") for i, s in enumerate(arr)])


def poly_to_json(p: Polynomial) -> list[str]:
    return p.to_strings()


def parse_problem(doc, convention: str | None = None) -> InterpolationProblem:
    """Build a problem; ``derivative`` data are divided by ``j!`` on the way in."""
    if not isinstance(doc, dict):
        raise DocumentError("problem document must be a JSON object")
    field = parse_field(_require(doc, "field", dict))
    a = _require(doc, "num_degree", int)
    b = _require(doc, "den_degree", int)
    if a < 0 or b < 0:
        raise DocumentError("degree budgets must be nonnegative")
    convention = convention or doc.get("convention", TAYLOR)
    if convention not in (TAYLOR, DERIVATIVE):
        raise DocumentError(f"unknown convention {convention!r}")
    points = _require(doc, "points", list)
    nodes, data = [], []
    for n, pt in enumerate(points):
        if not isinstance(pt, dict) or "x" not in pt or "values" not in pt:
            raise DocumentError(f"points[{n}] must have 'x' and 'values'")
        x = parse_scalar(pt["x"], field, f"points[{n}].x")
        values = pt["values"]
        if not isinstance(values, list) or not values:
            raise DocumentError(f"points[{n}].values must be a nonempty array")
        ys = [parse_scalar(v, field, f"points[{n}].values[{j}]") for j, v in enumerate(values)]
        nodes.append((x, len(ys)))
        data.append(ys)
    if len({x for x, _ in nodes}) != len(nodes):
        raise DocumentError("repeated node: x values must be pairwise distinct")
    total = sum(len(ys) for ys in data)
    if total != a + b + 1:
        raise DocumentError(
            f"budget mismatch: {total} values supplied, num_degree + den_degree + 1 = {a + b + 1}")
    if convention == DERIVATIVE:
        top = max(len(ys) for ys in data)
        for j in range(top):
            if small_factorial(j, field).is_zero():
                raise DocumentError(
                    f"derivative convention needs {j}! invertible, but it vanishes in {field}")
        data = [[y / small_factorial(j, field) for j, y in enumerate(ys)] for ys in data]
    try:
        return InterpolationProblem(field, a, b, tuple(nodes), tuple(map(tuple, data)))
    except ProblemError as exc:
        raise DocumentError(str(exc)) from None


def cleared_integer_form(num: Polynomial, den: Polynomial) -> dict:
    """Primitive integer representative over Q, denominator with positive leading term."""
    values = [c.value for c in num.coeffs + den.coeffs]
    m = lcm(*(Fraction(v).denominator for v in values))
    ints = [int(Fraction(v) * m) for v in values]
    g = 0
    for v in ints:
        g = gcd(g, v)
    g = g or 1
    if den.leading().value < 0:
        g = -g
    field = num.field
    k = len(num.coeffs)
    return {
        "numerator": poly_to_json(Polynomial(field, [v // g for v in ints[:k]])),
        "denominator": poly_to_json(Polynomial(field, [v // g for v in ints[k:]])),
    }


def outcome_to_json(outcome, method: str) -> dict:
    if isinstance(outcome, Solution):
        doc = {
            "status": "solution",
            "method": outcome.method,
            "pivot_d": outcome.pivot_d,
            "numerator": poly_to_json(outcome.num),
            "denominator": poly_to_json(outcome.den),
        }
        if outcome.num.field.kind == "rational":
            doc["cleared"] = cleared_integer_form(outcome.num, outcome.den)
        return doc
    if isinstance(outcome, NoSolution):
        doc = {
            "status": "no_solution",
            "method": outcome.method,
            "pivot_d": outcome.pivot_d,
            "witness": str(outcome.witness),
        }
        if hasattr(outcome.witness, "node"):
            doc["node"] = outcome.witness.node
        return doc
    if isinstance(outcome, ZeroFunction):
        return {"status": "zero_function", "method": method, "numerator": [], "denominator": ["1"]}
    raise TypeError(f"unknown outcome {outcome!r}")


def error_to_json(message: str) -> dict:
    return {"status": "error", "message": message}
