"""Command-line front end: parse a shape expression, count its tableaux by the
requested method, optionally cross-verify with an independent method, and print
the result as a decimal, a prime factorization, or JSON.

Exit codes: 0 success, 2 parse error, 3 method inapplicable, 4 verification
mismatch.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional, Union

from .arith import Factorization, factorize
from .counting import COUNT_BY_COLUMN, closed_form, count_general, match_closed_form
from .oracle import (
    DEFAULT_SIZE_CAP,
    ENUMERATION_CAP,
    count_line_convex,
    count_linear_extensions,
    enumerate_syt,
)
from .shapes import BatteryShape, Partition, SkewShape, TruncatedShape, as_partition, syt_count_straight

__all__ = ["ShapeParseError", "MethodNotApplicableError", "parse_shape_expr", "run", "main"]

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_METHOD = 3
EXIT_MISMATCH = 4

Shape = Union[Partition, SkewShape, TruncatedShape, BatteryShape]


class ShapeParseError(ValueError):
    """Malformed shape expression; carries the offset of the offending token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"at position {position}: {message}")
        self.position = position


class MethodNotApplicableError(ValueError):
    pass


def _parse_int_list(text: str, offset: int) -> tuple[int, ...]:
    if not text:
        raise ShapeParseError("expected a comma-separated list of integers", offset)
    values = []
    pos = offset
    for token in text.split(","):
        try:
            values.append(int(token))
        except ValueError:
            raise ShapeParseError(f"expected an integer, got {token!r}", pos) from None
        pos += len(token) + 1
    return tuple(values)


def _parse_partition(text: str, offset: int) -> Partition:
    try:
        return as_partition(_parse_int_list(text, offset))
    except ShapeParseError:
        raise
    except ValueError as exc:
        raise ShapeParseError(str(exc), offset) from None


def _parse_rect(text: str, offset: int) -> Partition:
    width, sep, height = text.partition("x")
    if not sep:
        raise ShapeParseError("expected MxN", offset)
    try:
        m, n = int(width), int(height)
    except ValueError:
        raise ShapeParseError(f"expected MxN with integer sides, got {text!r}", offset) from None
    if m < 1 or n < 1:
        raise ShapeParseError(f"rectangle sides must be positive, got {m}x{n}", offset)
    return (m,) * n


def _parse_battery(text: str, offset: int) -> BatteryShape:
    fields = text.split(",")
    if len(fields) < 3:
        raise ShapeParseError("expected base, a=A and k=K", offset)
    tail = fields[-2:]
    base_text = ",".join(fields[:-2])
    tail_offset = offset + len(base_text) + 1
    named = {}
    pos = tail_offset
    for token in tail:
        key, sep, val = token.partition("=")
        if not sep or key not in ("a", "k"):
            raise ShapeParseError(f"expected a=A or k=K, got {token!r}", pos)
        try:
            named[key] = int(val)
        except ValueError:
            raise ShapeParseError(f"expected an integer for {key}=, got {val!r}", pos) from None
        pos += len(token) + 1
    if set(named) != {"a", "k"}:
        raise ShapeParseError("both a= and k= are required", tail_offset)
    if base_text.startswith("rect:"):
        lam = _parse_rect(base_text[5:], offset + 5)
    elif base_text.startswith("part:"):
        lam = _parse_partition(base_text[5:], offset + 5)
    else:
        raise ShapeParseError("battery base must start with rect: or part:", offset)
    try:
        return BatteryShape(lam, named["a"], named["k"])
    except ValueError as exc:
        raise ShapeParseError(str(exc), offset) from None


def parse_shape_expr(text: str) -> Shape:
    """Parse one of:
    partition:5,3,1 | rect:MxN | battery:rect:MxN,a=A,k=K |
    battery:part:L1,...,a=A,k=K | skew:outer/inner | truncated:outer\\trunc
    """
    kind, sep, rest = text.partition(":")
    if not sep:
        raise ShapeParseError("expected <kind>:<spec>", 0)
    offset = len(kind) + 1
    if kind == "partition":
        return _parse_partition(rest, offset)
    if kind == "rect":
        return _parse_rect(rest, offset)
    if kind == "battery":
        return _parse_battery(rest, offset)
    if kind == "skew":
        outer_text, slash, inner_text = rest.partition("/")
        if not slash:
            raise ShapeParseError("expected outer/inner", offset)
        outer = _parse_partition(outer_text, offset)
        inner = _parse_partition(inner_text, offset + len(outer_text) + 1)
        try:
            return SkewShape(outer, inner)
        except ValueError as exc:
            raise ShapeParseError(str(exc), offset) from None
    if kind == "truncated":
        outer_text, slash, cut_text = rest.partition("\\")
        if not slash:
            raise ShapeParseError("expected outer\\trunc", offset)
        outer = _parse_partition(outer_text, offset)
        cut = _parse_partition(cut_text, offset + len(outer_text) + 1)
        try:
            return TruncatedShape(SkewShape(outer), cut)
        except ValueError as exc:
            raise ShapeParseError(str(exc), offset) from None
    raise ShapeParseError(f"unknown shape kind {kind!r}", 0)


def _rect_coords(shape: BatteryShape) -> tuple[int, int, int, int]:
    return shape.lam[0], len(shape.lam), shape.a, shape.k


def _count_hyper(shape: Shape, size_cap: int) -> int:
    if not isinstance(shape, BatteryShape) or not shape.is_rectangle():
        raise MethodNotApplicableError("hyper needs a battery over a rectangle")
    m, n, a, k = _rect_coords(shape)
    if k not in COUNT_BY_COLUMN:
        raise MethodNotApplicableError(f"no hypergeometric formula for column {k}")
    return COUNT_BY_COLUMN[k](m, n, a)


def _count_general(shape: Shape, size_cap: int) -> int:
    if not isinstance(shape, BatteryShape) or not shape.is_rectangle():
        raise MethodNotApplicableError("general needs a battery over a rectangle")
    m, n, a, k = _rect_coords(shape)
    return count_general(m, n, a, k)


def _count_closed(shape: Shape, size_cap: int) -> int:
    if not isinstance(shape, BatteryShape) or not shape.is_rectangle():
        raise MethodNotApplicableError("closed needs a battery over a rectangle")
    match = match_closed_form(*_rect_coords(shape))
    if match is None:
        raise MethodNotApplicableError("no closed-form case covers this shape")
    case_id, params = match
    return closed_form(case_id, **params)


def _count_dp(shape: Shape, size_cap: int) -> int:
    if isinstance(shape, BatteryShape):
        return count_linear_extensions(shape, size_cap)
    if isinstance(shape, (SkewShape, TruncatedShape)):
        return count_line_convex(shape.row_spans(), size_cap)
    return count_linear_extensions(BatteryShape(shape, 0, 1), size_cap)


def _count_hlf(shape: Shape, size_cap: int) -> int:
    if not isinstance(shape, tuple):
        raise MethodNotApplicableError("hlf applies to straight partitions only")
    return syt_count_straight(shape)


def _count_enum(shape: Shape, size_cap: int) -> int:
    if isinstance(shape, tuple):
        shape = BatteryShape(shape, 0, 1)
    if not isinstance(shape, BatteryShape):
        raise MethodNotApplicableError("enumeration applies to battery shapes only")
    if shape.size > ENUMERATION_CAP:
        raise MethodNotApplicableError(f"enumeration is limited to {ENUMERATION_CAP} cells")
    return len(enumerate_syt(shape))


# monkeypatch point for fault-injection tests
METHODS = {
    "hyper": _count_hyper,
    "general": _count_general,
    "closed": _count_closed,
    "dp": _count_dp,
    "hlf": _count_hlf,
    "enum": _count_enum,
}


def _resolve_auto(shape: Shape) -> str:
    if isinstance(shape, BatteryShape):
        if shape.is_rectangle():
            if match_closed_form(*_rect_coords(shape)) is not None:
                return "closed"
            if shape.k in COUNT_BY_COLUMN:
                return "hyper"
            return "general"
        return "dp"
    if isinstance(shape, tuple):
        return "hlf"
    return "dp"


def _shape_size(shape: Shape) -> int:
    return sum(shape) if isinstance(shape, tuple) else shape.size


def _applicable(shape: Shape, method: str, size_cap: int) -> bool:
    """Cheap static applicability check; never evaluates a count."""
    rect_battery = isinstance(shape, BatteryShape) and shape.is_rectangle()
    if method == "hyper":
        return rect_battery and shape.k in COUNT_BY_COLUMN
    if method == "general":
        return rect_battery
    if method == "closed":
        return rect_battery and match_closed_form(*_rect_coords(shape)) is not None
    if method == "hlf":
        return isinstance(shape, tuple)
    if method == "enum":
        return isinstance(shape, (tuple, BatteryShape)) and _shape_size(shape) <= ENUMERATION_CAP
    if method == "dp":
        return _shape_size(shape) <= size_cap
    return False


def _pick_partner(shape: Shape, primary: str, size_cap: int) -> Optional[str]:
    if primary != "dp" and _applicable(shape, "dp", size_cap):
        return "dp"
    for method in ("hyper", "general", "closed", "hlf", "enum"):
        if method != primary and _applicable(shape, method, size_cap):
            return method
    return None


@dataclass
class RunReport:
    shape: str
    method: str
    count: int
    factorization: Optional[Factorization]
    verified_methods: list[str]
    elapsed_ms: float

    def to_json(self) -> str:
        return json.dumps({
            "shape": self.shape,
            "method": self.method,
            "count": str(self.count),
            "factorization": [[p, e] for p, e in self.factorization.factors]
            if self.factorization is not None
            else None,
            "verified_methods": self.verified_methods,
            "elapsed_ms": self.elapsed_ms,
        })


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="battery-syt",
        description="Count standard Young tableaux of battery, straight, skew, and truncated shapes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    count = sub.add_parser("count", help="count tableaux of a shape expression")
    count.add_argument("shape", help="e.g. battery:rect:11x7,a=1,k=6 or partition:3,2,1")
    count.add_argument("--method", choices=["auto", "hyper", "general", "closed", "dp"], default="auto")
    count.add_argument("--output", choices=["decimal", "factored", "json"], default="decimal")
    count.add_argument("--verify", action="store_true",
                       help="compute by a second independent method and compare")
    count.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP, metavar="N",
                       help="cell limit for the dynamic-programming counter")
    return parser


def run(argv) -> int:
    """Execute the CLI for the given argument list and return the exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK

    try:
        shape = parse_shape_expr(args.shape)
    except ShapeParseError as exc:
        print(f"error: cannot parse {args.shape!r}: {exc}", file=sys.stderr)
        return EXIT_PARSE

    method = _resolve_auto(shape) if args.method == "auto" else args.method
    started = time.perf_counter()
    try:
        count = METHODS[method](shape, args.size_cap)
    except (MethodNotApplicableError, ValueError) as exc:
        print(f"error: method {method!r} not applicable: {exc}", file=sys.stderr)
        return EXIT_METHOD

    verified = []
    if args.verify:
        partner = _pick_partner(shape, method, args.size_cap)
        if partner is None:
            print(f"error: no second method available to verify {args.shape!r}", file=sys.stderr)
            return EXIT_METHOD
        check = METHODS[partner](shape, args.size_cap)
        if check != count:
            print(
                f"error: verification mismatch: {method} gives {count}, {partner} gives {check}",
                file=sys.stderr,
            )
            return EXIT_MISMATCH
        verified = [method, partner]
        print(f"verified: {method} == {partner}", file=sys.stderr)

    factorization = factorize(count) if args.output in ("factored", "json") and count >= 1 else None
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    report = RunReport(args.shape, method, count, factorization, verified, elapsed_ms)

    if args.output == "decimal":
        print(report.count)
    elif args.output == "factored":
        print(report.factorization)
    else:
        print(report.to_json())
    return EXIT_OK


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
