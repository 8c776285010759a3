"""Addition and multiplication operations on the carriers, plus grid checks
of the algebraic laws the characterization theorems assume.

Addition results live in the ambient set (nonnegative reals, intervals,
vectors) and are never clamped to the unit-bounded set; callers decide
where boundedness matters. Law checking is enumeration on a finite grid:
the only oracle that works uniformly for user-supplied operations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from time import perf_counter
from typing import Callable

from .errors import BadParameter, KindMismatch, ScaleOutOfRange
from .order import (
    INTERVAL, SCALAR, TOL, VECTOR, AdmissibleOrder, Element, Interval, Scalar,
    Vector, elements_equal, grid_elements, require_same_carrier, unit_grid,
    zero_element,
)
from .reporting import GridSpec, LawReport, failed_report, passed_report


@dataclass(frozen=True)
class AdditionOp:
    """Binary addition on one carrier's ambient set."""

    name: str
    kind: str
    fn: Callable[[Element, Element], Element]


@dataclass(frozen=True)
class MultiplicationOp:
    """Scaling of one carrier by a coefficient in [0, 1]."""

    name: str
    kind: str
    fn: Callable[[float, Element], Element]


def add(op: AdditionOp, x: Element, z: Element) -> Element:
    require_same_carrier(x, z)
    if x.kind != op.kind:
        raise KindMismatch(f"operation {op.name!r} expects {op.kind} operands")
    return op.fn(x, z)


def scale(op: MultiplicationOp, c: float, x: Element) -> Element:
    if not (-TOL <= c <= 1.0 + TOL):
        raise ScaleOutOfRange(f"coefficient must lie in [0, 1], got {c}")
    c = min(max(c, 0.0), 1.0)
    if x.kind != op.kind:
        raise KindMismatch(f"operation {op.name!r} expects {op.kind} operands")
    return op.fn(c, x)


def fold_add(op: AdditionOp, terms) -> Element:
    terms = list(terms)
    if not terms:
        raise BadParameter("cannot fold an empty term list")
    acc = terms[0]
    for t in terms[1:]:
        acc = add(op, acc, t)
    return acc


# ---------------------------------------------------------------------------
# Shipped operations
# ---------------------------------------------------------------------------

PLUS = AdditionOp("plus", SCALAR, lambda x, z: Scalar(x.value + z.value))
IV_PLUS = AdditionOp("iv-plus", INTERVAL,
                     lambda x, z: Interval(x.lower + z.lower, x.upper + z.upper))
VV_PLUS = AdditionOp("vv-plus", VECTOR,
                     lambda x, z: Vector(tuple(a + b for a, b in zip(x.coords, z.coords))))

TIMES = MultiplicationOp("times", SCALAR, lambda c, x: Scalar(c * x.value))
IV_SCALE = MultiplicationOp("iv-scale", INTERVAL,
                            lambda c, x: Interval(c * x.lower, c * x.upper))
VV_SCALE = MultiplicationOp("vv-scale", VECTOR,
                            lambda c, x: Vector(tuple(c * a for a in x.coords)))

# Negative-control fixtures: both commutative and associative, both break
# the cancellation law.
MIN_OP = AdditionOp("min", SCALAR, lambda x, z: Scalar(min(x.value, z.value)))
BOUNDED_SUM = AdditionOp("bounded-sum", SCALAR,
                         lambda x, z: Scalar(min(1.0, x.value + z.value)))

_ADDITIONS: dict[str, AdditionOp] = {
    op.name: op for op in (PLUS, IV_PLUS, VV_PLUS, MIN_OP, BOUNDED_SUM)
}
_MULTIPLICATIONS: dict[str, MultiplicationOp] = {
    op.name: op for op in (TIMES, IV_SCALE, VV_SCALE)
}


def register_addition(op: AdditionOp) -> AdditionOp:
    _ADDITIONS[op.name] = op
    return op


def register_multiplication(op: MultiplicationOp) -> MultiplicationOp:
    _MULTIPLICATIONS[op.name] = op
    return op


def resolve_addition(spec: str) -> AdditionOp:
    try:
        return _ADDITIONS[spec]
    except KeyError:
        raise BadParameter(f"unknown addition op: {spec!r}") from None


def resolve_multiplication(spec: str) -> MultiplicationOp:
    try:
        return _MULTIPLICATIONS[spec]
    except KeyError:
        raise BadParameter(f"unknown multiplication op: {spec!r}") from None


def addition_for(kind: str) -> AdditionOp:
    return {SCALAR: PLUS, INTERVAL: IV_PLUS, VECTOR: VV_PLUS}[kind]


def scale_for(kind: str) -> MultiplicationOp:
    return {SCALAR: TIMES, INTERVAL: IV_SCALE, VECTOR: VV_SCALE}[kind]


# ---------------------------------------------------------------------------
# Law checks
# ---------------------------------------------------------------------------

def check_commutativity(op: AdditionOp, grid: GridSpec) -> LawReport:
    start = perf_counter()
    elems = grid_elements(grid)
    checked = 0
    for x, z in itertools.combinations_with_replacement(elems, 2):
        checked += 1
        if not elements_equal(add(op, x, z), add(op, z, x)):
            return failed_report("commutativity", {"x": x, "z": z},
                                 checked, perf_counter() - start, op=op.name)
    return passed_report("commutativity", checked, perf_counter() - start, op=op.name)


def check_associativity(op: AdditionOp, grid: GridSpec) -> LawReport:
    start = perf_counter()
    elems = grid_elements(grid)
    checked = 0
    for x, y, z in itertools.product(elems, repeat=3):
        checked += 1
        if not elements_equal(add(op, add(op, x, y), z), add(op, x, add(op, y, z))):
            return failed_report("associativity", {"x": x, "y": y, "z": z},
                                 checked, perf_counter() - start, op=op.name)
    return passed_report("associativity", checked, perf_counter() - start, op=op.name)


def check_cancellation(op: AdditionOp, grid: GridSpec) -> LawReport:
    """x1 + v = x2 + v must force x1 = x2 for all grid triples."""
    start = perf_counter()
    elems = grid_elements(grid)
    checked = 0
    for x1, x2 in itertools.combinations(elems, 2):
        for v in elems:
            checked += 1
            if elements_equal(add(op, x1, v), add(op, x2, v)):
                return failed_report("cancellation", {
                    "x1": x1, "x2": x2, "v": v,
                    "sum": add(op, x1, v),
                }, checked, perf_counter() - start, op=op.name)
    return passed_report("cancellation", checked, perf_counter() - start, op=op.name)


def check_compatibility(op: AdditionOp, order: AdmissibleOrder, strict: bool,
                        grid: GridSpec) -> LawReport:
    """Adding a common element on both sides must preserve the order
    (strictly, when ``strict``).

    Side assertions embody the standard lemmas: a passing strict check
    implies the weak one, and a passing weak check plus cancellation
    implies the strict one. Their violation would indicate a broken
    comparator or operation and raises ``RuntimeError``.
    """
    start = perf_counter()
    law = "compatibility-strict" if strict else "compatibility"
    result = _compat_scan(op, order, strict, grid)
    checked = result[1]
    if result[0] is not None:
        return failed_report(law, result[0], checked, perf_counter() - start, op=op.name)

    if strict:
        weak_witness, n2 = _compat_scan(op, order, False, grid)
        checked += n2
        if weak_witness is not None:
            raise RuntimeError("strict compatibility passed but weak failed; "
                               "comparator or operation is inconsistent")
    else:
        cancel = check_cancellation(op, grid)
        checked += cancel.checked
        if cancel.passed:
            strict_witness, n2 = _compat_scan(op, order, True, grid)
            checked += n2
            if strict_witness is not None:
                raise RuntimeError("weak compatibility plus cancellation passed "
                                   "but strict compatibility failed")
    return passed_report(law, checked, perf_counter() - start, op=op.name,
                         order=order.spec_string())


def _compat_scan(op, order, strict, grid):
    elems = grid_elements(grid)
    checked = 0
    for x1, x2 in itertools.product(elems, repeat=2):
        c = order.compare(x1, x2)
        if c > 0 or (strict and c == 0):
            continue
        for v in elems:
            checked += 1
            cs = order.compare(add(op, x1, v), add(op, x2, v))
            if cs > 0 or (strict and cs == 0):
                return {"x1": x1, "x2": x2, "v": v,
                        "lhs": add(op, x1, v), "rhs": add(op, x2, v)}, checked
    return None, checked


def check_distributivity(mul: MultiplicationOp, addop: AdditionOp, side: str,
                         grid: GridSpec) -> LawReport:
    """Right: (c1+c2) * x = c1*x + c2*x for c1+c2 <= 1.
    Left: c * (x+z) = c*x + c*z whenever x+z stays in the bounded set."""
    start = perf_counter()
    elems = grid_elements(grid)
    coeffs = unit_grid(grid.m)
    checked = 0
    if side == "right":
        for c1, c2 in itertools.combinations_with_replacement(coeffs, 2):
            if c1 + c2 > 1.0 + TOL:
                continue
            for x in elems:
                checked += 1
                lhs = scale(mul, c1 + c2, x)
                rhs = add(addop, scale(mul, c1, x), scale(mul, c2, x))
                if not elements_equal(lhs, rhs):
                    return failed_report("distributivity-right", {
                        "c1": c1, "c2": c2, "x": x, "lhs": lhs, "rhs": rhs,
                    }, checked, perf_counter() - start, mul=mul.name, add=addop.name)
        return passed_report("distributivity-right", checked, perf_counter() - start,
                             mul=mul.name, add=addop.name)
    if side == "left":
        for x, z in itertools.combinations_with_replacement(elems, 2):
            s = add(addop, x, z)
            if not s.in_unit:
                continue
            for c in coeffs:
                checked += 1
                lhs = scale(mul, c, s)
                rhs = add(addop, scale(mul, c, x), scale(mul, c, z))
                if not elements_equal(lhs, rhs):
                    return failed_report("distributivity-left", {
                        "c": c, "x": x, "z": z, "lhs": lhs, "rhs": rhs,
                    }, checked, perf_counter() - start, mul=mul.name, add=addop.name)
        return passed_report("distributivity-left", checked, perf_counter() - start,
                             mul=mul.name, add=addop.name)
    raise BadParameter(f"side must be 'left' or 'right', got {side!r}")


def check_c1(mul: MultiplicationOp, addop: AdditionOp, order: AdmissibleOrder,
             grid: GridSpec) -> LawReport:
    """Exchange inequality for weighted sums:
    (b1*u1) + (b2*v2) <= (b1*u2) + (b2*v1) whenever b2 <= b1, u1 <= u2,
    v1 <= v2, and u1+v2 = u2+v1 stays in the bounded set."""
    start = perf_counter()
    elems = grid_elements(grid)
    coeffs = unit_grid(grid.m)
    checked = 0

    upairs = [(u1, u2) for u1, u2 in itertools.product(elems, repeat=2)
              if order.leq(u1, u2)]
    # Bucket pairs by the componentwise difference so the cross-sum
    # constraint u1+v2 = u2+v1 becomes a dictionary match.
    by_diff: dict[tuple, list] = {}
    for v1, v2 in upairs:
        key = tuple(round(a - b, 9) for a, b in zip(v2.components, v1.components))
        by_diff.setdefault(key, []).append((v1, v2))

    for u1, u2 in upairs:
        key = tuple(round(a - b, 9) for a, b in zip(u2.components, u1.components))
        for v1, v2 in by_diff.get(key, ()):
            cross = add(addop, u1, v2)
            if not cross.in_unit:
                continue
            for b1 in coeffs:
                for b2 in coeffs:
                    if b2 > b1 + TOL:
                        continue
                    checked += 1
                    lhs = add(addop, scale(mul, b1, u1), scale(mul, b2, v2))
                    rhs = add(addop, scale(mul, b1, u2), scale(mul, b2, v1))
                    if order.compare(lhs, rhs) > 0:
                        return failed_report("c1", {
                            "b1": b1, "b2": b2, "u1": u1, "u2": u2,
                            "v1": v1, "v2": v2, "lhs": lhs, "rhs": rhs,
                        }, checked, perf_counter() - start,
                            mul=mul.name, add=addop.name, order=order.spec_string())
    return passed_report("c1", checked, perf_counter() - start,
                         mul=mul.name, add=addop.name, order=order.spec_string())


def check_closure(op: AdditionOp, grid: GridSpec) -> LawReport:
    """Whether the addition restricted to the bounded set stays inside it.

    The shipped componentwise additions are not closed; this predicate is
    exposed rather than assumed anywhere.
    """
    start = perf_counter()
    elems = grid_elements(grid)
    checked = 0
    for x, z in itertools.combinations_with_replacement(elems, 2):
        checked += 1
        s = add(op, x, z)
        if not s.in_unit:
            return failed_report("closure", {"x": x, "z": z, "sum": s},
                                 checked, perf_counter() - start, op=op.name)
    return passed_report("closure", checked, perf_counter() - start, op=op.name)


def check_zero_sum(op: AdditionOp, grid: GridSpec) -> LawReport:
    """u + v equal to the least element must force u = v = least element."""
    start = perf_counter()
    elems = grid_elements(grid)
    zero = zero_element(grid.kind, grid.dim)
    checked = 0
    for u, v in itertools.combinations_with_replacement(elems, 2):
        checked += 1
        if elements_equal(add(op, u, v), zero):
            if not (elements_equal(u, zero) and elements_equal(v, zero)):
                return failed_report("zero-sum", {"u": u, "v": v},
                                     checked, perf_counter() - start, op=op.name)
    return passed_report("zero-sum", checked, perf_counter() - start, op=op.name)
