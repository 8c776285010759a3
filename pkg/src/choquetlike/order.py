"""Carriers, their natural partial orders, and admissible (total) refinements.

Three carriers are supported: scalars in [0, 1], closed intervals
[l, u] with 0 <= l <= u <= 1, and vectors in [0, 1]^k. Values produced
by addition may leave the unit-bounded set; element types therefore
admit any nonnegative components, and ``in_unit`` reports membership in
the bounded set.

Real comparisons use absolute tolerance 1e-12: two elements are equal
iff all components are within tolerance. Grid values are small
rationals, so the tolerance separates genuine ties from rounding but is
only meaningful when value spacing is much larger than 1e-12.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cmp_to_key
from time import perf_counter
from typing import Union

from .errors import BadParameter, KindMismatch
from .reporting import GridSpec, LawReport, failed_report, passed_report

TOL = 1e-12

SCALAR = "scalar"
INTERVAL = "interval"
VECTOR = "vector"


def _check_component(v: float, what: str) -> float:
    if v != v:  # NaN
        raise BadParameter(f"{what} is NaN")
    if v < -TOL:
        raise BadParameter(f"{what} must be nonnegative, got {v}")
    return 0.0 if v < 0.0 else float(v)


@dataclass(frozen=True, slots=True)
class Scalar:
    value: float

    def __post_init__(self):
        object.__setattr__(self, "value", _check_component(self.value, "scalar value"))

    @property
    def kind(self) -> str:
        return SCALAR

    @property
    def components(self) -> tuple[float, ...]:
        return (self.value,)

    @property
    def in_unit(self) -> bool:
        return self.value <= 1.0 + TOL

    def to_json(self):
        return self.value


@dataclass(frozen=True, slots=True)
class Interval:
    lower: float
    upper: float

    def __post_init__(self):
        lo = _check_component(self.lower, "interval lower endpoint")
        hi = _check_component(self.upper, "interval upper endpoint")
        if hi < lo:
            if lo - hi > TOL:
                raise BadParameter(f"interval endpoints out of order: [{lo}, {hi}]")
            hi = lo
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @property
    def kind(self) -> str:
        return INTERVAL

    @property
    def components(self) -> tuple[float, ...]:
        return (self.lower, self.upper)

    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def in_unit(self) -> bool:
        return self.upper <= 1.0 + TOL

    def to_json(self):
        return [self.lower, self.upper]


@dataclass(frozen=True, slots=True)
class Vector:
    coords: tuple[float, ...]

    def __post_init__(self):
        coords = tuple(_check_component(c, "vector coordinate") for c in self.coords)
        if not coords:
            raise BadParameter("vector needs at least one coordinate")
        object.__setattr__(self, "coords", coords)

    @property
    def kind(self) -> str:
        return VECTOR

    @property
    def components(self) -> tuple[float, ...]:
        return self.coords

    @property
    def in_unit(self) -> bool:
        return all(c <= 1.0 + TOL for c in self.coords)

    def to_json(self):
        return list(self.coords)


Element = Union[Scalar, Interval, Vector]


def kind_of(x: Element) -> str:
    return x.kind


def dim_of(x: Element) -> int:
    """Number of real components carried by the element."""
    return len(x.components)


def require_same_carrier(x: Element, z: Element) -> None:
    if x.kind != z.kind or dim_of(x) != dim_of(z):
        raise KindMismatch(f"carrier mismatch: {x!r} vs {z!r}")


def from_components(kind: str, comps) -> Element:
    comps = tuple(float(c) for c in comps)
    if kind == SCALAR:
        if len(comps) != 1:
            raise BadParameter("scalar takes exactly one component")
        return Scalar(comps[0])
    if kind == INTERVAL:
        if len(comps) != 2:
            raise BadParameter("interval takes exactly two components")
        return Interval(comps[0], comps[1])
    if kind == VECTOR:
        return Vector(comps)
    raise BadParameter(f"unknown carrier kind: {kind!r}")


def zero_element(kind: str, dim: int = 1) -> Element:
    """Least element of the bounded set for the given carrier."""
    if kind == SCALAR:
        return Scalar(0.0)
    if kind == INTERVAL:
        return Interval(0.0, 0.0)
    if kind == VECTOR:
        return Vector((0.0,) * dim)
    raise BadParameter(f"unknown carrier kind: {kind!r}")


def one_element(kind: str, dim: int = 1) -> Element:
    """Greatest element of the bounded set for the given carrier."""
    if kind == SCALAR:
        return Scalar(1.0)
    if kind == INTERVAL:
        return Interval(1.0, 1.0)
    if kind == VECTOR:
        return Vector((1.0,) * dim)
    raise BadParameter(f"unknown carrier kind: {kind!r}")


def zero_like(x: Element) -> Element:
    return zero_element(x.kind, dim_of(x))


def one_like(x: Element) -> Element:
    return one_element(x.kind, dim_of(x))


def elements_equal(x: Element, z: Element, tol: float = TOL) -> bool:
    require_same_carrier(x, z)
    return all(abs(a - b) <= tol for a, b in zip(x.components, z.components))


def element_to_json(x: Element):
    return x.to_json()


def element_from_json(kind: str, obj) -> Element:
    if kind == SCALAR:
        return Scalar(float(obj))
    if kind == INTERVAL:
        lo, hi = obj
        return Interval(float(lo), float(hi))
    if kind == VECTOR:
        return Vector(tuple(float(c) for c in obj))
    raise BadParameter(f"unknown carrier kind: {kind!r}")


# ---------------------------------------------------------------------------
# Natural partial orders
# ---------------------------------------------------------------------------

def partial_leq(x: Element, z: Element) -> bool:
    """Natural partial order of the carrier: <= on scalars, componentwise
    on interval endpoints and vector coordinates."""
    require_same_carrier(x, z)
    return all(a <= b + TOL for a, b in zip(x.components, z.components))


def k_alpha(x: Interval, alpha: float) -> float:
    """Convex endpoint mix (1-alpha)*lower + alpha*upper."""
    if not isinstance(x, Interval):
        raise KindMismatch("k_alpha is defined on intervals")
    if not (-TOL <= alpha <= 1.0 + TOL):
        raise BadParameter(f"alpha must lie in [0, 1], got {alpha}")
    return (1.0 - alpha) * x.lower + alpha * x.upper


# ---------------------------------------------------------------------------
# Admissible orders
# ---------------------------------------------------------------------------

LESS, EQUAL, GREATER = "less", "equal", "greater"
_WORD = {-1: LESS, 0: EQUAL, 1: GREATER}


class AdmissibleOrder:
    """Total order refining the carrier's natural partial order.

    Subclasses implement ``compare`` returning -1, 0, or +1. Comparators
    are defined on the ambient set, not just the unit-bounded part, so
    sums produced by addition remain comparable.
    """

    kind: str = ""

    def compare(self, x: Element, z: Element) -> int:
        raise NotImplementedError

    def leq(self, x: Element, z: Element) -> bool:
        return self.compare(x, z) <= 0

    def lt(self, x: Element, z: Element) -> bool:
        return self.compare(x, z) < 0

    def eq(self, x: Element, z: Element) -> bool:
        return self.compare(x, z) == 0

    def sort(self, elems) -> list:
        return sorted(elems, key=cmp_to_key(self.compare))

    def spec_string(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({self.spec_string()!r})"


class ScalarUsual(AdmissibleOrder):
    """The usual order on [0, 1] (its own admissible refinement)."""

    kind = SCALAR

    def compare(self, x: Element, z: Element) -> int:
        d = x.value - z.value
        if abs(d) <= TOL:
            return 0
        return -1 if d < 0 else 1

    def spec_string(self) -> str:
        return "scalar"


class AlphaBeta(AdmissibleOrder):
    """Interval order comparing the alpha endpoint mix first, tie-breaking
    by the beta mix. alpha != beta makes it total: both mixes equal force
    interval equality. Includes the lexicographical (0,1),
    antilexicographical (1,0), and Xu-Yager (0.5,1) orders."""

    kind = INTERVAL

    def __init__(self, alpha: float, beta: float):
        if not (0.0 <= alpha <= 1.0 and 0.0 <= beta <= 1.0):
            raise BadParameter("alpha and beta must lie in [0, 1]")
        if abs(alpha - beta) <= 1e-9:
            raise BadParameter("alpha and beta must differ")
        self.alpha = float(alpha)
        self.beta = float(beta)

    def compare(self, x: Element, z: Element) -> int:
        if not isinstance(x, Interval) or not isinstance(z, Interval):
            raise KindMismatch("alpha-beta order compares intervals")
        da = k_alpha(x, self.alpha) - k_alpha(z, self.alpha)
        if abs(da) > TOL:
            return -1 if da < 0 else 1
        db = k_alpha(x, self.beta) - k_alpha(z, self.beta)
        if abs(db) > TOL:
            return -1 if db < 0 else 1
        return 0

    def spec_string(self) -> str:
        return f"ab:{_fmt(self.alpha)}:{_fmt(self.beta)}"


class VectorLex(AdmissibleOrder):
    """Lexicographic vector order under a coordinate priority permutation.

    The simplest linear extension of the product order on [0, 1]^k; the
    canonical admissible order this library ships for vectors.
    """

    kind = VECTOR

    def __init__(self, priority: tuple[int, ...]):
        priority = tuple(int(i) for i in priority)
        if sorted(priority) != list(range(len(priority))) or not priority:
            raise BadParameter("priority must be a permutation of 0..k-1")
        self.priority = priority

    @property
    def dim(self) -> int:
        return len(self.priority)

    def compare(self, x: Element, z: Element) -> int:
        if not isinstance(x, Vector) or not isinstance(z, Vector):
            raise KindMismatch("lexicographic order compares vectors")
        if dim_of(x) != self.dim or dim_of(z) != self.dim:
            raise KindMismatch("vector dimension does not match the order")
        for i in self.priority:
            d = x.coords[i] - z.coords[i]
            if abs(d) > TOL:
                return -1 if d < 0 else 1
        return 0

    def spec_string(self) -> str:
        return "veclex:" + ",".join(str(i + 1) for i in self.priority)


def admissible_compare(order: AdmissibleOrder, x: Element, z: Element) -> str:
    """Total-order comparison, reported as 'less' | 'equal' | 'greater'."""
    return _WORD[order.compare(x, z)]


def _fmt(v: float) -> str:
    return f"{v:g}"


def parse_order(spec: str) -> AdmissibleOrder:
    """Build an order from its specification string.

    Grammar: ``scalar`` | ``ab:<alpha>:<beta>`` | ``veclex:<perm>`` where
    perm is a comma-separated 1-based priority, e.g. ``veclex:1,2,3``.
    """
    spec = spec.strip()
    if spec == "scalar":
        return ScalarUsual()
    if spec.startswith("ab:"):
        parts = spec.split(":")
        if len(parts) != 3:
            raise BadParameter(f"bad order spec: {spec!r}")
        return AlphaBeta(float(parts[1]), float(parts[2]))
    if spec.startswith("veclex:"):
        perm = tuple(int(p) - 1 for p in spec[len("veclex:"):].split(","))
        return VectorLex(perm)
    raise BadParameter(f"bad order spec: {spec!r}")


def default_order(kind: str, dim: int = 2) -> AdmissibleOrder:
    if kind == SCALAR:
        return ScalarUsual()
    if kind == INTERVAL:
        return AlphaBeta(0.5, 1.0)  # Xu-Yager
    if kind == VECTOR:
        return VectorLex(tuple(range(dim)))
    raise BadParameter(f"unknown carrier kind: {kind!r}")


# ---------------------------------------------------------------------------
# Grid enumeration
# ---------------------------------------------------------------------------

def unit_grid(m: int, bounds: tuple[float, float] = (0.0, 1.0)) -> list[float]:
    lo, hi = bounds
    return [i / m for i in range(m + 1) if lo - TOL <= i / m <= hi + TOL]


def grid_elements(grid: GridSpec) -> list[Element]:
    """All bounded-set elements at the grid resolution, in component-lex order.

    Interval grids enumerate only pairs with lower <= upper; vector grids
    are full coordinate products of dimension ``grid.dim``.
    """
    vals = unit_grid(grid.m, grid.bounds)
    if grid.kind == SCALAR:
        return [Scalar(v) for v in vals]
    if grid.kind == INTERVAL:
        return [Interval(lo, hi) for lo in vals for hi in vals if hi >= lo - TOL]
    if grid.kind == VECTOR:
        return [Vector(c) for c in itertools.product(vals, repeat=grid.dim)]
    raise BadParameter(f"unknown carrier kind: {grid.kind!r}")


# ---------------------------------------------------------------------------
# Order law check
# ---------------------------------------------------------------------------

def check_admissibility(order: AdmissibleOrder, grid: GridSpec) -> LawReport:
    """Exhaustively check that the order is a total order refining the
    carrier's partial order on the grid.

    Verifies: refinement (x partially below z implies x totally below-or-
    equal z), totality/consistency of the comparator, antisymmetry
    (equal implies componentwise equality), and transitivity over all
    grid triples. Fails with the violating pair or triple.
    """
    start = perf_counter()
    elems = grid_elements(grid)
    checked = 0

    for x, z in itertools.product(elems, repeat=2):
        checked += 1
        cxz = order.compare(x, z)
        czx = order.compare(z, x)
        if cxz != -czx:
            return failed_report("admissibility", {
                "violation": "totality", "x": x, "z": z,
                "compare_xz": _WORD[cxz], "compare_zx": _WORD[czx],
            }, checked, perf_counter() - start, order=order.spec_string())
        if cxz == 0 and not elements_equal(x, z):
            return failed_report("admissibility", {
                "violation": "antisymmetry", "x": x, "z": z,
            }, checked, perf_counter() - start, order=order.spec_string())
        if partial_leq(x, z) and cxz > 0:
            return failed_report("admissibility", {
                "violation": "refinement", "x": x, "z": z,
                "partial": "leq", "total": _WORD[cxz],
            }, checked, perf_counter() - start, order=order.spec_string())

    for x, y, z in itertools.product(elems, repeat=3):
        checked += 1
        if order.compare(x, y) <= 0 and order.compare(y, z) <= 0 and order.compare(x, z) > 0:
            return failed_report("admissibility", {
                "violation": "transitivity", "x": x, "y": y, "z": z,
            }, checked, perf_counter() - start, order=order.spec_string())

    return passed_report("admissibility", checked, perf_counter() - start,
                         order=order.spec_string(),
                         note=f"no counterexample at resolution m={grid.m}")
