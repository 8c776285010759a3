"""The Choquet-like operator: a fold, under an addition operation, of
kernel terms evaluated along an admissible permutation of the inputs.

For inputs x_1, ..., x_n, a capacity mu, and a permutation sigma sorting
the inputs into a non-decreasing chain, the operator value is

    (+)_{i=1..n} L(x_{sigma(i)}, x_{sigma(i-1)}, b_i, b_{i+1})

where x_{sigma(0)} is the least element, b_i is the capacity of the tail
set {sigma(i), ..., sigma(n)}, and b_{n+1} = 0. Kernels may consult the
current input, the previous input, and the two adjacent tail weights;
the two classical specializations ignore the previous input ('ci') or
the second weight ('cii').
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Callable, Optional

from .algebra import (
    AdditionOp, MultiplicationOp, add, addition_for, scale, scale_for,
)
from .capacity import Capacity, tail_values
from .dissimilarity import DissimilarityFn, resolve_delta
from .errors import (
    BadParameter, KernelRangeError, KindMismatch, NotAdmissiblePermutation,
    TooManyTies, UnknownKernel,
)
from .order import (
    TOL, AdmissibleOrder, Element, Interval, Vector, dim_of, elements_equal,
    from_components, zero_like,
)

MAX_MATERIALIZED_PERMUTATIONS = 10_000
CONSISTENCY_SAMPLES = 1_000

GENERAL, CI, CII = "general", "ci", "cii"


@dataclass(frozen=True)
class KernelL:
    """Kernel of the operator, tagged by which arguments it consumes.

    'general' kernels receive (current, previous, b1, b2); 'ci' kernels
    (current, b1, b2); 'cii' kernels (current, previous, b1). Outputs
    must stay in the unit-bounded carrier; values beyond 1e-9 outside
    raise, smaller overshoots are snapped.
    """

    tag: str
    fn: Callable
    name: str
    family: str = "custom"

    def __post_init__(self):
        if self.tag not in (GENERAL, CI, CII):
            raise BadParameter(f"unknown kernel tag: {self.tag!r}")

    def evaluate(self, x1: Element, x2: Element, b1: float, b2: float) -> Element:
        if self.tag == CI:
            out = self.fn(x1, b1, b2)
        elif self.tag == CII:
            out = self.fn(x1, x2, b1)
        else:
            out = self.fn(x1, x2, b1, b2)
        return _validate_unit(out, self.name)


def _validate_unit(x: Element, kernel_name: str) -> Element:
    comps = x.components
    if all(-TOL <= c <= 1.0 + TOL for c in comps):
        return x
    if all(-1e-9 <= c <= 1.0 + 1e-9 for c in comps):
        return from_components(x.kind, tuple(min(max(c, 0.0), 1.0) for c in comps))
    raise KernelRangeError(
        f"kernel {kernel_name!r} produced {x!r} outside the bounded carrier")


@dataclass(frozen=True)
class AggregationInput:
    """One aggregation instance: inputs, capacity, order, and addition."""

    X: tuple[Element, ...]
    mu: Capacity
    order: AdmissibleOrder
    addop: AdditionOp

    def __post_init__(self):
        X = tuple(self.X)
        object.__setattr__(self, "X", X)
        if len(X) < 2:
            raise BadParameter("aggregation needs at least two inputs")
        kind, dim = X[0].kind, dim_of(X[0])
        for x in X[1:]:
            if x.kind != kind or dim_of(x) != dim:
                raise KindMismatch("all inputs must share carrier kind and dimension")
        if self.mu.n != len(X):
            raise BadParameter(f"capacity is on [{self.mu.n}] but there are "
                               f"{len(X)} inputs")
        if self.order.kind != kind:
            raise KindMismatch("order carrier does not match the inputs")
        if self.addop.kind != kind:
            raise KindMismatch("addition carrier does not match the inputs")

    @property
    def n(self) -> int:
        return len(self.X)

    @property
    def zero(self) -> Element:
        return zero_like(self.X[0])


# ---------------------------------------------------------------------------
# Admissible permutations
# ---------------------------------------------------------------------------

class PermutationSet:
    """Lazy view of all permutations sorting X into a non-decreasing chain.

    Built as a stable sort by (order, original index) followed by the
    product of permutations within each tie group, which fixes a
    deterministic enumeration order whose first member is the
    lexicographically smallest admissible permutation.
    """

    def __init__(self, X, order: AdmissibleOrder):
        if not X:
            raise BadParameter("need at least one input")
        idx = _order_sort(X, order)
        groups: list[list[int]] = [[idx[0]]]
        for i in idx[1:]:
            if order.eq(X[groups[-1][0]], X[i]):
                groups[-1].append(i)
            else:
                groups.append([i])
        self.groups = groups
        self.count = math.prod(math.factorial(len(g)) for g in groups)

    def __iter__(self):
        for parts in itertools.product(*(itertools.permutations(g) for g in self.groups)):
            yield tuple(itertools.chain.from_iterable(parts))

    def first(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(self.groups))

    def materialize(self, limit: int = MAX_MATERIALIZED_PERMUTATIONS) -> list[tuple[int, ...]]:
        if self.count > limit:
            raise TooManyTies(
                f"{self.count} admissible permutations exceed the limit {limit}")
        return list(self)

    def sample(self, k: int, seed: int) -> list[tuple[int, ...]]:
        rng = random.Random(seed)
        out = []
        for _ in range(k):
            parts = []
            for g in self.groups:
                g = list(g)
                rng.shuffle(g)
                parts.extend(g)
            out.append(tuple(parts))
        return out


def _order_sort(X, order: AdmissibleOrder) -> list[int]:
    # Indices sorted by the comparator, ties broken by original position.
    def cmp(i, j):
        c = order.compare(X[i], X[j])
        if c != 0:
            return c
        return -1 if i < j else (0 if i == j else 1)

    return sorted(range(len(X)), key=cmp_to_key(cmp))


def admissible_permutations(X, order: AdmissibleOrder) -> list[tuple[int, ...]]:
    """All 0-based permutations sigma with X[sigma[0]] <= ... <= X[sigma[-1]].

    Never empty. Materialization refuses above 10,000 permutations
    (``TooManyTies``); use :class:`PermutationSet` to stream or sample.
    """
    return PermutationSet(X, order).materialize()


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EvalOutcome:
    value: Element
    in_unit: bool


@dataclass(frozen=True)
class AggregateResult:
    """Operator value plus the consistency report across admissible
    permutations. ``value`` always comes from the lexicographically first
    permutation so downstream tooling has a number to display;
    ``consistent`` is the authoritative flag."""

    value: Element
    consistent: bool
    in_unit: bool
    permutations: int
    sampled: bool
    checked: int
    witness: Optional[dict] = None


def choquet_eval(inp: AggregationInput, kernel: KernelL,
                 sigma: tuple[int, ...]) -> EvalOutcome:
    """Evaluate the operator along one admissible permutation.

    Raises ``NotAdmissiblePermutation`` if sigma does not sort the inputs
    into a non-decreasing chain. The folded sum may leave the bounded
    set; ``in_unit`` records membership.
    """
    X, order = inp.X, inp.order
    n = inp.n
    if sorted(sigma) != list(range(n)):
        raise NotAdmissiblePermutation("sigma is not a permutation of range(n)")
    for a, b in zip(sigma, sigma[1:]):
        if order.compare(X[a], X[b]) > 0:
            raise NotAdmissiblePermutation(
                f"inputs at positions {a} and {b} are out of order under sigma")
    value = _eval_sorted(inp, kernel, sigma)
    return EvalOutcome(value=value, in_unit=value.in_unit)


def _eval_sorted(inp: AggregationInput, kernel: KernelL, sigma) -> Element:
    X = inp.X
    b = tail_values(inp.mu, sigma)
    prev = inp.zero
    acc = None
    for i, pos in enumerate(sigma):
        term = kernel.evaluate(X[pos], prev, b[i], b[i + 1])
        acc = term if acc is None else add(inp.addop, acc, term)
        prev = X[pos]
    return acc


def choquet_aggregate(inp: AggregationInput, kernel: KernelL,
                      sample_seed: int = 42) -> AggregateResult:
    """Evaluate over every admissible permutation and report consistency.

    When the permutation set is too large to enumerate (above 10,000),
    consistency is sampled over 1,000 deterministic pseudo-random
    admissible permutations instead. Inconsistency is reported, never
    raised; the witness carries two permutations and their values.
    """
    perms = PermutationSet(inp.X, inp.order)
    first = perms.first()
    base = _eval_sorted(inp, kernel, first)

    sampled = perms.count > MAX_MATERIALIZED_PERMUTATIONS
    if sampled:
        candidates = perms.sample(CONSISTENCY_SAMPLES, sample_seed)
    else:
        candidates = list(perms)

    consistent = True
    witness = None
    checked = 0
    for sigma in candidates:
        checked += 1
        if sigma == first:
            continue
        v = _eval_sorted(inp, kernel, sigma)
        if not elements_equal(v, base):
            consistent = False
            witness = {"sigma_a": first, "value_a": base,
                       "sigma_b": sigma, "value_b": v}
            break

    return AggregateResult(value=base, consistent=consistent,
                           in_unit=base.in_unit, permutations=perms.count,
                           sampled=sampled, checked=checked, witness=witness)


# ---------------------------------------------------------------------------
# Kernel catalog
# ---------------------------------------------------------------------------

_CARRIER_FNS: dict[str, Callable[[Element], Element]] = {}


def _register_carrier_fn(name):
    def deco(fn):
        _CARRIER_FNS[name] = fn
        return fn
    return deco


@_register_carrier_fn("zero")
def _cf_zero(x: Element) -> Element:
    return zero_like(x)


@_register_carrier_fn("identity")
def _cf_identity(x: Element) -> Element:
    return x


@_register_carrier_fn("upper")
def _cf_upper(x: Element) -> Element:
    if isinstance(x, Interval):
        return Interval(x.upper, x.upper)
    if isinstance(x, Vector):
        m = max(x.coords)
        return Vector((m,) * dim_of(x))
    return x


@_register_carrier_fn("lower")
def _cf_lower(x: Element) -> Element:
    if isinstance(x, Interval):
        return Interval(x.lower, x.lower)
    if isinstance(x, Vector):
        m = min(x.coords)
        return Vector((m,) * dim_of(x))
    return x


def resolve_carrier_fn(spec, kind: str) -> Callable[[Element], Element]:
    if callable(spec):
        return spec
    if spec in _CARRIER_FNS:
        return _CARRIER_FNS[spec]
    if isinstance(spec, str) and spec.startswith("scale:"):
        t = float(spec.split(":", 1)[1])
        mul = scale_for(kind)
        return lambda x: scale(mul, t, x)
    raise BadParameter(f"unknown carrier function: {spec!r}")


_KERNELS: dict[str, KernelL] = {}


def register_kernel(kernel: KernelL) -> KernelL:
    _KERNELS[kernel.name] = kernel
    return kernel


def delta_scale_kernel(delta, kind: str, mul: Optional[MultiplicationOp] = None,
                       name: Optional[str] = None) -> KernelL:
    """Weight-difference kernel G(x, b1, b2) = delta(b1, b2) * x.

    With delta the plain difference this is the classical Choquet
    integrand lifted to the carrier.
    """
    delta_fn = resolve_delta(delta)
    mul = mul or scale_for(kind)
    label = name or (delta if isinstance(delta, str) else "custom")
    return KernelL(CI, lambda x, b1, b2: scale(mul, delta_fn(b1, b2), x),
                   name=f"delta-scale({label})", family="delta-scale")


def f_difference_kernel(F: Callable[[Element, float], Element],
                        name: str = "custom") -> KernelL:
    """Kernel G(x, b1, b2) = F(x, b1 - b2) for b1 >= b2."""
    return KernelL(CI, lambda x, b1, b2: F(x, b1 - b2),
                   name=f"f-difference({name})", family="f-difference")


def b_scale_d_kernel(d: DissimilarityFn, kind: str,
                     mul: Optional[MultiplicationOp] = None) -> KernelL:
    """Kernel G(x1, x2, b) = b * d(x1, x2): capacity-weighted dissimilarity
    to the previous input."""
    mul = mul or scale_for(kind)
    return KernelL(CII, lambda x1, x2, b: scale(mul, b, d(x1, x2)),
                   name=f"b-scale-d({d.name})", family="b-scale-d")


def affine_f_kernel(C, D, kind: str, name: Optional[str] = None) -> KernelL:
    """Affine kernel F(x, a) = a*C(x) + D(x) componentwise, in the
    weight-difference form G(x, b1, b2) = F(x, b1 - b2)."""
    C_fn = resolve_carrier_fn(C, kind)
    D_fn = resolve_carrier_fn(D, kind)
    mul = scale_for(kind)
    addop = addition_for(kind)

    def F(x: Element, a: float) -> Element:
        return add(addop, scale(mul, a, C_fn(x)), D_fn(x))

    label = name or f"{C if isinstance(C, str) else 'C'},{D if isinstance(D, str) else 'D'}"
    kernel = KernelL(CI, lambda x, b1, b2: F(x, b1 - b2),
                     name=f"affine-F({label})", family="affine-F")
    return kernel


def kernel_catalog(spec, kind: str, order: Optional[AdmissibleOrder] = None) -> KernelL:
    """Build a kernel from a JSON-style spec.

    Families: ``{"family": "delta-scale", "delta": "difference"}``,
    ``{"family": "f-difference", "F": callable}``,
    ``{"family": "b-scale-d", "d": "abs-diff"}``,
    ``{"family": "affine-F", "C": "scale:0.7", "D": "scale:0.1"}``,
    ``{"family": "custom", "name": "..."}``. A bare string is shorthand
    for a family with default parameters or a registered custom name.
    """
    if isinstance(spec, str):
        if spec in _KERNELS:
            return _KERNELS[spec]
        spec = {"family": spec}
    family = spec.get("family")
    if family == "delta-scale":
        return delta_scale_kernel(spec.get("delta", "difference"), kind)
    if family == "f-difference":
        F = spec.get("F")
        if not callable(F):
            raise BadParameter("f-difference needs a callable F(x, a)")
        return f_difference_kernel(F, name=spec.get("name", "custom"))
    if family == "b-scale-d":
        from .dissimilarity import resolve_dissimilarity

        d_spec = spec.get("d", "abs-diff")
        d = d_spec if isinstance(d_spec, DissimilarityFn) else \
            resolve_dissimilarity(d_spec, kind, order)
        return b_scale_d_kernel(d, kind)
    if family == "affine-F":
        if "C" not in spec or "D" not in spec:
            raise BadParameter("affine-F needs carrier functions C and D")
        return affine_f_kernel(spec["C"], spec["D"], kind, name=spec.get("name"))
    if family == "custom":
        name = spec.get("name")
        if name in _KERNELS:
            return _KERNELS[name]
        raise UnknownKernel(f"no registered kernel named {name!r}")
    raise UnknownKernel(f"unknown kernel family: {family!r}")


def classical_kernel(kind: str) -> KernelL:
    """The plain weight-difference kernel: the classical Choquet integrand."""
    return delta_scale_kernel("difference", kind)
