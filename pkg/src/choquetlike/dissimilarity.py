"""Dissimilarity functions on the carriers and the width-based interval
construction of Takac-style interval-valued dissimilarities.

A dissimilarity is symmetric, vanishes on the diagonal, is maximal at
(least, greatest), and grows along chains of the admissible order. For
intervals and vectors the shipped ``abs-diff`` and ``sq-diff`` project
through the order's leading invariant (the alpha endpoint mix, or the
first priority coordinate) and return constant-width elements; that is
the construction under which the telescoping identity survives beyond
scalars.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from time import perf_counter
from typing import Callable, Optional

from .algebra import IV_PLUS, AdditionOp, add
from .errors import (
    AlphaOutOfRange, BadParameter, NoWitnessFound, ReconstructionOutOfK,
)
from .order import (
    INTERVAL, SCALAR, TOL, VECTOR, AdmissibleOrder, AlphaBeta, Element,
    Interval, Scalar, Vector, VectorLex, elements_equal, grid_elements,
    k_alpha, one_element, zero_element,
)
from .reporting import GridSpec, LawReport, failed_report, passed_report


@dataclass(frozen=True)
class DissimilarityFn:
    name: str
    kind: str
    fn: Callable[[Element, Element], Element]

    def __call__(self, x: Element, z: Element) -> Element:
        return self.fn(x, z)


# ---------------------------------------------------------------------------
# Scalar dissimilarities on [0, 1] (also used as capacity-difference deltas)
# ---------------------------------------------------------------------------

def delta_abs(a: float, b: float) -> float:
    return abs(a - b)


def delta_sq(a: float, b: float) -> float:
    return (a - b) ** 2


def delta_capped_double(a: float, b: float) -> float:
    return min(1.0, 2.0 * abs(a - b))


_DELTAS: dict[str, Callable[[float, float], float]] = {
    "abs-diff": delta_abs,
    "difference": delta_abs,
    "sq-diff": delta_sq,
    "capped-double": delta_capped_double,
}


def resolve_delta(spec) -> Callable[[float, float], float]:
    if callable(spec):
        return spec
    try:
        return _DELTAS[spec]
    except KeyError:
        raise BadParameter(f"unknown scalar dissimilarity: {spec!r}") from None


def delta_covers_unit_range(delta: Callable[[float, float], float],
                            samples: int = 64) -> bool:
    """Whether t -> delta(t, 0) sweeps [0, 1] over t in [0, 1].

    Checked as: endpoints hit 0 and 1, values stay in [0, 1], and the map
    is non-decreasing on a sample grid. Of the shipped deltas only
    ``abs-diff`` both satisfies this and is strictly monotone.
    """
    prev = None
    for i in range(samples + 1):
        v = delta(i / samples, 0.0)
        if not (-TOL <= v <= 1.0 + TOL):
            return False
        if prev is not None and v < prev - TOL:
            return False
        prev = v
    return abs(delta(0.0, 0.0)) <= TOL and abs(delta(1.0, 0.0) - 1.0) <= TOL


# ---------------------------------------------------------------------------
# Carrier-valued dissimilarities
# ---------------------------------------------------------------------------

def scalar_dissimilarity(name: str) -> DissimilarityFn:
    delta = resolve_delta(name)
    return DissimilarityFn(name, SCALAR,
                           lambda x, z: Scalar(delta(x.value, z.value)))


def interval_projected(name: str, alpha: float) -> DissimilarityFn:
    """Interval dissimilarity d(x, z) = [t, t] with t = delta of the alpha
    endpoint mixes. Degenerate output makes the chain conditions and the
    telescoping identity reduce to their scalar counterparts."""
    delta = resolve_delta(name)

    def fn(x: Element, z: Element) -> Element:
        t = delta(k_alpha(x, alpha), k_alpha(z, alpha))
        return Interval(t, t)

    return DissimilarityFn(name, INTERVAL, fn)


def vector_projected(name: str, order: VectorLex) -> DissimilarityFn:
    """Vector dissimilarity returning the constant vector of the delta of
    the first-priority coordinates."""
    delta = resolve_delta(name)
    lead = order.priority[0]
    dim = order.dim

    def fn(x: Element, z: Element) -> Element:
        t = delta(x.coords[lead], z.coords[lead])
        return Vector((t,) * dim)

    return DissimilarityFn(name, VECTOR, fn)


def resolve_dissimilarity(spec: str, kind: str,
                          order: Optional[AdmissibleOrder] = None) -> DissimilarityFn:
    """Resolve a dissimilarity spec string for a carrier.

    Grammar: ``abs-diff`` | ``sq-diff`` | ``takac:<alpha>:<Md>:<deltad>``
    with Md in {max, min, mean} and deltad in {abs-diff}. Interval and
    vector variants of abs/sq-diff need the admissible order to project
    through.
    """
    spec = spec.strip()
    if spec.startswith("takac:"):
        parts = spec.split(":")
        if len(parts) != 4:
            raise BadParameter(f"bad dissimilarity spec: {spec!r}")
        if kind != INTERVAL:
            raise BadParameter("the takac construction is interval-valued")
        return takac_dissimilarity_fn(float(parts[1]), parts[2], parts[3])
    if spec in _DELTAS:
        if kind == SCALAR:
            return scalar_dissimilarity(spec)
        if kind == INTERVAL:
            if not isinstance(order, AlphaBeta):
                raise BadParameter(
                    "interval dissimilarities need an ab:<alpha>:<beta> order")
            return interval_projected(spec, order.alpha)
        if kind == VECTOR:
            if not isinstance(order, VectorLex):
                raise BadParameter("vector dissimilarities need a veclex order")
            return vector_projected(spec, order)
    raise BadParameter(f"unknown dissimilarity spec: {spec!r}")


# ---------------------------------------------------------------------------
# Width normalization and the Takac construction
# ---------------------------------------------------------------------------

_MEANS: dict[str, Callable[[float, float], float]] = {
    "max": max,
    "min": min,
    "mean": lambda a, b: 0.5 * (a + b),
}


def resolve_symmetric_mean(spec) -> Callable[[float, float], float]:
    if callable(spec):
        return spec
    try:
        return _MEANS[spec]
    except KeyError:
        raise BadParameter(f"unknown symmetric aggregation: {spec!r}") from None


def lambda_alpha(x: Interval, alpha: float) -> float:
    """Normalized relative width w(x) / min(K_alpha/alpha, (1-K_alpha)/(1-alpha))
    with the convention 0/0 = 0."""
    if not (TOL < alpha < 1.0 - TOL):
        raise AlphaOutOfRange(f"alpha must lie strictly inside (0, 1), got {alpha}")
    ka = k_alpha(x, alpha)
    denom = min(ka / alpha, (1.0 - ka) / (1.0 - alpha))
    if denom <= TOL:
        return 0.0
    return x.width / denom


def takac_dissimilarity(x: Interval, y: Interval, alpha: float,
                        m_d, delta_d) -> Interval:
    """Interval dissimilarity determined by two coordinates: the alpha mix
    of the output is delta_d of the inputs' alpha mixes, and its
    normalized width is m_d of the inputs' normalized widths. The interval
    is reassembled as [K - alpha*w, K + (1-alpha)*w] where w inverts the
    width normalization."""
    if not (TOL < alpha < 1.0 - TOL):
        raise AlphaOutOfRange(f"alpha must lie strictly inside (0, 1), got {alpha}")
    m_d = resolve_symmetric_mean(m_d)
    delta_d = resolve_delta(delta_d)

    kz = delta_d(k_alpha(x, alpha), k_alpha(y, alpha))
    lz = m_d(lambda_alpha(x, alpha), lambda_alpha(y, alpha))
    denom = min(kz / alpha, (1.0 - kz) / (1.0 - alpha))
    wz = 0.0 if denom <= TOL else lz * denom

    lo = kz - alpha * wz
    hi = kz + (1.0 - alpha) * wz
    slack = 1e-9
    if lo < -slack or hi > 1.0 + slack or hi < lo - slack:
        raise ReconstructionOutOfK(
            f"reconstructed interval [{lo}, {hi}] leaves [0, 1]")
    lo = min(max(lo, 0.0), 1.0)
    hi = min(max(hi, lo), 1.0)
    return Interval(lo, hi)


def takac_dissimilarity_fn(alpha: float, m_d, delta_d) -> DissimilarityFn:
    m_name = m_d if isinstance(m_d, str) else "custom"
    d_name = delta_d if isinstance(delta_d, str) else "custom"
    return DissimilarityFn(
        f"takac:{alpha:g}:{m_name}:{d_name}", INTERVAL,
        lambda x, y: takac_dissimilarity(x, y, alpha, m_d, delta_d))


# ---------------------------------------------------------------------------
# Law checks
# ---------------------------------------------------------------------------

def check_dissimilarity(d: DissimilarityFn, order: AdmissibleOrder,
                        grid: GridSpec) -> LawReport:
    """Grid check of the dissimilarity axioms: symmetry, maximality at the
    bounds, a vanishing diagonal, and growth along order chains."""
    start = perf_counter()
    elems = order.sort(grid_elements(grid))
    dim = grid.dim
    zero = zero_element(grid.kind, dim)
    one = one_element(grid.kind, dim)
    checked = 0

    boundary = d(zero, one)
    checked += 1
    if not elements_equal(boundary, one):
        return failed_report("dissimilarity", {
            "violation": "boundary", "value": boundary, "expected": one,
        }, checked, perf_counter() - start, d=d.name)

    for x in elems:
        checked += 1
        diag = d(x, x)
        if not elements_equal(diag, zero):
            return failed_report("dissimilarity", {
                "violation": "diagonal", "x": x, "value": diag,
            }, checked, perf_counter() - start, d=d.name)

    for x, z in itertools.combinations(elems, 2):
        checked += 1
        if not elements_equal(d(x, z), d(z, x)):
            return failed_report("dissimilarity", {
                "violation": "symmetry", "x": x, "z": z,
                "xz": d(x, z), "zx": d(z, x),
            }, checked, perf_counter() - start, d=d.name)

    # Elements are order-sorted, so chains x <= y <= z are index triples.
    for i, j, k in itertools.combinations_with_replacement(range(len(elems)), 3):
        x, y, z = elems[i], elems[j], elems[k]
        checked += 1
        if order.compare(d(x, y), d(x, z)) > 0 or order.compare(d(y, z), d(x, z)) > 0:
            return failed_report("dissimilarity", {
                "violation": "chain-monotonicity", "x": x, "y": y, "z": z,
                "d_xy": d(x, y), "d_yz": d(y, z), "d_xz": d(x, z),
            }, checked, perf_counter() - start, d=d.name)

    return passed_report("dissimilarity", checked, perf_counter() - start,
                         d=d.name, note=f"no counterexample at resolution m={grid.m}")


def check_telescoping(d: DissimilarityFn, addop: AdditionOp,
                      order: AdmissibleOrder, grid: GridSpec) -> LawReport:
    """d(x1, 0) + d(x2, x1) = d(x2, 0) for all grid pairs x1 <= x2.

    This identity is exactly what makes the capacity-weighted
    dissimilarity operator an aggregation function.
    """
    start = perf_counter()
    elems = order.sort(grid_elements(grid))
    zero = zero_element(grid.kind, grid.dim)
    checked = 0
    for i, x1 in enumerate(elems):
        d10 = d(x1, zero)
        for x2 in elems[i:]:
            checked += 1
            lhs = add(addop, d10, d(x2, x1))
            rhs = d(x2, zero)
            if not elements_equal(lhs, rhs):
                return failed_report("telescoping", {
                    "x1": x1, "x2": x2, "lhs": lhs, "rhs": rhs,
                }, checked, perf_counter() - start, d=d.name)
    return passed_report("telescoping", checked, perf_counter() - start,
                         d=d.name, note=f"no counterexample at resolution m={grid.m}")


# ---------------------------------------------------------------------------
# Counterexample search for the width-based construction
# ---------------------------------------------------------------------------

@dataclass
class TelescopingWitness:
    """A pair breaking the telescoping identity, with the diagnostic
    quantities of the width-based construction: the alpha-mix images
    a1 = delta(K(x1), 0), a2 = delta(K(x2), 0), a12 = delta(K(x1), K(x2)),
    and both sides of the width equation w(z1) + w(z12) = w(z2)."""

    x1: Interval
    x2: Interval
    lhs: Interval
    rhs: Interval
    a1: float
    a2: float
    a12: float
    width_lhs: float
    width_rhs: float

    def to_json(self) -> dict:
        return {
            "x1": self.x1.to_json(), "x2": self.x2.to_json(),
            "lhs": self.lhs.to_json(), "rhs": self.rhs.to_json(),
            "a1": self.a1, "a2": self.a2, "a12": self.a12,
            "width_lhs": self.width_lhs, "width_rhs": self.width_rhs,
        }


def takac_counterexample(alpha: float, beta: float, m_d, delta_d,
                         grid: GridSpec, full_grid_fallback: bool = True,
                         tol: float = 1e-9):
    """Search for a telescoping violation of the width-based interval
    dissimilarity under the (alpha, beta)-order.

    The primary sweep walks the family x1 = [0, t1], x2 = [0, t2] with
    t1 < t2 on the grid; if that family telescopes exactly (it does for
    some parameter choices, e.g. the max/abs-diff pairing), the search
    widens to all grid interval pairs unless ``full_grid_fallback`` is
    disabled. Returns the first witness in enumeration order; raises
    ``NoWitnessFound`` when the grid is too coarse to exhibit one.
    """
    delta_fn = resolve_delta(delta_d)
    if not delta_covers_unit_range(delta_fn):
        raise BadParameter(
            "delta_d must sweep [0, 1] against 0 for the search to apply")
    order = AlphaBeta(alpha, beta)
    d = takac_dissimilarity_fn(alpha, m_d, delta_d)
    pairs = []

    ts = [v for v in grid.unit_values() if v > TOL]
    for t1, t2 in itertools.combinations(ts, 2):
        pairs.append((Interval(0.0, t1), Interval(0.0, t2)))
    if full_grid_fallback:
        elems = grid_elements(GridSpec(INTERVAL, grid.m, bounds=grid.bounds))
        for x1 in elems:
            for x2 in elems:
                if order.leq(x1, x2):
                    pairs.append((x1, x2))

    zero = Interval(0.0, 0.0)
    for x1, x2 in pairs:
        z1 = d(x1, zero)
        z12 = d(x2, x1)
        z2 = d(x2, zero)
        lhs = add(IV_PLUS, z1, z12)
        if abs(lhs.lower - z2.lower) > tol or abs(lhs.upper - z2.upper) > tol:
            ka1, ka2 = k_alpha(x1, alpha), k_alpha(x2, alpha)
            return TelescopingWitness(
                x1=x1, x2=x2, lhs=lhs, rhs=z2,
                a1=delta_fn(ka1, 0.0), a2=delta_fn(ka2, 0.0),
                a12=delta_fn(ka1, ka2),
                width_lhs=z1.width + z12.width, width_rhs=z2.width,
            )
    raise NoWitnessFound(
        "no telescoping violation at this resolution; the grid may be too "
        "coarse or the parameters outside the construction's hypotheses")
