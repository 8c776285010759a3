"""Independent reference implementations used to cross-check the library.

These deliberately avoid the operator module's evaluation path: they sort
with plain Python, walk textbook summation forms directly, and accept
capacities only through subset lookups.
"""

from __future__ import annotations


def classical_choquet_increments(values, mu_of_subset):
    """Textbook increments form: sum of (x_(i) - x_(i-1)) * mu(tail set),
    with x sorted ascending and x_(0) = 0. ``mu_of_subset`` maps an
    iterable of 0-based indices to the capacity value."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    total, prev = 0.0, 0.0
    for pos, idx in enumerate(order):
        total += (values[idx] - prev) * mu_of_subset(order[pos:])
        prev = values[idx]
    return total


def classical_choquet_weights(values, mu_of_subset):
    """Textbook weight-difference form: sum of x_(i) * (mu(B_i) - mu(B_{i+1}))
    with x sorted ascending, B_i the tail set from position i, and
    mu(B_{n+1}) = 0."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    n = len(values)
    total = 0.0
    for pos, idx in enumerate(order):
        b_here = mu_of_subset(order[pos:])
        b_next = mu_of_subset(order[pos + 1:]) if pos + 1 < n else 0.0
        total += values[idx] * (b_here - b_next)
    return total


def mu_lookup(capacity):
    """Subset lookup (0-based indices) against a Capacity object."""
    def of(indices):
        mask = 0
        for i in indices:
            mask |= 1 << i
        return capacity.values[mask]
    return of
