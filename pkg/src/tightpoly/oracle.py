"""Brute-force verification of the closed-form classification.

Sweeps the full parameter grids whose sufficiency the structure theorems
establish (every tight polyhedron's group is a Lambda or Delta quotient, or
the dual of one), enumerates every candidate group, and compares the
survivors with the closed-form lists.  The sweeps share no logic with the
classifiers in :mod:`tightpoly.families`; agreement of the two routes is the
build's central self-check.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .analysis import (
    SchlafliType,
    check_intersection_condition,
    check_sggi,
    orientability,
    polyhedra_isomorphic,
    schlafli_type,
)
from .enumeration import RegularRepresentation, raw_enumerate
from .errors import BudgetExceededError
from .families import (
    NonOrientableParams,
    OrientableParams,
    classify_nonorientable,
    classify_orientable,
    tight_existence,
)
from .presentations import delta_presentation, dual_presentation, lambda_presentation

DEFAULT_BUDGET = 10 ** 6
#: Enumeration bound per candidate; tight groups have order 2pq, and a
#: candidate still over the bound after one retry at 4x is not tight.
BOUND_FACTOR = 64


@dataclass
class SweepReport:
    """Outcome of comparing brute force against the closed form for one type."""

    type: SchlafliType
    found_orientable: list
    found_nonorientable: list
    mismatches: list
    enumerations_run: int
    elapsed: float
    skipped: bool = False


class _Counter:
    __slots__ = ("runs",)

    def __init__(self):
        self.runs = 0


def _enumerate_candidate(relators, p, q, counter, kernel=None):
    """Enumerate with the sweep bound, retrying once at 4x; None if either
    run exceeds its bound (the candidate cannot be tight)."""
    bound = BOUND_FACTOR * p * q
    counter.runs += 1
    result = raw_enumerate(relators, bound, kernel=kernel)
    if result is None:
        counter.runs += 1
        result = raw_enumerate(relators, 4 * bound, kernel=kernel)
    return result


def _surviving_rep(relators, p, q, counter, kernel=None):
    """The representation if the candidate is a tight string C-group of
    exact type (p, q), else None."""
    result = _enumerate_candidate(relators, p, q, counter, kernel)
    if result is None or result[0] != 2 * p * q:
        return None
    rep = RegularRepresentation(*result)
    if not check_sggi(rep):
        return None
    if schlafli_type(rep).as_tuple() != (p, q):
        return None
    if not check_intersection_condition(rep):
        return None
    return rep


def brute_force_orientable(p, q, budget=DEFAULT_BUDGET, counter=None, kernel=None):
    """Sweep (i, j) over Z_p x Z_q; keep tight string C-groups of exact type
    (p, q), deduplicated by polyhedra_isomorphic."""
    if p * q > budget:
        raise BudgetExceededError(f"Lambda sweep for ({p},{q}) needs {p * q} runs")
    counter = counter if counter is not None else _Counter()
    kept = []
    for i, j in itertools.product(range(p), range(q)):
        pres = lambda_presentation(p, q, i, j)
        rep = _surviving_rep(pres.relators, p, q, counter, kernel)
        if rep is None:
            continue
        if any(
            polyhedra_isomorphic(rep, pres, old_rep, old_pres)
            for old_rep, old_pres, _ in kept
        ):
            continue
        kept.append((rep, pres, OrientableParams(p, q, i, j)))
    return [params for _, _, params in kept]


def _delta_grid_survivors(p, q, counter, kernel):
    """Tight non-orientable string C-groups of exact type (p, q) on the
    Delta(p,q) grid, as (rep, presentation, raw tuple)."""
    out = []
    for i, j, a, b in itertools.product(range(p), range(q), range(p), range(q)):
        pres = delta_presentation(p, q, i, j, a, b)
        rep = _surviving_rep(pres.relators, p, q, counter, kernel)
        if rep is None or orientability(rep):
            continue
        out.append((rep, pres, (i, j, a, b)))
    return out


def brute_force_nonorientable(p, q, budget=DEFAULT_BUDGET, counter=None, kernel=None):
    """Sweep Delta(p,q) plus the dual grid Delta(q,p); keep non-orientable
    tight string C-groups of type (p, q) (dual-grid survivors as dual-form
    records), deduplicated by polyhedra_isomorphic."""
    cost = (p * q) ** 2 + (q * p) ** 2
    if cost > budget:
        raise BudgetExceededError(f"Delta sweep for ({p},{q}) needs {cost} runs")
    counter = counter if counter is not None else _Counter()

    kept = []  # (rep of the type-(p,q) polyhedron, its presentation, params)
    for rep, pres, tup in _delta_grid_survivors(p, q, counter, kernel):
        params = NonOrientableParams(p, q, *tup)
        if not any(polyhedra_isomorphic(rep, pres, r0, p0) for r0, p0, _ in kept):
            kept.append((rep, pres, params))

    for dual_rep, dual_pres, tup in _delta_grid_survivors(q, p, counter, kernel):
        # materialize the dual polyhedron, which has type (p, q)
        pres = dual_presentation(dual_pres)
        result = _enumerate_candidate(pres.relators, p, q, counter, kernel)
        assert result is not None and result[0] == dual_rep.order
        rep = RegularRepresentation(*result)
        params = NonOrientableParams(p, q, *tup, is_dual_form=True)
        if not any(polyhedra_isomorphic(rep, pres, r0, p0) for r0, p0, _ in kept):
            kept.append((rep, pres, params))
    return [params for _, _, params in kept]


def _describe_diff(kind, closed, brute):
    closed, brute = set(closed), set(brute)
    out = []
    for extra in sorted(closed - brute):
        out.append(f"{kind}: closed-form record {extra} not found by brute force")
    for extra in sorted(brute - closed):
        out.append(f"{kind}: brute-force class {extra} missing from closed form")
    return out


def sweep_type(p, q, budget=DEFAULT_BUDGET, kernel=None) -> SweepReport:
    """Compare brute force against the closed form for one Schlafli type."""
    stype = SchlafliType(p, q)
    started = time.perf_counter()
    if (p * q) ** 2 * 2 > budget:
        return SweepReport(stype, [], [], [], 0, time.perf_counter() - started,
                           skipped=True)
    counter = _Counter()
    found_o = brute_force_orientable(p, q, budget, counter, kernel)
    found_n = brute_force_nonorientable(p, q, budget, counter, kernel)
    closed_o = classify_orientable(p, q)
    closed_n = classify_nonorientable(p, q)
    mismatches = _describe_diff("orientable", closed_o, found_o)
    mismatches += _describe_diff("non-orientable", closed_n, found_n)
    verdict = tight_existence(p, q)
    if verdict.exists != bool(found_o or found_n):
        mismatches.append(
            f"existence: case-analysis verdict {verdict.exists} but brute force "
            f"found {len(found_o)} + {len(found_n)} classes"
        )
    if (verdict.orientable_count, verdict.nonorientable_count) != (
        len(closed_o), len(closed_n)
    ):
        mismatches.append("existence: verdict counts disagree with classifiers")
    return SweepReport(
        stype, found_o, found_n, mismatches, counter.runs,
        time.perf_counter() - started,
    )


def verify_range(max_p, max_q, budget=DEFAULT_BUDGET, kernel=None):
    """Sweep all 2 <= p <= max_p, 2 <= q <= max_q and report per type."""
    if max_p < 2 or max_q < 2:
        raise ValueError("bounds must be >= 2")
    return [
        sweep_type(p, q, budget, kernel)
        for p in range(2, max_p + 1)
        for q in range(2, max_q + 1)
    ]
