"""Group-level analysis of a concrete sggi: string C-group check, Schlafli
type, tightness, orientability, duality, and polyhedron isomorphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .enumeration import RegularRepresentation, element_order, evaluate_word
from .errors import TypeMismatchError
from .presentations import Presentation
from .subgroups import subgroup_closure, subgroup_index


@dataclass(frozen=True)
class SchlafliType:
    p: int
    q: int

    def as_tuple(self):
        return (self.p, self.q)


@dataclass(frozen=True)
class SggiReport:
    """All verdicts the classification hinges on, for one group."""

    is_sggi: bool
    is_string_c_group: bool
    type: SchlafliType
    order: int
    is_tight: bool
    orientable: bool


def check_sggi(rep: RegularRepresentation) -> bool:
    """True iff all three generators are non-identity involutions and
    (rho0 rho2)^2 is the identity."""
    for g in range(3):
        e = rep.generator_element(g)
        if e == 0 or rep.gens[g][e] != 0:
            return False
    return evaluate_word(rep, (0, 2, 0, 2)) == 0


def _standard_subgroups(rep):
    """Closures of all eight generator subsets, keyed by frozenset(I)."""
    out = {}
    for r in range(4):
        for subset in itertools.combinations(range(3), r):
            gens = [rep.generator_element(g) for g in subset]
            out[frozenset(subset)] = subgroup_closure(rep, gens).elements
    return out

def check_intersection_condition(rep: RegularRepresentation) -> bool:
    """Exhaustive intersection condition over all 64 pairs (I, J).

    The decisive rank-3 case is <rho0,rho1> n <rho1,rho2> = <rho1>; checking
    every pair is cheap at these orders and doubles as a self-test of that
    shortcut.
    """
    subs = _standard_subgroups(rep)
    keys = list(subs)
    for I in keys:
        for J in keys:
            if subs[I] & subs[J] != subs[I & J]:
                return False
    return True


def schlafli_type(rep: RegularRepresentation) -> SchlafliType:
    """(order of rho0*rho1, order of rho1*rho2)."""
    return SchlafliType(
        element_order(rep, rep.sigma1()), element_order(rep, rep.sigma2())
    )


def is_tight(rep: RegularRepresentation, stype: SchlafliType | None = None) -> bool:
    """Order equals 2pq; equivalently every element is sigma1^i rho1^j sigma2^k."""
    if stype is None:
        stype = schlafli_type(rep)
    return rep.order == 2 * stype.p * stype.q


def rotation_subgroup(rep: RegularRepresentation):
    return subgroup_closure(rep, [rep.sigma1(), rep.sigma2()])


def orientability(rep: RegularRepresentation) -> bool:
    """True (orientable) iff <sigma1, sigma2> has index 2.

    Always computed from the index, never from relator parity: parity
    arguments fail on non-minimal presentations.
    """
    return subgroup_index(rep, rotation_subgroup(rep)) == 2


def sggi_report(rep: RegularRepresentation) -> SggiReport:
    sggi = check_sggi(rep)
    stype = schlafli_type(rep)
    return SggiReport(
        is_sggi=sggi,
        is_string_c_group=sggi and check_intersection_condition(rep),
        type=stype,
        order=rep.order,
        is_tight=is_tight(rep, stype),
        orientable=orientability(rep),
    )


def polyhedra_isomorphic(
    rep_a: RegularRepresentation,
    pres_a: Presentation,
    rep_b: RegularRepresentation,
    pres_b: Presentation,
) -> bool:
    """Generator-respecting isomorphism test for two tight string C-groups
    of the same Schlafli type.

    If every relator of B holds in A and the orders agree, A is a quotient
    of B's presentation of equal order, hence equal as a group with
    distinguished generators.
    """
    ta, tb = schlafli_type(rep_a), schlafli_type(rep_b)
    if ta != tb:
        raise TypeMismatchError(f"types differ: {ta.as_tuple()} vs {tb.as_tuple()}")
    if rep_a.order != rep_b.order:
        return False
    return all(evaluate_word(rep_a, rel) == 0 for rel in pres_b.relators)
