"""Subgroup algebra on regular representations: closure, index, normal core."""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import RegularRepresentation


@dataclass(frozen=True)
class Subgroup:
    """An explicit subgroup: its element set plus the words that produced it."""

    elements: frozenset
    generating_words: tuple = ()

    def __len__(self):
        return len(self.elements)

    def sorted_elements(self):
        return tuple(sorted(self.elements))

    def __contains__(self, x):
        return x in self.elements


def subgroup_closure(rep: RegularRepresentation, gens) -> Subgroup:
    """Smallest subgroup containing ``gens`` (element indices).

    Orbit of the identity under right multiplication by the generators; the
    group is finite, so the monoid closure already contains inverses.
    """
    gens = sorted(set(gens))
    words = tuple(rep.words[g] for g in gens)
    seen = {0}
    queue = [0]
    for x in queue:
        for w in words:
            y = rep.apply_word(x, w)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return Subgroup(frozenset(seen), words)


def subgroup_index(rep: RegularRepresentation, sub: Subgroup) -> int:
    """|G| / |H|."""
    if rep.order % len(sub.elements) != 0:
        raise ValueError("element set is not a subgroup (Lagrange fails)")
    return rep.order // len(sub.elements)


def subgroup_core(rep: RegularRepresentation, sub: Subgroup) -> Subgroup:
    """Largest subgroup of ``sub`` normal in the whole group.

    Fixpoint of removing elements with some generator-conjugate outside the
    current set; the survivor set equals the intersection of all conjugates
    of ``sub`` and is closed under multiplication.
    """
    left = rep.left_perms()
    gens = rep.gens
    core = set(sub.elements)
    while True:
        drop = {
            h for h in core
            if any(gens[g][left[g][h]] not in core for g in range(3))
        }
        if not drop:
            break
        core -= drop
    return Subgroup(frozenset(core), sub.generating_words)


def is_normal(rep: RegularRepresentation, sub: Subgroup) -> bool:
    """Closure of ``sub`` under conjugation by all three generators."""
    left = rep.left_perms()
    gens = rep.gens
    return all(
        gens[g][left[g][h]] in sub.elements
        for h in sub.elements for g in range(3)
    )
