"""Coset enumeration producing concrete right-regular representations.

The hot loop lives in a kernel module: ``_ctable`` (compiled) when available,
else ``_ptable`` (pure Python).  Both implement the identical deterministic
HLT algorithm, so results never depend on the backend.  Set
``TIGHTPOLY_BACKEND=python`` in the environment to force the fallback.
"""

from __future__ import annotations

import os

from .errors import BoundExceededError
from .presentations import Presentation, validate_mandatory_relators

from . import _ptable

try:
    from . import _ctable
except ImportError:  # extension not built
    _ctable = None

if os.environ.get("TIGHTPOLY_BACKEND") == "python" or _ctable is None:
    _kernel = _ptable
    BACKEND = "python"
else:
    _kernel = _ctable
    BACKEND = "compiled"

_STRATEGIES = {"default": 0, "alternate": 1}

DEFAULT_MAX_COSETS = 65536
#: Total (live + dead) coset allocations allowed, as a multiple of the live
#: bound; deadwood from coincidences rarely reaches 2x in this family.
TOTAL_CAP_FACTOR = 8


class RegularRepresentation:
    """A finite group as permutations of its own elements.

    ``gens[g][x]`` is the element x * rho_g (right multiplication).  Element
    0 is the identity.  Elements are numbered breadth first from the identity
    over generator multiplication with generator order 0, 1, 2, so two
    enumerations of the same presentation are indistinguishable.

    ``words[x]`` is a shortest-by-construction word reaching x from the
    identity; since all generators are involutions the inverse of x is
    reached by the reversed word.
    """

    __slots__ = ("order", "gens", "words", "_left", "_parent", "_letter")

    def __init__(self, order, gens):
        self.order = order
        self.gens = tuple(tuple(g) for g in gens)
        self._left = None
        parent = [0] * order
        letter = [0] * order
        words = [None] * order
        words[0] = ()
        queue = [0]
        for x in queue:
            for g in range(3):
                y = self.gens[g][x]
                if words[y] is None:
                    words[y] = words[x] + (g,)
                    parent[y] = x
                    letter[y] = g
                    queue.append(y)
        self.words = tuple(words)
        self._parent = tuple(parent)
        self._letter = tuple(letter)

    @property
    def identity_index(self):
        return 0

    def apply_word(self, x, word):
        """x * w for a word w over the generators."""
        gens = self.gens
        for g in word:
            x = gens[g][x]
        return x

    def mult(self, a, b):
        """Product a * b of two elements."""
        return self.apply_word(a, self.words[b])

    def inverse(self, a):
        """a^-1; the reversal of a's word, since generators are involutions."""
        return self.apply_word(0, self.words[a][::-1])

    def left_perms(self):
        """Left multiplication permutations of the three generators.

        Computed by pushing rho_g * (x * rho_h) = (rho_g * x) * rho_h along
        the breadth-first spanning tree.
        """
        if self._left is None:
            left = []
            for g in range(3):
                lg = [0] * self.order
                lg[0] = self.gens[g][0]
                for x in range(1, self.order):
                    lg[x] = self.gens[self._letter[x]][lg[self._parent[x]]]
                left.append(tuple(lg))
            self._left = tuple(left)
        return self._left

    def generator_element(self, g):
        """The element index of rho_g."""
        return self.gens[g][0]

    def sigma1(self):
        return self.apply_word(0, (0, 1))

    def sigma2(self):
        return self.apply_word(0, (1, 2))

    def __eq__(self, other):
        return (
            isinstance(other, RegularRepresentation)
            and self.order == other.order
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.order, self.gens))

    def __repr__(self):
        return f"RegularRepresentation(order={self.order})"


def default_max_cosets(pres: Presentation) -> int:
    """max(65536, 64*p*q) for family-tagged presentations, 65536 otherwise.

    Target groups have order <= 2pq but intermediate tables overshoot before
    collapse.
    """
    hint = pres.schlafli_hint
    if hint is None:
        return DEFAULT_MAX_COSETS
    p, q = hint
    return max(DEFAULT_MAX_COSETS, 64 * p * q)


def _strategy_code(strategy):
    try:
        return _STRATEGIES[strategy]
    except KeyError:
        raise ValueError(
            f"unknown strategy {strategy!r}; expected one of {sorted(_STRATEGIES)}"
        ) from None


def raw_enumerate(relators, max_cosets, strategy="default", kernel=None):
    """Kernel call without representation building: (order, gens) or None.

    Sweeps use this to discard collapsing candidates by order alone before
    paying for the breadth-first word table.
    """
    mod = kernel if kernel is not None else _kernel
    return mod.enumerate_table(
        relators, max_cosets, TOTAL_CAP_FACTOR * max_cosets, _strategy_code(strategy)
    )


def enumerate_cosets(pres, max_cosets=None, strategy="default", kernel=None):
    """Right-regular representation of the group presented by ``pres``.

    Deterministic for fixed inputs.  Raises BoundExceededError when the live
    coset count ever exceeds ``max_cosets`` (the group may be infinite, or
    the bound too small) and InvalidPresentationError when a mandatory
    relator is missing.
    """
    validate_mandatory_relators(pres.relators)
    if max_cosets is None:
        max_cosets = default_max_cosets(pres)
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    mod = kernel if kernel is not None else _kernel
    result = mod.enumerate_table(
        pres.relators, max_cosets, TOTAL_CAP_FACTOR * max_cosets,
        _strategy_code(strategy),
    )
    if result is None:
        raise BoundExceededError(max_cosets)
    n, gens = result
    return RegularRepresentation(n, gens)


def evaluate_word(rep: RegularRepresentation, word) -> int:
    """Image of the identity under right multiplication by ``word``."""
    return rep.apply_word(0, word)


def element_order(rep: RegularRepresentation, g: int) -> int:
    """Smallest m >= 1 with g^m equal to the identity."""
    word = rep.words[g]
    m, x = 1, g
    while x != 0:
        x = rep.apply_word(x, word)
        m += 1
    return m
