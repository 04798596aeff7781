"""Words and presentations on the three involutory generators rho0, rho1, rho2.

A word is a tuple of generator indices from {0, 1, 2}.  All generators are
involutions, so the inverse of a word is its reversal and no inverse letters
are ever needed.  The rotations sigma1 = rho0*rho1 and sigma2 = rho1*rho2 are
provided as fixed expansions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidPresentationError, InvalidTypeError

RHO0, RHO1, RHO2 = 0, 1, 2
GENERATOR_SYMBOLS = (RHO0, RHO1, RHO2)

Word = tuple  # tuple[int, ...] with entries in {0, 1, 2}

SIGMA1: Word = (RHO0, RHO1)
SIGMA2: Word = (RHO1, RHO2)

#: Relators shared by every presentation we build: the three involutions
#: and the commuting of the outer reflections.
_SQUARES = ((RHO0, RHO0), (RHO1, RHO1), (RHO2, RHO2))
_RHO02_SQUARE: Word = (RHO0, RHO2, RHO0, RHO2)


def word_inverse(w: Word) -> Word:
    """Inverse of a word over involutory generators: its reversal."""
    return tuple(reversed(w))


def word_power(base: Word, exponent: int) -> Word:
    """base**exponent as a word; negative exponents use the reversal."""
    if exponent < 0:
        base, exponent = word_inverse(base), -exponent
    return base * exponent


def sigma1_word(exponent: int = 1) -> Word:
    return word_power(SIGMA1, exponent)


def sigma2_word(exponent: int = 1) -> Word:
    return word_power(SIGMA2, exponent)


@dataclass(frozen=True)
class Presentation:
    """A finitely presented group on rho0, rho1, rho2 with tagged relators.

    ``family`` is one of ``"coxeter"``, ``"lambda"``, ``"delta"``,
    ``"custom"``; ``params`` holds the integers named in the tag, already
    reduced to canonical residues.
    """

    relators: tuple
    family: str = "custom"
    params: tuple = ()

    def __post_init__(self):
        validate_mandatory_relators(self.relators)

    @property
    def schlafli_hint(self):
        """(p, q) for family-tagged presentations, else None."""
        if self.family in ("coxeter", "lambda", "delta"):
            return self.params[0], self.params[1]
        return None

    def describe(self) -> str:
        if self.family == "coxeter":
            return "[%d,%d]" % self.params
        if self.family == "lambda":
            return "Lambda(%d,%d)_{%d,%d}" % self.params
        if self.family == "delta":
            return "Delta(%d,%d)_(%d,%d,%d,%d)" % self.params
        return "custom<%d relators>" % len(self.relators)


def validate_mandatory_relators(relators) -> None:
    """Every presentation must force rho_i^2 = 1 and (rho0 rho2)^2 = 1."""
    rels = set(relators)
    for sq in _SQUARES:
        if sq not in rels:
            raise InvalidPresentationError(
                f"missing mandatory involution relator for generator {sq[0]}"
            )
    if _RHO02_SQUARE not in rels and word_inverse(_RHO02_SQUARE) not in rels \
            and (RHO2, RHO0, RHO2, RHO0) not in rels:
        raise InvalidPresentationError("missing mandatory relator (rho0 rho2)^2")


def _require_type(p: int, q: int) -> None:
    if p < 2 or q < 2:
        raise InvalidTypeError(f"Schlafli type parameters must be >= 2, got ({p}, {q})")


def _coxeter_relators(p: int, q: int) -> tuple:
    return _SQUARES + (_RHO02_SQUARE, word_power(SIGMA1, p), word_power(SIGMA2, q))


def coxeter_presentation(p: int, q: int) -> Presentation:
    """The string Coxeter group [p, q] on its six defining relators."""
    _require_type(p, q)
    return Presentation(_coxeter_relators(p, q), "coxeter", (p, q))


def lambda_presentation(p: int, q: int, i: int, j: int) -> Presentation:
    """Quotient of [p, q] by sigma2^-1 sigma1 = sigma1^i sigma2^j.

    The orientable tight family.  i and j are reduced mod p and q.
    """
    _require_type(p, q)
    i, j = i % p, j % q
    extra = word_inverse(SIGMA1) + SIGMA2 + word_power(SIGMA1, i) + word_power(SIGMA2, j)
    return Presentation(_coxeter_relators(p, q) + (extra,), "lambda", (p, q, i, j))


def delta_presentation(p: int, q: int, i: int, j: int, a: int, b: int) -> Presentation:
    """Quotient of [p, q] by sigma2^-1 sigma1 = sigma1^i rho1 sigma2^j and
    sigma2^-2 sigma1 = sigma1^a sigma2^b.

    The non-orientable tight family.  Parameters are reduced mod p / mod q.
    """
    _require_type(p, q)
    i, a = i % p, a % p
    j, b = j % q, b % q
    first = (
        word_inverse(SIGMA1) + SIGMA2
        + word_power(SIGMA1, i) + (RHO1,) + word_power(SIGMA2, j)
    )
    second = (
        word_inverse(SIGMA1) + SIGMA2 + SIGMA2
        + word_power(SIGMA1, a) + word_power(SIGMA2, b)
    )
    return Presentation(
        _coxeter_relators(p, q) + (first, second), "delta", (p, q, i, j, a, b)
    )


def dual_presentation(pres: Presentation) -> Presentation:
    """The presentation of the dual polyhedron's group: rho_i -> rho_{2-i}.

    Family tags are preserved where the family is closed under duality:
    Coxeter(p,q) -> Coxeter(q,p) and Lambda(p,q)_{i,j} -> Lambda(q,p)_{-j,-i}.
    Delta and custom presentations dualize to custom relator sets.
    """
    if pres.family == "coxeter":
        p, q = pres.params
        return coxeter_presentation(q, p)
    if pres.family == "lambda":
        p, q, i, j = pres.params
        return lambda_presentation(q, p, -j, -i)
    relators = tuple(tuple(2 - g for g in rel) for rel in pres.relators)
    return Presentation(relators, "custom", ())


_LETTERS = {"a": RHO0, "b": RHO1, "c": RHO2}


def parse_presentation(text: str) -> Presentation:
    """Parse the one-relator-per-line text format (letters a, b, c).

    Blank lines and ``#`` comments are skipped.  The mandatory relators
    must be present; otherwise InvalidPresentationError is raised.
    """
    relators = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word = []
        for ch in line:
            if ch.isspace():
                continue
            if ch not in _LETTERS:
                raise InvalidPresentationError(
                    f"line {lineno}: unexpected letter {ch!r} (expected a, b or c)"
                )
            word.append(_LETTERS[ch])
        relators.append(tuple(word))
    return Presentation(tuple(relators), "custom", ())


def format_presentation(pres: Presentation) -> str:
    """Inverse of parse_presentation, for round-tripping custom relators."""
    inv = {v: k for k, v in _LETTERS.items()}
    return "\n".join("".join(inv[g] for g in rel) for rel in pres.relators)
