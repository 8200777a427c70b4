"""Element arithmetic over a fixed polycyclic presentation.

Elements are stored as normal-form exponent vectors.  Arbitrary words are
brought to normal form by collection: the word is consumed right to left
and each generator power is pushed into the partially collected normal
form, applying the presentation's relations.

The single rewriting primitive is ``g_i^x * v`` for a normal form v.
Writing d for the depth of v there are three cases:

* d > i: the power merges at position i; out-of-range exponents are
  reduced with the power relation g_i^r_i = tail, whose tail uses only
  deeper generators and is folded into v.
* d = i: same, after adding the exponents at position i.
* d < i: g_i^x must move right past the leading syllable g_d^f of v.
  Since conjugation by g_d maps everything beyond depth d to itself,
  g_i^x g_d^f = g_d^f (g_i^{g_d^f})^x, and the conjugate of g_i is built
  from the stored (inverse) conjugate tails one g_d at a time.

Every recursive step operates strictly deeper in the generator sequence,
which bounds the recursion by the number of generators.  All exponents
are exact Python integers; nothing here is approximate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .cardinal import Cardinal, INFINITE
from .presentation import PcPresentation, Word, format_word


class PresentationMismatch(ValueError):
    """Raised when operands are bound to different presentations."""


Vector = tuple[int, ...]


def _depth(vec: Vector) -> int:
    """Index of the first nonzero exponent, len(vec)+1 for the identity."""
    for idx, e in enumerate(vec):
        if e:
            return idx + 1
    return len(vec) + 1


def _syllables(vec: Vector):
    return [(i + 1, e) for i, e in enumerate(vec) if e]


def _unit(pres: PcPresentation, i: int) -> Vector:
    return tuple(1 if k == i - 1 else 0 for k in range(pres.num_gens))


def _from_tail(pres: PcPresentation, tail) -> Vector:
    vec = [0] * pres.num_gens
    for i, e in tail:
        vec[i - 1] = e
    return tuple(vec)


def _lmul_syllable(pres: PcPresentation, i: int, x: int, vec: Vector) -> Vector:
    """Normal form of g_i^x times the element with normal form `vec`."""
    if x == 0:
        return vec
    d = _depth(vec)
    if d >= i:
        y = x + vec[i - 1]
        rest = vec
        if vec[i - 1]:
            out = list(vec)
            out[i - 1] = 0
            rest = tuple(out)
        ri = pres.orders[i - 1]
        if ri > 0:
            q, y = divmod(y, ri)
            if q:
                tail = _from_tail(pres, pres.power_tail(i))
                rest = _mul(pres, _pow(pres, tail, q), rest)
        if y == 0:
            return rest
        out = list(rest)
        out[i - 1] = y
        return tuple(out)
    # d < i: move g_i^x right past the leading syllable g_d^f
    f = vec[d - 1]
    out = list(vec)
    out[d - 1] = 0
    rest = tuple(out)
    conj = _gen_conj_by_power(pres, i, d, f)
    combined = _mul(pres, _pow(pres, conj, x), rest)
    out = list(combined)
    out[d - 1] = f  # combined lies beyond depth d, so the slot is free
    return tuple(out)


def _gen_conj_by_power(pres: PcPresentation, i: int, j: int, f: int) -> Vector:
    """Normal form of g_i conjugated by g_j^f, for j < i."""
    if f == 0 or pres.commutes(i, j):
        return _unit(pres, i)
    sign = 1 if f > 0 else -1
    vec = _unit(pres, i)
    for _ in range(abs(f)):
        vec = _conj_step(pres, vec, j, sign)
    return vec


def _conj_step(pres: PcPresentation, vec: Vector, j: int, sign: int) -> Vector:
    """Conjugate an element beyond depth j by g_j**sign, syllable-wise."""
    result = tuple(0 for _ in range(pres.num_gens))
    for k, e in reversed(_syllables(vec)):
        base = _from_tail(pres, pres.conjugate_tail(k, j, sign))
        result = _mul(pres, _pow(pres, base, e), result)
    return result


def _mul(pres: PcPresentation, a: Vector, b: Vector) -> Vector:
    for i, e in reversed(_syllables(a)):
        b = _lmul_syllable(pres, i, e, b)
    return b


def _inv(pres: PcPresentation, a: Vector) -> Vector:
    # (s_1 ... s_m)^-1 = s_m^-1 ... s_1^-1, built by prepending left to right
    result = tuple(0 for _ in range(pres.num_gens))
    for i, e in _syllables(a):
        result = _lmul_syllable(pres, i, -e, result)
    return result


def _pow(pres: PcPresentation, a: Vector, k: int) -> Vector:
    if k < 0:
        a, k = _inv(pres, a), -k
    result = tuple(0 for _ in range(pres.num_gens))
    while k:
        if k & 1:
            result = _mul(pres, result, a)
        k >>= 1
        if k:
            a = _mul(pres, a, a)
    return result


@dataclass(frozen=True)
class ElementStats:
    """Depth, leading exponent and relative order of an element.

    The identity has depth n+1 and neither a leading exponent nor a
    relative order.
    """
    depth: int
    leading_exponent: int | None
    relative_order: Cardinal | None


class Element:
    """A group element in normal form, bound to its presentation.

    Immutable value object; all arithmetic returns fresh elements and
    raises :class:`PresentationMismatch` when operands belong to
    different presentations.
    """

    __slots__ = ("presentation", "exponents")

    def __init__(self, presentation: PcPresentation, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if len(exps) != presentation.num_gens:
            raise ValueError(
                f"expected {presentation.num_gens} exponents, got {len(exps)}")
        for idx, (e, r) in enumerate(zip(exps, presentation.orders), start=1):
            if r > 0 and not 0 <= e < r:
                raise ValueError(
                    f"exponent {e} of g{idx} outside normal-form range 0..{r - 1}")
        object.__setattr__(self, "presentation", presentation)
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def _wrap(cls, pres: PcPresentation, vec: Vector) -> Element:
        self = object.__new__(cls)
        object.__setattr__(self, "presentation", pres)
        object.__setattr__(self, "exponents", vec)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    # -- basic queries ---------------------------------------------------

    @property
    def is_identity(self) -> bool:
        return not any(self.exponents)

    def depth(self) -> int:
        return _depth(self.exponents)

    def leading_exponent(self) -> int | None:
        d = self.depth()
        return None if d > len(self.exponents) else self.exponents[d - 1]

    def relative_order(self) -> Cardinal | None:
        """Order of the element in the cyclic quotient at its depth."""
        d = self.depth()
        if d > len(self.exponents):
            return None
        r = self.presentation.orders[d - 1]
        if r == 0:
            return INFINITE
        return Cardinal(r // math.gcd(self.exponents[d - 1], r))

    def stats(self) -> ElementStats:
        return ElementStats(self.depth(), self.leading_exponent(),
                            self.relative_order())

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: Element):
        if self.presentation is not other.presentation \
                and self.presentation != other.presentation:
            raise PresentationMismatch(
                "elements are bound to different presentations")

    def __mul__(self, other: Element) -> Element:
        self._check(other)
        return Element._wrap(self.presentation,
                             _mul(self.presentation, self.exponents, other.exponents))

    def inverse(self) -> Element:
        return Element._wrap(self.presentation,
                             _inv(self.presentation, self.exponents))

    def __pow__(self, k: int) -> Element:
        return Element._wrap(self.presentation,
                             _pow(self.presentation, self.exponents, k))

    def conjugate(self, other: Element) -> Element:
        """self conjugated by other: other^-1 * self * other."""
        self._check(other)
        pres = self.presentation
        vec = _mul(pres, _inv(pres, other.exponents),
                   _mul(pres, self.exponents, other.exponents))
        return Element._wrap(pres, vec)

    def commutator(self, other: Element) -> Element:
        """self^-1 * other^-1 * self * other."""
        self._check(other)
        pres = self.presentation
        vec = _mul(pres, _inv(pres, self.exponents),
                   _mul(pres, _inv(pres, other.exponents),
                        _mul(pres, self.exponents, other.exponents)))
        return Element._wrap(pres, vec)

    def normalised(self) -> Element:
        """The canonical power generating the same cyclic image at this depth.

        For infinite relative order at the depth this is the element or
        its inverse, whichever has positive leading exponent.  For a
        finite relative order r the result is the power whose leading
        exponent is gcd(l, r): writing l = x*y with x = gcd(l, r), the
        exponent y is invertible modulo r/x and the power z = y^-1 mod
        (r/x) satisfies l*z = x + k*r.  (Inverting modulo r itself does
        not work: l = 4, r = 6 gives y = 2, which has no inverse mod 6.)
        """
        d = self.depth()
        n = len(self.exponents)
        if d > n:
            raise ValueError("the identity has no normalisation")
        lead = self.exponents[d - 1]
        r = self.presentation.orders[d - 1]
        if r == 0:
            return self if lead > 0 else self.inverse()
        x = math.gcd(lead, r)
        z = pow(lead // x, -1, r // x)
        return self ** z

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return (self.exponents == other.exponents
                and (self.presentation is other.presentation
                     or self.presentation == other.presentation))

    def __hash__(self):
        return hash(self.exponents)

    def __str__(self):
        return format_word(_syllables(self.exponents))

    def __repr__(self):
        return f"<Element {self}>"


# -- module-level constructors and operations --------------------------------

def identity(pres: PcPresentation) -> Element:
    return Element._wrap(pres, tuple(0 for _ in range(pres.num_gens)))


def generator(pres: PcPresentation, i: int) -> Element:
    if not 1 <= i <= pres.num_gens:
        raise ValueError(f"generator index {i} out of range 1..{pres.num_gens}")
    return Element._wrap(pres, _unit(pres, i))


def generators(pres: PcPresentation) -> list[Element]:
    return [generator(pres, i) for i in range(1, pres.num_gens + 1)]


def collect(pres: PcPresentation, word) -> Element:
    """Normal form of an arbitrary word (Word, syntax string, or pairs)."""
    if isinstance(word, str):
        word = Word.parse(word)
    entries = list(word)
    for i, _ in entries:
        if not 1 <= i <= pres.num_gens:
            raise ValueError(f"word uses generator index {i}, valid range is "
                             f"1..{pres.num_gens}")
    vec = tuple(0 for _ in range(pres.num_gens))
    for i, e in reversed(entries):
        vec = _lmul_syllable(pres, i, e, vec)
    return Element._wrap(pres, vec)


def multiply(a: Element, b: Element) -> Element:
    return a * b


def inverse(a: Element) -> Element:
    return a.inverse()


def power(a: Element, k: int) -> Element:
    return a ** k


def conjugate(a: Element, b: Element) -> Element:
    return a.conjugate(b)


def commutator(a: Element, b: Element) -> Element:
    return a.commutator(b)


def stats(a: Element) -> ElementStats:
    return a.stats()


def normalise(a: Element) -> Element:
    return a.normalised()
