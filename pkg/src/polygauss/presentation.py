"""Polycyclic presentations and their on-disk format.

A group is described by generators g_1..g_n, relative orders r_1..r_n
(r_i = 0 meaning infinite) and three families of rewriting relations:

    g_i g_j    = g_j  * tail      for j < i           ("conj" lines)
    g_i g_j^-1 = g_j^-1 * tail    for j < i, r_j = 0  ("invconj" lines)
    g_i^r_i    = tail             for r_i > 0         ("power" lines)

where every tail is a normal-form word in the generators strictly beyond
the left-hand key.  A missing conj/invconj entry means the two generators
commute; a missing power entry means the power is the identity.

The presentation is assumed consistent (every group element has a unique
normal form).  Only structural validation is performed here; semantic
spot checks of the inverse-conjugate tails live in
:func:`validate_inverse_tails`.

File format (UTF-8, line oriented, `#` starts a comment):

    pcp 3
    orders 2 2 2
    conj 2 1 2^1 3^1
    power 2 3^1

Words typed on the command line use a different, denser syntax:
``g1^2*g3^-1`` (exponent omitted means 1, the bare token ``1`` is the
empty word).
"""

from __future__ import annotations

from typing import IO, Iterable


class PcpError(ValueError):
    """Base class for presentation file problems."""


class PcpSyntaxError(PcpError):
    """The input text does not match the file grammar."""


class PcpValidationError(PcpError):
    """The input parses but violates a structural invariant."""


Syllable = tuple[int, int]  # (generator index, exponent)


class Word:
    """An unreduced product of generator powers, the raw input form.

    Entries are (index, exponent) pairs in any order; exponents may be
    negative or zero.  Words carry no presentation binding; indices are
    checked against a presentation when the word is collected.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Syllable]):
        self.entries = tuple((int(i), int(e)) for i, e in entries)

    @classmethod
    def parse(cls, text: str) -> Word:
        """Parse the ``g1^2*g3^-1`` command-line syntax."""
        text = text.strip()
        if text in ("", "1"):
            return cls(())
        entries = []
        for token in text.split("*"):
            token = token.strip()
            if not token.startswith("g"):
                raise PcpSyntaxError(f"bad word token {token!r} (expected g<i> or g<i>^<e>)")
            body = token[1:]
            if "^" in body:
                idx_text, _, exp_text = body.partition("^")
            else:
                idx_text, exp_text = body, "1"
            try:
                entries.append((int(idx_text), int(exp_text)))
            except ValueError:
                raise PcpSyntaxError(f"bad word token {token!r}") from None
        return cls(entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, Word) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        return format_word(self.entries)

    def __repr__(self):
        return f"Word({list(self.entries)!r})"


def format_word(entries: Iterable[Syllable]) -> str:
    """Render (index, exponent) pairs as ``g1^2*g3^-1``; identity is ``1``."""
    parts = []
    for i, e in entries:
        if e == 0:
            continue
        parts.append(f"g{i}" if e == 1 else f"g{i}^{e}")
    return "*".join(parts) if parts else "1"


class PcPresentation:
    """A consistent polycyclic presentation, immutable after construction.

    Tails are stored as tuples of (index, exponent) syllables with
    strictly increasing indices; they double as normal-form exponent
    data.  Trivial conjugate tails (``g_i`` itself) are normalised away
    so that an absent entry always means "commutes".
    """

    __slots__ = ("num_gens", "orders", "conjugates", "inv_conjugates", "powers",
                 "_hash")

    def __init__(self, num_gens, orders, conjugates=None, inv_conjugates=None,
                 powers=None):
        self.num_gens = int(num_gens)
        self.orders = tuple(int(r) for r in orders)
        conjugates = dict(conjugates or {})
        for key in [k for k, t in conjugates.items() if tuple(t) == ((k[0], 1),)]:
            del conjugates[key]  # explicit trivial tail == commuting pair
        self.conjugates = {k: tuple((int(i), int(e)) for i, e in t)
                           for k, t in conjugates.items()}
        self.inv_conjugates = {k: tuple((int(i), int(e)) for i, e in t)
                               for k, t in (inv_conjugates or {}).items()}
        self.powers = {int(k): tuple((int(i), int(e)) for i, e in t)
                       for k, t in (powers or {}).items()}
        self._validate()
        # an empty power tail is the identity, the same as no entry at all
        self.powers = {k: t for k, t in self.powers.items() if t}
        self._hash = hash((self.num_gens, self.orders,
                           tuple(sorted(self.conjugates.items())),
                           tuple(sorted(self.inv_conjugates.items())),
                           tuple(sorted(self.powers.items()))))

    def _validate(self):
        n = self.num_gens
        if n < 1:
            raise PcpValidationError(f"need at least one generator, got n={n}")
        if len(self.orders) != n:
            raise PcpValidationError(
                f"expected {n} relative orders, got {len(self.orders)}")
        for i, r in enumerate(self.orders, start=1):
            if r < 0:
                raise PcpValidationError(f"relative order r_{i} = {r} is negative")

        def check_tail(tail, floor, what):
            prev = floor
            for k, e in tail:
                if k <= prev:
                    raise PcpValidationError(
                        f"{what}: tail index {k} not strictly above {prev}")
                if k > n:
                    raise PcpValidationError(f"{what}: tail index {k} exceeds n={n}")
                if e == 0:
                    raise PcpValidationError(f"{what}: zero exponent at index {k}")
                rk = self.orders[k - 1]
                if rk > 0 and not 0 < e < rk:
                    raise PcpValidationError(
                        f"{what}: exponent {e} at index {k} outside 0..{rk - 1}")
                prev = k

        for (i, j), tail in sorted(self.conjugates.items()):
            if not 1 <= j < i <= n:
                raise PcpValidationError(f"conj key ({i},{j}) needs 1 <= j < i <= n")
            if not tail:
                raise PcpValidationError(
                    f"conj {i} {j}: empty tail would conjugate g{i} to the identity")
            check_tail(tail, j, f"conj {i} {j}")
        for (i, j), tail in sorted(self.inv_conjugates.items()):
            if not 1 <= j < i <= n:
                raise PcpValidationError(f"invconj key ({i},{j}) needs 1 <= j < i <= n")
            if not tail:
                raise PcpValidationError(
                    f"invconj {i} {j}: empty tail would conjugate g{i} to the identity")
            check_tail(tail, j, f"invconj {i} {j}")
        for i, tail in sorted(self.powers.items()):
            if not 1 <= i <= n:
                raise PcpValidationError(f"power key {i} out of range")
            if self.orders[i - 1] == 0:
                raise PcpValidationError(
                    f"power relation for g{i} but r_{i} = 0 (infinite)")
            check_tail(tail, i, f"power {i}")
        # Collection rewrites past g_j^-1, which occurs exactly when r_j = 0,
        # so each non-commuting pair over such a j needs its inverse tail.
        for (i, j) in sorted(self.conjugates):
            if self.orders[j - 1] == 0 and (i, j) not in self.inv_conjugates:
                raise PcpValidationError(
                    f"missing invconj {i} {j}: r_{j} = 0 and the pair does not commute")

    # -- lookups used by collection ------------------------------------

    def commutes(self, i: int, j: int) -> bool:
        """True when g_i and g_j (j < i) have only trivial stored tails."""
        if (i, j) in self.conjugates:
            return False
        inv = self.inv_conjugates.get((i, j))
        return inv is None or inv == ((i, 1),)

    def conjugate_tail(self, i: int, j: int, sign: int = 1) -> tuple[Syllable, ...]:
        """Normal form of g_i conjugated by g_j**sign, as syllables."""
        if sign > 0:
            return self.conjugates.get((i, j), ((i, 1),))
        tail = self.inv_conjugates.get((i, j))
        if tail is not None:
            return tail
        if (i, j) not in self.conjugates:
            return ((i, 1),)
        # validation guarantees this cannot be reached for r_j = 0
        raise PcpValidationError(f"no inverse conjugate stored for ({i},{j})")

    def power_tail(self, i: int) -> tuple[Syllable, ...]:
        """Normal form of g_i**r_i (empty tuple = identity)."""
        return self.powers.get(i, ())

    # -- value semantics -----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, PcPresentation):
            return NotImplemented
        return (self.num_gens == other.num_gens and self.orders == other.orders
                and self.conjugates == other.conjugates
                and self.inv_conjugates == other.inv_conjugates
                and self.powers == other.powers)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PcPresentation(n={self.num_gens}, orders={list(self.orders)})"


def _tail_tokens(tokens, line_no):
    tail = []
    for token in tokens:
        if "^" in token:
            idx_text, _, exp_text = token.partition("^")
        else:
            idx_text, exp_text = token, "1"
        try:
            tail.append((int(idx_text), int(exp_text)))
        except ValueError:
            raise PcpSyntaxError(f"line {line_no}: bad tail token {token!r}") from None
    return tuple(tail)


def load_presentation(source: str | bytes | IO) -> PcPresentation:
    """Parse and validate a presentation from PCP-format text.

    Accepts a string, bytes, or a readable file object.  Raises
    :class:`PcpSyntaxError` for malformed text and
    :class:`PcpValidationError` for structural violations.
    """
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")

    n = None
    orders = None
    conjugates: dict = {}
    inv_conjugates: dict = {}
    powers: dict = {}

    for line_no, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword, args = tokens[0], tokens[1:]
        if keyword == "pcp":
            if n is not None:
                raise PcpSyntaxError(f"line {line_no}: duplicate pcp line")
            if len(args) != 1 or not args[0].isdigit():
                raise PcpSyntaxError(f"line {line_no}: expected 'pcp <n>'")
            n = int(args[0])
        elif keyword == "orders":
            if n is None:
                raise PcpSyntaxError(f"line {line_no}: orders before pcp line")
            if orders is not None:
                raise PcpSyntaxError(f"line {line_no}: duplicate orders line")
            try:
                orders = tuple(int(a) for a in args)
            except ValueError:
                raise PcpSyntaxError(f"line {line_no}: bad order token") from None
        elif keyword in ("conj", "invconj"):
            if orders is None:
                raise PcpSyntaxError(f"line {line_no}: {keyword} before orders line")
            if len(args) < 2:
                raise PcpSyntaxError(f"line {line_no}: expected '{keyword} <i> <j> ...'")
            try:
                i, j = int(args[0]), int(args[1])
            except ValueError:
                raise PcpSyntaxError(f"line {line_no}: bad generator index") from None
            table = conjugates if keyword == "conj" else inv_conjugates
            if (i, j) in table:
                raise PcpSyntaxError(f"line {line_no}: duplicate {keyword} {i} {j}")
            table[(i, j)] = _tail_tokens(args[2:], line_no)
        elif keyword == "power":
            if orders is None:
                raise PcpSyntaxError(f"line {line_no}: power before orders line")
            if len(args) < 1:
                raise PcpSyntaxError(f"line {line_no}: expected 'power <i> ...'")
            try:
                i = int(args[0])
            except ValueError:
                raise PcpSyntaxError(f"line {line_no}: bad generator index") from None
            if i in powers:
                raise PcpSyntaxError(f"line {line_no}: duplicate power {i}")
            powers[i] = _tail_tokens(args[1:], line_no)
        else:
            raise PcpSyntaxError(f"line {line_no}: unknown keyword {keyword!r}")

    if n is None or orders is None:
        raise PcpSyntaxError("missing pcp or orders line")
    return PcPresentation(n, orders, conjugates, inv_conjugates, powers)


def save_presentation(pres: PcPresentation) -> str:
    """Serialize back to PCP text; load(save(P)) == P."""
    lines = [f"pcp {pres.num_gens}",
             "orders " + " ".join(str(r) for r in pres.orders)]
    def tail_text(tail):
        return "".join(f" {k}^{e}" for k, e in tail)
    for (i, j), tail in sorted(pres.conjugates.items()):
        lines.append(f"conj {i} {j}{tail_text(tail)}")
    for (i, j), tail in sorted(pres.inv_conjugates.items()):
        lines.append(f"invconj {i} {j}{tail_text(tail)}")
    for i, tail in sorted(pres.powers.items()):
        lines.append(f"power {i}{tail_text(tail)}")
    return "\n".join(lines) + "\n"


def validate_inverse_tails(pres: PcPresentation) -> list[tuple[int, int]]:
    """Spot-check every stored inverse-conjugate tail by collection.

    The relation g_i g_j^-1 = g_j^-1 t is equivalent to
    (g_j^-1 t) g_j = g_i, and the right-hand collection only ever uses
    the forward conjugate tails, so each stored entry can be certified
    independently.  Returns the (i, j) keys that fail; empty means all
    stored entries are consistent.
    """
    from .elements import collect, generator

    bad = []
    for (i, j), tail in sorted(pres.inv_conjugates.items()):
        word = Word(((j, -1),) + tail + ((j, 1),))
        if collect(pres, word) != generator(pres, i):
            bad.append((i, j))
    return bad
