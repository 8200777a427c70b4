"""Induced generating sequences for subgroups of polycyclic groups.

The central object is a partial igs: a length-n array whose slot d is
either empty or holds a normalised element of depth exactly d.  Feeding
subgroup generators through :func:`add_gen_to_pigs` performs a
non-commutative analogue of Gaussian elimination.  An incoming element h
of depth d either fills an empty slot (after normalisation), or is
merged with the occupant k via an extended-gcd combination of their
leading exponents; in both cases the quotients that raise the depth are
fed back into a work list.  Two shortcuts are applied: once every slot
from some position onward holds leading exponent 1, those slots are
replaced by the plain generators and deeper work is discarded; and when
the gcd of the two leading exponents equals one of them, the slot update
and one of the quotients are skipped.

:func:`igs_by_generators` drives this to closure, additionally feeding
back relative-order powers and commutators of every changed slot, after
which the occupied slots form an igs: depths strictly increase, each
power u^r(u) with finite relative order sifts to the identity through
the later entries, and so does each conjugate u_i^{u_j} (j < i).  These
closure conditions are decidable by :func:`verify_igs` and make
membership testing by depth-wise division (:func:`sift`) exact.

Subgroup order and index read off directly from an igs, and a canonical
form obtained by reducing the entries above each later leading exponent
(division with remainder, exactly as in the Hermite normal form of an
integer matrix) is unique per subgroup, which decides subgroup equality.
"""

from __future__ import annotations

import heapq
from collections import deque
from typing import Iterable, NamedTuple, Optional

from .cardinal import Cardinal, INFINITE
from .elements import Element, generator, identity
from .presentation import PcPresentation


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with g = gcd(a, b) >= 0 and g == u*a + v*b."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        return -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def _is_normalised(u: Element) -> bool:
    # normalisation makes the leading exponent positive (infinite relative
    # order) respectively a divisor of the relative order at the depth
    d = u.depth()
    r = u.presentation.orders[d - 1]
    lead = u.exponents[d - 1]
    if r == 0:
        return lead > 0
    return r % lead == 0


def _check_binding(pres: PcPresentation, elems: Iterable[Element]):
    for g in elems:
        if g.presentation is not pres and g.presentation != pres:
            raise ValueError("element bound to a different presentation")


class PartialIgs:
    """Length-n sequence of optional normalised elements, slot d has depth d."""

    __slots__ = ("presentation", "slots")

    def __init__(self, presentation: PcPresentation,
                 slots: Iterable[Optional[Element]]):
        slots = tuple(slots)
        if len(slots) != presentation.num_gens:
            raise ValueError(f"expected {presentation.num_gens} slots")
        for d, u in enumerate(slots, start=1):
            if u is None:
                continue
            _check_binding(presentation, [u])
            if u.depth() != d:
                raise ValueError(f"slot {d} holds an element of depth {u.depth()}")
            if not _is_normalised(u):
                raise ValueError(f"slot {d} holds a non-normalised element")
        object.__setattr__(self, "presentation", presentation)
        object.__setattr__(self, "slots", slots)

    def __setattr__(self, name, value):
        raise AttributeError("PartialIgs is immutable")

    @classmethod
    def empty(cls, presentation: PcPresentation) -> PartialIgs:
        return cls(presentation, (None,) * presentation.num_gens)

    def occupied(self) -> list[Element]:
        return [u for u in self.slots if u is not None]

    def to_igs(self) -> Igs:
        return Igs(self.presentation, self.occupied())

    def __eq__(self, other):
        return (isinstance(other, PartialIgs) and self.slots == other.slots
                and self.presentation == other.presentation)

    def __hash__(self):
        return hash(self.slots)

    def __repr__(self):
        body = ", ".join("-" if u is None else str(u) for u in self.slots)
        return f"<PartialIgs [{body}]>"


class Igs:
    """A completed induced generating sequence, in strictly increasing depth."""

    __slots__ = ("presentation", "gens")

    def __init__(self, presentation: PcPresentation, gens: Iterable[Element]):
        gens = tuple(gens)
        _check_binding(presentation, gens)
        prev = 0
        for u in gens:
            d = u.depth()
            if d > presentation.num_gens:
                raise ValueError("identity cannot occur in an igs")
            if d <= prev:
                raise ValueError("igs depths must strictly increase")
            if not _is_normalised(u):
                raise ValueError(f"igs entry {u} is not normalised")
            prev = d
        object.__setattr__(self, "presentation", presentation)
        object.__setattr__(self, "gens", gens)

    def __setattr__(self, name, value):
        raise AttributeError("Igs is immutable")

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __eq__(self, other):
        return (isinstance(other, Igs) and self.gens == other.gens
                and self.presentation == other.presentation)

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return f"<Igs {', '.join(str(u) for u in self.gens) or 'empty'}>"


class _DepthQueue:
    """Work list ordered by element depth, FIFO among equal depths."""

    def __init__(self):
        self._heap = []
        self._count = 0

    def push(self, elem: Element):
        heapq.heappush(self._heap, (elem.depth(), self._count, elem))
        self._count += 1

    def pop(self) -> Element:
        return heapq.heappop(self._heap)[2]

    def __bool__(self):
        return bool(self._heap)


def _unit_suffix_start(slots) -> int:
    """Least l such that slots l..n are all filled with leading exponent 1."""
    low = len(slots) + 1
    for idx in range(len(slots) - 1, -1, -1):
        u = slots[idx]
        if u is None or u.exponents[idx] != 1:
            break
        low = idx + 1
    return low


def _promote_unit_suffix(pres: PcPresentation, slots: list):
    # once slots low..n all have leading exponent 1 the subgroup contains
    # everything from depth low on, so the plain generators can stand in
    low = _unit_suffix_start(slots)
    for d in range(low, len(slots) + 1):
        g = generator(pres, d)
        if slots[d - 1] != g:
            slots[d - 1] = g


def add_gen_to_pigs(pigs: PartialIgs, gen: Element) -> tuple[PartialIgs, dict[int, Element]]:
    """Absorb one element: returns a partial igs generating <pigs, gen>.

    The second component maps each slot index whose stored element
    changed to its new value.
    """
    pres = pigs.presentation
    _check_binding(pres, [gen])
    n = pres.num_gens
    slots = list(pigs.slots)
    queue = _DepthQueue()
    queue.push(gen)

    def push_residue(residue: Element, d: int):
        # the work list only ever receives elements strictly deeper than
        # the slot just processed; this is what makes the loop terminate
        assert residue.depth() > d, "residue failed to sink below its slot"
        if not residue.is_identity:
            queue.push(residue)

    while queue:
        h = queue.pop()
        d = h.depth()
        if d > n or d >= _unit_suffix_start(slots):
            continue
        k = slots[d - 1]
        if k is None:
            u = h.normalised()
            slots[d - 1] = u
            _promote_unit_suffix(pres, slots)
            if pres.orders[d - 1] > 0:
                q = h.leading_exponent() // u.leading_exponent()
                push_residue(h * u ** (-q), d)
            continue
        a = h.leading_exponent()
        b = k.leading_exponent()
        if a % b == 0:
            # gcd(a, b) = b: the occupant already covers h modulo depth d
            push_residue(h * k ** (-(a // b)), d)
            continue
        g, u_co, v_co = _xgcd(a, b)
        w = h if g == a else (h ** u_co) * (k ** v_co)
        wn = w.normalised()
        assert wn.depth() == d and wn.leading_exponent() == g
        assert b % g == 0 and g != b, "slot leading exponent must shrink properly"
        slots[d - 1] = wn
        _promote_unit_suffix(pres, slots)
        if g != a:
            push_residue(h * wn ** (-(a // g)), d)
        push_residue(k * wn ** (-(b // g)), d)

    result = PartialIgs(pres, slots)
    changes = {d: slots[d - 1] for d in range(1, n + 1)
               if slots[d - 1] != pigs.slots[d - 1]}
    return result, changes


def igs_by_generators(pres: PcPresentation, gens: Iterable[Element]) -> Igs:
    """Compute an igs of the subgroup generated by the given elements."""
    gens = list(gens)
    _check_binding(pres, gens)
    pigs = PartialIgs.empty(pres)
    queue = deque(g for g in gens if not g.is_identity)
    while queue:
        g = queue.popleft()
        pigs, changes = add_gen_to_pigs(pigs, g)
        for d in sorted(changes):
            u = changes[d]
            rel = u.relative_order()
            if rel.is_finite:
                p = u ** rel.value
                if not p.is_identity:
                    queue.append(p)
            for idx, h in enumerate(pigs.slots, start=1):
                if idx != d and h is not None:
                    c = u.commutator(h)
                    if not c.is_identity:
                        queue.append(c)
    return pigs.to_igs()


class SiftResult(NamedTuple):
    residue: Element
    membership: bool


def _sift_through(gens: list[Element], g: Element) -> SiftResult:
    by_depth = {u.depth(): u for u in gens}
    residue = g
    n = g.presentation.num_gens
    while True:
        d = residue.depth()
        if d > n:
            return SiftResult(residue, True)
        u = by_depth.get(d)
        if u is None:
            return SiftResult(residue, False)
        lead = u.exponents[d - 1]
        e = residue.exponents[d - 1]
        if e % lead:
            # normalisation forces lead | r_d, so divisibility of the plain
            # exponent decides solvability modulo r_d as well
            return SiftResult(residue, False)
        residue = residue * u ** (-(e // lead))


def sift(seq: Igs, g: Element) -> SiftResult:
    """Depth-wise division of g by the igs; exact membership for a verified igs."""
    _check_binding(seq.presentation, [g])
    return _sift_through(list(seq.gens), g)


def verify_igs(candidate: Iterable[Element]) -> bool:
    """Decide the igs closure conditions for a depth-sorted, normalised list.

    True iff depths strictly increase, every finite relative-order power
    u_i^r(u_i) sifts to the identity through the entries after i, and
    every conjugate u_i^{u_j} with j < i sifts to the identity through
    the entries after j.
    """
    elems = list(candidate)
    if not elems:
        return True
    pres = elems[0].presentation
    _check_binding(pres, elems)
    n = pres.num_gens
    depths = [u.depth() for u in elems]
    if depths[-1] > n:
        return False
    if any(d2 <= d1 for d1, d2 in zip(depths, depths[1:])):
        return False
    for i, u in enumerate(elems):
        rel = u.relative_order()
        if rel.is_finite:
            if not _sift_through(elems[i + 1:], u ** rel.value).membership:
                return False
    for j in range(len(elems)):
        for i in range(j + 1, len(elems)):
            conj = elems[i].conjugate(elems[j])
            if not _sift_through(elems[j + 1:], conj).membership:
                return False
    return True


def subgroup_order(seq: Igs) -> Cardinal:
    """|U| as the product of the relative orders of the igs entries."""
    total = Cardinal(1)
    for u in seq.gens:
        total = total * u.relative_order()
    return total


def subgroup_index(pres: PcPresentation, seq: Igs) -> Cardinal:
    """[G:U] as the product of leading exponents and missed relative orders."""
    hit = {u.depth() for u in seq.gens}
    total = Cardinal(1)
    for u in seq.gens:
        total = total * u.leading_exponent()
    for d in range(1, pres.num_gens + 1):
        if d not in hit:
            r = pres.orders[d - 1]
            total = total * (INFINITE if r == 0 else Cardinal(r))
    return total


def canonical_igs(seq: Igs) -> Igs:
    """Reduce every entry above each later leading exponent; unique per subgroup."""
    gens = list(seq.gens)
    for t in range(len(gens)):
        for k in range(t + 1, len(gens)):
            d = gens[k].depth()
            lead = gens[k].exponents[d - 1]
            q = gens[t].exponents[d - 1] // lead
            if q:
                gens[t] = gens[t] * gens[k] ** (-q)
    return Igs(seq.presentation, gens)


def subgroups_equal(u_gens: Iterable[Element], v_gens: Iterable[Element]) -> bool:
    """Whether two generating sets span the same subgroup."""
    u_gens, v_gens = list(u_gens), list(v_gens)
    everyone = u_gens + v_gens
    if not everyone:
        return True
    pres = everyone[0].presentation
    _check_binding(pres, everyone)
    first = canonical_igs(igs_by_generators(pres, u_gens))
    second = canonical_igs(igs_by_generators(pres, v_gens))
    return [u.exponents for u in first.gens] == [v.exponents for v in second.gens]
