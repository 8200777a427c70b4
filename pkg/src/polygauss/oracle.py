"""Brute-force reference computations used to anchor the fast algorithms.

Nothing in this module touches the igs machinery: subgroups of finite
groups are enumerated by plain closure under multiplication, and the
free-abelian case is settled by an integer Hermite normal form with its
own extended-gcd helper.  These functions back the test suite and the
CLI ``verify`` command.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .elements import Element, identity
from .presentation import PcPresentation

DEFAULT_BOUND = 4096


class InfiniteGroupError(ValueError):
    """The presentation has an infinite relative order, enumeration is impossible."""


class EnumerationBoundExceeded(RuntimeError):
    """The group is finite but larger than the configured enumeration bound."""


def _finite_order(pres: PcPresentation, bound: int) -> int:
    order = 1
    for idx, r in enumerate(pres.orders, start=1):
        if r == 0:
            raise InfiniteGroupError(f"relative order r_{idx} is infinite")
        order *= r
    if order > bound:
        raise EnumerationBoundExceeded(f"group order {order} exceeds bound {bound}")
    return order


class FiniteGroupTable:
    """All elements of a finite group, as normal-form exponent vectors."""

    def __init__(self, pres: PcPresentation, bound: int = DEFAULT_BOUND):
        self.presentation = pres
        self.order = _finite_order(pres, bound)
        self.elements = [Element(pres, exps)
                         for exps in itertools.product(*(range(r) for r in pres.orders))]
        assert len(self.elements) == self.order

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return self.order


def enumerate_subgroup(pres: PcPresentation, gens: Iterable[Element],
                       bound: int = DEFAULT_BOUND) -> set[Element]:
    """Closure of the generators in a finite group, by work-list saturation.

    In a finite group the closure of the identity under right
    multiplication by the generators is already the generated subgroup
    (inverses arise as powers).
    """
    _finite_order(pres, bound)
    gens = list(gens)
    seen = {identity(pres)}
    frontier = [identity(pres)]
    while frontier:
        x = frontier.pop()
        for h in gens:
            y = x * h
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
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


def hermite_normal_form(rows: Iterable[Iterable[int]],
                        ncols: int | None = None) -> tuple[list[list[int]], list[int]]:
    """Row-style Hermite normal form over the integers.

    Returns (H, pivots) where H spans the same row lattice as the input,
    pivots are positive, entries above each pivot are reduced into
    [0, pivot), and zero rows are dropped.  All row operations are
    unimodular, so the row space is preserved exactly.
    """
    work = [[int(x) for x in row] for row in rows]
    if work:
        width = len(work[0])
        if any(len(row) != width for row in work):
            raise ValueError("rows of unequal length")
        if ncols is not None and ncols != width:
            raise ValueError(f"expected {ncols} columns, got {width}")
    else:
        width = ncols or 0

    rank = 0
    pivot_cols = []
    for c in range(width):
        pivot = None
        for i in range(rank, len(work)):
            if not work[i][c]:
                continue
            if pivot is None:
                pivot = i
                continue
            a, b = work[pivot][c], work[i][c]
            g, u, v = _xgcd(a, b)
            row_p, row_i = work[pivot], work[i]
            work[pivot] = [u * x + v * y for x, y in zip(row_p, row_i)]
            # coefficient matrix [[u, v], [-b/g, a/g]] has determinant 1
            work[i] = [(a // g) * y - (b // g) * x for x, y in zip(row_p, row_i)]
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        if work[rank][c] < 0:
            work[rank] = [-x for x in work[rank]]
        p = work[rank][c]
        for i in range(rank):
            q = work[i][c] // p
            if q:
                work[i] = [x - q * y for x, y in zip(work[i], work[rank])]
        pivot_cols.append(c)
        rank += 1

    assert all(not any(row) for row in work[rank:])
    hnf = work[:rank]
    pivots = [hnf[i][c] for i, c in enumerate(pivot_cols)]
    return hnf, pivots
