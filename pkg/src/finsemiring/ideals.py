"""Ideals, bi-ideals, annihilators and the ring part of a semiring with zero."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .core import FiniteSemiring, PreconditionError, additive_inverses_exist, element_report, mult_absorbing


def _members(S: FiniteSemiring, I: Iterable[int]) -> frozenset[int]:
    I = frozenset(I)
    if not I:
        raise ValueError("empty subset")
    if not all(0 <= x < S.order for x in I):
        raise ValueError(f"subset {sorted(I)} not within 0..{S.order - 1}")
    return I


def is_left_ideal(S: FiniteSemiring, I) -> bool:
    I = _members(S, I)
    return all(S.add[x][y] in I for x in I for y in I) and all(S.mul[s][x] in I for s in S.elements for x in I)


def is_right_ideal(S: FiniteSemiring, I) -> bool:
    I = _members(S, I)
    return all(S.add[x][y] in I for x in I for y in I) and all(S.mul[x][s] in I for s in S.elements for x in I)


def is_ideal(S: FiniteSemiring, I) -> bool:
    return is_left_ideal(S, I) and is_right_ideal(S, I)


def is_bi_ideal(S: FiniteSemiring, I) -> bool:
    I = _members(S, I)
    return is_ideal(S, I) and all(S.add[s][x] in I for s in S.elements for x in I)


def _closure(S: FiniteSemiring, X, absorb_sums: bool) -> frozenset[int]:
    X = _members(S, X)
    have = set(X)
    todo = list(X)
    while todo:
        x = todo.pop()
        new = []
        for s in S.elements:
            new.append(S.mul[s][x])
            new.append(S.mul[x][s])
            if absorb_sums:
                new.append(S.add[s][x])
        for y in list(have):
            new.append(S.add[x][y])
        for z in new:
            if z not in have:
                have.add(z)
                todo.append(z)
    return frozenset(have)


def ideal_generated(S: FiniteSemiring, X) -> frozenset[int]:
    """Least ideal containing X."""
    return _closure(S, X, absorb_sums=False)


def bi_ideal_generated(S: FiniteSemiring, X) -> frozenset[int]:
    return _closure(S, X, absorb_sums=True)


def is_ideal_simple(S: FiniteSemiring) -> bool:
    # every ideal with >= 2 elements contains a pair, whose generated ideal it then contains
    return S.order >= 2 and all(len(ideal_generated(S, p)) == S.order for p in combinations(S.elements, 2))


def is_bi_ideal_simple(S: FiniteSemiring) -> bool:
    return S.order >= 2 and all(len(bi_ideal_generated(S, p)) == S.order for p in combinations(S.elements, 2))


def annihilator(S: FiniteSemiring, a: int) -> tuple[frozenset[int], frozenset[int]]:
    """Return ``({x : xa = w}, {x : ax = w})`` for the multiplicatively absorbing w."""
    w = mult_absorbing(S)
    if w is None:
        raise PreconditionError("annihilator needs a multiplicatively absorbing element")
    left = frozenset(x for x in S.elements if S.mul[x][a] == w)
    right = frozenset(x for x in S.elements if S.mul[a][x] == w)
    return left, right


def ring_part(S: FiniteSemiring) -> frozenset[int]:
    """Elements having an additive inverse with respect to the zero.

    The result is checked to be an ideal that is closed under summands
    (a + b in R forces a, b in R); an AssertionError signals a broken input.
    """
    zero = element_report(S).zero
    if zero is None:
        raise PreconditionError("ring_part needs a zero (absorbing, additively neutral)")
    R = frozenset(a for a in S.elements if any(S.add[a][c] == zero for c in S.elements))
    assert is_ideal(S, R), f"ring part {sorted(R)} is not an ideal"
    for a in S.elements:
        for b in S.elements:
            if S.add[a][b] in R:
                assert a in R and b in R, f"{a}+{b} in R but a summand is not"
    return R


def is_ring(S: FiniteSemiring) -> bool:
    zero = element_report(S).zero
    return zero is not None and additive_inverses_exist(S, zero)
