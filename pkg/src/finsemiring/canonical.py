"""Canonical forms and isomorphism of operation tables."""

from __future__ import annotations

from itertools import permutations
from typing import Optional

from .core import CapabilityError, FiniteSemiring

MAX_CANONICAL_ORDER = 7


def _permuted_signature(S: FiniteSemiring, perm, inv) -> list[int]:
    n = S.order
    a, m = S.add, S.mul
    sig = [perm[a[inv[i]][inv[j]]] for i in range(n) for j in range(n)]
    sig += [perm[m[inv[i]][inv[j]]] for i in range(n) for j in range(n)]
    return sig


def canonical_labeling(S: FiniteSemiring) -> tuple[FiniteSemiring, tuple[int, ...]]:
    """Lexicographically least relabelled copy of S and a relabelling that produces it.

    The order compares the row-major ``add`` table first, then ``mul``.
    """
    n = S.order
    if n > MAX_CANONICAL_ORDER:
        raise CapabilityError("canonical_form", MAX_CANONICAL_ORDER, n)
    best = None
    best_perm = None
    for perm in permutations(range(n)):
        inv = [0] * n
        for x, px in enumerate(perm):
            inv[px] = x
        sig = _permuted_signature(S, perm, inv)
        if best is None or sig < best:
            best, best_perm = sig, perm
    nn = n * n
    add = tuple(tuple(best[i * n:(i + 1) * n]) for i in range(n))
    mul = tuple(tuple(best[nn + i * n:nn + (i + 1) * n]) for i in range(n))
    return FiniteSemiring(add, mul), best_perm


def canonical_form(S: FiniteSemiring) -> FiniteSemiring:
    return canonical_labeling(S)[0]


def _element_invariant(S: FiniteSemiring, x: int) -> tuple:
    a, m = S.add, S.mul
    return (
        a[x][x] == x,
        m[x][x] == x,
        sum(a[x][y] == x for y in S.elements),
        sum(m[x][y] == x for y in S.elements),
        sum(m[y][x] == x for y in S.elements),
        len(set(a[x])),
        len(set(m[x])),
    )


def are_isomorphic(S: FiniteSemiring, T: FiniteSemiring) -> Optional[tuple[int, ...]]:
    """A bijection ``f`` with ``f(x + y) = f(x) + f(y)`` and ``f(xy) = f(x)f(y)``, or None.

    Backtracking over images, pruned by element invariants; no size bound.
    """
    n = S.order
    if T.order != n:
        return None
    inv_s = [_element_invariant(S, x) for x in S.elements]
    inv_t = [_element_invariant(T, x) for x in T.elements]
    if sorted(inv_s) != sorted(inv_t):
        return None
    f = [-1] * n
    used = [False] * n
    sa, sm, ta, tm = S.add, S.mul, T.add, T.mul

    def consistent(x):
        fx = f[x]
        for y in range(x + 1):
            fy = f[y]
            for u, v, op_s, op_t in ((x, y, sa, ta), (x, y, sm, tm), (y, x, sm, tm)):
                z = op_s[u][v]
                fz = f[z]
                target = op_t[f[u]][f[v]]
                if fz >= 0:
                    if fz != target:
                        return False
                elif used[target]:
                    return False
        return True

    def rec(x):
        if x == n:
            # pairs whose result was unassigned when checked are settled here
            return S.permuted(f) == T
        for y in range(n):
            if used[y] or inv_t[y] != inv_s[x]:
                continue
            f[x] = y
            used[y] = True
            if consistent(x) and rec(x + 1):
                return True
            f[x] = -1
            used[y] = False
        return False

    return tuple(f) if rec(0) else None
