"""Congruences of finite semirings as canonically labelled partitions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .core import CapabilityError, FiniteSemiring, n_multiple
from .ideals import is_bi_ideal, is_ideal

MAX_ALL_CONGRUENCES_ORDER = 8


class NotACongruenceError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    """``labels[i]`` is the smallest element of the block containing ``i``."""

    labels: tuple[int, ...]

    def __post_init__(self):
        lab = tuple(self.labels)
        object.__setattr__(self, "labels", lab)
        for i, l in enumerate(lab):
            if not (0 <= l <= i and lab[l] == l):
                raise ValueError(f"non-canonical partition labels {lab}")

    @property
    def order(self) -> int:
        return len(self.labels)

    @classmethod
    def identity(cls, n: int) -> "Partition":
        return cls(tuple(range(n)))

    @classmethod
    def full(cls, n: int) -> "Partition":
        return cls((0,) * n)

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        lab = list(range(n))
        for b in blocks:
            b = sorted(b)
            for x in b:
                lab[x] = b[0]
        return cls(tuple(lab))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Partition":
        """Equivalence closure of a relation."""
        uf = _UnionFind(n)
        for x, y in pairs:
            uf.union(x, y)
        return uf.partition()

    def blocks(self) -> list[tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for i, l in enumerate(self.labels):
            out.setdefault(l, []).append(i)
        return [tuple(b) for b in out.values()]

    def same(self, x: int, y: int) -> bool:
        return self.labels[x] == self.labels[y]

    def refines(self, other: "Partition") -> bool:
        """True if every block of self lies inside a block of other."""
        return all(other.labels[i] == other.labels[l] for i, l in enumerate(self.labels))

    def is_identity(self) -> bool:
        return self.labels == tuple(range(self.order))

    def is_full(self) -> bool:
        return all(l == 0 for l in self.labels)

    def __len__(self):
        return len(set(self.labels))


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        # keep the smaller index as root so labels come out canonical
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry
        return True

    def partition(self) -> Partition:
        return Partition(tuple(self.find(i) for i in range(len(self.parent))))


def _check_order(S: FiniteSemiring, p: Partition):
    if p.order != S.order:
        raise ValueError(f"partition of order {p.order} on semiring of order {S.order}")


def is_congruence(S: FiniteSemiring, p: Partition) -> bool:
    _check_order(S, p)
    lab = p.labels
    a, m = S.add, S.mul
    for x, l in enumerate(lab):
        if l == x:
            continue
        # compare x with its block representative; compatibility is transitive
        for c in S.elements:
            if lab[a[x][c]] != lab[a[l][c]] or lab[m[x][c]] != lab[m[l][c]] or lab[m[c][x]] != lab[m[c][l]]:
                return False
    return True


def principal_congruence(S: FiniteSemiring, x: int, y: int) -> Partition:
    """Least congruence identifying x and y (merge worklist over a union-find)."""
    uf = _UnionFind(S.order)
    a, m = S.add, S.mul
    todo = [(x, y)]
    blocks = S.order
    while todo and blocks > 1:
        u, v = todo.pop()
        if not uf.union(u, v):
            continue
        blocks -= 1
        for c in S.elements:
            todo.append((a[u][c], a[v][c]))
            todo.append((m[u][c], m[v][c]))
            todo.append((m[c][u], m[c][v]))
    return uf.partition()


def _restricted_growth(n: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def rec(i, top):
        if i == n:
            yield list(rgs)
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    rgs[0] = 0
    yield from rec(1, 0)


def all_partitions(n: int) -> Iterator[Partition]:
    for rgs in _restricted_growth(n):
        first: dict[int, int] = {}
        yield Partition(tuple(first.setdefault(b, i) for i, b in enumerate(rgs)))


def all_congruences(S: FiniteSemiring) -> list[Partition]:
    if S.order > MAX_ALL_CONGRUENCES_ORDER:
        raise CapabilityError("all_congruences", MAX_ALL_CONGRUENCES_ORDER, S.order)
    return [p for p in all_partitions(S.order) if is_congruence(S, p)]


def _generates_full(S: FiniteSemiring, x: int, y: int, known: list[list[bool]]) -> bool:
    # stops as soon as the closure hits a pair already known to generate everything
    uf = _UnionFind(S.order)
    a, m = S.add, S.mul
    todo = [(x, y)]
    blocks = S.order
    while todo:
        u, v = todo.pop()
        if known[u][v]:
            return True
        if not uf.union(u, v):
            continue
        blocks -= 1
        if blocks == 1:
            return True
        for c in S.elements:
            todo.append((a[u][c], a[v][c]))
            todo.append((m[u][c], m[v][c]))
            todo.append((m[c][u], m[c][v]))
    return False


def is_congruence_simple(S: FiniteSemiring) -> bool:
    """Exactly two congruences; a one-element semiring has only one.

    Equivalent to every principal congruence being full.
    """
    if S.order < 2:
        return False
    known = [[False] * S.order for _ in S.elements]
    for x, y in combinations(S.elements, 2):
        if not _generates_full(S, x, y, known):
            return False
        known[x][y] = known[y][x] = True
    return True


def _checked(S: FiniteSemiring, rel: list[list[bool]], name: str) -> Partition:
    n = S.order
    for x in range(n):
        if not rel[x][x]:
            raise NotACongruenceError(f"{name}: not reflexive at {x}")
        for y in range(n):
            if rel[x][y] != rel[y][x]:
                raise NotACongruenceError(f"{name}: not symmetric at {(x, y)}")
    p = Partition.from_pairs(n, ((x, y) for x in range(n) for y in range(n) if rel[x][y]))
    for x in range(n):
        for y in range(n):
            if p.same(x, y) and not rel[x][y]:
                raise NotACongruenceError(f"{name}: not transitive, {(x, y)} missing")
    if not is_congruence(S, p):
        raise NotACongruenceError(f"{name}: not compatible with the operations")
    return p


def alpha(S: FiniteSemiring, I) -> Partition:
    """x ~ y iff x + a = y + b for some a, b in the ideal I."""
    I = frozenset(I)
    if not I or not is_ideal(S, I):
        raise ValueError(f"{sorted(I)} is not an ideal")
    shifts = [{S.add[x][a] for a in I} for x in S.elements]
    rel = [[not shifts[x].isdisjoint(shifts[y]) for y in S.elements] for x in S.elements]
    return _checked(S, rel, "alpha")


def beta(S: FiniteSemiring, J) -> Partition:
    """Collapse the bi-ideal J to one block."""
    J = frozenset(J)
    if not J or not is_bi_ideal(S, J):
        raise ValueError(f"{sorted(J)} is not a bi-ideal")
    p = Partition.from_blocks(S.order, [J])
    if not is_congruence(S, p):
        raise NotACongruenceError("beta: not compatible with the operations")
    return p


def gamma(S: FiniteSemiring, k: int) -> Partition:
    """x ~ y iff kx = ky."""
    if k < 1:
        raise ValueError("k must be positive")
    first: dict[int, int] = {}
    return Partition(tuple(first.setdefault(n_multiple(S, x, k), x) for x in S.elements))


def delta(S: FiniteSemiring) -> Partition:
    """x ~ y iff, for a common i >= 0, 2^i x lies in y + S and 2^i y lies in x + S.

    The pair (2^i x, 2^i y) walks through at most n^2 states, so i <= n^2
    covers every i.
    """
    n = S.order
    a = S.add
    translates = [frozenset(a[y]) for y in S.elements]
    rel = [[False] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            u, v = x, y
            for _ in range(n * n + 1):
                if u in translates[y] and v in translates[x]:
                    rel[x][y] = rel[y][x] = True
                    break
                u, v = a[u][u], a[v][v]
    return _checked(S, rel, "delta")
