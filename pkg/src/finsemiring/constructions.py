"""Concrete semirings: the two-element list, V(G), products, quotients, box products, End_1(L)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Sequence

from .congruence import Partition, beta, is_congruence
from .core import CapabilityError, FiniteSemiring, PreconditionError, Table, as_table, element_report

MAX_END1_ORDER = 6

# a+a, a+b, b+a, b+b | a*a, a*b, b*a, b*b with a -> 0, b -> 1
_TWO_ELEMENT = {
    1: ("abba", "aaaa"),
    2: ("abba", "aaab"),
    3: ("abbb", "aaaa"),
    4: ("abbb", "aaab"),
    5: ("aaab", "aaaa"),
    6: ("aaab", "aaab"),
    7: ("aaaa", "aaaa"),
    8: ("aaaa", "aaab"),
}


def two_element(k: int) -> FiniteSemiring:
    """The k-th two-element semiring with a multiplicatively absorbing element (a = 0)."""
    if k not in _TWO_ELEMENT:
        raise ValueError(f"two-element semiring index must be 1..8, got {k}")

    def tab(s):
        v = [ord(c) - ord("a") for c in s]
        return ((v[0], v[1]), (v[2], v[3]))

    add, mul = _TWO_ELEMENT[k]
    return FiniteSemiring(tab(add), tab(mul))


def _poly_mod(a, f, p):
    """Remainder of a modulo the monic polynomial f; coefficient lists, lowest degree first."""
    a = list(a)
    while len(a) >= len(f):
        c = a[-1]
        if c:
            shift = len(a) - len(f)
            for i, fc in enumerate(f):
                a[shift + i] = (a[shift + i] - c * fc) % p
        a.pop()
    return a


def _prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            return (p, k) if r == 1 else None
    return None


def finite_field(q: int) -> FiniteSemiring:
    """GF(q) for a prime power q; element i has base-p digits as polynomial coefficients."""
    pk = _prime_power(q) if q >= 2 else None
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    p, k = pk

    def digits(i):
        return [(i // p**t) % p for t in range(k)]

    def number(c):
        return sum(v * p**t for t, v in enumerate(c))

    def mul_poly(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
        return out

    # first monic degree-k polynomial without a monic factor of degree 1..k//2
    for tail in product(range(p), repeat=k):
        f = list(tail) + [1]
        if all(
            any(_poly_mod(f, list(g) + [1], p))
            for d in range(1, k // 2 + 1)
            for g in product(range(p), repeat=d)
        ):
            break
    els = range(q)
    add = tuple(tuple(number([(x + y) % p for x, y in zip(digits(i), digits(j))]) for j in els) for i in els)
    mul = tuple(
        tuple(number((_poly_mod(mul_poly(digits(i), digits(j)), f, p) + [0] * k)[:k]) for j in els) for i in els
    )
    return FiniteSemiring(add, mul)


# -- semigroups -----------------------------------------------------------------


@dataclass(frozen=True)
class FiniteSemigroup:
    op: Table

    def __post_init__(self):
        op = as_table(self.op, name="op")
        object.__setattr__(self, "op", op)
        r = range(len(op))
        for x, y, z in product(r, r, r):
            if op[op[x][y]][z] != op[x][op[y][z]]:
                raise ValueError(f"operation not associative at {(x, y, z)}")

    @property
    def order(self) -> int:
        return len(self.op)


def cyclic_group(n: int) -> FiniteSemigroup:
    return FiniteSemigroup(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def left_zero_semigroup(n: int) -> FiniteSemigroup:
    return FiniteSemigroup(tuple(tuple(i for _ in range(n)) for i in range(n)))


class SemigroupPredicates(NamedTuple):
    cancellative: bool
    simple: bool
    group: bool


def semigroup_predicates(G: FiniteSemigroup) -> SemigroupPredicates:
    op, r, n = G.op, range(G.order), G.order
    cancellative = all(len({op[x][c] for x in r}) == n and len({op[c][x] for x in r}) == n for c in r)
    simple = all(len({op[op[g][a]][h] for g in r for h in r}) == n for a in r)
    e = next((e for e in r if all(op[e][x] == x == op[x][e] for x in r)), None)
    group = cancellative and e is not None and all(any(op[x][y] == e == op[y][x] for y in r) for x in r)
    return SemigroupPredicates(cancellative, simple, group)


def v_of(G: FiniteSemigroup) -> FiniteSemiring:
    """G with an extra element o (index |G|): o absorbs products, x + x = x, other sums are o."""
    if not semigroup_predicates(G).cancellative:
        raise PreconditionError("V(G) needs a cancellative semigroup")
    n = G.order
    o = n
    add = tuple(tuple(x if x == y else o for y in range(n + 1)) for x in range(n + 1))
    mul = tuple(
        tuple(o if o in (x, y) else G.op[x][y] for y in range(n + 1)) for x in range(n + 1)
    )
    return FiniteSemiring(add, mul)


# -- products and quotients -------------------------------------------------------


def direct_product(S: FiniteSemiring, T: FiniteSemiring) -> FiniteSemiring:
    """Componentwise operations; pair (s, t) has index s * |T| + t."""
    m = T.order
    pairs = list(product(S.elements, T.elements))

    def op(sa, ta):
        return tuple(tuple(sa[s][s2] * m + ta[t][t2] for s2, t2 in pairs) for s, t in pairs)

    return FiniteSemiring(op(S.add, T.add), op(S.mul, T.mul))


def quotient(S: FiniteSemiring, p: Partition) -> FiniteSemiring:
    """Quotient by a congruence; blocks are numbered in order of their least element."""
    if p.order != S.order or not is_congruence(S, p):
        raise ValueError("quotient needs a congruence of S")
    reps = sorted(set(p.labels))
    index = {r: i for i, r in enumerate(reps)}

    def op(t):
        return tuple(tuple(index[p.labels[t[x][y]]] for y in reps) for x in reps)

    return FiniteSemiring(op(S.add), op(S.mul))


def box_product(S: FiniteSemiring, T: FiniteSemiring) -> FiniteSemiring:
    """Product modulo the bi-ideal of pairs with a bi-absorbing coordinate.

    Pairs without such a coordinate come first in row-major order; the
    collapsed class is the last element.
    """
    if S.order < 2 or T.order < 2:
        raise PreconditionError("box product needs factors with at least two elements")
    o1, o2 = element_report(S).bi_absorbing, element_report(T).bi_absorbing
    if o1 is None or o2 is None:
        raise PreconditionError("box product needs bi-absorbing elements in both factors")
    pairs = [(s, t) for s in S.elements if s != o1 for t in T.elements if t != o2]
    index = {pt: i for i, pt in enumerate(pairs)}
    O = len(pairs)

    def op(sa, ta):
        rows = []
        for x in pairs + [None]:
            row = []
            for y in pairs + [None]:
                if x is None or y is None:
                    row.append(O)
                else:
                    row.append(index.get((sa[x[0]][y[0]], ta[x[1]][y[1]]), O))
            rows.append(tuple(row))
        return tuple(rows)

    return FiniteSemiring(op(S.add, T.add), op(S.mul, T.mul))


def box_product_via_quotient(S: FiniteSemiring, T: FiniteSemiring) -> FiniteSemiring:
    """Same semiring as box_product, built literally as (S x T) / beta_I."""
    o1, o2 = element_report(S).bi_absorbing, element_report(T).bi_absorbing
    if o1 is None or o2 is None:
        raise PreconditionError("box product needs bi-absorbing elements in both factors")
    P = direct_product(S, T)
    I = [s * T.order + t for s in S.elements for t in T.elements if s == o1 or t == o2]
    return quotient(P, beta(P, I))


# -- semilattices and End_1(L) ---------------------------------------------------


@dataclass(frozen=True)
class FiniteSemilattice:
    join: Table
    top: int

    def __post_init__(self):
        j = as_table(self.join, name="join")
        object.__setattr__(self, "join", j)
        r = range(len(j))
        for x in r:
            if j[x][x] != x:
                raise ValueError(f"join not idempotent at {x}")
            for y in r:
                if j[x][y] != j[y][x]:
                    raise ValueError(f"join not commutative at {(x, y)}")
                for z in r:
                    if j[j[x][y]][z] != j[x][j[y][z]]:
                        raise ValueError(f"join not associative at {(x, y, z)}")
        if not 0 <= self.top < len(j) or any(j[x][self.top] != self.top for x in r):
            raise ValueError(f"{self.top} is not the greatest element")

    @property
    def order(self) -> int:
        return len(self.join)

    def leq(self, x: int, y: int) -> bool:
        return self.join[x][y] == y


def chain(n: int) -> FiniteSemilattice:
    """0 < 1 < ... < n-1."""
    return FiniteSemilattice(tuple(tuple(max(i, j) for j in range(n)) for i in range(n)), n - 1)


def diamond() -> FiniteSemilattice:
    """Bottom 0, incomparable atoms 1 and 2, top 3."""
    j = [[max(i, k) for k in range(4)] for i in range(4)]
    j[1][2] = j[2][1] = 3
    return FiniteSemilattice(tuple(map(tuple, j)), 3)


@dataclass(frozen=True)
class End1:
    """End_1(L) as a semiring with the maps each index stands for."""

    semiring: FiniteSemiring
    maps: tuple[tuple[int, ...], ...]
    top_map: int
    identity: int
    lattice: FiniteSemilattice

    def index(self, f: Sequence[int]) -> int:
        return self.maps.index(tuple(f))


def end1(L: FiniteSemilattice) -> End1:
    """Join endomorphisms of L fixing the top; sum is pointwise join, product is composition.

    Maps are indexed in lexicographic order of their image sequences.
    """
    n = L.order
    if n < 2:
        raise PreconditionError("End_1(L) needs |L| >= 2")
    if n > MAX_END1_ORDER:
        raise CapabilityError("end1", MAX_END1_ORDER, n)
    j, r = L.join, range(n)
    maps = [
        f
        for f in product(r, repeat=n)
        if f[L.top] == L.top and all(f[j[x][y]] == j[f[x]][f[y]] for x in r for y in range(x + 1, n))
    ]
    index = {f: i for i, f in enumerate(maps)}
    add = tuple(tuple(index[tuple(j[f[x]][g[x]] for x in r)] for g in maps) for f in maps)
    mul = tuple(tuple(index[tuple(f[g[x]] for x in r)] for g in maps) for f in maps)
    return End1(
        FiniteSemiring(add, mul),
        tuple(maps),
        index[(L.top,) * n],
        index[tuple(r)],
        L,
    )


def y_of(E: End1) -> frozenset[int]:
    """Indices of maps with image of size at most 2."""
    return frozenset(i for i, f in enumerate(E.maps) if len(set(f)) <= 2)


def g_of(E: End1) -> frozenset[int]:
    """Indices of maps lying above (pointwise) some map with image of size at most 2."""
    L = E.lattice
    ys = [E.maps[i] for i in y_of(E)]
    return frozenset(
        i for i, f in enumerate(E.maps) if any(all(L.leq(g[x], f[x]) for x in range(L.order)) for g in ys)
    )


def closure(S: FiniteSemiring, X) -> frozenset[int]:
    """Least subset containing X closed under both operations."""
    have = set(X)
    if not have:
        raise ValueError("empty generating set")
    todo = list(have)
    while todo:
        x = todo.pop()
        for y in list(have):
            for z in (S.add[x][y], S.mul[x][y], S.mul[y][x]):
                if z not in have:
                    have.add(z)
                    todo.append(z)
    return frozenset(have)


def restrict(S: FiniteSemiring, members) -> FiniteSemiring:
    """The subsemiring on a closed subset, renumbered in increasing order."""
    members = sorted(members)
    index = {x: i for i, x in enumerate(members)}
    try:
        add = tuple(tuple(index[S.add[x][y]] for y in members) for x in members)
        mul = tuple(tuple(index[S.mul[x][y]] for y in members) for x in members)
    except KeyError as exc:
        raise ValueError("subset is not closed under the operations") from exc
    return FiniteSemiring(add, mul)


def subsemiring_generated(S: FiniteSemiring, X) -> tuple[FiniteSemiring, tuple[int, ...]]:
    """Generated subsemiring and the original indices of its elements."""
    members = tuple(sorted(closure(S, X)))
    return restrict(S, members), members
