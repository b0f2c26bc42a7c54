"""Finite semirings given by operation tables, axiom checks and element predicates.

Elements are the integers ``0 .. n-1``; ``add[i][j]`` is ``i + j`` and
``mul[i][j]`` is ``i * j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

Table = tuple[tuple[int, ...], ...]


class TableError(ValueError):
    """Malformed operation table (wrong shape, out-of-range entry)."""


class PreconditionError(ValueError):
    """An operation was applied to an algebra that lacks a required property."""


class CapabilityError(RuntimeError):
    """The requested size exceeds a configured feasibility bound."""

    def __init__(self, what: str, bound: int, got: int):
        super().__init__(f"{what}: order {got} exceeds bound {bound}")
        self.what = what
        self.bound = bound
        self.got = got


def as_table(rows: Sequence[Sequence[int]], n: Optional[int] = None, name: str = "table") -> Table:
    """Validate a square table with entries in range and freeze it."""
    try:
        t = tuple(tuple(int(v) for v in row) for row in rows)
    except TypeError as exc:
        raise TableError(f"{name}: not a table of integers") from exc
    if n is None:
        n = len(t)
    if n < 1 or len(t) != n:
        raise TableError(f"{name}: expected {n} rows, got {len(t)}")
    for i, row in enumerate(t):
        if len(row) != n:
            raise TableError(f"{name}: row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise TableError(f"{name}: entry ({i},{j}) = {v} out of range 0..{n - 1}")
    return t


@dataclass(frozen=True)
class FiniteSemiring:
    add: Table
    mul: Table

    def __post_init__(self):
        add = as_table(self.add, name="add")
        mul = as_table(self.mul, len(add), name="mul")
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "mul", mul)

    @property
    def order(self) -> int:
        return len(self.add)

    @property
    def elements(self) -> range:
        return range(len(self.add))

    def signature(self) -> tuple[int, ...]:
        """Flattened ``add`` then ``mul`` tables, row-major."""
        return tuple(v for row in self.add for v in row) + tuple(v for row in self.mul for v in row)

    def permuted(self, perm: Sequence[int]) -> "FiniteSemiring":
        """Relabel element ``x`` as ``perm[x]``."""
        n = self.order
        inv = [0] * n
        for x, px in enumerate(perm):
            inv[px] = x
        add = tuple(tuple(perm[self.add[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
        mul = tuple(tuple(perm[self.mul[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
        return FiniteSemiring(add, mul)

    def is_commutative(self) -> bool:
        m = self.mul
        return all(m[i][j] == m[j][i] for i in self.elements for j in range(i))


@dataclass(frozen=True)
class AxiomReport:
    violations: tuple[tuple[str, tuple[int, ...]], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def _first(it):
    return next(it, None)


def verify_semiring(add, mul) -> AxiomReport:
    """Check the semiring axioms, reporting the lexicographically first witness per axiom.

    Raises TableError for malformed input; axiom failures are returned, not raised.
    """
    a = as_table(add, name="add")
    m = as_table(mul, len(a), name="mul")
    r = range(len(a))
    found = []
    w = _first((x, y) for x, y in product(r, r) if a[x][y] != a[y][x])
    if w:
        found.append(("add-commutativity", w))
    w = _first((x, y, z) for x, y, z in product(r, r, r) if a[a[x][y]][z] != a[x][a[y][z]])
    if w:
        found.append(("add-associativity", w))
    w = _first((x, y, z) for x, y, z in product(r, r, r) if m[m[x][y]][z] != m[x][m[y][z]])
    if w:
        found.append(("mul-associativity", w))
    w = _first((x, y, z) for x, y, z in product(r, r, r) if m[x][a[y][z]] != a[m[x][y]][m[x][z]])
    if w:
        found.append(("left-distributivity", w))
    w = _first((x, y, z) for x, y, z in product(r, r, r) if m[a[y][z]][x] != a[m[y][x]][m[z][x]])
    if w:
        found.append(("right-distributivity", w))
    return AxiomReport(tuple(found))


# -- element predicates ---------------------------------------------------------


def mult_absorbing(S: FiniteSemiring) -> Optional[int]:
    m = S.mul
    for w in S.elements:
        if all(m[w][x] == w == m[x][w] for x in S.elements):
            return w
    return None


def add_absorbing(S: FiniteSemiring) -> Optional[int]:
    for w in S.elements:
        if all(S.add[w][x] == w for x in S.elements):
            return w
    return None


def mult_neutral(S: FiniteSemiring) -> Optional[int]:
    m = S.mul
    for e in S.elements:
        if all(m[e][x] == x == m[x][e] for x in S.elements):
            return e
    return None


def add_neutral(S: FiniteSemiring) -> Optional[int]:
    for e in S.elements:
        if all(S.add[e][x] == x for x in S.elements):
            return e
    return None


def n_multiple(S: FiniteSemiring, x: int, k: int) -> int:
    """The k-fold sum ``x + ... + x``."""
    if k < 1:
        raise ValueError("k must be positive")
    y = x
    for _ in range(k - 1):
        y = S.add[y][x]
    return y


def power(S: FiniteSemiring, x: int, k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    y = x
    for _ in range(k - 1):
        y = S.mul[y][x]
    return y


def nilpotents(S: FiniteSemiring, w: Optional[int] = None) -> frozenset[int]:
    """Elements with some power equal to the absorbing element; empty without one.

    Exponents up to ``n`` suffice: the power sequence of x is periodic after
    at most n steps, so w is reached by then or never.
    """
    if w is None:
        w = mult_absorbing(S)
        if w is None:
            return frozenset()
    out = set()
    for x in S.elements:
        y = x
        for _ in range(S.order):
            if y == w:
                out.add(x)
                break
            y = S.mul[y][x]
    return frozenset(out)


def has_nontrivial_nilpotent(S: FiniteSemiring) -> bool:
    """False by convention when S has no multiplicatively absorbing element."""
    w = mult_absorbing(S)
    if w is None:
        return False
    return len(nilpotents(S, w)) > 1


def is_add_idempotent(S: FiniteSemiring) -> bool:
    return all(S.add[x][x] == x for x in S.elements)


def is_add_cancellative(S: FiniteSemiring) -> bool:
    # cancellative iff every translation y -> y + c is injective
    return all(len({S.add[y][c] for y in S.elements}) == S.order for c in S.elements)


def additive_inverses_exist(S: FiniteSemiring, zero: int) -> bool:
    return all(any(S.add[x][c] == zero for c in S.elements) for x in S.elements)


@dataclass(frozen=True)
class ElementReport:
    mult_absorbing: Optional[int]
    add_absorbing: Optional[int]
    bi_absorbing: Optional[int]
    zero: Optional[int]
    mult_neutral: Optional[int]
    add_neutral: Optional[int]
    nilpotents: frozenset[int] = field(default_factory=frozenset)
    add_idempotent: bool = False
    add_cancellative: bool = False
    is_ring: bool = False

    def as_dict(self) -> dict:
        d = {k: getattr(self, k) for k in self.__dataclass_fields__}
        d["nilpotents"] = sorted(self.nilpotents)
        return d


def element_report(S: FiniteSemiring) -> ElementReport:
    w = mult_absorbing(S)
    ab = add_absorbing(S)
    an = add_neutral(S)
    zero = w if w is not None and w == an else None
    return ElementReport(
        mult_absorbing=w,
        add_absorbing=ab,
        bi_absorbing=w if w is not None and w == ab else None,
        zero=zero,
        mult_neutral=mult_neutral(S),
        add_neutral=an,
        nilpotents=nilpotents(S, w) if w is not None else frozenset(),
        add_idempotent=is_add_idempotent(S),
        add_cancellative=is_add_cancellative(S),
        is_ring=zero is not None and additive_inverses_exist(S, zero),
    )


def trivial_semiring() -> FiniteSemiring:
    return FiniteSemiring(((0,),), ((0,),))
