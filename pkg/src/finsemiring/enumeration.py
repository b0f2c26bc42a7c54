"""Exhaustive enumeration of finite semirings up to isomorphism.

Two phases.  Addition tables are generated first, as lexicographically least
representatives of commutative semigroups.  For each one the multiplication
table is filled cell by cell in row-major order; after every assignment the
associativity and distributivity equations that just became evaluable are
checked.  Symmetry is broken by keeping only tables that are least among
their images under the automorphisms of the addition (the lex-leader rule),
so every emitted semiring is already in canonical form.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Optional, Sequence

from .congruence import is_congruence_simple
from .core import CapabilityError, FiniteSemiring, has_nontrivial_nilpotent, mult_absorbing

# feasibility bounds; pass allow_large=True to exceed them
MAX_ORDER_UNCONSTRAINED = 4
MAX_ORDER_CONSTRAINED = 5


@dataclass(frozen=True)
class SearchConstraints:
    require_mult_absorbing: bool = False
    forbid_nontrivial_nilpotents: bool = False
    require_congruence_simple: bool = False
    require_commutative_mul: bool = False

    def as_dict(self) -> dict:
        return asdict(self)


CLASSIFICATION_HYPOTHESES = SearchConstraints(True, True, True, False)


def order_bound(constraints: SearchConstraints) -> int:
    if constraints.require_mult_absorbing and constraints.forbid_nontrivial_nilpotents:
        return MAX_ORDER_CONSTRAINED
    return MAX_ORDER_UNCONSTRAINED


class _Filler:
    """Backtracking fill of an n x n table ``M`` (flat list, -1 = unset).

    With ``add`` given, M must distribute over it on both sides.  ``syms``
    holds (perm, inverse) pairs; only tables that are least among their
    images under these relabellings survive.
    """

    def __init__(self, n, add=None, commutative=False, square_avoid=-1, syms=()):
        self.n = n
        self.add = add
        self.commutative = commutative
        self.square_avoid = square_avoid
        self.syms = [s for s in syms if list(s[0]) != list(range(n))]
        if add is not None:
            self.add_preimage = [[(y, z) for y in range(n) for z in range(n) if add[y][z] == k] for k in range(n)]

    def _ok(self, M, i, j):
        n = self.n
        v = M[i * n + j]
        rj = j * n
        # (i j) z = i (j z)
        for z in range(n):
            l = M[v * n + z]
            q = M[rj + z]
            if l >= 0 and q >= 0:
                r = M[i * n + q]
                if r >= 0 and l != r:
                    return False
        # (x i) j = x v
        for x in range(n):
            p = M[x * n + i]
            if p >= 0:
                l = M[p * n + j]
                r = M[x * n + v]
                if l >= 0 and r >= 0 and l != r:
                    return False
        for x in range(n):
            for y in range(n):
                c = M[x * n + y]
                if c == i:
                    # (x y) j with xy = i, against x (y j)
                    q = M[y * n + j]
                    if q >= 0:
                        r = M[x * n + q]
                        if r >= 0 and r != v:
                            return False
                if c == j:
                    # i (x y) with xy = j, against (i x) y
                    p = M[i * n + x]
                    if p >= 0:
                        l = M[p * n + y]
                        if l >= 0 and l != v:
                            return False
        A = self.add
        if A is None:
            return True
        ri = i * n
        # i (y + z) = iy + iz, cell (i, j) as the left side
        for y, z in self.add_preimage[j]:
            p, q = M[ri + y], M[ri + z]
            if p >= 0 and q >= 0 and A[p][q] != v:
                return False
        # i (j + z) = v + iz
        for z in range(n):
            l = M[ri + A[j][z]]
            q = M[ri + z]
            if l >= 0 and q >= 0 and A[v][q] != l:
                return False
        # (y + z) j = yj + zj, cell (i, j) as the left side
        for y, z in self.add_preimage[i]:
            p, q = M[y * n + j], M[z * n + j]
            if p >= 0 and q >= 0 and A[p][q] != v:
                return False
        # (i + z) j = v + zj
        for z in range(n):
            l = M[A[i][z] * n + j]
            q = M[z * n + j]
            if l >= 0 and q >= 0 and A[v][q] != l:
                return False
        return True

    def _leader(self, M, upto):
        n = self.n
        for perm, inv in self.syms:
            for k in range(upto):
                i, j = divmod(k, n)
                src = M[inv[i] * n + inv[j]]
                if src < 0:
                    break
                s = perm[src]
                if s != M[k]:
                    if s < M[k]:
                        return False
                    break
        return True

    def run(self, preset: Optional[dict] = None) -> Iterator[tuple[int, ...]]:
        n = self.n
        M = [-1] * (n * n)
        preset = preset or {}
        for k, v in preset.items():
            M[k] = v
        for k in preset:
            if not self._ok(M, *divmod(k, n)):
                return
        free = [k for k in range(n * n) if k not in preset]
        yield from self._rec(M, free, 0)

    def _rec(self, M, free, pos):
        n = self.n
        if pos == len(free):
            if self._leader(M, n * n):
                yield tuple(M)
            return
        k = free[pos]
        i, j = divmod(k, n)
        if self.commutative and i > j:
            domain = [M[j * n + i]]
        else:
            domain = range(n)
        for v in domain:
            if i == j and v == self.square_avoid and i != v:
                continue
            M[k] = v
            if self._ok(M, i, j) and (j != n - 1 or self._leader(M, k + 1)):
                yield from self._rec(M, free, pos + 1)
        M[k] = -1


def _rows(flat, n):
    return tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))


def _inverse(perm):
    inv = [0] * len(perm)
    for x, px in enumerate(perm):
        inv[px] = x
    return tuple(inv)


@lru_cache(maxsize=None)
def additive_reducts(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Lexicographically least representatives of all commutative semigroups of order n."""
    syms = [(p, _inverse(p)) for p in permutations(range(n))]
    filler = _Filler(n, commutative=True, syms=syms)
    return tuple(_rows(flat, n) for flat in filler.run())


def automorphisms(table: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    n = len(table)
    return [
        p
        for p in permutations(range(n))
        if all(p[table[x][y]] == table[p[x]][p[y]] for x in range(n) for y in range(n))
    ]


def _multiplications(add, constraints: SearchConstraints) -> list[tuple[int, ...]]:
    """Signatures of all canonical semirings with the given (canonical) addition."""
    n = len(add)
    syms = [(p, _inverse(p)) for p in automorphisms(add)]
    out = []
    if constraints.require_mult_absorbing:
        for w in range(n):
            if add[w][w] != w:
                continue  # an absorbing w satisfies w + w = w
            preset = {}
            for x in range(n):
                preset[w * n + x] = w
                preset[x * n + w] = w
            avoid = w if constraints.forbid_nontrivial_nilpotents else -1
            filler = _Filler(n, add, constraints.require_commutative_mul, avoid, syms)
            out.extend(filler.run(preset))
    else:
        filler = _Filler(n, add, constraints.require_commutative_mul, -1, syms)
        out.extend(filler.run())
    flat_add = tuple(v for row in add for v in row)
    result = []
    for M in out:
        S = FiniteSemiring(add, _rows(M, n))
        if constraints.require_mult_absorbing and mult_absorbing(S) is None:
            continue
        if constraints.forbid_nontrivial_nilpotents and has_nontrivial_nilpotent(S):
            continue
        if constraints.require_congruence_simple and not is_congruence_simple(S):
            continue
        result.append(flat_add + M)
    return result


def _task(args):
    add, constraints = args
    return _multiplications(add, constraints)


def _from_signature(sig, n) -> FiniteSemiring:
    nn = n * n
    return FiniteSemiring(_rows(sig[:nn], n), _rows(sig[nn:], n))


def enumerate_semirings(
    n: int,
    constraints: SearchConstraints = SearchConstraints(),
    jobs: int = 1,
    allow_large: bool = False,
) -> list[FiniteSemiring]:
    """One canonical representative per isomorphism class, sorted by signature."""
    if n < 1:
        raise ValueError("order must be positive")
    bound = order_bound(constraints)
    if n > bound and not allow_large:
        raise CapabilityError("enumerate", bound, n)
    tasks = [(add, constraints) for add in additive_reducts(n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_task, tasks))
    else:
        chunks = [_task(t) for t in tasks]
    sigs = sorted(sig for chunk in chunks for sig in chunk)
    return [_from_signature(sig, n) for sig in sigs]


def iter_semirings(n, constraints=SearchConstraints(), jobs=1, allow_large=False) -> Iterator[FiniteSemiring]:
    yield from enumerate_semirings(n, constraints, jobs, allow_large)
