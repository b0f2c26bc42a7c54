"""Classification of congruence-simple semirings with an absorbing element and no nilpotents.

Every input lands in the five-case list (two-element exceptions, finite
fields, simple rings without zero divisors, additively idempotent with a
bi-absorbing element, and the non-idempotent bi-absorbing case), and
separately in the conjectured finite list (the two exceptions, finite
fields, V(G) for a finite group G).  Anything outside the conjectured list
is flagged as a counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .canonical import are_isomorphic
from .congruence import is_congruence_simple
from .constructions import FiniteSemigroup, semigroup_predicates, two_element
from .core import FiniteSemiring, PreconditionError, element_report, has_nontrivial_nilpotent, n_multiple
from .enumeration import CLASSIFICATION_HYPOTHESES, enumerate_semirings
from .ideals import ring_part

T4_OR_T8 = "T4_or_T8"
SIMPLE_RING = "SimpleRingNoZeroDivisors"
ADD_IDEMPOTENT_BI_ABSORBING = "AddIdempotentBiAbsorbing"
CASE5 = "Case5Preconditions"
COUNTEREXAMPLE = "Counterexample"


def finite_field_label(q: int) -> str:
    return f"FiniteField({q})"


@dataclass(frozen=True)
class ClassificationVerdict:
    case_labels: tuple[str, ...]
    conjecture_status: str
    group_table: Optional[tuple[tuple[int, ...], ...]] = None
    notes: tuple[str, ...] = field(default=())

    @property
    def is_counterexample(self) -> bool:
        return self.conjecture_status == COUNTEREXAMPLE

    def as_dict(self) -> dict:
        return {
            "case_labels": list(self.case_labels),
            "conjecture_status": self.conjecture_status,
            "group_table": None if self.group_table is None else [list(r) for r in self.group_table],
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ClassificationVerdict":
        gt = d.get("group_table")
        return cls(
            tuple(d["case_labels"]),
            d["conjecture_status"],
            None if gt is None else tuple(tuple(r) for r in gt),
            tuple(d.get("notes", ())),
        )


def check_hypotheses(S: FiniteSemiring) -> None:
    if element_report(S).mult_absorbing is None:
        raise PreconditionError("hypothesis failed: no multiplicatively absorbing element")
    if has_nontrivial_nilpotent(S):
        raise PreconditionError("hypothesis failed: has a non-trivial nilpotent element")
    if not is_congruence_simple(S):
        raise PreconditionError("hypothesis failed: not congruence-simple")


def _is_group_on(S: FiniteSemiring, T: list[int]) -> Optional[tuple[tuple[int, ...], ...]]:
    """Multiplication table on T, renumbered, if T is a group under it."""
    index = {x: i for i, x in enumerate(T)}
    if any(S.mul[x][y] not in index for x in T for y in T):
        return None
    table = tuple(tuple(index[S.mul[x][y]] for y in T) for x in T)
    if semigroup_predicates(FiniteSemigroup(table)).group:
        return table
    return None


def is_finite_field(S: FiniteSemiring) -> bool:
    rep = element_report(S)
    if not rep.is_ring or not S.is_commutative() or S.order < 2:
        return False
    T = [x for x in S.elements if x != rep.zero]
    return _is_group_on(S, T) is not None


def classify(S: FiniteSemiring) -> ClassificationVerdict:
    check_hypotheses(S)
    rep = element_report(S)
    w = rep.mult_absorbing
    T = [x for x in S.elements if x != w]
    labels: list[str] = []
    notes: list[str] = []
    status = None
    group_table = None

    if S.order == 2:
        if are_isomorphic(S, two_element(4)):
            labels.append(T4_OR_T8)
            status = "InList(T4)"
        elif are_isomorphic(S, two_element(8)):
            labels.append(T4_OR_T8)
            status = "InList(T8)"

    if rep.zero is not None:
        if ring_part(S) == frozenset(S.elements) and rep.is_ring:
            if is_finite_field(S):
                labels.append(finite_field_label(S.order))
                status = status or f"InList(Field {S.order})"
            else:
                labels.append(SIMPLE_RING)
                notes.append("finite simple ring without zero divisors that is not a field")
        elif status is None:
            notes.append("zero present, not a ring, not T4: outside every case")
    elif rep.bi_absorbing is not None:
        closed = all(S.mul[a][b] != w for a in T for b in T)
        if rep.add_idempotent:
            if closed:
                labels.append(ADD_IDEMPOTENT_BI_ABSORBING)
            else:
                notes.append("zero divisors among non-absorbing elements")
            v_shape = all(S.add[x][y] == (x if x == y else w) for x in S.elements for y in S.elements)
            if v_shape:
                group_table = _is_group_on(S, T)
            if group_table is not None:
                status = status or "InList(V(G))"
            elif status is None:
                notes.append("additively idempotent with bi-absorbing element but not of the form V(G)")
        elif status is None:
            labels.append(CASE5)
            sums = {S.add[x][y] for x in S.elements for y in S.elements}
            pre = {
                "2x=o": all(n_multiple(S, x, 2) == w for x in S.elements),
                "S+S=S": len(sums) == S.order,
                "TT in T": all(S.mul[a][b] != w for a in T for b in T),
            }
            notes.append(
                "finite instance of the non-idempotent bi-absorbing case, which is asserted to be infinite; "
                + ", ".join(f"{k}: {v}" for k, v in pre.items())
            )
    elif status is None:
        notes.append("absorbing element is neither a zero nor bi-absorbing")

    if status is None:
        status = COUNTEREXAMPLE
    return ClassificationVerdict(tuple(labels), status, group_table, tuple(notes))


@dataclass
class ScanReport:
    max_order: int
    counts: dict[int, int]
    instances: dict[int, list[tuple[FiniteSemiring, ClassificationVerdict]]]
    counterexamples: list[tuple[FiniteSemiring, ClassificationVerdict]]
    anomalies: list[tuple[FiniteSemiring, str]]

    def status_counts(self) -> dict[int, dict[str, int]]:
        out: dict[int, dict[str, int]] = {}
        for n, items in self.instances.items():
            c: dict[str, int] = {}
            for _, v in items:
                c[v.conjecture_status] = c.get(v.conjecture_status, 0) + 1
            out[n] = dict(sorted(c.items()))
        return out


def conjecture_scan(max_order: int, jobs: int = 1, allow_large: bool = False) -> ScanReport:
    """Classify every semiring of order 2..max_order satisfying the classification hypotheses."""
    counts, instances, counter, anomalies = {}, {}, [], []
    for n in range(2, max_order + 1):
        reps = enumerate_semirings(n, CLASSIFICATION_HYPOTHESES, jobs=jobs, allow_large=allow_large)
        counts[n] = len(reps)
        instances[n] = []
        for S in reps:
            v = classify(S)
            instances[n].append((S, v))
            if v.is_counterexample:
                counter.append((S, v))
            if len(v.case_labels) != 1:
                anomalies.append((S, f"{len(v.case_labels)} case labels: {list(v.case_labels)}"))
    return ScanReport(max_order, counts, instances, counter, anomalies)
