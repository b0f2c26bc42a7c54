"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line straight to the terminal,
so ``pytest tests/test_acceptance.py`` shows the scorecard without ``-s``.
Thresholds are fixed here: the order-2 runs must finish in under 1 s
(ORDER2_SECONDS), everything else is exact.
"""

import time

import pytest

import oracles
from families import semilattices
from finsemiring import (
    FiniteSemiring,
    chain,
    classify,
    cyclic_group,
    diamond,
    element_report,
    end1,
    enumerate_semirings,
    finite_field,
    has_nontrivial_nilpotent,
    is_congruence_simple,
    is_ideal_simple,
    two_element,
    v_of,
)
from finsemiring.canonical import are_isomorphic
from finsemiring.cli import run
from finsemiring.constructions import FiniteSemigroup, box_product, g_of, subsemiring_generated
from finsemiring.enumeration import CLASSIFICATION_HYPOTHESES, SearchConstraints
from lemma_checks import violations

ORDER2_SECONDS = 1.0
ALL_FLAGS = [tuple(bool(b >> i & 1) for i in range(4)) for b in range(16)]


@pytest.fixture
def verdict(capsys):
    def report(number, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
        assert ok, detail

    return report


def from_json(d):
    return FiniteSemiring(d["add"], d["mul"])


def match_fixtures(found, fixtures):
    """Map each fixture name to the indices of found semirings isomorphic to it."""
    return {name: [i for i, S in enumerate(found) if are_isomorphic(S, F) is not None] for name, F in fixtures.items()}


def _as_semiring(L):
    # join used for both operations, enough to compare semilattices up to isomorphism
    return FiniteSemiring(L.join, L.join)


def test_1_order2_census(verdict, T):
    t0 = time.perf_counter()
    status, rep = run(["enumerate", "--order", "2", "--absorbing"])
    dt = time.perf_counter() - t0
    found = [from_json(d) for d in rep.payload["semirings"]]
    hits = match_fixtures(found, {f"T{k}": S for k, S in T.items()})
    bijective = all(len(v) == 1 for v in hits.values()) and sorted(i for v in hits.values() for i in v) == list(range(8))
    ok = status == 0 and len(found) == 8 and bijective and dt < ORDER2_SECONDS
    verdict(1, ok, f"{len(found)} classes, matched one-to-one to T1..T8: {bijective}, {dt:.3f}s")


def test_2_order2_classification(verdict, T):
    t0 = time.perf_counter()
    status, rep = run(["enumerate", "--order", "2", "--absorbing", "--no-nilpotents", "--congruence-simple"])
    dt = time.perf_counter() - t0
    found = [from_json(d) for d in rep.payload["semirings"]]
    names = sorted(k for k, v in match_fixtures(found, {f"T{k}": S for k, S in T.items()}).items() if v)
    ok = status == 0 and len(found) == 4 and names == ["T2", "T4", "T6", "T8"] and dt < ORDER2_SECONDS
    verdict(2, ok, f"classes {names}, {dt:.3f}s")


def test_3_simple_no_nilpotent_sweep(verdict):
    checked, bad = 0, []
    for n in (2, 3, 4):
        for S in enumerate_semirings(n, CLASSIFICATION_HYPOTHESES):
            checked += 1
            rep = element_report(S)
            w = rep.mult_absorbing
            if w not in (rep.zero, rep.bi_absorbing):
                bad.append((S.signature(), "w is neither zero nor bi-absorbing"))
            T = [x for x in S.elements if x != w]
            if any(S.mul[a][b] == w for a in T for b in T):
                bad.append((S.signature(), "zero divisor"))
    verdict(3, checked > 0 and not bad, f"{checked} semirings of order <= 4, {len(bad)} violations")


def test_4_lemma_suite(verdict, full_upto3, hypothesis_upto4, fixtures):
    pool = full_upto3 + hypothesis_upto4 + list(fixtures.values())
    found = violations(pool)
    verdict(4, not found, f"{len(pool)} semirings checked, {len(found)} violations")


def test_5_constructions(verdict, T, vz2, vz3):
    results = {}
    results["V(1) = T6"] = are_isomorphic(v_of(FiniteSemigroup(((0,),))), T[6]) is not None
    for name, V in (("V(Z2)", vz2), ("V(Z3)", vz3)):
        results[f"{name} simple"] = is_congruence_simple(V) and is_ideal_simple(V)
        results[f"{name} classified"] = classify(V).conjecture_status == "InList(V(G))"
    for name, S in (("T6", T[6]), ("T8", T[8]), ("V(Z2)", vz2)):
        results[f"T6 box {name}"] = are_isomorphic(box_product(T[6], S), S) is not None
    results["End1(C2) = T6"] = are_isomorphic(end1(chain(2)).semiring, T[6]) is not None
    E3 = end1(chain(3)).semiring
    o = element_report(E3).bi_absorbing
    results["End1(C3) has e^2 = o"] = o is not None and any(E3.mul[e][e] == o for e in E3.elements if e != o)
    failed = [k for k, v in results.items() if not v]
    verdict(5, not failed, f"{len(results) - len(failed)}/{len(results)} checks" + (f", failed {failed}" if failed else ""))


def test_6_g_semiring_dichotomy(verdict):
    lattices = list(semilattices(4))
    explicit = [chain(2), chain(3), chain(4), diamond()]
    covered = all(any(are_isomorphic(_as_semiring(L), _as_semiring(M)) for M in lattices) for L in explicit)
    bad = []
    for L in lattices:
        E = end1(L)
        G, _ = subsemiring_generated(E.semiring, g_of(E))
        if not is_congruence_simple(G):
            bad.append((L.order, "not simple"))
        if has_nontrivial_nilpotent(G) != (L.order >= 3):
            bad.append((L.order, "nilpotent dichotomy"))
    verdict(6, covered and not bad, f"{len(lattices)} semilattices (chains and diamond included: {covered}), {len(bad)} violations")


def test_7_conjecture_scan(verdict, vz2, vz3):
    status, rep = run(["scan-conjecture", "--max-order", "4"])
    found = [from_json(d["semiring"]) for n in rep.payload["instances"].values() for d in n]
    wanted = {"F3": finite_field(3), "F4": finite_field(4), "V(Z2)": vz2, "V(Z3)": vz3}
    missing = [k for k, v in match_fixtures(found, wanted).items() if not v]
    ok = status == 0 and rep.verdicts["counterexamples"] == 0 and not missing
    verdict(7, ok, f"counts {rep.verdicts['counts']}, {rep.verdicts['counterexamples']} counterexamples, missing {missing}")


def test_8_oracle_equivalence(verdict):
    t0 = time.perf_counter()
    labelled = oracles.naive_semirings(3)
    mismatched = []
    for flags in ALL_FLAGS:
        got = {S.signature() for S in enumerate_semirings(3, SearchConstraints(*flags))}
        if got != oracles.naive_classes(3, flags, labelled):
            mismatched.append(flags)
    dt = time.perf_counter() - t0
    verdict(8, not mismatched, f"{len(ALL_FLAGS) - len(mismatched)}/{len(ALL_FLAGS)} constraint combinations agree, {dt:.1f}s")


def test_9_determinism(verdict):
    commands = [
        ["enumerate", "--order", "3", "--absorbing"],
        ["enumerate", "--order", "4", "--absorbing", "--no-nilpotents"],
        ["scan-conjecture", "--max-order", "4"],
    ]
    differing = []
    for cmd in commands:
        outs = {run(cmd + extra)[1].to_json() for extra in ([], [], ["--jobs", "2"], ["--jobs", "3"])}
        if len(outs) != 1:
            differing.append(" ".join(cmd))
    verdict(9, not differing, f"{len(commands)} commands x 4 runs, differing: {differing}")
