"""Structural facts about semirings with an absorbing element, as violation finders.

Each check takes a semiring and returns a list of human-readable violations
(empty when the statement holds).  Checks whose hypotheses fail return [].
"""

from itertools import combinations

from finsemiring import (
    alpha,
    annihilator,
    beta,
    delta,
    element_report,
    gamma,
    has_nontrivial_nilpotent,
    is_bi_ideal,
    is_congruence_simple,
    is_ideal,
    n_multiple,
    two_element,
)
from finsemiring.canonical import are_isomorphic


def subsets(S):
    els = list(S.elements)
    for k in range(1, len(els) + 1):
        yield from (frozenset(c) for c in combinations(els, k))


def _pairs(p):
    return {(x, y) for x in range(p.order) for y in range(p.order) if p.same(x, y)}


def absorbing_idempotent(S):
    w = element_report(S).mult_absorbing
    return [] if w is None or S.add[w][w] == w else [f"w={w} but w+w={S.add[w][w]}"]


def alpha_ideals(S):
    bad = []
    zero = element_report(S).zero
    for I in subsets(S):
        if not is_ideal(S, I):
            continue
        a = alpha(S, I)
        if not all(a.same(x, y) for x in I for y in I):
            bad.append(f"IxI not inside alpha for I={sorted(I)}")
        if a.is_identity() != (zero is not None and I == {zero}):
            bad.append(f"alpha=id mismatch for I={sorted(I)}")
    return bad


def beta_bi_ideals(S):
    bad = []
    rep = element_report(S)
    o = rep.bi_absorbing
    full = frozenset(S.elements)
    for I in subsets(S):
        if not is_bi_ideal(S, I):
            continue
        b, a = beta(S, I), alpha(S, I)
        if b.is_identity() != (o is not None and I == {o}):
            bad.append(f"beta=id mismatch at {sorted(I)}")
        if b.is_full() != (I == full):
            bad.append(f"beta=full mismatch at {sorted(I)}")
        if not b.refines(a):
            bad.append(f"beta not inside alpha at {sorted(I)}")
        if (b == a) != (I == full):
            bad.append(f"beta=alpha mismatch at {sorted(I)}")
        if rep.add_absorbing is not None and not a.is_full():
            bad.append(f"additively absorbing element but alpha not full at {sorted(I)}")
    return bad


def gamma_delta(S):
    bad = []
    rep = element_report(S)
    g2, g3, d = gamma(S, 2), gamma(S, 3), delta(S)
    if g2.is_identity() and d.is_full() and not rep.add_cancellative:
        bad.append("gamma2=id, delta=full, yet not cancellative")
    if g2.is_full() and g3.is_identity():
        if not rep.is_ring or any(n_multiple(S, x, 2) != rep.zero for x in S.elements):
            bad.append("gamma2=full, gamma3=id, yet not a ring of characteristic 2")
    if g2.is_full() and g3.is_full():
        o = rep.bi_absorbing
        if o is None or any(n_multiple(S, x, k) != o for x in S.elements for k in range(2, S.order + 3)):
            bad.append("gamma2=gamma3=full, yet kx != o_S for some k >= 2")
    if d.is_identity() != rep.add_idempotent:
        bad.append("delta=id does not match additive idempotency")
    return bad


def _hyp(S):
    w = element_report(S).mult_absorbing
    return w is not None and not has_nontrivial_nilpotent(S)


def sum_with_absorbing(S):
    if not _hyp(S):
        return []
    rep = element_report(S)
    w = rep.mult_absorbing
    Sw = frozenset(S.add[x][w] for x in S.elements)
    bad = []
    if not is_bi_ideal(S, Sw):
        bad.append("S+w not a bi-ideal")
    if (len(Sw) == 1) != (rep.bi_absorbing == w):
        bad.append("|S+w|=1 mismatch")
    if (len(Sw) == S.order) != (rep.zero == w):
        bad.append("S+w=S mismatch")
    return bad


def annihilators(S):
    if not _hyp(S):
        return []
    rep = element_report(S)
    w = rep.mult_absorbing
    bad = []
    for a in S.elements:
        left, right = annihilator(S, a)
        if left != right or not is_ideal(S, left):
            bad.append(f"annihilator of {a} one-sided or not an ideal")
            continue
        ann = left
        al = alpha(S, ann)
        if al.is_identity():
            # alpha of the annihilator trivial: w is a zero, a has no zero divisors, a != w unless |S| = 1
            if rep.zero != w or any(S.mul[a][b] == w or S.mul[b][a] == w for b in S.elements if b != w):
                bad.append(f"alpha((a:w)) = id at a={a} without the expected consequences")
            if S.order > 1 and a == w:
                bad.append("alpha((w:w)) = id with |S| > 1")
        if rep.zero == w:
            block = {x for x in S.elements if al.same(x, w)}
            if block != ann:
                bad.append(f"(a:0) is not an alpha-block at a={a}")
            if al.is_full() and a != w:
                bad.append(f"alpha((a:0)) full for a={a} != 0")
        if rep.bi_absorbing == w:
            if not is_bi_ideal(S, ann):
                bad.append(f"(a:o) not a bi-ideal at a={a}")
            if not al.is_full():
                bad.append(f"alpha((a:o)) not full at a={a}")
            b_ = beta(S, ann)
            if b_.is_identity() and any(S.mul[a][b] == w or S.mul[b][a] == w for b in S.elements if b != w):
                bad.append(f"beta((a:o)) = id but {a} has zero divisors")
            if b_.is_full() and any(S.mul[s][a] != w or S.mul[a][s] != w for s in S.elements):
                bad.append(f"beta((a:o)) full but Sa or aS differs from {{o}} at a={a}")
    return bad


def simple_no_nilpotents(S):
    """Congruence-simple instances: w is 0_S or o_S, no zero divisors, and the bi-absorbing dichotomy."""
    if not _hyp(S) or not is_congruence_simple(S):
        return []
    rep = element_report(S)
    w = rep.mult_absorbing
    bad = []
    if w not in (rep.zero, rep.bi_absorbing):
        bad.append("w is neither 0_S nor o_S")
    T = [x for x in S.elements if x != w]
    if any(S.mul[a][b] == w for a in T for b in T):
        bad.append("zero divisors among non-absorbing elements")
    if rep.bi_absorbing is not None:
        t8 = are_isomorphic(S, two_element(8)) is not None
        sums = {S.add[x][y] for x in S.elements for y in S.elements}
        other = len(sums) == S.order and not any(S.mul[a][b] == w for a in T for b in T)
        if t8 == other:
            bad.append(f"bi-absorbing dichotomy: isomorphic to T8={t8}, S+S=S and TT in T={other}")
    return bad


ALL_CHECKS = {
    "absorbing w has w+w=w": absorbing_idempotent,
    "alpha over ideals": alpha_ideals,
    "beta over bi-ideals": beta_bi_ideals,
    "gamma/delta consequences": gamma_delta,
    "S+w structure": sum_with_absorbing,
    "annihilator ideals": annihilators,
    "simple without nilpotents": simple_no_nilpotents,
}


def violations(semirings, checks=ALL_CHECKS):
    out = []
    for S in semirings:
        for name, fn in checks.items():
            for msg in fn(S):
                out.append((name, S.signature(), msg))
    return out
