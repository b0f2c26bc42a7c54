# V(G), box products and endomorphism semirings of semilattices.
from finsemiring import (
    are_isomorphic,
    box_product,
    chain,
    classify,
    cyclic_group,
    diamond,
    element_report,
    end1,
    g_of,
    has_nontrivial_nilpotent,
    is_congruence_simple,
    subsemiring_generated,
    two_element,
    v_of,
    y_of,
)

for n in (1, 2, 3, 4):
    V = v_of(cyclic_group(n))
    print(f"V(Z{n}): order {V.order}, simple {is_congruence_simple(V)}, status {classify(V).conjecture_status}")

# T6 is a unit for the box product
T6 = two_element(6)
S = v_of(cyclic_group(3))
print("T6 box V(Z3) = V(Z3):", are_isomorphic(box_product(T6, S), S) is not None)

for name, L in (("2-chain", chain(2)), ("3-chain", chain(3)), ("4-chain", chain(4)), ("diamond", diamond())):
    E = end1(L)
    o = element_report(E.semiring).bi_absorbing
    print(f"{name}: End1 has {E.semiring.order} maps, o = {E.maps[o]}")
    for label, X in (("Y", y_of(E)), ("G", g_of(E))):
        sub, members = subsemiring_generated(E.semiring, X)
        print(f"   {label}(L): order {sub.order}, simple {is_congruence_simple(sub)}, nilpotent {has_nontrivial_nilpotent(sub)}")
