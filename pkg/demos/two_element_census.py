# The eight two-element semirings with an absorbing element, found two ways:
# from the hand-written tables and from the enumerator.
from finsemiring import are_isomorphic, element_report, enumerate_semirings, two_element
from finsemiring.enumeration import SearchConstraints

T = {k: two_element(k) for k in range(1, 9)}

for k, S in T.items():
    r = element_report(S)
    print(f"T{k}  add={S.add}  mul={S.mul}  zero={r.zero}  o={r.bi_absorbing}  nilpotents={sorted(r.nilpotents)}")

found = enumerate_semirings(2, SearchConstraints(require_mult_absorbing=True))
print(len(found), "classes with an absorbing element")

for S in found:
    name = next(f"T{k}" for k, F in T.items() if are_isomorphic(S, F))
    print(" ", S.signature(), "->", name)

# only four of them have no non-trivial nilpotent and are congruence-simple
strict = enumerate_semirings(2, SearchConstraints(True, True, True))
print([next(f"T{k}" for k, F in T.items() if are_isomorphic(S, F)) for S in strict])
