# Congruence lattices, principal congruences and the named congruences
# on a small example.
from finsemiring import (
    all_congruences,
    alpha,
    beta,
    cyclic_group,
    delta,
    direct_product,
    gamma,
    is_congruence_simple,
    principal_congruence,
    quotient,
    two_element,
    v_of,
)

V = v_of(cyclic_group(2))  # elements 0, 1 form Z2, element 2 is absorbing
print("V(Z2) simple:", is_congruence_simple(V))

# a product is never simple, the projections give congruences
P = direct_product(two_element(6), two_element(8))
for p in all_congruences(P):
    print(p.blocks())

print("least congruence joining 0 and 1:", principal_congruence(P, 0, 1).blocks())

I = {0, 1}  # an ideal of P
print("alpha:", alpha(P, I).blocks())
print("beta :", beta(P, {0, 1}).blocks())
print("gamma(2):", gamma(P, 2).blocks())
print("delta:", delta(P).blocks())

Q = quotient(P, principal_congruence(P, 0, 1))
print("quotient order", Q.order, "add", Q.add, "mul", Q.mul)
