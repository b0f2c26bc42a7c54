import pytest

from finsemiring import cyclic_group, enumerate_semirings, two_element, v_of
from finsemiring.constructions import FiniteSemigroup
from finsemiring.enumeration import SearchConstraints

ABSORBING_NO_NIL = SearchConstraints(require_mult_absorbing=True, forbid_nontrivial_nilpotents=True)


@pytest.fixture(scope="session")
def T():
    return {k: two_element(k) for k in range(1, 9)}


@pytest.fixture(scope="session")
def vz2():
    return v_of(cyclic_group(2))


@pytest.fixture(scope="session")
def vz3():
    return v_of(cyclic_group(3))


@pytest.fixture(scope="session")
def fixtures(T, vz2, vz3):
    """Named semirings used across the property suites."""
    trivial = v_of(FiniteSemigroup(((0,),)))
    return {**{f"T{k}": S for k, S in T.items()}, "V(Z2)": vz2, "V(Z3)": vz3, "V(1)": trivial}


@pytest.fixture(scope="session")
def full_upto3():
    return [S for n in (1, 2, 3) for S in enumerate_semirings(n)]


@pytest.fixture(scope="session")
def hypothesis_upto4():
    return [S for n in (1, 2, 3, 4) for S in enumerate_semirings(n, ABSORBING_NO_NIL)]
