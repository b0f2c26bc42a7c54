"""Computing with finite semirings given by operation tables."""

from .canonical import are_isomorphic, canonical_form, canonical_labeling
from .classify import ClassificationVerdict, classify, conjecture_scan
from .congruence import (
    Partition,
    all_congruences,
    alpha,
    beta,
    delta,
    gamma,
    is_congruence,
    is_congruence_simple,
    principal_congruence,
)
from .constructions import (
    FiniteSemigroup,
    FiniteSemilattice,
    box_product,
    chain,
    cyclic_group,
    diamond,
    direct_product,
    end1,
    finite_field,
    g_of,
    quotient,
    semigroup_predicates,
    subsemiring_generated,
    two_element,
    v_of,
    y_of,
)
from .core import (
    AxiomReport,
    CapabilityError,
    ElementReport,
    FiniteSemiring,
    PreconditionError,
    TableError,
    element_report,
    has_nontrivial_nilpotent,
    n_multiple,
    power,
    verify_semiring,
)
from .enumeration import SearchConstraints, enumerate_semirings
from .fileformat import AlgebraFile, dump_algebra, parse_algebra
from .ideals import (
    annihilator,
    bi_ideal_generated,
    ideal_generated,
    is_bi_ideal,
    is_bi_ideal_simple,
    is_ideal,
    is_ideal_simple,
    is_left_ideal,
    is_right_ideal,
    ring_part,
)
