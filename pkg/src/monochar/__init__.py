"""Character equivalence of finite monoids over arbitrary fields.

Exact, table-driven computations: Green's structure of idempotents and
maximal subgroups, character-equivalence classes over algebraically closed
fields, finite fields and the rationals, virtual-character certificates for
cyclic subsets, and rational zeta functions of regular cyclic languages.
"""

from .characters import (
    ClassFunction,
    MatrixRep,
    char_of_rep,
    cyclic_subset_check,
    indicator_virtual_certificate,
    natural_character,
    natural_rep,
    restrict_to_group,
    right_regular_rep,
    verify_character_identities,
)
from .equivalence import (
    ApproxWitness,
    EquivPartition,
    approx_test,
    equiv_closure,
    irr_count,
    k_conjugacy_classes,
    partition_from_approx,
    psi_bijection,
)
from .fields import FieldSpec, GaloisImage, galois_image, galois_image_reduce, lcm_p_regular_orders, parse_field
from .languages import Dfa, is_cyclic_language, parse_dfa, transition_monoid, word_count, zeta_report, zeta_truncated
from .monoid import (
    FiniteMonoid,
    GroupView,
    d_class_idempotent_reps,
    d_equivalent,
    group_isomorphism_from_witness,
    group_order,
    idempotents,
    index_period,
    is_p_regular,
    maximal_subgroup,
    monoid_from_table,
    monoid_from_transformations,
    omega,
    omega_plus_one,
    p_regular_part,
    parse_monoid,
)
from .series import RationalFunction, ZetaSeries, rational_reconstruct

__version__ = "0.1.0"
