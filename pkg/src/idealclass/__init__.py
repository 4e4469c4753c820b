"""Ideal classification in the 2-absorbing primary hierarchy over finite rings and Z."""

from .classify import (
    ClassificationReport,
    classify,
    is_divided_prime,
    is_maximal,
    is_primary,
    is_prime,
    is_special,
    is_two_absorbing,
    is_two_absorbing_primary,
    main1_condition,
    min_exponents,
    radical_nilpotency,
    radical_of,
    special_condition,
    uniformly_primary_condition,
    uniformly_primary_ord,
    uniformly_two_ap_ord,
)
from .config import DEFAULT_CAPS, Caps
from .errors import (
    AxiomError,
    BridgeDisagreementError,
    CapExceededError,
    ExprError,
    IdealclassError,
    OutOfScopeError,
    RingFormatError,
    RingMismatchError,
)
from .ideals import (
    Ideal,
    IdealLattice,
    bracket_power,
    colon_elem,
    colon_ideal,
    enumerate_ideals,
    format_ideal,
    generate,
    intersect_ideals,
    is_irreducible,
    minimal_primes_over,
    parse_ideal,
    power_ideal,
    product_ideals,
    radical_ideal,
    sum_ideals,
    unit_ideal,
    z_set,
    zero_ideal,
)
from .rings import (
    Idealization,
    LocalizationResult,
    Modular,
    MultiplicativeSet,
    PolyQuotient,
    Product,
    Ring,
    RingHom,
    Table,
    build_ring,
    crt_iso,
    diagonal_embed,
    load_table_json,
    localize_modular,
    multiplicative_set,
    parse_ring,
    projection,
    quotient_mod,
)
from .theorems import (
    OUT_OF_SCOPE,
    REGISTRY,
    Corpus,
    Predicate,
    TheoremCheckResult,
    build_corpus,
    definitional_two_ap,
    list_theorems,
    search_ideals,
    symmetrized_two_ord,
    verify_all,
    verify_theorem,
)
from .zideals import (
    FactoredInteger,
    ZClassification,
    classify_z,
    closed_form_report,
    colon_z,
    intersect_z,
    product_z,
    radical_z,
)

__version__ = "0.1.0"
