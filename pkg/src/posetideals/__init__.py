"""Finite poset and lattice completions, with exhaustive small-scale checks
of the structure theorems they witness."""

from .algebra import (
    SemilatticeStructure,
    check_free_property,
    classify,
    semilattice_homs,
    subsemilattices,
    substructure,
)
from .completions import (
    FamilyPoset,
    chain_ideals,
    compact_elements,
    downsets,
    fdown,
    ideals,
    iterate_id,
    least_compact_above,
    n_compact_elements,
    principal_embedding,
    x_down,
)
from .morphisms import (
    BudgetExceeded,
    KurepaStep,
    KurepaTrace,
    MonotoneMap,
    are_isomorphic,
    canonical_form,
    canonical_key,
    exists_map,
    isomorphism,
    iter_maps,
    kurepa_chain,
    map_kind,
)
from .ordinals import (
    ChainDescriptor,
    CnfOrdinal,
    cnf_add,
    cnf_mul,
    cnf_parse,
    cnf_str,
    cofinality,
    id_order_type,
    is_limit,
    product_has_cofinal_chain,
)
from .poset import (
    CapacityExceeded,
    Poset,
    PosetError,
    adjoin_bounds,
    direct_product,
    disjoint_union,
    dual,
    from_up_rows,
    hasse_covers,
    validate_poset,
)
from .verification import (
    CheckReport,
    Corpus,
    build_atoms_lattice,
    build_chain_bundle,
    build_idemb_tower,
    check_acc,
    check_corollary_2_3_hypothesis,
    check_corollary_3_2,
    check_lemma_5_1,
    check_theorem_2_1,
    check_theorem_3_1,
    generate_corpus,
    kurepa_atoms_trace,
    run_suite,
)

__version__ = "0.1.0"
