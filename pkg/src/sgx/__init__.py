"""Finite semigroup toolkit: acts, tensor products, Morita semigroups,
Rees matrix covers and dual pairs, with corpus-wide theorem verification."""

from .acts import (
    ActMorphism,
    Biact,
    LeftAct,
    RightAct,
    check_morphism,
    enumerate_endomorphisms,
    is_unitary,
    make_biact,
    make_left_act,
    make_right_act,
    regular_biact,
    regular_left_act,
    regular_right_act,
)
from .corpus import (
    Corpus,
    are_isomorphic,
    canonical_form,
    corpus_up_to,
    count_semigroups_naive,
    enumerate_semigroups,
    find_counterexample,
)
from .dualpairs import (
    AdjointMonoid,
    Bracket,
    BracketCover,
    BracketSemigroup,
    Pair,
    adjoint_monoid,
    bracket,
    bracket_cover,
    bracket_semigroup,
    check_dual_pair_isomorphism,
    check_rank_one_brackets,
    check_tensor_units,
    dual_witnesses,
    is_dual_pair,
    rank_one_ideal,
)
from .morita import (
    ContextMorphisms,
    ContextReport,
    MoritaContext,
    MoritaSemigroup,
    Pairing,
    build_morita_semigroup,
    canonical_context,
    context_induced_semigroup_morphisms,
    make_context,
    morita_semigroup,
    multiplication_pairing,
    verify_bijective_context,
    verify_context,
)
from .morphisms import (
    MorphismQuality,
    SemigroupMorphism,
    act_to_semigroup,
    action_from_local_isomorphism,
    identity_morphism,
    is_almost_injective,
    morphism_quality,
    principal_subsemigroup,
    regular_elements,
    restricted_injectivity_report,
)
from .rees import (
    ReesCover,
    ReesMatrixSemigroup,
    cover_injectivity,
    rees_construct,
    rees_cover,
    rees_factorizable,
    tensor_base_cover,
)
from .semigroups import (
    ClassReport,
    FiniteSemigroup,
    classify,
    cyclic_group,
    has_common_weak_local_units,
    has_local_units,
    has_weak_local_units,
    idempotents,
    is_factorizable,
    left_zero,
    make_semigroup,
    null_semigroup,
    right_zero,
    subsemigroup_closure,
    trivial,
)
from .suite import (
    THEOREM_IDS,
    SuiteOptions,
    VerificationReport,
    render_report,
    run_theorem_suite,
    summarize,
)
from .tensor import (
    TensorProduct,
    TossingStep,
    TossingWitness,
    induced_map,
    is_firm,
    replay_tossing,
    tensor_product,
    tossing_witness,
)

__version__ = "0.1.0"
