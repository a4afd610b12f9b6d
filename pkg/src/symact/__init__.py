"""Finite monoid actions: completions, replacements, orbit categories, dynamics."""

from .completion import (
    GroupCompletion,
    SubgroupFamily,
    all_subgroups,
    factor_through_completion,
    group_completion,
    is_conjugacy_closed,
    is_subgroup,
    verify_universal_property,
)
from .dynamics import (
    DynMorphism,
    DynSystem,
    FunctionalGraph,
    ZSet,
    compose_dyn,
    cycle_type,
    eventual_image,
    limit_cycles,
    linv_nat,
    rinv_nat,
    transition_monoid,
    validate_dyn_morphism,
    validate_dyn_system,
    validate_graph,
    validate_zset,
    zset_isomorphism,
)
from .errors import (
    BadIdentity,
    CompatibilityViolated,
    CompletionMismatch,
    FamilyInvalid,
    IdentityLawViolated,
    IndexOutOfRange,
    MonoidMismatch,
    NotAGroup,
    NotASubgroup,
    NotAssociative,
    NotEquivariant,
    ObjectNotFound,
    ParseError,
    ShapeMismatch,
    SizeBoundExceeded,
    SubmonoidMismatch,
    SymactError,
    TargetNotGroup,
)
from .fileio import (
    Matrix,
    Report,
    Tokens,
    Workspace,
    parse_graph_text,
    parse_monoid_text,
    parse_mset_text,
    parse_report,
    parse_report_tree,
    render_graph_text,
    render_monoid_text,
    render_mset_text,
    render_report,
    render_report_tree,
)
from .monoid import (
    Congruence,
    FiniteMonoid,
    MonoidHom,
    Submonoid,
    all_submonoids,
    compose_hom,
    congruence_closure,
    enumerate_monoids,
    idempotents,
    index_period,
    is_group,
    is_hom,
    monoid_homs,
    quotient_monoid,
    same_monoid,
    submonoid,
    submonoid_generated,
    validate_monoid,
)
from .mset import (
    EqMap,
    FinMSet,
    MSetCongruence,
    coinduce,
    compose_eq,
    coproduct,
    coproduct_injections,
    equivariant_maps,
    find_isomorphism,
    fixed_points,
    identity_eq,
    induce,
    is_equivariant,
    is_symmetric,
    mset_congruence_closure,
    orbits,
    product,
    pushout,
    pushout_cocone,
    quotient_mset,
    regular_mset,
    restrict,
    trivial_mset,
    validate_eqmap,
    validate_mset,
)
from .orbit import (
    HomComparison,
    OrbitCategory,
    OrbitDiagram,
    OrbitObject,
    build_orbit_category,
    check_functoriality,
    hom_via_rinv,
    representable_diagram,
    upsilon,
    x_functor,
)
from .replacements import (
    FamilyEntry,
    FamilyZY,
    LinvResult,
    RinvResult,
    Verdict,
    VerdictEntry,
    adjunction_check_left,
    adjunction_check_right,
    generating_object,
    left_equivalence,
    linv,
    linv_rel,
    make_family,
    qstar,
    right_equivalence,
    rinv,
    rinv_bruteforce,
    rinv_rel,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
