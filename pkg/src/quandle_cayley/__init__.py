"""Finite quandles from finite groups, their directed Cayley graphs, and
exhaustive verification of the structural facts relating the two.

The package has four layers: group tables (`groups`), quandle tables built
from them (`quandles`), the directed graph of right translations (`graphs`),
and checkers that compare computed graph structure against independently
computed algebraic predictions (`verify`).  `specs` holds the small text
grammar the command line uses to name groups, automorphisms, and quandles.
"""

from .groups import (
    AUTOMORPHISM_CAP,
    Automorphism,
    CosetPartition,
    FiniteGroup,
    Subgroup,
    abelian_group_types,
    commutator_subgroup_with,
    conjugacy_classes,
    cosets,
    enumerate_automorphisms,
    fixed_point_subgroup,
    identity_automorphism,
    image_id_minus_t,
    inner_automorphism,
    is_normal,
    make_abelian,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_symmetric,
    matrix_automorphism,
    negation_automorphism,
    subgroup_generated,
)
from .quandles import (
    AxiomReport,
    AxiomViolation,
    PermGroup,
    Quandle,
    RightTranslation,
    alexander_quandle,
    conjugation_quandle,
    core_quandle,
    dihedral_quandle,
    forward_orbit,
    generalized_alexander_quandle,
    inner_group,
    is_involutory,
    quandle_from_json,
    quandle_to_json,
    trivial_quandle,
    verify_quandle_axioms,
)
from .graphs import (
    ComponentDecomposition,
    DirectedGraph,
    build_cayley_graph,
    complete_graph,
    component_diameter,
    degrees,
    export_graph,
    find_isomorphism,
    graph_from_json,
    induced_subgraph,
    is_complete,
    is_edgeless,
    is_isomorphic,
    is_symmetric,
    strongly_connected_components,
    takasaki_z_edge,
    takasaki_z_window,
    weakly_connected_components,
)
from .specs import (
    GroupSpec,
    QuandleSpec,
    SpecParseError,
    build_group,
    build_quandle,
    group_from_string,
    make_quandle_spec,
    parse_group_spec,
    parse_quandle_string,
    resolve_automorphism,
)
from .verify import (
    CHECK_IDS,
    SuiteConfig,
    VerificationReport,
    format_reports,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "AUTOMORPHISM_CAP",
    "Automorphism",
    "AxiomReport",
    "AxiomViolation",
    "CHECK_IDS",
    "ComponentDecomposition",
    "CosetPartition",
    "DirectedGraph",
    "FiniteGroup",
    "GroupSpec",
    "PermGroup",
    "Quandle",
    "QuandleSpec",
    "RightTranslation",
    "SpecParseError",
    "Subgroup",
    "SuiteConfig",
    "VerificationReport",
    "abelian_group_types",
    "alexander_quandle",
    "build_cayley_graph",
    "build_group",
    "build_quandle",
    "commutator_subgroup_with",
    "complete_graph",
    "component_diameter",
    "conjugacy_classes",
    "conjugation_quandle",
    "core_quandle",
    "cosets",
    "degrees",
    "dihedral_quandle",
    "enumerate_automorphisms",
    "export_graph",
    "find_isomorphism",
    "fixed_point_subgroup",
    "format_reports",
    "forward_orbit",
    "generalized_alexander_quandle",
    "graph_from_json",
    "group_from_string",
    "identity_automorphism",
    "image_id_minus_t",
    "induced_subgraph",
    "inner_automorphism",
    "inner_group",
    "is_complete",
    "is_edgeless",
    "is_involutory",
    "is_isomorphic",
    "is_normal",
    "is_symmetric",
    "make_abelian",
    "make_cyclic",
    "make_dihedral",
    "make_direct_product",
    "make_quandle_spec",
    "make_symmetric",
    "matrix_automorphism",
    "negation_automorphism",
    "parse_group_spec",
    "parse_quandle_string",
    "quandle_from_json",
    "quandle_to_json",
    "resolve_automorphism",
    "run_suite",
    "strongly_connected_components",
    "subgroup_generated",
    "takasaki_z_edge",
    "takasaki_z_window",
    "trivial_quandle",
    "verify_quandle_axioms",
    "weakly_connected_components",
]
