"""Sigma-invariants of right-angled Artin groups and Bestvina-Brady groups."""

from .bb import (
    BadSet,
    BBCharacter,
    BBFailure,
    ExtensionFamily,
    SpherePolyhedron,
    bb_finiteness,
    bb_sigma,
    critical_values,
    is_bad,
    minimal_bad_sets,
    polyhedron_contains,
    product_formula_predict,
    sigma1_complement,
    wreath_sufficient,
)
from .errors import (
    BNSRError,
    InvalidCharacterError,
    ParseError,
    PreconditionError,
    ResourceCapError,
)
from .graph import (
    EMPTY,
    FlagComplex,
    Graph,
    connected_components,
    flag_complex,
    full_subcomplex,
    link,
    parse_graph,
)
from .homology import (
    Answer,
    HomologyGroup,
    IntegerMatrix,
    TriState,
    boundary_matrix,
    is_k_acyclic,
    is_k_connected,
    pi1_trivial,
    reduced_homology,
    smith_normal_form,
)
from .raag import (
    DeadSimplexFailure,
    RaagCharacter,
    Verdict,
    dead_simplices,
    living_subcomplex,
    multipartite_oracle,
    raag_sigma,
)

__version__ = "0.1.0"
