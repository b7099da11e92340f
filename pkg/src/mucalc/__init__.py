"""Exact sigma- and mu-vectors, homology, bistellar walks and stackedness
certificates for finite simplicial complexes."""

from .bistellar import (
    BistellarMove,
    MoveLog,
    admits,
    applicable_moves,
    apply_move,
    g_update_check,
    tame_walk,
    walk_length,
)
from .complex import (
    SimplicialComplex,
    f_from_g,
    f_vector,
    from_facets,
    g_vector,
    induced,
    is_pseudomanifold,
    is_pure,
    is_two_neighbourly,
    join,
    link,
    simplex_boundary,
    simplex_closure,
    skeleton,
    standard_sphere,
)
from .homology import (
    FieldSpec,
    betti,
    betti_pair,
    betti_reduced,
    boundary_complex,
    induced_injective,
    induced_rank,
    is_closed_homology_manifold,
    is_homology_ball,
    is_homology_manifold_with_boundary,
    is_homology_sphere,
)
from .sigma import a_ell, mu_vector, mu_via_pairs, sigma_step, sigma_vector, track_a
from .stacked import (
    StackedCertificate,
    certify_stacked_manifold,
    certify_stacked_sphere,
    is_locally_stacked,
    max_complex_with_skeleton,
    transport_ball,
)

__version__ = "0.1.0"
