"""Exact distance spectra of graphs via orbit-partition quotient matrices."""

from orbitspectra._kernels import backend_name
from orbitspectra.exactla import (
    IntMatrix,
    IntPolynomial,
    RationalVector,
    char_poly,
    det,
    eigen_multiplicity,
    integer_roots,
    kernel_basis,
    mat_vec,
    rank,
)
from orbitspectra.graphs import (
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    PairVertex,
    all_pairs_distances,
    are_isomorphic,
    build_circulant,
    build_complete,
    build_crown,
    build_cycle,
    build_johnson,
    build_lcr,
    build_line_graph,
    canonical_form,
    is_distance_regular,
    is_isomorphism,
    lcr_distance,
    pair_vertices,
)
from orbitspectra.perms import (
    GeneratorSet,
    OrbitPartition,
    Permutation,
    is_automorphism,
    is_vertex_transitive_under,
    lcr_automorphism_gens,
    lcr_stabilizer_gens,
    orbits,
    pair_action,
    parse_cycles,
    swap_action,
    symmetric_group_gens,
    two_point_stabilizer_gens,
)
from orbitspectra.spectral import (
    IntegralityReport,
    NonEquitablePartitionError,
    NotAnEigenvectorError,
    QuotientMatrix,
    Spectrum,
    VerificationError,
    distance_spectrum,
    is_distance_integral,
    lcr_quotient_closed_form,
    lift_eigenvector,
    permute_eigenvector,
    project_eigenvector,
    quotient_matrix,
    symmetrize_eigenvector,
    verify_lcr,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
