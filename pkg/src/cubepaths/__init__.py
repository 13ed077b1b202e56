"""Diametral paths in Fibonacci, Lucas and Alternate Lucas cubes.

Construct the cube families as induced subgraphs of the hypercube, count
and enumerate their diametral shortest paths, and verify that the counts
are Euler numbers (and their Lucas / Alternate Lucas variants) both by
brute force and through the explicit path/permutation bijections.
"""

from .bitcubes import (
    MAX_LENGTH,
    Block,
    CubeFamily,
    Decomposition,
    Vertex,
    cyclic_shift,
    fundamental_decomposition,
    generate_vertices,
    hamming_distance,
    is_member,
    neighbors,
)
from .bijection import (
    AlternateLucasImage,
    StepTable,
    alucas_path_to_permutation,
    alucas_permutation_to_path,
    check_shortest_path,
    lucas_odd_shift_transport,
    lucas_path_to_permutation,
    lucas_permutation_to_path,
    path_to_permutation,
    permutation_to_path,
)
from .errors import (
    CubeError,
    InvalidArgumentError,
    InvalidLengthError,
    InvalidPathError,
    InvalidPermutationError,
    InvalidVertexError,
)
from .euler import (
    EulerTable,
    count_class,
    enumerate_alternating,
    euler_numbers,
    euler_via_andre,
    is_alternating,
    is_circular_alternating,
    is_reverse_alternating,
)
from .metrics import (
    DiametralPair,
    alternate_lucas_pair_forms,
    antipode,
    bfs_distances,
    classify_alternate_lucas_pair,
    diameter,
    diametral_pairs,
    distance_matrix,
    expected_diameter,
    expected_diametral_pairs,
    fibonacci_diametral_pair,
    lucas_even_pair,
    lucas_odd_pair,
    make_pair,
)
from .pathcount import (
    count_all_diametral,
    count_shortest_paths,
    count_via_bfs_layers,
    enumerate_shortest_paths,
)

__version__ = "0.1.0"

__all__ = [
    "AlternateLucasImage",
    "Block",
    "CubeFamily",
    "CubeError",
    "Decomposition",
    "DiametralPair",
    "EulerTable",
    "InvalidArgumentError",
    "InvalidLengthError",
    "InvalidPathError",
    "InvalidPermutationError",
    "InvalidVertexError",
    "MAX_LENGTH",
    "StepTable",
    "Vertex",
    "alternate_lucas_pair_forms",
    "alucas_path_to_permutation",
    "alucas_permutation_to_path",
    "antipode",
    "bfs_distances",
    "check_shortest_path",
    "classify_alternate_lucas_pair",
    "count_all_diametral",
    "count_class",
    "count_shortest_paths",
    "count_via_bfs_layers",
    "cyclic_shift",
    "diameter",
    "diametral_pairs",
    "distance_matrix",
    "enumerate_alternating",
    "enumerate_shortest_paths",
    "euler_numbers",
    "euler_via_andre",
    "expected_diameter",
    "expected_diametral_pairs",
    "fibonacci_diametral_pair",
    "fundamental_decomposition",
    "generate_vertices",
    "hamming_distance",
    "is_alternating",
    "is_circular_alternating",
    "is_member",
    "is_reverse_alternating",
    "lucas_even_pair",
    "lucas_odd_pair",
    "lucas_odd_shift_transport",
    "lucas_path_to_permutation",
    "lucas_permutation_to_path",
    "make_pair",
    "neighbors",
    "path_to_permutation",
    "permutation_to_path",
]
