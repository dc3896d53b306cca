"""Exact linear algebra behind two-row graphs: 1-block decomposition,
Hamiltonicity of row graphs, cohomology pairings of right-angled Artin
groups, and graph realization."""

from .blocks import (
    BlockPartition,
    OneBlock,
    OneTrack,
    TrackMember,
    TrackString,
    block_partition,
    complete_tracks,
    det_by_tracks,
    find_one_blocks,
    string_of,
    track_of_string,
    track_sum,
)
from .errors import (
    AssertionFailure,
    DegenerateGraph,
    DegenerateMatrix,
    DimensionMismatch,
    DivisionByZero,
    FieldMismatch,
    IncompleteTrack,
    IndexOutOfRange,
    NotSquare,
    ParseError,
    SingularBasis,
    SizeBound,
    SizeMismatch,
    TwoRowError,
    ZeroEntryInString,
)
from .fields import GF2, GF3, GF5, QQ, FieldKind, FieldSpec, Scalar, parse_field
from .hamilton import (
    PathWitness,
    graphs_isomorphic,
    hamiltonian_cycle,
    hamiltonian_path,
    traceable_ordering,
)
from .harness import (
    ExperimentConfig,
    ExperimentMode,
    ExperimentReport,
    run_experiment,
    sample_gl,
    trial_rng,
)
from .matrices import (
    ExactMatrix,
    RowPermutation,
    alternating_square_coefficient,
    canonical_json,
    consecutive_minor,
    determinant,
    determinant_generic,
    matrix_from_csv_text,
    permute_rows,
    rank,
    wrap_minor,
)
from .raag import (
    BasisMatrix,
    PairingTriple,
    SimplicialGraph,
    basis_hamiltonian_witness,
    basis_support_graph,
    cup_pairing,
    graph_from_text,
    graph_hamiltonicity,
    pair_vectors,
)
from .realize import RealizationResult, expected_columns, realize, verify_realization
from .rowgraph import (
    GraphFlavor,
    RowGraph,
    is_cyclically_square_traceable,
    is_square_traceable,
    null_connected,
    opp_graph,
    two_row_graph,
)

__version__ = "0.1.0"

__all__ = [
    "AssertionFailure",
    "BasisMatrix",
    "BlockPartition",
    "DegenerateGraph",
    "DegenerateMatrix",
    "DimensionMismatch",
    "DivisionByZero",
    "ExactMatrix",
    "ExperimentConfig",
    "ExperimentMode",
    "ExperimentReport",
    "FieldKind",
    "FieldMismatch",
    "FieldSpec",
    "GF2",
    "GF3",
    "GF5",
    "GraphFlavor",
    "IncompleteTrack",
    "IndexOutOfRange",
    "NotSquare",
    "OneBlock",
    "OneTrack",
    "PairingTriple",
    "ParseError",
    "PathWitness",
    "QQ",
    "RealizationResult",
    "RowGraph",
    "RowPermutation",
    "Scalar",
    "SimplicialGraph",
    "SingularBasis",
    "SizeBound",
    "SizeMismatch",
    "TrackMember",
    "TrackString",
    "TwoRowError",
    "ZeroEntryInString",
    "alternating_square_coefficient",
    "basis_hamiltonian_witness",
    "basis_support_graph",
    "block_partition",
    "canonical_json",
    "complete_tracks",
    "consecutive_minor",
    "cup_pairing",
    "det_by_tracks",
    "determinant",
    "determinant_generic",
    "expected_columns",
    "find_one_blocks",
    "graph_from_text",
    "graph_hamiltonicity",
    "graphs_isomorphic",
    "hamiltonian_cycle",
    "hamiltonian_path",
    "is_cyclically_square_traceable",
    "is_square_traceable",
    "matrix_from_csv_text",
    "null_connected",
    "opp_graph",
    "pair_vectors",
    "parse_field",
    "permute_rows",
    "rank",
    "realize",
    "run_experiment",
    "sample_gl",
    "string_of",
    "track_of_string",
    "track_sum",
    "traceable_ordering",
    "trial_rng",
    "two_row_graph",
    "verify_realization",
    "wrap_minor",
]
