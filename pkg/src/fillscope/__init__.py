"""fillscope: exact combinatorial isoperimetry for finite complexes.

Chain filling volumes, chain profiles, presentation Dehn functions, finite
covers, and quasi-equivalence fitting, all over exact integer and rational
arithmetic with witness-carrying solvers.
"""

from .chains import Chain, ChainComplex, boundary, l1_norm
from .dehn import (
    FVWordResult,
    RelatorMove,
    WordSearchLimits,
    apply_move,
    dehn_function,
    filling_volume_word,
    replay_certificate,
)
from .errors import (
    DimensionError,
    FillscopeError,
    InvariantError,
    ParseError,
    UnknownCellError,
)
from .filling import (
    EXACT,
    INFINITE,
    LOWER_BOUND,
    FillResult,
    SearchBudget,
    fill_upper_bound,
    fill_volume,
    fill_volume_bruteforce,
)
from .presentations import (
    EPSILON,
    Presentation,
    Word,
    abelianized_chain,
    cyclically_reduce,
    free_reduce,
    presentation_complex,
    word_from_tokens,
)
from .profiles import (
    INF,
    FitGrid,
    ProfileEntry,
    ProfileTable,
    QuasiFitWitness,
    chain_profile,
    quasi_bounded_fit,
    quasi_equivalent_fit,
    witness_holds,
)
from .simplicial import (
    PermutationAssignment,
    SimplicialComplex,
    barycentric_subdivide,
    build_cover,
    connected_components,
    cover_pushforward,
    edge_path_presentation,
    is_connected,
    spanning_tree,
    to_chain_complex,
)
from .snf import (
    LatticeSolver,
    SnfDecomposition,
    homology_summary,
    lattice_solver,
    smith_normal_form,
    solve_integer,
)

__version__ = "0.1.0"
