"""Weight games on graph boards.

Enumerate legal positions of placement games with fixed piece weights,
build the resulting legal complexes and f-vectors, evaluate closed-form
counts for paths, cycles, and complete graphs, and test f-vectors for
Kruskal-Katona feasibility.
"""

from .board import (
    Board,
    BoardSpecError,
    complete,
    connected_subsets,
    cycle,
    from_edge_list,
    is_connected_subset,
    load_board_file,
    parse_board,
    path,
)
from .compare import BoundRow, compare_f2, render_csv, sweep
from .complexes import (
    LegalComplex,
    all_complex_fvectors,
    f_vector,
    legal_complex,
    legal_positions,
)
from .formulas import (
    PairCounts,
    binom,
    complete_fk,
    complete_fk_equal,
    complete_fk_sandwich,
    complete_fk_terms,
    cycle_f1,
    cycle_f2,
    cycle_f2_parts,
    path_f1,
    path_f2,
    path_f2_parts,
    weight1_bound,
)
from .game import (
    BasicPosition,
    Player,
    Position,
    WeightGame,
    basic_positions,
    is_legal,
    max_pieces,
)
from .kruskal_katona import (
    CanonicalRep,
    canonical_rep,
    fvector_violation,
    is_valid_fvector,
    is_valid_fvector_via_iii,
    pseudopower,
)

__version__ = "0.1.0"

__all__ = [
    "Board",
    "BoardSpecError",
    "BasicPosition",
    "BoundRow",
    "CanonicalRep",
    "LegalComplex",
    "PairCounts",
    "Player",
    "Position",
    "WeightGame",
    "all_complex_fvectors",
    "basic_positions",
    "binom",
    "canonical_rep",
    "compare_f2",
    "complete",
    "complete_fk",
    "complete_fk_equal",
    "complete_fk_sandwich",
    "complete_fk_terms",
    "connected_subsets",
    "cycle",
    "cycle_f1",
    "cycle_f2",
    "cycle_f2_parts",
    "f_vector",
    "from_edge_list",
    "fvector_violation",
    "is_connected_subset",
    "is_legal",
    "is_valid_fvector",
    "is_valid_fvector_via_iii",
    "legal_complex",
    "legal_positions",
    "load_board_file",
    "max_pieces",
    "parse_board",
    "path",
    "path_f1",
    "path_f2",
    "path_f2_parts",
    "pseudopower",
    "render_csv",
    "sweep",
    "weight1_bound",
]
