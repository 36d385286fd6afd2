"""Van Kampen obstruction for EMBED(k, 2k).

Example:
    >>> from simplexembed.complex import complete_graph
    >>> from simplexembed.vankampen import decide_embed_k_2k
    >>> decide_embed_k_2k(complete_graph(range(1, 6)), 1).value
    'NotEmbeddable'
"""

from simplexembed.vankampen.formatters import (
    VanKampenTextFormatter,
    save_obstruction_dump,
)
from simplexembed.vankampen.models import (
    ObstructionDump,
    ObstructionError,
    ObstructionSymmetryError,
    ObstructionSystem,
    PairIndex,
    VanKampenReport,
)
from simplexembed.vankampen.obstruction import (
    alternation,
    analyze,
    build_obstruction_system,
    check_symmetry,
    decide_embed_k_2k,
    finger_move_columns,
    finger_move_matrix,
    o_gamma,
    obstruction_vanishes,
    obstruction_vanishes_mod2,
    pair_index,
)

__all__ = [
    "ObstructionDump",
    "ObstructionError",
    "ObstructionSymmetryError",
    "ObstructionSystem",
    "PairIndex",
    "VanKampenReport",
    "VanKampenTextFormatter",
    "alternation",
    "analyze",
    "build_obstruction_system",
    "check_symmetry",
    "decide_embed_k_2k",
    "finger_move_columns",
    "finger_move_matrix",
    "o_gamma",
    "obstruction_vanishes",
    "obstruction_vanishes_mod2",
    "pair_index",
    "save_obstruction_dump",
]
