"""Exact, desk-scale verification of the iterated reduced bar construction."""

from .bar import (
    ArrowGrid,
    LaxReport,
    MultiArrow,
    ObjectGrid,
    WitnessReport,
    chi_swap_grid,
    default_grid,
    equation_witness,
    grid_witness,
    grids_equal,
    hexagon_check,
    hexagon_witness,
    lax_check,
    lemma_swap_check,
    multi_compose,
    multi_identity,
    omega,
    path_independence,
    phi,
    segal_check,
    symbolic_grid,
    w_basic,
    w_multi,
    w_shuffle,
)
from .chi import Mask, NatTuple, apply_mask, chi_general, chi_pair, identity_mask, mask_compose, mask_kron, mask_kron3
from .equations import ALL_IDS, EQ_VARS, equation_sides
from .model import (
    CorruptedIotaModel,
    FinArrow,
    FinSetSplitModel,
    FreeTermModel,
    NFoldModel,
    check_equation,
    eval_obj,
    eval_term,
    structural,
)
from .rewrite import TermEqualResult, term_equal
from .shuffle import (
    ColouredGenerator,
    ColouredShuffle,
    NormalizingPath,
    canonical_path,
    enumerate_paths,
    inner_power,
    inversion_count,
    next_swaps,
    outer_power,
    parse_shuffle,
    shuffle,
    shuffle_to_text,
)
from .simplicial import (
    BasicArrow,
    MonotoneMap,
    SimplicialWord,
    compose,
    degeneracy,
    equal,
    face,
    identity_arrow,
    identity_word,
    is_normal,
    normalize,
    normalize_trace,
    parse_word,
    random_word,
    segal_arrow,
    to_monotone,
    word,
    word_to_text,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
