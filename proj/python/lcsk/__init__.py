"""Sparse solver for longest common subsequence in k-length blocks."""

from lcsk._core import (
    AlphabetChoice,
    ChainCheck,
    ChainSegment,
    GeneratorChoice,
    GeneratorKind,
    MatchPair,
    MemoryStats,
    Mode,
    RowStrategy,
    SolveResult,
    SolverConfig,
    UpdateRule,
    __version__,
    lcp_array,
    match_pairs,
    merge_chain_segments,
    oracle,
    solve,
    suffix_array,
)

__all__ = [
    "AlphabetChoice",
    "ChainCheck",
    "ChainSegment",
    "GeneratorChoice",
    "GeneratorKind",
    "MatchPair",
    "MemoryStats",
    "Mode",
    "RowStrategy",
    "SolveResult",
    "SolverConfig",
    "UpdateRule",
    "__version__",
    "lcp_array",
    "match_pairs",
    "merge_chain_segments",
    "oracle",
    "solve",
    "suffix_array",
]
