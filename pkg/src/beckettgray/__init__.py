"""Beckett-Gray codes: generation, verification, canonicalization,
enumeration, tree-size estimation, stochastic hunting, and the two-stack
realization of the binary reflected Gray code."""

from .anneal import AnnealConfig, CompletionResult, HuntResult, anneal_partial, complete_backtrack, hunt
from .beckett import (
    BeckettClassification,
    BeckettKind,
    BeckettViolation,
    BeckettViolationError,
    classify_beckett,
    queue_trace,
)
from .canonical import (
    IsomorphismWitness,
    are_isomorphic_beckett,
    canonicalize,
    relabel_first_occurrence,
    reverse_seq,
    self_reverse_witness,
)
from .core import (
    GrayClassification,
    GrayKind,
    TransitionSequence,
    WordPath,
    apply_transitions,
    classify_gray,
    transitions_of,
)
from .estimate import EstimateReport, estimate_tree_size, exact_tree_size
from .fixtures import load_fixtures, self_check
from .search import (
    EnumerationReport,
    SearchConfig,
    enumerate_beckett,
    enumerate_gray_cycles_small,
    split_prefixes,
)
from .stacks import TwoStackState, brgc, is_two_stack_realizable, two_stack_trace

__all__ = [
    "AnnealConfig",
    "BeckettClassification",
    "BeckettKind",
    "BeckettViolation",
    "BeckettViolationError",
    "CompletionResult",
    "EnumerationReport",
    "EstimateReport",
    "GrayClassification",
    "GrayKind",
    "HuntResult",
    "IsomorphismWitness",
    "SearchConfig",
    "TransitionSequence",
    "TwoStackState",
    "WordPath",
    "anneal_partial",
    "apply_transitions",
    "are_isomorphic_beckett",
    "brgc",
    "canonicalize",
    "classify_beckett",
    "classify_gray",
    "complete_backtrack",
    "enumerate_beckett",
    "enumerate_gray_cycles_small",
    "estimate_tree_size",
    "exact_tree_size",
    "hunt",
    "is_two_stack_realizable",
    "load_fixtures",
    "queue_trace",
    "relabel_first_occurrence",
    "reverse_seq",
    "self_check",
    "self_reverse_witness",
    "split_prefixes",
    "transitions_of",
    "two_stack_trace",
]

__version__ = "0.1.0"
