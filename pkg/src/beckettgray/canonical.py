"""Isomorphism handling for Beckett-Gray codes and general cyclic Gray codes.

Beckett canonicalization quotients by bit-position relabeling and by
reversal only; XOR-ing a fixed word onto every code word can destroy the
queue discipline, so word addition never appears in Beckett witnesses.
The self-reverse checker for general cyclic Gray codes does search word
additions (optionally) and rotations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .core import (
    GrayKind,
    TransitionSequence,
    WordPath,
    classify_gray,
    transitions_of,
)

SELF_REVERSE_MAX_BITS = 8


class IncompleteAlphabetError(ValueError):
    """A relabeling was requested for a sequence missing some bit position."""


class IncomparableCodesError(ValueError):
    """Isomorphism was tested between codes of different n or mode."""


@dataclass(frozen=True)
class IsomorphismWitness:
    """A concrete map taking one code to another (or to its own reversal)."""

    rho: tuple[int, ...]  # bit-position relabeling, rho[old] = new
    reversed: bool
    added_word: Optional[int] = None  # general-Gray checks only
    rotation: Optional[int] = None    # cyclic general-Gray checks only


def relabel_first_occurrence(seq: TransitionSequence) -> TransitionSequence:
    """Relabel symbols to 0,1,2,... in order of first occurrence.

    The result is the lexicographically least image of ``seq`` over all n!
    relabelings (a restricted-growth string).
    """
    mapping: dict[int, int] = {}
    out = []
    for s in seq.symbols:
        if s not in mapping:
            mapping[s] = len(mapping)
        out.append(mapping[s])
    if len(mapping) != seq.n:
        missing = sorted(set(range(seq.n)) - set(mapping))
        raise IncompleteAlphabetError(f"positions {missing} never occur")
    return TransitionSequence(seq.n, tuple(out))


def reverse_seq(seq: TransitionSequence) -> TransitionSequence:
    """Reverse the transition sequence (the time reversal of the code)."""
    return TransitionSequence(seq.n, seq.symbols[::-1])


def canonicalize(seq: TransitionSequence) -> TransitionSequence:
    """Lexicographically least zero-anchored image under relabeling and reversal.

    The reversed transition string, replayed from the all-zero word, is
    always a Beckett code for cyclic inputs (the queue starts and ends
    empty) but not necessarily for open ones, where the reversed run
    would begin with a non-empty stage.  The reversal candidate therefore
    participates only when it is itself a valid zero-anchored Beckett
    code, which keeps canonicalize closed over actual codes.
    """
    from .beckett import BeckettKind, classify_beckett

    forward = relabel_first_occurrence(seq)
    backward = relabel_first_occurrence(reverse_seq(seq))
    kind = classify_beckett(backward).kind
    if kind in (BeckettKind.OPEN, BeckettKind.CYCLIC):
        return min(forward, backward, key=lambda s: s.symbols)
    return forward


def _match_relabeling(
    a: tuple[int, ...], b: tuple[int, ...], n: int
) -> Optional[tuple[int, ...]]:
    """Find rho with rho[a[i]] == b[i] for all i, or None."""
    rho: list[int] = [-1] * n
    used = [False] * n
    for x, y in zip(a, b):
        if rho[x] == -1:
            if used[y]:
                return None
            rho[x] = y
            used[y] = True
        elif rho[x] != y:
            return None
    if -1 in rho:
        return None
    return tuple(rho)


def are_isomorphic_beckett(
    a: TransitionSequence, b: TransitionSequence
) -> Optional[IsomorphismWitness]:
    """Witness taking complete Beckett-Gray code ``a`` to ``b``, if any.

    Tries the non-reversed map first, so isomorphic-and-equal inputs get
    the identity witness.
    """
    if a.n != b.n:
        raise IncomparableCodesError(f"n mismatch: {a.n} vs {b.n}")
    if len(a) != len(b):
        raise IncomparableCodesError(f"mode mismatch: lengths {len(a)} vs {len(b)}")
    if canonicalize(a).symbols != canonicalize(b).symbols:
        return None
    for rev in (False, True):
        cand = a.symbols[::-1] if rev else a.symbols
        rho = _match_relabeling(cand, b.symbols, a.n)
        if rho is not None:
            return IsomorphismWitness(rho=rho, reversed=rev)
    return None


def _cyclic_words(path: WordPath) -> list[int]:
    """Validate a complete cyclic Gray code and return one period of words."""
    seq = transitions_of(path)
    if path.words[0] != 0:
        raise ValueError("cyclic word path must be anchored at the all-zero word")
    if classify_gray(seq).kind is not GrayKind.CYCLIC:
        raise ValueError("word path is not a complete cyclic Gray code")
    return list(path.words[:-1])


def self_reverse_witness(
    path: WordPath, allow_addition: bool
) -> Optional[IsomorphismWitness]:
    """Search for an isomorphism taking a cyclic Gray code to its reversal.

    Tries every bit relabeling (lexicographic order) and every rotation
    (ascending); the added word, when permitted, is forced by the first
    aligned pair, so it is derived rather than enumerated.
    """
    n = path.n
    if n > SELF_REVERSE_MAX_BITS:
        raise ValueError(f"self-reverse search limited to n <= {SELF_REVERSE_MAX_BITS}")
    cycle = _cyclic_words(path)
    size = len(cycle)
    rev = [cycle[(-i) % size] for i in range(size)]
    for perm in itertools.permutations(range(n)):
        table = [0] * size
        for w in range(size):
            img = 0
            for p in range(n):
                if w >> p & 1:
                    img |= 1 << perm[p]
            table[w] = img
        for r in range(size):
            # rho(cycle[0]) == rho(0) == 0, so the added word is rev[r]
            added = rev[r]
            if added and not allow_addition:
                continue
            ok = True
            for i in range(size):
                if table[cycle[i]] ^ added != rev[(i + r) % size]:
                    ok = False
                    break
            if ok:
                return IsomorphismWitness(
                    rho=perm,
                    reversed=True,
                    added_word=added if added else None,
                    rotation=r,
                )
    return None
