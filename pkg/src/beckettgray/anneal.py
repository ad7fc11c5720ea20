"""Stochastic hunting for large-n codes: anneal long partials, then backtrack.

Simulated annealing grows long Beckett-consistent partial sequences
(energy is minus the length; a move cuts a random suffix and regrows
randomly until stuck).  Promising prefixes seed a deterministic
backtracking completion.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Optional

from .core import TransitionSequence
from .search import SearchState

TEMPERATURE_FLOOR = 0.05


@dataclass(frozen=True)
class AnnealConfig:
    n: int
    mode: str = "cyclic"  # cyclic | open
    initial_temperature: float = 2.0
    cooling_factor: float = 0.995
    steps_per_temperature: int = 200
    max_backtrack_cut: int = 12
    # default 5/8 of the word count: short enough that attempts stay
    # millisecond-scale, long enough that completion subtrees are searchable
    seed_handoff_length: Optional[int] = None
    completion_budget: Optional[int] = 300_000  # nodes per completion attempt
    restarts: int = 30_000
    rng_seed: int = 0
    # annealing stops early once a partial at least this long is seen;
    # None runs the full cooling schedule
    target_length: Optional[int] = None

    def __post_init__(self):
        if self.mode not in ("cyclic", "open"):
            raise ValueError(f"bad mode {self.mode!r}")
        if not 0.0 < self.cooling_factor < 1.0:
            raise ValueError("cooling_factor must be in (0, 1)")

    @property
    def handoff(self) -> int:
        if self.seed_handoff_length is not None:
            return self.seed_handoff_length
        if self.n < 3:
            return (1 << self.n) - 1
        return 5 << (self.n - 3)

    @property
    def complete_length(self) -> int:
        return (1 << self.n) - (0 if self.mode == "cyclic" else 1)


@dataclass
class HuntResult:
    found: Optional[TransitionSequence]
    best_partial_length: int
    attempts: int
    elapsed: float
    rng_seed: int
    winning_seed: Optional[int] = None


@dataclass
class CompletionResult:
    found: Optional[TransitionSequence]
    proven_impossible: bool
    nodes: int = 0


def _replay(n: int, symbols: list[int]) -> SearchState:
    state = SearchState(n)
    for s in symbols:
        if not state.push(s):
            raise ValueError("sequence is not Beckett-consistent")
    return state


def _grow_random(state: SearchState, rng: random.Random, stop_at: int) -> None:
    """Extend with uniformly random valid transitions until stuck."""
    while len(state.seq) < stop_at:
        children = state.children(restricted_growth=False)
        if not children:
            return
        state.push(rng.choice(children))


def anneal_partial(config: AnnealConfig) -> TransitionSequence:
    """Grow a long Beckett-consistent partial sequence by annealing.

    Every intermediate state is a valid partial code: moves cut a random
    suffix and regrow greedily, so no penalty terms are needed.
    Deterministic given ``config.rng_seed``.
    """
    n = config.n
    rng = random.Random(config.rng_seed)
    target = config.complete_length
    stop_len = config.target_length or target

    current = SearchState(n)
    _grow_random(current, rng, target)
    best = list(current.seq)

    temperature = config.initial_temperature
    while temperature > TEMPERATURE_FLOOR and len(best) < stop_len:
        for _ in range(config.steps_per_temperature):
            cur_len = len(current.seq)
            if cur_len >= target:
                break
            cut = rng.randint(1, min(config.max_backtrack_cut, max(cur_len, 1)))
            proposal = _replay(n, current.seq[: max(0, cur_len - cut)])
            _grow_random(proposal, rng, target)
            new_len = len(proposal.seq)
            if new_len >= cur_len or rng.random() < math.exp(
                (new_len - cur_len) / temperature
            ):
                current = proposal
            if len(current.seq) > len(best):
                best = list(current.seq)
                if len(best) >= stop_len:
                    break
        temperature *= config.cooling_factor
    return TransitionSequence(n, tuple(best))


def complete_backtrack(
    prefix: TransitionSequence,
    mode: str = "cyclic",
    budget: Optional[int] = None,
) -> CompletionResult:
    """Exhaustive lexicographic DFS over extensions of ``prefix``.

    No restricted-growth pruning: the prefix already fixes the labeling.
    Returns the first completion in lexicographic order, or reports
    whether absence was proven or merely budgeted out.
    """
    if mode not in ("cyclic", "open"):
        raise ValueError(f"bad mode {mode!r}")
    n = prefix.n
    target = (1 << n) - (0 if mode == "cyclic" else 1)
    try:
        state = SearchState.from_prefix(n, prefix)
    except ValueError:
        # the prefix itself revisits a word or breaks the queue discipline
        return CompletionResult(found=None, proven_impossible=True)
    result = CompletionResult(found=None, proven_impossible=False)

    def dfs() -> bool:
        result.nodes += 1
        if budget is not None and result.nodes > budget:
            raise TimeoutError
        depth = len(state.seq)
        if depth == target:
            if mode == "cyclic" or state.visited_count == (1 << n):
                result.found = state.sequence()
                return True
            return False
        if depth > target:
            return False
        for p in state.children(restricted_growth=False):
            saved = (state.word, state.visited, state.visited_count, state.used)
            popped_front = state.queue[0] if state.word >> p & 1 else None
            state.push(p)
            if dfs():
                return True
            state.seq.pop()
            if popped_front is None:
                state.queue.pop()
            else:
                state.queue.insert(0, popped_front)
            state.word, state.visited, state.visited_count, state.used = saved
        return False

    try:
        found = dfs()
        result.proven_impossible = not found
    except TimeoutError:
        pass
    return result


def hunt(config: AnnealConfig) -> HuntResult:
    """Anneal, truncate to the handoff length, complete by backtracking.

    Restarts use seeds derived from ``config.rng_seed``; the result
    records the seed of the winning attempt.
    """
    start = time.monotonic()
    best_partial = 0
    base = config.rng_seed
    for attempt in range(config.restarts):
        seed = base * 1_000_003 + attempt
        attempt_config = AnnealConfig(
            n=config.n,
            mode=config.mode,
            initial_temperature=config.initial_temperature,
            cooling_factor=config.cooling_factor,
            steps_per_temperature=config.steps_per_temperature,
            max_backtrack_cut=config.max_backtrack_cut,
            seed_handoff_length=config.seed_handoff_length,
            completion_budget=config.completion_budget,
            restarts=1,
            rng_seed=seed,
            target_length=config.target_length or config.handoff,
        )
        partial = anneal_partial(attempt_config)
        best_partial = max(best_partial, len(partial))
        if len(partial) == config.complete_length:
            # the annealer itself finished; verify via replay and return
            return HuntResult(
                found=partial,
                best_partial_length=best_partial,
                attempts=attempt + 1,
                elapsed=time.monotonic() - start,
                rng_seed=base,
                winning_seed=seed,
            )
        seed_prefix = TransitionSequence(
            config.n, partial.symbols[: min(config.handoff, len(partial))]
        )
        completion = complete_backtrack(
            seed_prefix, config.mode, config.completion_budget
        )
        if completion.found is not None:
            return HuntResult(
                found=completion.found,
                best_partial_length=max(best_partial, len(completion.found)),
                attempts=attempt + 1,
                elapsed=time.monotonic() - start,
                rng_seed=base,
                winning_seed=seed,
            )
    return HuntResult(
        found=None,
        best_partial_length=best_partial,
        attempts=config.restarts,
        elapsed=time.monotonic() - start,
        rng_seed=base,
    )
