"""Exhaustive DFS enumeration of Beckett-Gray codes with isomorph rejection.

The search tree: nodes are Beckett-consistent partial transition
sequences anchored at the all-zero word.  Children, in ascending symbol
order, either flip a 0-bit to 1 (enqueue) or flip the queue front to 0
(dequeue); a child is pruned when its word was already visited, except
that a dequeue back to all-zero is kept when it closes a full cycle.
Relabeling isomorphs are pruned on the fly by restricted growth (a fresh
bit position may enter only as the smallest unused one); reversal
isomorphs are rejected at completion time.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .canonical import relabel_first_occurrence, reverse_seq
from .core import TransitionSequence, WordPath

Sink = Callable[[str, TransitionSequence], None]


class TruncatedSearchError(RuntimeError):
    """A budgeted search ran out before completing."""


@dataclass(frozen=True)
class SearchConfig:
    n: int
    mode: str = "both"  # cyclic | open | both
    prefix: Optional[TransitionSequence] = None
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None
    emit: str = "canonical-codes"  # count-only | canonical-codes | all-codes

    def __post_init__(self):
        if self.mode not in ("cyclic", "open", "both"):
            raise ValueError(f"bad mode {self.mode!r}")
        if self.emit not in ("count-only", "canonical-codes", "all-codes"):
            raise ValueError(f"bad emit {self.emit!r}")
        if self.prefix is not None and self.prefix.n != self.n:
            raise ValueError("prefix n mismatch")


@dataclass
class EnumerationReport:
    n: int
    mode: str
    count_cyclic: int = 0
    count_open_total: int = 0
    count_open_strict: int = 0
    nodes_visited: int = 0
    elapsed: float = 0.0
    truncated: bool = False

    def merge(self, other: "EnumerationReport") -> "EnumerationReport":
        if (self.n, self.mode) != (other.n, other.mode):
            raise ValueError("cannot merge reports for different searches")
        return EnumerationReport(
            n=self.n,
            mode=self.mode,
            count_cyclic=self.count_cyclic + other.count_cyclic,
            count_open_total=self.count_open_total + other.count_open_total,
            count_open_strict=self.count_open_strict + other.count_open_strict,
            nodes_visited=self.nodes_visited + other.nodes_visited,
            elapsed=self.elapsed + other.elapsed,
            truncated=self.truncated or other.truncated,
        )


@dataclass
class SearchState:
    """Mutable DFS state; replayable from any Beckett-consistent prefix."""

    n: int
    word: int = 0
    visited: int = 1  # bitmap over words
    visited_count: int = 1
    queue: list[int] = field(default_factory=list)
    used: int = 0  # distinct symbols used so far (restricted growth frontier)
    seq: list[int] = field(default_factory=list)

    @classmethod
    def from_prefix(cls, n: int, prefix: Optional[TransitionSequence]) -> "SearchState":
        state = cls(n)
        if prefix is not None:
            for s in prefix.symbols:
                if not state.push(s):
                    raise ValueError(
                        f"prefix is not Beckett-consistent at symbol index "
                        f"{len(state.seq)}"
                    )
        return state

    def children(self, restricted_growth: bool = True) -> list[int]:
        """Legal next symbols in ascending order."""
        out = []
        word = self.word
        limit = self.used + 1 if restricted_growth else self.n
        front = self.queue[0] if self.queue else -1
        full = self.visited_count == (1 << self.n)
        for p in range(min(limit, self.n)):
            if word >> p & 1:
                continue
            if not self.visited >> (word | 1 << p) & 1:
                out.append(p)
        if front >= 0:
            new = word ^ (1 << front)
            if (new == 0 and full) or not self.visited >> new & 1:
                out.append(front)
        out.sort()
        return out

    def push(self, p: int) -> bool:
        """Apply symbol ``p`` if legal (ignoring restricted growth); else False."""
        word = self.word
        if word >> p & 1:
            if not self.queue or self.queue[0] != p:
                return False
            new = word ^ (1 << p)
            if self.visited >> new & 1 and not (
                new == 0 and self.visited_count == (1 << self.n)
            ):
                return False
            self.queue.pop(0)
            self.word = new
            if not self.visited >> new & 1:
                self.visited |= 1 << new
                self.visited_count += 1
        else:
            new = word | (1 << p)
            if self.visited >> new & 1:
                return False
            self.queue.append(p)
            self.word = new
            self.visited |= 1 << new
            self.visited_count += 1
        if p >= self.used:
            self.used = p + 1
        self.seq.append(p)
        return True

    def sequence(self) -> TransitionSequence:
        return TransitionSequence(self.n, tuple(self.seq))


def _is_reversal_canonical(seq: TransitionSequence) -> bool:
    """True when ``seq`` (already restricted-growth) is the class least.

    The reversed relabeling only competes when it is itself a valid
    zero-anchored Beckett code, i.e. appears elsewhere in this tree.
    """
    from .beckett import BeckettKind, classify_beckett

    backward = relabel_first_occurrence(reverse_seq(seq))
    if seq.symbols <= backward.symbols:
        return True
    return classify_beckett(backward).kind not in (BeckettKind.OPEN, BeckettKind.CYCLIC)


def enumerate_beckett(
    config: SearchConfig, sink: Optional[Sink] = None
) -> EnumerationReport:
    """Depth-first lexicographic enumeration; exact counts and node count.

    The tree itself is mode-independent; ``config.mode`` selects which
    completions are counted and emitted.
    """
    n = config.n
    total = 1 << n
    report = EnumerationReport(n=n, mode=config.mode)
    want_cyclic = config.mode in ("cyclic", "both")
    want_open = config.mode in ("open", "both")
    deadline = None if config.time_limit is None else time.monotonic() + config.time_limit
    start = time.monotonic()

    state = SearchState.from_prefix(n, config.prefix)
    root_len = len(state.seq)

    def emit(kind: str) -> None:
        if sink is None or config.emit == "count-only":
            return
        sink(kind, state.sequence())

    def visit() -> None:
        report.nodes_visited += 1
        if config.node_limit is not None and report.nodes_visited > config.node_limit:
            raise TruncatedSearchError
        if deadline is not None and report.nodes_visited % 4096 == 0:
            if time.monotonic() > deadline:
                raise TruncatedSearchError

        depth = len(state.seq)
        if depth == total - 1 and state.visited_count == total:
            # open completion; the only possible child is the cyclic closure
            seq = state.sequence()
            canonical = _is_reversal_canonical(seq)
            closable = state.word & (state.word - 1) == 0
            if want_open:
                if canonical:
                    report.count_open_total += 1
                    if not closable:
                        report.count_open_strict += 1
                    emit("open")
                elif config.emit == "all-codes":
                    emit("open")
        elif depth == total:
            seq = state.sequence()
            if want_cyclic:
                if _is_reversal_canonical(seq):
                    report.count_cyclic += 1
                    emit("cyclic")
                elif config.emit == "all-codes":
                    emit("cyclic")
            return
        for p in state.children():
            saved = (state.word, state.visited, state.visited_count, state.used)
            queue_snapshot = None
            if state.word >> p & 1:
                queue_snapshot = state.queue[0]
            state.push(p)
            visit()
            # undo
            state.seq.pop()
            if queue_snapshot is None:
                state.queue.pop()
            else:
                state.queue.insert(0, queue_snapshot)
            state.word, state.visited, state.visited_count, state.used = saved

    try:
        visit()
    except TruncatedSearchError:
        report.truncated = True
    report.elapsed = time.monotonic() - start
    # a prefix config reports only its subtree; callers add shallow nodes
    del root_len
    return report


def split_prefixes(n: int, depth: int) -> list[SearchConfig]:
    """Configs whose prefixes are the surviving partial sequences of ``depth``.

    The shard subtrees partition the set of nodes at depth >= ``depth``;
    summing shard reports gives the unsplit code counts.
    """
    if depth > 12:
        raise ValueError("split depth limited to 12")
    frontier: list[SearchState] = [SearchState(n)]
    for _ in range(depth):
        nxt = []
        for st in frontier:
            for p in st.children():
                child = SearchState(
                    n=n,
                    word=st.word,
                    visited=st.visited,
                    visited_count=st.visited_count,
                    queue=list(st.queue),
                    used=st.used,
                    seq=list(st.seq),
                )
                child.push(p)
                nxt.append(child)
        frontier = nxt
    return [
        SearchConfig(n=n, prefix=st.sequence()) for st in frontier
    ]


def count_shallow_nodes(n: int, depth: int) -> int:
    """Number of tree nodes strictly above ``depth`` (for node-sum checks)."""
    frontier: list[SearchState] = [SearchState(n)]
    shallow = 0
    for _ in range(depth):
        shallow += len(frontier)
        nxt = []
        for st in frontier:
            for p in st.children():
                child = SearchState(
                    n=n,
                    word=st.word,
                    visited=st.visited,
                    visited_count=st.visited_count,
                    queue=list(st.queue),
                    used=st.used,
                    seq=list(st.seq),
                )
                child.push(p)
                nxt.append(child)
        frontier = nxt
    return shallow


def enumerate_gray_cycles_small(n: int) -> list[WordPath]:
    """All directed Hamilton cycles of the n-cube anchored at the all-zero word.

    Each returned path is closed (2^n + 1 words, first == last == 0); both
    orientations of every undirected cycle are returned.
    """
    if n > 4:
        raise ValueError("cycle enumeration limited to n <= 4")
    total = 1 << n
    cycles: list[WordPath] = []
    path = [0]
    visited = 1

    def extend() -> None:
        nonlocal visited
        w = path[-1]
        for p in range(n):
            nxt = w ^ (1 << p)
            if nxt == 0:
                if len(path) == total:
                    cycles.append(WordPath(n, tuple(path) + (0,)))
                continue
            if visited >> nxt & 1:
                continue
            visited |= 1 << nxt
            path.append(nxt)
            extend()
            path.pop()
            visited ^= 1 << nxt

    extend()
    return cycles
