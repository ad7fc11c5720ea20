"""Two-stack realization of the binary reflected Gray code.

The set bits of each word split by parity: one stack holds the even bit
positions, the other the odd ones (top last).  A 0->1 flip pushes on the
matching stack; a 1->0 flip must pop that stack's top.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import WordPath, transitions_of


@dataclass(frozen=True)
class TwoStackState:
    even_stack: tuple[int, ...]
    odd_stack: tuple[int, ...]

    def __str__(self) -> str:
        def fmt(stack):
            # bottom first, top last
            return ",".join(str(p) for p in stack) if stack else "-"

        return f"even[{fmt(self.even_stack)}] odd[{fmt(self.odd_stack)}]"


@dataclass(frozen=True)
class PopNotTop:
    """Diagnostics for a 1->0 flip whose position is not its stack's top."""

    step: int
    position: int
    top: Optional[int]

    def __str__(self) -> str:
        return (
            f"step {self.step}: position {self.position} flipped 1->0 but "
            f"{'even' if self.position % 2 == 0 else 'odd'} stack top is {self.top}"
        )


class PopNotTopError(ValueError):
    def __init__(self, diag: PopNotTop):
        self.diagnostics = diag
        super().__init__(str(diag))


def brgc(n: int) -> WordPath:
    """The standard reflected Gray code: word i = i XOR (i >> 1)."""
    if not 1 <= n <= 24:
        raise ValueError(f"n={n} outside [1, 24]")
    return WordPath(n, tuple(i ^ (i >> 1) for i in range(1 << n)))


def two_stack_trace(path: WordPath) -> list[TwoStackState]:
    """Replay a Gray path through the parity stacks; 1 + |transitions| states.

    Raises PopNotTopError when a 1->0 flip does not hit its stack's top,
    which means the path is not two-stack realizable.
    """
    if path.words and path.words[0] != 0:
        raise ValueError("two-stack trace starts from the all-zero word")
    seq = transitions_of(path)
    even: list[int] = []
    odd: list[int] = []
    word = 0
    states = [TwoStackState((), ())]
    for i, p in enumerate(seq.symbols):
        stack = even if p % 2 == 0 else odd
        if word >> p & 1:
            if not stack or stack[-1] != p:
                top = stack[-1] if stack else None
                raise PopNotTopError(PopNotTop(i, p, top))
            stack.pop()
        else:
            stack.append(p)
        word ^= 1 << p
        states.append(TwoStackState(tuple(even), tuple(odd)))
    return states


def is_two_stack_realizable(path: WordPath) -> tuple[bool, Optional[PopNotTop]]:
    """Whether the whole path survives the parity-stack discipline."""
    try:
        two_stack_trace(path)
    except PopNotTopError as e:
        return False, e.diagnostics
    return True, None


def reversed_trace_is_legal(path: WordPath) -> bool:
    """Check the path backward: each reversed step is a legal stack move.

    Replays the forward trace to seed the stacks, then walks the steps in
    reverse; a forward push undone is a pop of the top, a forward pop
    undone is a push, both always legal on the recorded states.  Stack
    operations being time reversible, this succeeds iff the forward trace
    does.
    """
    states = two_stack_trace(path)
    for i in range(len(states) - 1, 0, -1):
        cur, prev = states[i], states[i - 1]
        for a, b in ((cur.even_stack, prev.even_stack), (cur.odd_stack, prev.odd_stack)):
            if a == b:
                continue
            if len(a) == len(b) + 1 and a[:-1] == b:
                continue  # undoing a push: pop of the current top
            if len(b) == len(a) + 1 and b[:-1] == a:
                continue  # undoing a pop: push back
            return False
    return True
