"""Word/transition data model shared by every other module.

A Gray code is stored as its transition sequence: the list of bit
positions flipped between consecutive words.  Bit positions are numbered
from the right, starting at zero.  All sequences are anchored at the
all-zero word, so a transition sequence alone determines the word path.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, TextIO

MAX_BITS = 24


class MalformedSequenceError(ValueError):
    """A transition sequence violates its structural invariants."""


class NotAGrayStepError(ValueError):
    """Two consecutive words differ in zero or more than one bit."""

    def __init__(self, index: int, a: int, b: int):
        self.index = index
        super().__init__(
            f"words at steps {index} and {index + 1} differ in "
            f"{bin(a ^ b).count('1')} bits ({a:#x} vs {b:#x})"
        )


@dataclass(frozen=True)
class TransitionSequence:
    """An ordered list of bit positions, each in [0, n)."""

    n: int
    symbols: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_BITS:
            raise MalformedSequenceError(f"n={self.n} outside [1, {MAX_BITS}]")
        object.__setattr__(self, "symbols", tuple(self.symbols))
        for i, s in enumerate(self.symbols):
            if not 0 <= s < self.n:
                raise MalformedSequenceError(
                    f"symbol {s} at index {i} outside [0, {self.n})"
                )

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __str__(self) -> str:
        return format_symbols(self.n, self.symbols)


@dataclass(frozen=True)
class WordPath:
    """An explicit sequence of n-bit words, consecutive words one flip apart."""

    n: int
    words: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(self.words))
        limit = 1 << self.n
        for w in self.words:
            if not 0 <= w < limit:
                raise MalformedSequenceError(f"word {w} does not fit in {self.n} bits")

    def __len__(self) -> int:
        return len(self.words)


class GrayKind(enum.Enum):
    OPEN = "open-gray"
    CYCLIC = "cyclic-gray"
    INCOMPLETE = "incomplete"
    INVALID = "invalid"


@dataclass(frozen=True)
class GrayClassification:
    kind: GrayKind
    # index of the step whose result repeats an earlier word (INVALID only)
    repeat_index: Optional[int] = None

    def __str__(self) -> str:
        if self.kind is GrayKind.INVALID:
            return f"invalid (word repeats at step {self.repeat_index})"
        return self.kind.value


def apply_transitions(start: int, seq: TransitionSequence) -> WordPath:
    """Flip the bits named by ``seq`` one at a time, starting from ``start``."""
    if not 0 <= start < (1 << seq.n):
        raise MalformedSequenceError(f"start word {start} does not fit in {seq.n} bits")
    words = [start]
    w = start
    for s in seq.symbols:
        w ^= 1 << s
        words.append(w)
    return WordPath(seq.n, tuple(words))


def transitions_of(path: WordPath) -> TransitionSequence:
    """Read off the flipped bit position between each consecutive word pair."""
    if len(path.words) == 0:
        raise MalformedSequenceError("empty word path")
    symbols = []
    for i in range(len(path.words) - 1):
        diff = path.words[i] ^ path.words[i + 1]
        if diff == 0 or diff & (diff - 1):
            raise NotAGrayStepError(i, path.words[i], path.words[i + 1])
        symbols.append(diff.bit_length() - 1)
    return TransitionSequence(path.n, tuple(symbols))


def classify_gray(seq: TransitionSequence) -> GrayClassification:
    """Classify a transition sequence anchored at the all-zero word.

    A revisit of the all-zero word is legal only as the very last step of
    a full-length sequence, where it closes a cycle.
    """
    n = seq.n
    total = 1 << n
    w = 0
    visited = 1  # bitmap over words; bit 0 = all-zero word
    count = 1
    for i, s in enumerate(seq.symbols):
        w ^= 1 << s
        if visited >> w & 1:
            if w == 0 and i == len(seq) - 1 and len(seq) == total and count == total:
                return GrayClassification(GrayKind.CYCLIC)
            return GrayClassification(GrayKind.INVALID, repeat_index=i)
        visited |= 1 << w
        count += 1
    if len(seq) == total - 1 and count == total:
        return GrayClassification(GrayKind.OPEN)
    return GrayClassification(GrayKind.INCOMPLETE)


# ---------------------------------------------------------------------------
# Textual form: one sequence per line; single decimal digits when n <= 10,
# comma-separated decimals otherwise.  Files carry "n=<k> mode=<open|cyclic>"
# header lines before each block of sequences.

def format_symbols(n: int, symbols: Iterable[int]) -> str:
    if n <= 10:
        return "".join(str(s) for s in symbols)
    return ",".join(str(s) for s in symbols)


def parse_symbols(n: int, text: str) -> TransitionSequence:
    text = text.strip()
    if not text:
        return TransitionSequence(n, ())
    if n <= 10 and "," not in text:
        try:
            symbols = tuple(int(c) for c in text)
        except ValueError as e:
            raise MalformedSequenceError(f"bad symbol in {text!r}") from e
    else:
        try:
            symbols = tuple(int(part) for part in text.split(","))
        except ValueError as e:
            raise MalformedSequenceError(f"bad symbol in {text!r}") from e
    return TransitionSequence(n, symbols)


def parse_header(line: str) -> tuple[int, str]:
    """Parse an ``n=<k> mode=<open|cyclic>`` header line."""
    fields = dict(part.split("=", 1) for part in line.split() if "=" in part)
    if "n" not in fields or "mode" not in fields:
        raise MalformedSequenceError(f"bad header line: {line!r}")
    n = int(fields["n"])
    mode = fields["mode"]
    if mode not in ("open", "cyclic"):
        raise MalformedSequenceError(f"bad mode in header: {mode!r}")
    return n, mode


def read_sequence_file(fp: TextIO) -> Iterator[tuple[str, TransitionSequence]]:
    """Yield (mode, sequence) pairs from a header-structured sequence file.

    Lines starting with ``#`` are comments; blank lines are ignored.
    """
    n = None
    mode = None
    for line in fp:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" in line:
            n, mode = parse_header(line)
            continue
        if n is None or mode is None:
            raise MalformedSequenceError("sequence line before any header")
        yield mode, parse_symbols(n, line)


def write_sequence_block(
    fp: TextIO, n: int, mode: str, seqs: Iterable[TransitionSequence]
) -> None:
    fp.write(f"n={n} mode={mode}\n")
    for seq in seqs:
        fp.write(format_symbols(n, seq.symbols) + "\n")
