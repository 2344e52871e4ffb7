"""
Braid words and the alternating block-braid family.

A braid word on n strands is a sequence of syllables (generator index,
nonzero exponent) with indices in [1, n-1]. Words are treated literally:
no free reduction and no Markov simplification is applied. A block braid
is the alternating family: m blocks, each running through the generators
in order with exponent signs alternating +, -, +, ... and one global sign
flipping the whole word to its mirror.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Sequence


_SYLLABLE_RE = re.compile(r"s(\d+)(?:\^([+-]?\d+))?\Z")


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strands: int
    syllables: tuple[tuple[int, int], ...]

    def __init__(self, strands: int, syllables: Iterable[Sequence[int]] = ()):
        strands = int(strands)
        if strands < 2:
            raise ValueError(f"a braid needs at least 2 strands, got {strands}")
        packed = []
        for index, exponent in syllables:
            index, exponent = int(index), int(exponent)
            if not 1 <= index <= strands - 1:
                raise ValueError(
                    f"generator index {index} out of range [1, {strands - 1}]"
                )
            if exponent == 0:
                raise ValueError("syllable exponents must be nonzero")
            packed.append((index, exponent))
        object.__setattr__(self, "strands", strands)
        object.__setattr__(self, "syllables", tuple(packed))

    @classmethod
    def parse(cls, text: str, strands: int) -> BraidWord:
        """
        Parse word syntax like "s1^3 s2^-2 s3^5"; a bare "s2" means s2^1.
        """
        syllables = []
        for token in text.split():
            m = _SYLLABLE_RE.match(token)
            if m is None:
                raise ValueError(f"bad braid syllable {token!r}: expected like 's2^-3'")
            index = int(m.group(1))
            exponent = int(m.group(2)) if m.group(2) is not None else 1
            syllables.append((index, exponent))
        return cls(strands, syllables)

    def to_text(self) -> str:
        return " ".join(
            f"s{i}" if e == 1 else f"s{i}^{e}" for i, e in self.syllables
        )

    def exponent_sum(self) -> int:
        return sum(e for _, e in self.syllables)

    def mirror(self) -> BraidWord:
        """Negate every exponent, keeping the word order."""
        return BraidWord(self.strands, tuple((i, -e) for i, e in self.syllables))

    def closure_components(self) -> int:
        """
        Number of components of the closure: cycles of the permutation
        composed from one adjacent transposition per elementary letter
        (only exponent parity matters).
        """
        perm = list(range(self.strands))
        for index, exponent in self.syllables:
            if exponent % 2:
                a = index - 1
                perm[a], perm[a + 1] = perm[a + 1], perm[a]
        seen = [False] * self.strands
        cycles = 0
        for start in range(self.strands):
            if not seen[start]:
                cycles += 1
                j = start
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
        return cycles

    def __len__(self) -> int:
        return len(self.syllables)


@dataclasses.dataclass(frozen=True)
class BlockBraid:
    """
    The alternating family on n strands and m blocks: magnitudes is an
    m x (n-1) matrix of positive entries, sign is the global sign. Block j
    expands to generators 1..n-1 with exponent sign * (-1)^(i-1) * entry.
    """

    strands: int
    magnitudes: tuple[tuple[int, ...], ...]
    sign: int = 1

    def __init__(self, strands: int, magnitudes: Iterable[Sequence[int]], sign: int = 1):
        strands = int(strands)
        if strands < 2:
            raise ValueError(f"a block braid needs at least 2 strands, got {strands}")
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        rows = tuple(tuple(int(x) for x in row) for row in magnitudes)
        if not rows:
            raise ValueError("a block braid needs at least one block")
        for row in rows:
            if len(row) != strands - 1:
                raise ValueError(
                    f"each block needs {strands - 1} entries, got {len(row)}"
                )
            if any(x < 1 for x in row):
                raise ValueError("block magnitudes must be >= 1")
        object.__setattr__(self, "strands", strands)
        object.__setattr__(self, "magnitudes", rows)
        object.__setattr__(self, "sign", int(sign))

    @property
    def blocks(self) -> int:
        return len(self.magnitudes)

    @classmethod
    def parse(cls, strands: int, text: str, sign: int | str = 1) -> BlockBraid:
        """
        Parse block syntax like "3,2,5;1,1,2" (blocks separated by ';',
        entries by ','). The sign may be given as +1/-1 or "+"/"-".
        """
        if isinstance(sign, str):
            if sign not in ("+", "-"):
                raise ValueError(f"sign must be '+' or '-', got {sign!r}")
            sign = 1 if sign == "+" else -1
        try:
            rows = [
                [int(entry) for entry in block.split(",")]
                for block in text.split(";")
            ]
        except ValueError:
            raise ValueError(f"bad block syntax {text!r}: expected like '3,2,5;1,1,2'")
        return cls(strands, rows, sign)

    def to_text(self) -> str:
        return ";".join(",".join(str(x) for x in row) for row in self.magnitudes)

    def expand(self) -> BraidWord:
        """Expanded braid word, blocks in order, generators 1..n-1 within each."""
        syllables = []
        for row in self.magnitudes:
            for i, p in enumerate(row, start=1):
                exponent = self.sign * (p if i % 2 else -p)
                syllables.append((i, exponent))
        return BraidWord(self.strands, syllables)

    def mirror(self) -> BlockBraid:
        return BlockBraid(self.strands, self.magnitudes, -self.sign)
