#!/usr/bin/env python3
"""
Braid words on n strands.

A word is read left to right and its matrix image is the product of the
letter images in that order. Permutations compose as functions,
(p * q)(x) = p(q(x)), so that permutation(u v) = permutation(u) * permutation(v)
and s1 s2 maps to the cycle (1 2 3). Word grammar:

    WORD  := TOKEN (SP TOKEN)*
    TOKEN := "s" INT | "s" INT "^-1"

The empty string is the empty word.
"""

import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))
from src.core.errors import BraidSyntaxError, IndexOutOfRangeError

_TOKEN = re.compile(r"s([1-9][0-9]*)(\^-1)?")

Letter = Tuple[int, int]


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n}; images[x-1] is the image of x."""

    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int) -> "Permutation":
        """The adjacent transposition (i, i+1)."""
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: other first, then self."""
        return Permutation(tuple(self(other(x)) for x in range(1, self.size + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images, start=1))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Disjoint cycles including fixed points, each starting at its least element."""
        seen = set()
        result = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            result.append(tuple(cycle))
        return result

    def __str__(self) -> str:
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in moved)


@dataclass(frozen=True)
class BraidWord:
    """Signed generator sequence on `strands` strands."""

    strands: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise IndexOutOfRangeError(f"braids need at least 2 strands, got {self.strands}")
        for index, sign in self.letters:
            if not 1 <= index <= self.strands - 1:
                raise IndexOutOfRangeError(
                    f"generator s{index} does not exist on {self.strands} strands"
                )
            if sign not in (1, -1):
                raise BraidSyntaxError(f"exponent sign must be +1 or -1, got {sign}")

    @classmethod
    def from_letters(cls, strands: int, letters: Iterable[Letter]) -> "BraidWord":
        return cls(strands, tuple((int(i), int(s)) for i, s in letters))

    @classmethod
    def from_ints(cls, strands: int, word: Sequence[int]) -> "BraidWord":
        """Signed-integer notation: 2 is s2, -2 is s2^-1."""
        return cls(strands, tuple((abs(x), 1 if x > 0 else -1) for x in word))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise IndexOutOfRangeError(
                f"cannot concatenate words on {self.strands} and {other.strands} strands"
            )
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def with_strands(self, strands: int) -> "BraidWord":
        """Same letters viewed on more strands."""
        return BraidWord(strands, self.letters)

    def to_ints(self) -> List[int]:
        return [i * s for i, s in self.letters]

    def __str__(self) -> str:
        return " ".join(f"s{i}" if s == 1 else f"s{i}^-1" for i, s in self.letters)


def parse(text: str, strands: int) -> BraidWord:
    """
    Parse a whitespace-separated braid word.

    Args:
        text: tokens "sK" or "sK^-1"
        strands: number of strands n; every K must satisfy 1 <= K <= n-1

    Returns:
        The parsed BraidWord

    Raises:
        BraidSyntaxError: a token does not match the grammar
        IndexOutOfRangeError: a generator index is outside [1, n-1]
    """
    letters = []
    for token in text.split():
        match = _TOKEN.fullmatch(token)
        if match is None:
            raise BraidSyntaxError(f"malformed braid token {token!r}")
        letters.append((int(match.group(1)), -1 if match.group(2) else 1))
    return BraidWord(strands, tuple(letters))


def exponent_sum(w: BraidWord) -> int:
    return sum(s for _, s in w.letters)


def permutation(w: BraidWord) -> Permutation:
    """Image in S_n under s_i -> (i, i+1); exponent signs are ignored."""
    images = list(range(1, w.strands + 1))
    for i, _ in w.letters:
        # right-multiplying by (i, i+1) swaps the images of i and i+1
        images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def closure_components(w: BraidWord) -> int:
    """Number of link components of the braid closure."""
    return len(permutation(w).cycles())
