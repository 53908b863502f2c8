"""Permutations of ``{0, ..., n-1}`` and cycle-notation parsing.

Points are 1-based in text and 0-based internally.  Products are read left
to right: ``p * q`` applies ``p`` first, then ``q``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class PermutationSyntaxError(ValueError):
    """Malformed cycle notation.

    ``column`` is the 1-based offset of the offending character when known.
    """

    def __init__(self, message: str, column: int | None = None):
        self.column = column
        if column is not None:
            message = f"{message} (column {column})"
        super().__init__(message)


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection on ``range(len(images))``, stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images!r}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """Build from 0-based cycles; points may not repeat across cycles."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for a in cycle:
                if not 0 <= a < degree:
                    raise ValueError(f"point {a + 1} outside 1..{degree}")
                if a in seen:
                    raise ValueError(f"point {a + 1} repeated")
                seen.add(a)
            for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        img = other.images
        return Permutation(tuple(img[i] for i in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def extend(self, degree: int, offset: int = 0) -> Permutation:
        """Embed into ``degree`` points, shifted by ``offset``; other points fixed."""
        images = list(range(degree))
        for i, j in enumerate(self.images):
            images[i + offset] = j + offset
        return Permutation(tuple(images))

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(a + 1) for a in c) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({self}, degree={self.degree})"


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(\S))")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse whitespace-separated cycles such as ``"(1 2 3)(4 5)"``.

    ``"()"`` is the identity.  Unlisted points are fixed.

    >>> parse_permutation("(1 2)", 3).images
    (1, 0, 2)
    """
    cycles = []
    current: list[int] | None = None
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = m.start(m.lastindex) + 1
        if m.group(1):
            if current is not None:
                raise PermutationSyntaxError("nested '('", col)
            current = []
        elif m.group(2):
            if current is None:
                raise PermutationSyntaxError("unmatched ')'", col)
            cycles.append(current)
            current = None
        elif m.group(3):
            if current is None:
                raise PermutationSyntaxError("point outside parentheses", col)
            point = int(m.group(3))
            if not 1 <= point <= degree:
                raise PermutationSyntaxError(f"point {point} outside 1..{degree}", col)
            if point - 1 in current or any(point - 1 in c for c in cycles):
                raise PermutationSyntaxError(f"point {point} repeated", col)
            current.append(point - 1)
        else:
            raise PermutationSyntaxError(f"unexpected character {m.group(4)!r}", col)
        pos = m.end()
    if current is not None:
        raise PermutationSyntaxError("unclosed '('", len(text) + 1)
    return Permutation.from_cycles(cycles, degree)
