"""Integer compositions, set partitions and towers of partitions."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence


def multinomial(n: int, parts: Sequence[int]) -> int:
    if sum(parts) != n:
        raise ValueError(f"parts {tuple(parts)} do not sum to {n}")
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def _compositions(n: int, min_part: int, step: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min_part, n + 1, step):
        for rest in _compositions(n - first, min_part, step):
            yield (first,) + rest


def compositions(n: int, min_part: int = 1, even_only: bool = False) -> list:
    """Ordered tuples of parts ``>= min_part`` summing to ``n``, in lexicographic order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    min_part = max(min_part, 1)
    if even_only:
        if n % 2:
            return []
        min_part += min_part % 2
        return list(_compositions(n, min_part, 2))
    return list(_compositions(n, min_part, 1))


def _set_partitions(items: Sequence) -> Iterator[list]:
    if not items:
        yield []
        return
    head, rest = items[-1], items[:-1]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + (head,)] + part[i + 1:]
        yield part + [(head,)]


def set_partitions(n, min_block: int = 1) -> list:
    """Partitions of ``{1..n}`` (or of a given sequence) with every block of size ``>= min_block``.

    Blocks are tuples sorted internally and listed by their minimum element.
    """
    items = tuple(range(1, n + 1)) if isinstance(n, int) else tuple(n)
    out = []
    for part in _set_partitions(items):
        if all(len(b) >= min_block for b in part):
            out.append(tuple(sorted(part, key=lambda b: b[0])))
    out.sort(key=lambda p: (len(p), p))
    return out


@dataclass(frozen=True)
class PartitionChain:
    """Tower of partitions.

    ``levels[0]`` partitions ``{1..n}``; ``levels[i]`` partitions the block
    indices ``0..len(levels[i-1])-1`` of the previous level.
    """

    levels: tuple

    @property
    def depth(self) -> int:
        return len(self.levels)

    @property
    def top(self) -> tuple:
        return self.levels[-1]

    def block_sizes(self) -> list:
        """Sizes of every block at every level, level by level."""
        return [[len(b) for b in level] for level in self.levels]


def partition_chains(n: int, d: int, s: int = 1, require_top_ge2: bool = True) -> list:
    if n < 1 or d < 1 or s < 1:
        raise ValueError("n, d and s must be >= 1")

    def extend(levels: tuple) -> Iterator[tuple]:
        if len(levels) == d:
            if not require_top_ge2 or len(levels[-1]) >= 2:
                yield levels
            return
        for nxt in set_partitions(tuple(range(len(levels[-1]))), s):
            yield from extend(levels + (nxt,))

    chains = []
    for first in set_partitions(n, s):
        chains.extend(PartitionChain(levels) for levels in extend((first,)))
    return chains
