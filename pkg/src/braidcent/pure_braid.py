"""
Linking numbers of pure braids and integer rank.

``linking_matrix`` realizes the abelianization PB_n → Z^{n(n-1)/2}. Entries
are keyed by *initial* strand labels, the positions at the bottom of the
braid. Under that convention, if g has permutation π (strand i ends at π(i)),
then ``lk(g u g^-1)[i, j] == lk(u)[π(i), π(j)]``.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Iterator, Sequence

from .braid_core import BraidError, BraidWord, is_pure


@dataclasses.dataclass(frozen=True)
class LinkingMatrix:
    strand_count: int
    entries: dict[tuple[int, int], int]

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = pair
        return self.entries[(min(i, j), max(i, j))]

    def __add__(self, other: LinkingMatrix) -> LinkingMatrix:
        return LinkingMatrix(self.strand_count, {p: v + other.entries[p] for p, v in self.entries.items()})

    def __neg__(self) -> LinkingMatrix:
        return LinkingMatrix(self.strand_count, {p: -v for p, v in self.entries.items()})

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self.entries.items()))

    def vector(self) -> list[int]:
        return [v for _, v in self.items()]


def crossing_counts(u: BraidWord) -> dict[tuple[int, int], int]:
    """Signed crossing count per pair of initial strand labels."""
    labels = list(range(1, u.strand_count + 1))
    counts = {p: 0 for p in itertools.combinations(range(1, u.strand_count + 1), 2)}
    for g in u.letters:
        i = abs(g)
        a, b = labels[i - 1], labels[i]
        counts[(min(a, b), max(a, b))] += 1 if g > 0 else -1
        labels[i - 1], labels[i] = b, a
    return counts


def linking_matrix(u: BraidWord) -> LinkingMatrix:
    if not is_pure(u):
        raise BraidError("not a pure braid")
    return LinkingMatrix(u.strand_count, {p: v // 2 for p, v in crossing_counts(u).items()})


def pure_generator(i: int, j: int, n: int) -> BraidWord:
    """A_ij = σ_{j-1} ⋯ σ_{i+1} σ_i² σ_{i+1}^{-1} ⋯ σ_{j-1}^{-1}."""
    if not 1 <= i < j <= n:
        raise BraidError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    down = list(range(j - 1, i, -1))
    return BraidWord(n, tuple(down + [i, i] + [-g for g in reversed(down)]))


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on exact integers."""
    if not rows:
        return 0
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise BraidError("ragged rows")
    m = [list(map(int, r)) for r in rows]
    rank = 0
    prev = 1
    for col in range(width):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            m[r] = [(p * m[r][c] - f * m[rank][c]) // prev for c in range(width)]
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank
