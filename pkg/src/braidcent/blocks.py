"""
Blocks of consecutive strands and the braids that respect them.

A BlockStructure splits strands 1..n into consecutive intervals (the discs
D_1, ..., D_m). Block crossings move a whole block rigidly past its
neighbour, which makes ``cable`` a section of the tube map: collapsing every
block to one strand (``tube_projection``) recovers the original braid.

The crossing word of block t (size p, offset o) over block t+1 (size q) is
R(o+p, q) R(o+p-1, q) ⋯ R(o+1, q) with R(j, q) = σ_j σ_{j+1} ⋯ σ_{j+q-1}: the
rightmost strand of the left block moves first. A negative crossing at a
structure S is the inverse of the positive crossing at the swapped structure,
so it is valid for unequal sizes too and still swaps the two blocks.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Sequence, Union

from .braid_core import BraidError, BraidWord, inverse, track_positions


@dataclasses.dataclass(frozen=True)
class BlockStructure:
    sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if not self.sizes or any(not isinstance(s, int) or s < 1 for s in self.sizes):
            raise BraidError(f"block sizes must be positive integers, got {self.sizes}")

    @classmethod
    def uniform(cls, m: int, size: int) -> BlockStructure:
        return cls((size,) * m)

    @property
    def strand_count(self) -> int:
        return sum(self.sizes)

    @property
    def m(self) -> int:
        return len(self.sizes)

    def offset(self, i: int) -> int:
        """Number of strands left of block i (1-based)."""
        return sum(self.sizes[: i - 1])

    def strands(self, i: int) -> range:
        o = self.offset(i)
        return range(o + 1, o + self.sizes[i - 1] + 1)

    def block_of(self) -> list[int]:
        """``block_of()[s - 1]`` is the block containing strand s."""
        return [i for i, s in enumerate(self.sizes, start=1) for _ in range(s)]

    def swapped(self, t: int) -> BlockStructure:
        sizes = list(self.sizes)
        sizes[t - 1], sizes[t] = sizes[t], sizes[t - 1]
        return BlockStructure(tuple(sizes))

    def pairs(self) -> list[tuple[int, int]]:
        return list(itertools.combinations(range(1, self.m + 1), 2))


def parse_sizes(text: str) -> BlockStructure:
    try:
        return BlockStructure(tuple(int(x) for x in text.split(",")))
    except ValueError:
        raise BraidError(f"malformed sizes {text!r}") from None


def _check_block(i: int, structure: BlockStructure) -> None:
    if not 1 <= i <= structure.m:
        raise BraidError(f"block index {i} out of range 1..{structure.m}")


def _check_structure(u: BraidWord, structure: BlockStructure) -> None:
    if u.strand_count != structure.strand_count:
        raise BraidError(f"braid has {u.strand_count} strands but blocks cover {structure.strand_count}")


def blocks_preserved(u: BraidWord, structure: BlockStructure) -> bool:
    _check_structure(u, structure)
    owner = structure.block_of()
    labels = track_positions(u)
    return all(owner[start - 1] == owner[end] for end, start in enumerate(labels))


def _positive_crossing(t: int, structure: BlockStructure) -> list[int]:
    o = structure.offset(t)
    p, q = structure.sizes[t - 1], structure.sizes[t]
    letters = []
    for i in range(p):
        j = o + p - i
        letters.extend(range(j, j + q))
    return letters


def block_crossing(t: int, structure: BlockStructure, sign: int = 1) -> BraidWord:
    if not 1 <= t <= structure.m - 1:
        raise BraidError(f"crossing index {t} out of range 1..{structure.m - 1}")
    if sign not in (1, -1):
        raise BraidError(f"sign must be +1 or -1, got {sign}")
    n = structure.strand_count
    if sign > 0:
        return BraidWord(n, tuple(_positive_crossing(t, structure)))
    return inverse(BraidWord(n, tuple(_positive_crossing(t, structure.swapped(t)))))


def cable(gamma: BraidWord, size: int) -> BraidWord:
    """Replace every strand of gamma by ``size`` parallel strands."""
    if not isinstance(size, int) or size < 1:
        raise BraidError(f"cable size must be a positive integer, got {size!r}")
    structure = BlockStructure.uniform(gamma.strand_count, size)
    letters: list[int] = []
    for g in gamma.letters:
        letters.extend(block_crossing(abs(g), structure, 1 if g > 0 else -1).letters)
    return BraidWord(structure.strand_count, tuple(letters))


@dataclasses.dataclass(frozen=True)
class Interior:
    block: int
    word: BraidWord


@dataclasses.dataclass(frozen=True)
class Cross:
    t: int
    sign: int


TubeToken = Union[Interior, Cross]


def tube_word_of_cable(gamma: BraidWord, size: int) -> list[TubeToken]:
    """The structured form of ``cable(gamma, size)``: one Cross token per letter."""
    return [Cross(abs(g), 1 if g > 0 else -1) for g in gamma.letters]


def tube_word_letters(tokens: Sequence[TubeToken], structure: BlockStructure) -> BraidWord:
    """Expand a tube word into an ordinary braid word, tracking block sizes as blocks move."""
    current = structure
    letters: list[int] = []
    for tok in _validated(tokens, structure):
        if isinstance(tok, Interior):
            letters.extend(tok.word.letters)
        else:
            letters.extend(block_crossing(tok.t, current, tok.sign).letters)
            current = current.swapped(tok.t)
    return BraidWord(structure.strand_count, tuple(letters))


def _validated(tokens: Sequence[TubeToken], structure: BlockStructure) -> Sequence[TubeToken]:
    current = structure
    for tok in tokens:
        if isinstance(tok, Interior):
            _check_block(tok.block, current)
            if tok.word.strand_count != current.strand_count:
                raise BraidError("interior word has the wrong strand count")
            inner = current.strands(tok.block)
            if any(not (inner.start <= abs(g) < inner.stop - 1) for g in tok.word.letters):
                raise BraidError(f"interior word leaves block {tok.block}")
        elif isinstance(tok, Cross):
            if not 1 <= tok.t <= structure.m - 1 or tok.sign not in (1, -1):
                raise BraidError(f"malformed crossing token {tok}")
            current = current.swapped(tok.t)
        else:
            raise BraidError(f"unknown tube token {tok!r}")
    return tokens


def tube_projection(tokens: Sequence[TubeToken], structure: BlockStructure) -> BraidWord:
    """Collapse each block to a single strand: interiors vanish, block crossings become σ_t^{±1}."""
    _validated(tokens, structure)
    return BraidWord(structure.m, tuple(tok.sign * tok.t for tok in tokens if isinstance(tok, Cross)))


def block_twist(i: int, structure: BlockStructure) -> BraidWord:
    """Full twist of the strands of block i; empty for a singleton block."""
    _check_block(i, structure)
    s = structure.sizes[i - 1]
    a = structure.offset(i) + 1
    return BraidWord(structure.strand_count, tuple(range(a, a + s - 1)) * s)


def block_linking(j: int, k: int, structure: BlockStructure) -> BraidWord:
    """C_{k-1} ⋯ C_{j+1} C_j² C_{j+1}^{-1} ⋯ C_{k-1}^{-1}, block sizes tracked through the moves."""
    if not 1 <= j < k <= structure.m:
        raise BraidError(f"need 1 <= j < k <= {structure.m}, got j={j}, k={k}")
    tokens = [Cross(t, 1) for t in range(k - 1, j, -1)]
    tokens += [Cross(j, 1), Cross(j, 1)]
    tokens += [Cross(t, -1) for t in range(j + 1, k)]
    return tube_word_letters(tokens, structure)


@dataclasses.dataclass(frozen=True)
class BlockProfile:
    internal: tuple[int, ...]
    cross: dict[tuple[int, int], int]

    def vector(self) -> list[int]:
        """Θ_1..Θ_m followed by X_jk in lexicographic pair order."""
        return list(self.internal) + [v for _, v in sorted(self.cross.items())]

    def __add__(self, other: BlockProfile) -> BlockProfile:
        return BlockProfile(
            tuple(a + b for a, b in zip(self.internal, other.internal)),
            {p: v + other.cross[p] for p, v in self.cross.items()},
        )


def block_profile(u: BraidWord, structure: BlockStructure) -> BlockProfile:
    if not blocks_preserved(u, structure):
        raise BraidError("braid does not preserve the blocks")
    owner = structure.block_of()
    labels = list(range(1, u.strand_count + 1))
    internal = [0] * structure.m
    cross = {p: 0 for p in structure.pairs()}
    for g in u.letters:
        i = abs(g)
        s = 1 if g > 0 else -1
        a, b = owner[labels[i - 1] - 1], owner[labels[i] - 1]
        if a == b:
            internal[a - 1] += s
        else:
            cross[(min(a, b), max(a, b))] += s
        labels[i - 1], labels[i] = labels[i], labels[i - 1]
    return BlockProfile(tuple(internal), cross)
