"""
Words in the Artin generators of the braid group B_n.

A letter g > 0 stands for σ_g and g < 0 for σ_|g|^{-1}; indices are 1-based,
so the generators of B_n are σ_1, ..., σ_{n-1}. Words are never reduced
implicitly: ``compose`` is plain concatenation and callers decide when to call
``free_reduce``.

Permutations follow the strand convention: ``images[i - 1]`` is the final
position of the strand that starts at position i. With this convention the
permutation of a product uv is "first u, then v", i.e. ``perm(uv)(i) =
perm(v)(perm(u)(i))``.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Sequence


class BraidError(ValueError):
    """Raised on invalid braid input (bad letters, mismatched strand counts, failed preconditions)."""


@dataclasses.dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise BraidError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def size(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(1, size + 1)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: Permutation) -> Permutation:
        """The permutation "self followed by other"."""
        if other.size != self.size:
            raise BraidError("permutation sizes differ")
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def __str__(self) -> str:
        return " ".join(map(str, self.images))


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        n = self.strand_count
        if not isinstance(n, int) or n < 1:
            raise BraidError(f"strand count must be a positive integer, got {n!r}")
        for g in self.letters:
            if not isinstance(g, int) or g == 0 or abs(g) >= n:
                raise BraidError(f"letter {g!r} out of range for B_{n} (need 1 <= |g| <= {n - 1})")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else inverse(self)
        return BraidWord(self.strand_count, base.letters * abs(k))

    def __str__(self) -> str:
        return format_word(self)


def parse_word(text: str, n: int) -> BraidWord:
    """Parse whitespace-separated signed integers, e.g. ``"1 -2 1"``; no reduction is done."""
    if not isinstance(n, int) or n < 1:
        raise BraidError(f"strand count must be a positive integer, got {n!r}")
    letters = []
    for token in text.split():
        try:
            letters.append(int(token))
        except ValueError:
            raise BraidError(f"malformed token {token!r}") from None
    return BraidWord(n, tuple(letters))


def format_word(u: BraidWord) -> str:
    return " ".join(map(str, u.letters))


def _check_same_n(u: BraidWord, v: BraidWord) -> None:
    if u.strand_count != v.strand_count:
        raise BraidError(f"strand counts differ: {u.strand_count} vs {v.strand_count}")


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    _check_same_n(u, v)
    return BraidWord(u.strand_count, u.letters + v.letters)


def compose_all(words: Iterable[BraidWord], n: int) -> BraidWord:
    letters: list[int] = []
    for w in words:
        if w.strand_count != n:
            raise BraidError(f"strand counts differ: {w.strand_count} vs {n}")
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters))


def inverse(u: BraidWord) -> BraidWord:
    return BraidWord(u.strand_count, tuple(-g for g in reversed(u.letters)))


def commutator(u: BraidWord, v: BraidWord) -> BraidWord:
    """The word u v u^{-1} v^{-1}."""
    _check_same_n(u, v)
    return BraidWord(u.strand_count, u.letters + v.letters + inverse(u).letters + inverse(v).letters)


def free_reduce(u: BraidWord) -> BraidWord:
    stack: list[int] = []
    for g in u.letters:
        if stack and stack[-1] == -g:
            stack.pop()
        else:
            stack.append(g)
    return BraidWord(u.strand_count, tuple(stack))


def track_positions(u: BraidWord) -> list[int]:
    """Return ``labels`` with ``labels[p - 1]`` the initial position of the strand ending at position p."""
    labels = list(range(1, u.strand_count + 1))
    for g in u.letters:
        i = abs(g)
        labels[i - 1], labels[i] = labels[i], labels[i - 1]
    return labels


def permutation_of(u: BraidWord) -> Permutation:
    return Permutation(track_positions(u)).inverse()


def exponent_sum(u: BraidWord) -> int:
    return sum(1 if g > 0 else -1 for g in u.letters)


def is_pure(u: BraidWord) -> bool:
    return track_positions(u) == list(range(1, u.strand_count + 1))


def word(letters: Sequence[int], n: int) -> BraidWord:
    """Shorthand constructor used throughout the package and tests."""
    return BraidWord(n, tuple(letters))
