"""Seeded random braid words for property tests."""

from __future__ import annotations

import random

from braidcent.braid_core import BraidWord, inverse


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    if n == 1:
        return BraidWord(1)
    gens = [g for g in range(1 - n, n) if g]
    return BraidWord(n, tuple(rng.choice(gens) for _ in range(length)))


def random_pure_word(rng: random.Random, n: int, length: int) -> BraidWord:
    """A random word followed by a positive word undoing its permutation."""
    w = random_word(rng, n, length)
    labels = list(range(1, n + 1))
    for g in w.letters:
        i = abs(g)
        labels[i - 1], labels[i] = labels[i], labels[i - 1]
    fix = []
    for _ in range(n):
        for p in range(n - 1):
            if labels[p] > labels[p + 1]:
                labels[p], labels[p + 1] = labels[p + 1], labels[p]
                fix.append(p + 1)
    return BraidWord(n, w.letters + tuple(fix))


def _relator(rng: random.Random, n: int) -> list[int]:
    i = rng.randrange(1, n)
    far = [j for j in range(1, n) if abs(i - j) >= 2]
    if far and rng.random() < 0.5:
        j = rng.choice(far)
        rel = [i, j, -i, -j]
    elif i + 1 < n:
        j = i + 1
        rel = [i, j, i, -j, -i, -j]
    else:
        rel = [i, -i]
    if rng.random() < 0.5:
        rel = [-g for g in reversed(rel)]
    k = rng.randrange(len(rel))
    return rel[k:] + rel[:k]


def rewrite(rng: random.Random, w: BraidWord, steps: int) -> BraidWord:
    """An equal word: insert cyclic permutations of relators at random places."""
    letters = list(w.letters)
    if w.strand_count < 2:
        return w
    for _ in range(steps):
        pos = rng.randint(0, len(letters))
        letters[pos:pos] = _relator(rng, w.strand_count)
    return BraidWord(w.strand_count, tuple(letters))


def hidden_identity(rng: random.Random, n: int, length: int) -> BraidWord:
    """A trivial word of at most 2 * length + 36 letters that need not free-reduce to the empty word."""
    w = random_word(rng, n, length)
    return BraidWord(n, rewrite(rng, w, 3).letters + inverse(rewrite(rng, w, 3)).letters)


def mixed_words(seed: int, count: int, max_n: int = 7, max_len: int = 64) -> list[BraidWord]:
    """A mix of random words, hidden identities and near misses (one letter flipped)."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(2, max_n)
        kind = k % 3
        if kind == 0:
            out.append(random_word(rng, n, rng.randint(0, max_len)))
        else:
            w = hidden_identity(rng, n, rng.randint(0, max(0, max_len // 2 - 18)))
            if kind == 2 and w.letters:
                letters = list(w.letters)
                p = rng.randrange(len(letters))
                letters[p] = -letters[p]
                w = BraidWord(n, tuple(letters))
            out.append(w)
    return out
