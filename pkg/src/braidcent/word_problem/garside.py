"""
Left-greedy Garside normal form Δ^inf · A_1 ⋯ A_k in B_n.

Each factor A is a positive permutation braid, stored as the Permutation of its
strands (``A(i)`` is where the strand starting at i ends). Strands i < j cross
in A exactly when A(i) > A(j), and a product AB of simple braids is simple iff
no pair of strands crosses twice.

Left-weightedness uses descent sets:

* starting set S(B) = {i : B(i) > B(i+1)}, the σ_i that left-divide B;
* finishing set F(A) = {i : A^{-1}(i) > A^{-1}(i+1)}, the σ_i that right-divide A.

A pair (A, B) is left-weighted iff S(B) ⊆ F(A). While some i ∈ S(B) \\ F(A)
exists we move σ_i across: A ← Aσ_i, B ← σ_i^{-1}B. This converges to the
left-weighted pair with the same product.
"""

from __future__ import annotations

import dataclasses

from ..braid_core import BraidError, BraidWord, Permutation


@dataclasses.dataclass(frozen=True)
class GarsideNormalForm:
    strand_count: int
    inf: int
    factors: tuple[Permutation, ...] = ()

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def __str__(self) -> str:
        return " | ".join([f"D^{self.inf}", *(str(f) for f in self.factors)])


def _half_twist(n: int) -> list[int]:
    return list(range(n, 0, -1))


def _flip(perm: list[int], n: int) -> list[int]:
    """Conjugation by Δ: σ_i ↦ σ_{n-i}."""
    return [n + 1 - perm[n - i] for i in range(1, n + 1)]


def _starting_set(perm: list[int]) -> set[int]:
    return {i for i in range(1, len(perm)) if perm[i - 1] > perm[i]}


def _finishing_set(perm: list[int]) -> set[int]:
    inv = [0] * len(perm)
    for i, x in enumerate(perm, start=1):
        inv[x - 1] = i
    return _starting_set(inv)


def _left_weight(a: list[int], b: list[int]) -> bool:
    """Make (a, b) left-weighted in place; return whether anything moved."""
    n = len(a)
    a_inv = [0] * n
    for s, x in enumerate(a):
        a_inv[x - 1] = s + 1

    def movable(i: int) -> bool:
        # i in S(b) but not in F(a)
        return 1 <= i < n and b[i - 1] > b[i] and a_inv[i - 1] < a_inv[i]

    todo = [i for i in range(1, n) if movable(i)]
    moved = False
    while todo:
        i = todo.pop()
        if not movable(i):
            continue
        # a ← a σ_i swaps the end positions i, i+1; b ← σ_i^{-1} b swaps the starting strands i, i+1
        a_inv[i - 1], a_inv[i] = a_inv[i], a_inv[i - 1]
        b[i - 1], b[i] = b[i], b[i - 1]
        todo.extend(j for j in (i - 1, i + 1) if movable(j))
        moved = True
    if moved:
        for e, s in enumerate(a_inv, start=1):
            a[s - 1] = e
    return moved


def _is_trivial(perm: list[int]) -> bool:
    return all(x == i for i, x in enumerate(perm, start=1))


def normal_form(u: BraidWord) -> GarsideNormalForm:
    n = u.strand_count
    delta = _half_twist(n)

    # σ_i^{-1} = Δ^{-1}·(Δσ_i^{-1}); pushing every Δ^{-1} to the front flips the
    # factors to its left, so factor j is flipped once per negative letter after it.
    simple: list[list[int]] = []
    negatives_after = 0
    for g in reversed(u.letters):
        i = abs(g)
        if g > 0:
            perm = list(range(1, n + 1))
            perm[i - 1], perm[i] = i + 1, i
        else:
            # Δσ_i^{-1}: the half twist with the end positions i, i+1 swapped back
            perm = [i + 1 if x == i else i if x == i + 1 else x for x in delta]
        if negatives_after % 2:
            perm = _flip(perm, n)
        simple.append(perm)
        if g < 0:
            negatives_after += 1
    simple.reverse()
    inf = -negatives_after

    factors: list[list[int]] = []
    for perm in simple:
        factors.append(perm)
        for j in range(len(factors) - 2, -1, -1):
            if not _left_weight(factors[j], factors[j + 1]):
                break
        while factors and _is_trivial(factors[-1]):
            factors.pop()

    lead = 0
    while lead < len(factors) and factors[lead] == delta:
        lead += 1
    return GarsideNormalForm(n, inf + lead, tuple(Permutation(tuple(f)) for f in factors[lead:]))


def is_left_weighted(nf: GarsideNormalForm) -> bool:
    """Check the structural invariants of a normal form."""
    delta = _half_twist(nf.strand_count)
    perms = [list(f.images) for f in nf.factors]
    if any(_is_trivial(p) or p == delta for p in perms):
        return False
    return all(_starting_set(b) <= _finishing_set(a) for a, b in zip(perms, perms[1:]))


def simple_word(perm: Permutation) -> list[int]:
    """A positive word for a permutation braid (bubble sort of the strand end positions)."""
    ends = list(perm.images)
    letters = []
    for _ in range(len(ends)):
        for p in range(len(ends) - 1):
            if ends[p] > ends[p + 1]:
                ends[p], ends[p + 1] = ends[p + 1], ends[p]
                letters.append(p + 1)
    return letters


def to_word(nf: GarsideNormalForm) -> BraidWord:
    """Reconstruct a braid word from a normal form."""
    n = nf.strand_count
    delta_word = simple_word(Permutation(tuple(_half_twist(n))))
    if nf.inf < 0:
        delta_word = [-g for g in reversed(delta_word)]
    letters = delta_word * abs(nf.inf)
    for f in nf.factors:
        letters.extend(simple_word(f))
    return BraidWord(n, tuple(letters))


def is_identity(u: BraidWord) -> bool:
    return normal_form(u).is_identity()


def equal(u: BraidWord, v: BraidWord) -> bool:
    if u.strand_count != v.strand_count:
        raise BraidError(f"strand counts differ: {u.strand_count} vs {v.strand_count}")
    return normal_form(u) == normal_form(v)
