"""
Braids whose centralizers need quadratically many generators.

Each builder places one "piece" on every block of a BlockStructure:

* ``twist``: block i of size 2 carries σ^{2a_i}, the a_i-th power of its full twist;
* ``twist-odd``: the same on n = 2m + 1 strands, the last strand left alone;
* ``pa``: block i of size 3 carries (σ_1 σ_2^{-1})^{k_i}, pseudo-Anosov with
  dilatation λ^{k_i}, λ = (3 + √5)/2.

Distinct parameters make the pieces pairwise non-conjugate (distinct twist
powers, or distinct dilatations), which is what forces every element of the
centralizer to preserve each block.
"""

from __future__ import annotations

import dataclasses
import enum
import math
from typing import Sequence

from .blocks import BlockStructure
from .braid_core import BraidError, BraidWord


class Variant(str, enum.Enum):
    TWIST_EVEN = "twist"
    TWIST_ODD = "twist-odd"
    PSEUDO_ANOSOV = "pa"


@dataclasses.dataclass(frozen=True)
class ExampleSpec:
    variant: Variant
    m: int
    params: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        object.__setattr__(self, "params", tuple(self.params))
        if not isinstance(self.m, int) or self.m < 1:
            raise BraidError(f"m must be a positive integer, got {self.m!r}")
        if len(self.params) != self.m:
            raise BraidError(f"expected {self.m} parameters, got {len(self.params)}")
        if any(not isinstance(p, int) or p < 1 for p in self.params):
            raise BraidError(f"parameters must be positive integers, got {self.params}")
        if len(set(self.params)) != len(self.params):
            raise BraidError(f"parameters must be pairwise distinct, got {self.params}")


@dataclasses.dataclass(frozen=True)
class ExampleInstance:
    beta: BraidWord
    structure: BlockStructure
    spec: ExampleSpec

    @property
    def n(self) -> int:
        return self.beta.strand_count

    def to_json(self) -> dict:
        return {
            "variant": self.spec.variant.value,
            "m": self.spec.m,
            "n": self.n,
            "sizes": list(self.structure.sizes),
            "params": list(self.spec.params),
            "beta": list(self.beta.letters),
        }


def embed(w: BraidWord, offset: int, n: int) -> BraidWord:
    """Shift w onto strands offset+1 .. offset+k of B_n."""
    if offset < 0 or offset + w.strand_count > n:
        raise BraidError(f"cannot embed {w.strand_count} strands at offset {offset} into B_{n}")
    return BraidWord(n, tuple(g + offset if g > 0 else g - offset for g in w.letters))


def _twist_beta(exps: Sequence[int], n: int) -> BraidWord:
    letters: list[int] = []
    for i, a in enumerate(exps, start=1):
        letters.extend([2 * i - 1] * (2 * a))
    return BraidWord(n, tuple(letters))


def build_twist_example(m: int, exps: Sequence[int]) -> ExampleInstance:
    spec = ExampleSpec(Variant.TWIST_EVEN, m, tuple(exps))
    return ExampleInstance(_twist_beta(spec.params, 2 * m), BlockStructure.uniform(m, 2), spec)


def build_twist_example_odd(m: int, exps: Sequence[int]) -> ExampleInstance:
    spec = ExampleSpec(Variant.TWIST_ODD, m, tuple(exps))
    return ExampleInstance(_twist_beta(spec.params, 2 * m + 1), BlockStructure((2,) * m + (1,)), spec)


PA_PIECE = (1, -2)


def build_pa_example(m: int, powers: Sequence[int]) -> ExampleInstance:
    spec = ExampleSpec(Variant.PSEUDO_ANOSOV, m, tuple(powers))
    n = 3 * m
    letters: list[int] = []
    for i, k in enumerate(spec.params):
        letters.extend(embed(BraidWord(3, PA_PIECE * k), 3 * i, n).letters)
    return ExampleInstance(BraidWord(n, tuple(letters)), BlockStructure.uniform(m, 3), spec)


def build(variant: Variant | str, m: int, params: Sequence[int]) -> ExampleInstance:
    builders = {
        Variant.TWIST_EVEN: build_twist_example,
        Variant.TWIST_ODD: build_twist_example_odd,
        Variant.PSEUDO_ANOSOV: build_pa_example,
    }
    return builders[Variant(variant)](m, params)


SL2_IMAGES = {
    1: ((1, 1), (0, 1)),
    -1: ((1, -1), (0, 1)),
    2: ((1, 0), (-1, 1)),
    -2: ((1, 0), (1, 1)),
}


def sl2_image(w: BraidWord) -> tuple[tuple[int, int], tuple[int, int]]:
    """Image of a 3-strand braid in SL(2, Z) (the action on the homology of the torus double cover)."""
    if w.strand_count != 3:
        raise BraidError(f"needs a 3-strand braid, got n={w.strand_count}")
    (a, b), (c, d) = (1, 0), (0, 1)
    for g in w.letters:
        (p, q), (r, s) = SL2_IMAGES[g]
        a, b, c, d = a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s
    return (a, b), (c, d)


def pa_trace_and_dilatation(w: BraidWord) -> tuple[int, float | None, bool]:
    """Trace of the SL(2, Z) image; pseudo-Anosov iff |trace| > 2, then the dilatation is its larger eigenvalue."""
    (a, _), (_, d) = sl2_image(w)
    trace = a + d
    if abs(trace) <= 2:
        return trace, None, False
    return trace, (abs(trace) + math.sqrt(trace * trace - 4)) / 2, True
