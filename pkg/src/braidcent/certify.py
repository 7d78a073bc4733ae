"""
Lower-bound certificates for the number of generators of a centralizer.

The argument: every element of the centralizer of beta preserves each block
(taken as input, see ``ASSUMPTIONS``). On the block-preserving subgroup the
block profile is a homomorphism to a free abelian group, so the rank of the
profiles of any exhibited centralizer elements bounds from below the number
of generators of the centralizer. Everything about the exhibited elements,
namely commutation with beta, block preservation, profiles and rank, is
checked by computation here.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Sequence

from .blocks import block_linking, block_profile, block_twist, blocks_preserved
from .braid_core import BraidError, BraidWord
from .examples import ExampleInstance, ExampleSpec
from .pure_braid import integer_rank
from .word_problem import commutes_both

ASSUMPTIONS = (
    "Taken as input (not machine-checked): every braid commuting with beta preserves each block "
    "setwise. This follows from Thurston theory: the block boundaries form the canonical reduction "
    "system of beta, and the pieces on different blocks are pairwise distinguishable (distinct twist "
    "powers or distinct pseudo-Anosov dilatations). Machine-checked: each listed candidate commutes "
    "with beta under two independent word-problem engines (Dynnikov coordinates and Garside normal "
    "form) and preserves every block; the block profile (signed internal and cross-block crossing "
    "counts) is a homomorphism from the block-preserving subgroup to a free abelian group, so the "
    "rank of the candidates' profiles is a lower bound for the number of generators of the "
    "centralizer of beta in B_n. The bound concerns B_n; the mapping class group of the punctured "
    "disc differs by the central boundary twist and is not treated separately. No claim is made "
    "that the candidates generate the centralizer."
)


@dataclasses.dataclass(frozen=True)
class Check:
    label: str
    commutes: bool
    block_preserving: bool
    engines_agree: bool = True

    def to_json(self) -> dict:
        return {"label": self.label, "commutes": self.commutes, "block_preserving": self.block_preserving}


@dataclasses.dataclass
class CertificateReport:
    instance: ExampleInstance
    candidates: list[tuple[str, BraidWord]]
    checks: list[Check]
    profile_matrix: list[list[int]]
    rank: int
    excluded: list[str] = dataclasses.field(default_factory=list)
    assumptions: str = ASSUMPTIONS

    @property
    def spec(self) -> ExampleSpec:
        return self.instance.spec

    @property
    def n(self) -> int:
        return self.instance.n

    @property
    def m(self) -> int:
        return self.instance.spec.m

    @property
    def lower_bound(self) -> int:
        return self.rank

    @property
    def conjecture_threshold(self) -> int:
        return self.n - 1

    @property
    def refuted(self) -> bool:
        return self.rank > self.conjecture_threshold

    def to_json(self) -> dict:
        inst = self.instance.to_json()
        assumptions = self.assumptions
        if self.excluded:
            assumptions += " Excluded candidates (failed checks): " + ", ".join(self.excluded) + "."
        return {
            "variant": inst["variant"],
            "m": inst["m"],
            "n": inst["n"],
            "sizes": inst["sizes"],
            "params": inst["params"],
            "beta": inst["beta"],
            "candidates": [{"label": label, "word": list(w.letters)} for label, w in self.candidates],
            "checks": [c.to_json() for c in self.checks],
            "profile_matrix": self.profile_matrix,
            "rank": self.rank,
            "lower_bound": self.lower_bound,
            "conjecture_threshold": self.conjecture_threshold,
            "refuted": self.refuted,
            "assumptions": assumptions,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def default_candidate_set(inst: ExampleInstance) -> list[tuple[str, BraidWord]]:
    """Block twists T_i (non-singleton blocks) followed by block linkings L_jk over all block pairs."""
    structure = inst.structure
    out = []
    for i, size in enumerate(structure.sizes, start=1):
        if size > 1:
            out.append((f"T_{i}", block_twist(i, structure)))
    for j, k in structure.pairs():
        out.append((f"L_{j}{k}" if structure.m < 10 else f"L_{j},{k}", block_linking(j, k, structure)))
    return out


def verify_commutation(beta: BraidWord, candidates: Sequence[tuple[str, BraidWord]]) -> list[bool]:
    """Per-candidate verdicts; a candidate counts as commuting only if both engines say so."""
    return [a and b for a, b in _both_verdicts(beta, candidates)]


def _both_verdicts(beta: BraidWord, candidates: Sequence[tuple[str, BraidWord]]) -> list[tuple[bool, bool]]:
    for label, w in candidates:
        if w.strand_count != beta.strand_count:
            raise BraidError(f"candidate {label} has {w.strand_count} strands, beta has {beta.strand_count}")
    return [commutes_both(w, beta) for _, w in candidates]


def lower_bound_certificate(
    inst: ExampleInstance, candidates: Sequence[tuple[str, BraidWord]] | None = None
) -> CertificateReport:
    if candidates is None:
        candidates = default_candidate_set(inst)
    candidates = list(candidates)
    if not candidates:
        raise BraidError("no candidates given")
    verdicts = _both_verdicts(inst.beta, candidates)
    checks, kept, rows, excluded = [], [], [], []
    for (label, w), (dyn, gar) in zip(candidates, verdicts):
        check = Check(label, dyn and gar, blocks_preserved(w, inst.structure), dyn == gar)
        checks.append(check)
        if check.commutes and check.block_preserving:
            kept.append((label, w))
            rows.append(block_profile(w, inst.structure).vector())
        else:
            excluded.append(label)
    return CertificateReport(
        instance=inst,
        candidates=kept,
        checks=checks,
        profile_matrix=rows,
        rank=integer_rank(rows),
        excluded=excluded,
    )


def load_candidates(path: str, n: int) -> list[tuple[str, BraidWord]]:
    """Read ``[{"label": ..., "word": [ints]}, ...]`` from a JSON file."""
    with open(path) as f:
        data = json.load(f)
    try:
        return [(str(c["label"]), BraidWord(n, tuple(c["word"]))) for c in data]
    except (KeyError, TypeError) as e:
        raise BraidError(f"malformed candidates file {path}: {e}") from None
