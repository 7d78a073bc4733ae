"""
Deciding equality in B_n.

Two independent engines are available: the Dynnikov coordinate action
(``dynnikov``, the default) and the left-greedy Garside normal form
(``garside``). ``burau`` is a faithful 3-strand oracle used for testing.
"""

from __future__ import annotations

from ..braid_core import BraidError, BraidWord, commutator, compose, inverse
from . import burau, dynnikov, garside
from .burau import burau3
from .garside import GarsideNormalForm, normal_form

ENGINES = {
    "dynnikov": dynnikov.is_identity,
    "garside": garside.is_identity,
}


def is_identity(u: BraidWord, engine: str = "dynnikov") -> bool:
    try:
        decide = ENGINES[engine]
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}; choose from {sorted(ENGINES)}") from None
    return decide(u)


def equal(u: BraidWord, v: BraidWord, engine: str = "dynnikov") -> bool:
    return is_identity(compose(u, inverse(v)), engine)


def commutes(u: BraidWord, v: BraidWord, engine: str = "dynnikov") -> bool:
    if u.strand_count != v.strand_count:
        raise BraidError(f"strand counts differ: {u.strand_count} vs {v.strand_count}")
    return is_identity(commutator(u, v), engine)


def commutes_both(u: BraidWord, v: BraidWord) -> tuple[bool, bool]:
    """Commutation verdicts from both engines, (dynnikov, garside)."""
    c = commutator(u, v)
    return dynnikov.is_identity(c), garside.is_identity(c)


__all__ = [
    "ENGINES",
    "GarsideNormalForm",
    "burau",
    "burau3",
    "commutes",
    "commutes_both",
    "dynnikov",
    "equal",
    "garside",
    "is_identity",
    "normal_form",
]
