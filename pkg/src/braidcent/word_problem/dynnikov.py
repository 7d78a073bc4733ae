"""
Dynnikov coordinate action of B_n on integral laminations of the punctured disc.

A lamination is recorded as ``(a_1, b_1, ..., a_n, b_n)``; the base lamination
is ``(0, 1, 0, 1, ..., 0, 1)``. Letters act on the right, in word order, by the
piecewise-linear update formulas below (Dehornoy's convention). Only the four
coordinates a_i, b_i, a_{i+1}, b_{i+1} change under σ_i^{±1}. The action is
faithful, so a braid is trivial iff it fixes the base lamination.

Python integers are unbounded, which matters here: coordinates grow
exponentially with the word length.
"""

from __future__ import annotations

from ..braid_core import BraidWord


def _pos(x: int) -> int:
    return x if x > 0 else 0


def _neg(x: int) -> int:
    return x if x < 0 else 0


def base_coordinates(n: int) -> tuple[int, ...]:
    return (0, 1) * n


def act(coords: tuple[int, ...], u: BraidWord) -> tuple[int, ...]:
    """Apply the word u letter by letter to a coordinate vector of length 2n."""
    if len(coords) != 2 * u.strand_count:
        raise ValueError(f"expected {2 * u.strand_count} coordinates, got {len(coords)}")
    x = list(coords)
    for g in u.letters:
        i = 2 * (abs(g) - 1)
        a1, b1, a2, b2 = x[i], x[i + 1], x[i + 2], x[i + 3]
        if g > 0:
            c = a1 - _neg(b1) - a2 + _pos(b2)
            x[i] = a1 + _pos(b1) + _pos(_pos(b2) - c)
            x[i + 1] = b2 - _pos(c)
            x[i + 2] = a2 + _neg(b2) + _neg(_neg(b1) + c)
            x[i + 3] = b1 + _pos(c)
        else:
            d = a1 + _neg(b1) - a2 - _pos(b2)
            x[i] = a1 - _pos(b1) - _pos(_pos(b2) + d)
            x[i + 1] = b2 + _neg(d)
            x[i + 2] = a2 - _neg(b2) - _neg(_neg(b1) - d)
            x[i + 3] = b1 - _neg(d)
    return tuple(x)


def coordinates(u: BraidWord) -> tuple[int, ...]:
    return act(base_coordinates(u.strand_count), u)


def is_identity(u: BraidWord) -> bool:
    return coordinates(u) == base_coordinates(u.strand_count)
