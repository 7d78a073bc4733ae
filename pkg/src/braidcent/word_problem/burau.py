"""Reduced Burau representation of B_3 over Z[t, t^{-1}]; faithful, so it decides triviality for n = 3."""

from __future__ import annotations

from collections import defaultdict

from ..braid_core import BraidError, BraidWord

# A Laurent polynomial is a dict {exponent: nonzero coefficient}; a matrix is a 2x2 tuple of them.
Laurent = dict
Matrix = tuple


def _add(p: Laurent, q: Laurent) -> Laurent:
    out = defaultdict(int, p)
    for e, c in q.items():
        out[e] += c
    return {e: c for e, c in out.items() if c}


def _mul(p: Laurent, q: Laurent) -> Laurent:
    out: defaultdict[int, int] = defaultdict(int)
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] += c1 * c2
    return {e: c for e, c in out.items() if c}


def matmul(x: Matrix, y: Matrix) -> Matrix:
    return tuple(
        tuple(_add(_mul(x[r][0], y[0][c]), _mul(x[r][1], y[1][c])) for c in range(2))
        for r in range(2)
    )


ONE = {0: 1}
ZERO: Laurent = {}
IDENTITY = ((ONE, ZERO), (ZERO, ONE))

GENERATORS = {
    1: (({1: -1}, ONE), (ZERO, ONE)),
    -1: (({-1: -1}, {-1: 1}), (ZERO, ONE)),
    2: ((ONE, ZERO), ({1: 1}, {1: -1})),
    -2: ((ONE, ZERO), (ONE, {-1: -1})),
}


def burau3(u: BraidWord) -> Matrix:
    if u.strand_count != 3:
        raise BraidError(f"burau3 needs a 3-strand braid, got n={u.strand_count}")
    m = IDENTITY
    for g in u.letters:
        m = matmul(m, GENERATORS[g])
    return m


def is_identity(u: BraidWord) -> bool:
    return burau3(u) == IDENTITY
