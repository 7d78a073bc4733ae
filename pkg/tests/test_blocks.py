import random

import pytest

from braidcent.blocks import (
    BlockStructure,
    Cross,
    Interior,
    block_crossing,
    block_linking,
    block_profile,
    block_twist,
    blocks_preserved,
    cable,
    tube_projection,
    tube_word_letters,
    tube_word_of_cable,
)
from braidcent.braid_core import BraidError, BraidWord, compose, compose_all, free_reduce, inverse, parse_word, track_positions
from braidcent.pure_braid import linking_matrix
from braidcent.word_problem import commutes, equal, garside, is_identity

from helpers import random_pure_word, random_word


def S(*sizes):
    return BlockStructure(sizes)


def test_structure_validation():
    assert S(2, 1, 3).strand_count == 6
    assert list(S(2, 1, 3).strands(3)) == [4, 5, 6]
    for bad in [(), (0, 2), (2, -1)]:
        with pytest.raises(BraidError):
            BlockStructure(bad)


def test_blocks_preserved_examples():
    assert blocks_preserved(parse_word("1", 4), S(2, 2))
    assert not blocks_preserved(parse_word("2", 4), S(2, 2))
    assert blocks_preserved(cable(parse_word("1 1", 2), 2), S(2, 2))
    with pytest.raises(BraidError):
        blocks_preserved(parse_word("1", 3), S(2, 2))


def test_block_crossing_examples():
    assert block_crossing(1, S(1, 1)).letters == (1,)
    assert block_crossing(1, S(2, 2)).letters == (2, 3, 1, 2)
    assert block_crossing(1, S(2, 2), -1).letters == (-2, -1, -3, -2)
    with pytest.raises(BraidError):
        block_crossing(2, S(2, 2))


def end_labels(u):
    return track_positions(u)


def test_block_crossing_moves_blocks_rigidly():
    for sizes in [(1, 1), (2, 2), (2, 3), (3, 1), (1, 2, 3), (3, 3, 2)]:
        st = BlockStructure(sizes)
        for t in range(1, st.m):
            for sign in (1, -1):
                c = block_crossing(t, st, sign)
                p, q = sizes[t - 1], sizes[t]
                assert len(c) == p * q
                o = st.offset(t)
                left, right = list(range(o + 1, o + p + 1)), list(range(o + p + 1, o + p + q + 1))
                # interior order preserved, blocks swapped
                assert end_labels(c)[o : o + p + q] == right + left
                # every cross pair crosses exactly once, with the given sign
                counts = {}
                labels = list(range(1, st.strand_count + 1))
                for g in c.letters:
                    i = abs(g)
                    pair = frozenset((labels[i - 1], labels[i]))
                    counts[pair] = counts.get(pair, 0) + (1 if g > 0 else -1)
                    labels[i - 1], labels[i] = labels[i], labels[i - 1]
                assert counts == {frozenset((a, b)): sign for a in left for b in right}


def test_cable_examples():
    assert cable(parse_word("1", 2), 2).letters == (2, 3, 1, 2)
    assert cable(BraidWord(3), 3) == BraidWord(9)
    rel = cable(parse_word("1 2 1 -2 -1 -2", 3), 2)
    assert rel.strand_count == 6
    assert is_identity(rel) and garside.is_identity(rel)


def test_tube_projection_examples():
    st = S(2, 2)
    assert tube_projection([Cross(1, 1)], st).letters == (1,)
    assert tube_projection([Interior(2, parse_word("3 3", 4))], st) == BraidWord(2)
    with pytest.raises(BraidError):
        tube_projection([Interior(1, parse_word("2", 4))], st)
    with pytest.raises(BraidError):
        tube_projection([Cross(2, 1)], st)
    with pytest.raises(BraidError):
        tube_projection(["junk"], st)


def test_section_property():
    rng = random.Random(31)
    for _ in range(100):
        m, s = rng.randint(1, 5), rng.choice([2, 3])
        gamma = random_word(rng, m, rng.randint(0, 12))
        tokens = tube_word_of_cable(gamma, s)
        assert tube_word_letters(tokens, BlockStructure.uniform(m, s)) == cable(gamma, s)
        assert free_reduce(tube_projection(tokens, BlockStructure.uniform(m, s))) == free_reduce(gamma)


def test_cable_multiplicative():
    rng = random.Random(32)
    for _ in range(30):
        m, s = rng.randint(2, 4), rng.choice([2, 3])
        u, v = random_word(rng, m, 6), random_word(rng, m, 6)
        assert equal(cable(compose(u, v), s), compose(cable(u, s), cable(v, s)))


def test_cable_respects_relations():
    for s in (2, 3):
        assert equal(cable(parse_word("1 2 1", 3), s), cable(parse_word("2 1 2", 3), s))
        assert equal(cable(parse_word("1 3", 4), s), cable(parse_word("3 1", 4), s))
        assert not is_identity(cable(parse_word("1 1", 2), s))


def test_block_twist_examples():
    assert block_twist(1, S(2, 2)).letters == (1, 1)
    assert block_twist(1, S(3, 3)).letters == (1, 2, 1, 2, 1, 2)
    assert block_twist(2, S(2, 1)) == BraidWord(3)
    assert block_twist(2, S(1, 3)).letters == (2, 3) * 3
    with pytest.raises(BraidError):
        block_twist(3, S(2, 2))


def test_block_twist_is_central_in_its_block():
    st = S(3, 2, 3)
    for i in range(1, st.m + 1):
        tw = block_twist(i, st)
        inner = st.strands(i)
        for g in range(inner.start, inner.stop - 1):
            assert commutes(tw, BraidWord(8, (g,)))
        for j in range(1, st.m + 1):
            if j != i:
                other = st.strands(j)
                w = BraidWord(8, tuple(range(other.start, other.stop - 1)) * 2)
                assert commutes(tw, w)
                assert commutes(tw, block_twist(j, st))


def test_block_linking_examples():
    assert block_linking(1, 2, S(2, 2)).letters == (2, 3, 1, 2, 2, 3, 1, 2)
    st = BlockStructure.uniform(3, 2)
    lk = linking_matrix(block_linking(1, 3, st))
    ones = {(a, b) for a in (1, 2) for b in (5, 6)}
    assert all(v == (1 if p in ones else 0) for p, v in lk.items())
    lk = linking_matrix(block_linking(1, 2, S(2, 1)))
    assert dict(lk.items()) == {(1, 2): 0, (1, 3): 1, (2, 3): 1}
    with pytest.raises(BraidError):
        block_linking(2, 2, st)


@pytest.mark.parametrize("sizes", [(2, 2, 2), (2, 2, 1), (3, 1, 2, 3), (1, 1, 1, 1)])
def test_block_linking_links_exactly_its_blocks(sizes):
    st = BlockStructure(sizes)
    owner = st.block_of()
    for j, k in st.pairs():
        u = block_linking(j, k, st)
        assert blocks_preserved(u, st)
        for (a, b), v in linking_matrix(u).items():
            assert v == (1 if {owner[a - 1], owner[b - 1]} == {j, k} else 0)


def test_block_profile_examples():
    st = S(2, 2)
    prof = block_profile(block_twist(1, st), st)
    assert prof.internal == (2, 0) and prof.cross == {(1, 2): 0}
    c = block_crossing(1, st)
    prof = block_profile(compose(c, c), st)
    assert prof.internal == (0, 0) and prof.cross == {(1, 2): 8}
    st3 = BlockStructure.uniform(3, 2)
    prof = block_profile(block_linking(1, 3, st3), st3)
    assert prof.vector() == [0, 0, 0, 0, 8, 0]
    with pytest.raises(BraidError):
        block_profile(parse_word("2", 4), st)


def random_block_preserving(rng, st, pieces):
    """Random block-preserving word: interiors, block linkings, and conjugated interiors."""
    n = st.strand_count
    parts = []
    for _ in range(pieces):
        kind = rng.randrange(3)
        if kind == 0:
            i = rng.randint(1, st.m)
            inner = st.strands(i)
            gens = list(range(inner.start, inner.stop - 1))
            if gens:
                parts.append(BraidWord(n, tuple(rng.choice(gens) * rng.choice((1, -1)) for _ in range(4))))
        elif kind == 1 and st.m > 1:
            j, k = rng.choice(st.pairs())
            u = block_linking(j, k, st)
            parts.append(u if rng.random() < 0.5 else inverse(u))
        elif st.m > 1:
            t = rng.randint(1, st.m - 1)
            moved = st.swapped(t)
            inner = moved.strands(t)
            gens = list(range(inner.start, inner.stop - 1)) or [None]
            g = rng.choice(gens)
            interior = [Interior(t, BraidWord(n, (g, g)))] if g else []
            sign = rng.choice((1, -1))
            parts.append(tube_word_letters([Cross(t, sign), *interior, Cross(t, -sign)], st))
    return compose_all(parts, n)


def test_block_profile_homomorphism():
    rng = random.Random(33)
    for _ in range(100):
        st = BlockStructure(tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 4))))
        u, v = random_block_preserving(rng, st, 5), random_block_preserving(rng, st, 5)
        assert blocks_preserved(u, st) and blocks_preserved(v, st)
        assert block_profile(compose(u, v), st) == block_profile(u, st) + block_profile(v, st)


def test_block_profile_matches_linking_numbers():
    rng = random.Random(34)
    for _ in range(100):
        st = BlockStructure(tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 4))))
        u = random_pure_word(rng, st.strand_count, 30)
        owner = st.block_of()
        prof, lk = block_profile(u, st), linking_matrix(u)
        internal = [0] * st.m
        cross = {p: 0 for p in st.pairs()}
        for (a, b), v in lk.items():
            ba, bb = owner[a - 1], owner[b - 1]
            if ba == bb:
                internal[ba - 1] += 2 * v
            else:
                cross[(min(ba, bb), max(ba, bb))] += 2 * v
        assert prof.internal == tuple(internal) and prof.cross == cross


def test_cabled_pure_braid_profile():
    """Cabling a pure braid on m strands by size s multiplies each linking number by s² in the cross profile."""
    rng = random.Random(35)
    for _ in range(20):
        m, s = rng.randint(2, 4), rng.choice([2, 3])
        gamma = random_pure_word(rng, m, 10)
        st = BlockStructure.uniform(m, s)
        prof = block_profile(cable(gamma, s), st)
        lk = linking_matrix(gamma)
        assert prof.internal == (0,) * m
        assert prof.cross == {p: 2 * s * s * v for p, v in lk.items()}
