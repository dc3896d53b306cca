import itertools
import math
import random

import pytest

from tworow import (
    GF2,
    GF3,
    QQ,
    DegenerateMatrix,
    ExactMatrix,
    IncompleteTrack,
    NotSquare,
    OneTrack,
    RowPermutation,
    SizeBound,
    SizeMismatch,
    ZeroEntryInString,
    block_partition,
    complete_tracks,
    det_by_tracks,
    determinant,
    find_one_blocks,
    string_of,
    track_of_string,
    track_sum,
)
from tworow.blocks import TrackMember

from .conftest import ALL_SPECS, random_matrix
from .oracles import brute_one_blocks, naive_determinant, nonzero_strings, rank_one_over_field


def as_triples(blocks):
    return {(b.rows, b.col_start, b.col_len) for b in blocks}


def test_golden_plain_blocks(golden_7x7):
    blocks = find_one_blocks(golden_7x7)
    assert as_triples(blocks) == {((1, 3), 1, 3)}
    assert blocks[0].columns(7) == (1, 2, 3)
    assert not blocks[0].cyclic


def test_golden_cyclic_blocks(golden_7x7):
    blocks = find_one_blocks(golden_7x7, cyclic=True)
    # the {1,3} block extends through the wraparound to column 7; the pair
    # {6,7} forms the wrapped block on columns 7,1
    assert as_triples(blocks) == {((1, 3), 7, 4), ((6, 7), 7, 2)}
    assert ((6, 7), 7, 2) in as_triples(blocks)
    by_rows = {b.rows: b for b in blocks}
    assert by_rows[(6, 7)].columns(7) == (7, 1)
    assert by_rows[(1, 3)].columns(7) == (7, 1, 2, 3)


def test_identity_has_no_blocks():
    for n in (2, 4, 7):
        assert find_one_blocks(ExactMatrix.identity(GF2, n)) == []
        assert find_one_blocks(ExactMatrix.identity(GF2, n), cyclic=True) == []


def test_proportional_rows_single_block():
    a = ExactMatrix(QQ, [[1, 1], [2, 2]])
    assert as_triples(find_one_blocks(a)) == {((1, 2), 1, 2)}
    assert as_triples(find_one_blocks(a, cyclic=True)) == {((1, 2), 1, 2)}


def test_degenerate_matrix_guard():
    with pytest.raises(DegenerateMatrix):
        find_one_blocks(ExactMatrix(QQ, [[1], [2]]))
    with pytest.raises(DegenerateMatrix):
        block_partition(ExactMatrix(QQ, [[1], [2]]))


def test_abutting_blocks_have_disjoint_rows():
    a = ExactMatrix(QQ, [[1, 1, 0, 0], [2, 2, 0, 0], [0, 0, 1, 1], [0, 0, 3, 3]])
    for cyclic in (False, True):
        blocks = find_one_blocks(a, cyclic)
        assert as_triples(blocks) == {((1, 2), 1, 2), ((3, 4), 3, 2)}
        for b1, b2 in itertools.permutations(blocks, 2):
            end = (b1.col_start - 1 + b1.col_len) % a.n + 1
            if end == b2.col_start:
                assert not set(b1.rows) & set(b2.rows)


@pytest.mark.parametrize("spec", ALL_SPECS)
@pytest.mark.parametrize("cyclic", [False, True])
def test_blocks_match_brute_force(spec, cyclic):
    rng = random.Random(97 if cyclic else 96)
    for _ in range(30):
        m, n = rng.randint(2, 5), rng.randint(2, 5)
        a = random_matrix(rng, spec, m, n)
        got = as_triples(find_one_blocks(a, cyclic))
        assert got == brute_one_blocks(a, cyclic), a.to_json_dict()


@pytest.mark.parametrize("cyclic", [False, True])
def test_block_invariants_random(cyclic):
    rng = random.Random(11)
    for _ in range(60):
        spec = rng.choice(ALL_SPECS)
        m, n = rng.randint(2, 6), rng.randint(2, 6)
        a = random_matrix(rng, spec, m, n)
        blocks = find_one_blocks(a, cyclic)
        assert blocks == find_one_blocks(a, cyclic)  # deterministic
        order = [(b.rows[0], b.col_start) for b in blocks]
        assert order == sorted(order)
        seen_cells = set()
        for b in blocks:
            assert len(b.rows) >= 2 and b.col_len >= 2
            assert rank_one_over_field(a, b.rows, b.columns(n))
            cells = b.cells(n)
            assert not cells & seen_cells  # pairwise disjoint
            seen_cells |= cells
        part = block_partition(a, cyclic)
        cover = dict()
        for b in part.blocks:
            for cell in b.cells(n):
                assert cell not in cover
                cover[cell] = "block"
        raw = a.raw()
        for i, j in part.nonzero_singletons:
            assert cell_free(cover, i, j)
            assert raw[i - 1][j - 1] != 0 if spec is QQ else raw[i - 1][j - 1] % spec.p != 0
        for i, j in part.zero_singletons:
            assert cell_free(cover, i, j)
        total = (
            sum(len(b.rows) * b.col_len for b in part.blocks)
            + len(part.nonzero_singletons)
            + len(part.zero_singletons)
        )
        assert total == m * n


def cell_free(cover, i, j):
    if (i, j) in cover:
        return False
    cover[(i, j)] = "single"
    return True


def test_golden_partition_counts(golden_7x7):
    part = block_partition(golden_7x7)
    assert len(part.blocks) == 1
    assert len(part.nonzero_singletons) == 25 - 6
    assert len(part.zero_singletons) == 24
    doc = part.to_json_dict()
    assert doc["blocks"][0] == {
        "rows": [1, 3],
        "cols": {"start": 1, "len": 3, "cyclic": False},
    }


def test_zero_matrix_partition():
    part = block_partition(ExactMatrix.zeros(GF3, 3, 4))
    assert part.blocks == ()
    assert part.nonzero_singletons == ()
    assert len(part.zero_singletons) == 12


def test_string_of_validation(golden_7x7):
    sigma = RowPermutation((1, 4, 3, 2, 7, 5, 6))
    s = string_of(golden_7x7, sigma)
    assert len(s.entries) == 7 and all(s.entries)
    with pytest.raises(ZeroEntryInString):
        string_of(golden_7x7, RowPermutation.identity(7))  # (4,4) is zero
    with pytest.raises(NotSquare):
        string_of(ExactMatrix(GF2, [[1, 0]]), RowPermutation.identity(1))
    with pytest.raises(SizeMismatch):
        string_of(golden_7x7, RowPermutation.identity(6))


def test_track_of_identity_matrix():
    a = ExactMatrix.identity(GF2, 5)
    track = track_of_string(a, RowPermutation.identity(5))
    assert len(track.members) == 5
    assert all(m.col_len == 1 and len(m.rows) == 1 for m in track.members)
    assert track_sum(a, track) == GF2.one


def test_track_of_proportional_matrix():
    a = ExactMatrix(QQ, [[1, 1], [2, 2]])
    track = track_of_string(a, RowPermutation.identity(2))
    assert len(track.members) == 1
    assert track.members[0].rows == (1, 2)
    assert track.members[0].col_len == 2
    # 1*2 - 1*2 = 0: a true minor member forces cancellation
    assert track_sum(a, track) == QQ.zero
    assert det_by_tracks(a) == QQ.zero


def test_golden_track_enters_block(golden_7x7):
    track = track_of_string(golden_7x7, RowPermutation((3, 1, 6, 2, 4, 5, 7)))
    first = track.members[0]
    assert first.rows == (1, 3) and first.col_start == 1 and first.col_len == 2
    assert track_sum(golden_7x7, track) == GF2.zero


def test_singleton_members_inside_block(golden_7x7):
    # cells (1,1) and (3,3) are in the block, (4,2) is not: the greedy cut
    # leaves two singleton members sitting inside the block
    track = track_of_string(golden_7x7, RowPermutation((1, 4, 3, 2, 7, 5, 6)))
    members = track.members[:3]
    assert [m.col_len for m in members] == [1, 1, 1]
    assert members[0].rows == (1,) and members[2].rows == (3,)


def test_cyclic_track_canonical_rotation():
    a = ExactMatrix(QQ, [[1, 1], [2, 2]])
    track = track_of_string(a, RowPermutation.identity(2), cyclic=True)
    assert track.cyclic
    assert len(track.members) == 1
    assert track.members[0].col_start == 1 and track.members[0].col_len == 2


def test_track_sum_incomplete_raises(golden_7x7):
    track = track_of_string(golden_7x7, RowPermutation((1, 4, 3, 2, 7, 5, 6)))
    clipped = OneTrack(track.members[:-1], track.cyclic)
    with pytest.raises(IncompleteTrack):
        track_sum(golden_7x7, clipped)


def test_track_sum_disjoint_row_track_is_zero():
    a = ExactMatrix(QQ, [[1, 1], [2, 2]])
    weird = OneTrack((TrackMember((1,), 1, 1), TrackMember((1,), 2, 1)), False)
    assert track_sum(a, weird) == QQ.zero


def test_minor_tracks_sum_to_zero_exhaustive_gf2():
    for bits in range(2**9):
        rows = [[bits >> (3 * r + c) & 1 for c in range(3)] for r in range(3)]
        a = ExactMatrix(GF2, rows)
        for cyclic in (False, True):
            for track in complete_tracks(a, cyclic):
                if track.has_minor:
                    assert track_sum(a, track) == GF2.zero


def test_det_by_tracks_exhaustive_gf2_3x3():
    for bits in range(2**9):
        rows = [[bits >> (3 * r + c) & 1 for c in range(3)] for r in range(3)]
        a = ExactMatrix(GF2, rows)
        expected = naive_determinant(a)
        assert det_by_tracks(a).value == expected
        assert det_by_tracks(a, cyclic=True).value == expected


@pytest.mark.parametrize("spec", ALL_SPECS)
@pytest.mark.parametrize("cyclic", [False, True])
def test_det_by_tracks_random(spec, cyclic):
    rng = random.Random(23)
    for _ in range(15):
        n = rng.randint(1, 5)
        a = random_matrix(rng, spec, n, n)
        assert det_by_tracks(a, cyclic) == determinant(a)


@pytest.mark.parametrize("cyclic", [False, True])
def test_string_partition_into_tracks(cyclic):
    rng = random.Random(31)
    for _ in range(20):
        spec = rng.choice(ALL_SPECS)
        n = rng.randint(2, 5)
        a = random_matrix(rng, spec, n, n)
        strings = nonzero_strings(a)
        tracks = complete_tracks(a, cyclic)
        by_track = {}
        for image in strings:
            tr = track_of_string(a, RowPermutation(image), cyclic)
            by_track.setdefault(tr, []).append(image)
        assert set(tracks) == set(by_track)
        # member-wise bijection count: every track's string fiber is full
        for tr, members in by_track.items():
            expected = math.prod(math.factorial(len(m.rows)) for m in tr.members)
            assert len(members) == expected
        assert sum(len(v) for v in by_track.values()) == len(strings)


def test_complete_tracks_bound():
    with pytest.raises(SizeBound):
        complete_tracks(ExactMatrix.identity(GF2, 9))
    with pytest.raises(SizeBound):
        det_by_tracks(ExactMatrix.identity(GF2, 9))
    assert det_by_tracks(ExactMatrix.identity(GF2, 9), max_size=9) == GF2.one
    with pytest.raises(NotSquare):
        complete_tracks(ExactMatrix(GF2, [[1, 0]]))


def test_det_by_tracks_1x1():
    a = ExactMatrix(QQ, [["7"]])
    assert det_by_tracks(a) == QQ.scalar(7)


def test_singular_3x3_by_tracks(singular_3x3):
    assert det_by_tracks(singular_3x3) == GF2.zero
    assert determinant(singular_3x3) == GF2.zero
