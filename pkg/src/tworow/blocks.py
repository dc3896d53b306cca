"""1-blocks, the unique block partition, 1-tracks, and track cancellation.

A 1-block is a maximal submatrix M on a row set I and an interval of
consecutive columns (cyclically consecutive when flagged) such that every
entry is nonzero, the submatrix has at least two rows and two columns, and
the null-connectedness graph restricted to I is connected.  Such blocks have
one-dimensional row space, are pairwise disjoint as entry sets, and induce a
unique partition of the matrix into blocks and 1x1 singletons.

A complete 1-track is an abutting chain of members (nonzero 1x1 cells or
minors inside a single block) covering all n columns, with no two consecutive
members inside a common block.  Grouping the nonzero strings of the
determinant expansion by their canonical track shows each track with a
multi-row member sums to zero, which re-derives the determinant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateMatrix,
    IncompleteTrack,
    NotSquare,
    SizeBound,
    SizeMismatch,
    ZeroEntryInString,
)
from .fields import FieldKind, Scalar
from .matrices import ExactMatrix, RowPermutation
from .rowgraph import _null_connected_raw, _vanishes_fn

DEFAULT_TRACK_BOUND = 8


@dataclass(frozen=True)
class OneBlock:
    """Rows I (sorted, 1-based) on columns col_start..col_start+col_len-1,
    taken modulo n when cyclic."""

    rows: tuple[int, ...]
    col_start: int
    col_len: int
    cyclic: bool

    def columns(self, n: int) -> tuple[int, ...]:
        return tuple((self.col_start - 1 + t) % n + 1 for t in range(self.col_len))

    def cells(self, n: int) -> set[tuple[int, int]]:
        cols = self.columns(n)
        return {(i, c) for i in self.rows for c in cols}

    def to_json_dict(self) -> dict:
        return {
            "rows": list(self.rows),
            "cols": {"start": self.col_start, "len": self.col_len, "cyclic": self.cyclic},
        }


@dataclass(frozen=True)
class BlockPartition:
    """The unique split of all cells into 1-blocks and 1x1 singletons."""

    blocks: tuple[OneBlock, ...]
    nonzero_singletons: tuple[tuple[int, int], ...]
    zero_singletons: tuple[tuple[int, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "blocks": [b.to_json_dict() for b in self.blocks],
            "nonzero_singletons": [list(c) for c in self.nonzero_singletons],
            "zero_singletons": [list(c) for c in self.zero_singletons],
        }


@dataclass(frozen=True)
class TrackMember:
    """One track member: a single nonzero cell (one row, one column) or a
    k x k minor inside a 1-block (k >= 2 sorted rows, k consecutive columns)."""

    rows: tuple[int, ...]
    col_start: int
    col_len: int

    @property
    def is_minor(self) -> bool:
        return self.col_len >= 2

    def columns(self, n: int) -> tuple[int, ...]:
        return tuple((self.col_start - 1 + t) % n + 1 for t in range(self.col_len))


@dataclass(frozen=True)
class OneTrack:
    members: tuple[TrackMember, ...]
    cyclic: bool

    @property
    def total_cols(self) -> int:
        return sum(m.col_len for m in self.members)

    def is_complete(self, n: int) -> bool:
        return self.total_cols == n

    @property
    def has_minor(self) -> bool:
        return any(m.is_minor for m in self.members)


@dataclass(frozen=True)
class TrackString:
    """The diagonal-style entry string picked by sigma: entry sigma(i) in column i."""

    sigma: RowPermutation
    entries: tuple[Scalar, ...]


def string_of(a: ExactMatrix, sigma: RowPermutation) -> TrackString:
    if not a.is_square:
        raise NotSquare("strings are defined for square matrices")
    if sigma.n != a.n:
        raise SizeMismatch(f"permutation size {sigma.n} != matrix size {a.n}")
    entries = tuple(a.entry(sigma(i), i) for i in range(1, a.n + 1))
    if not all(entries):
        raise ZeroEntryInString(f"string of {sigma.image} hits a zero entry")
    return TrackString(sigma, entries)


def _nonzero_runs(mask: list[bool], cyclic: bool) -> list[tuple[int, int]]:
    """Maximal all-true runs as (start0, length), length >= 2 only."""
    n = len(mask)
    if cyclic and all(mask):
        return [(0, n)]
    runs = []
    start = None
    for k in range(n):
        if mask[k]:
            if start is None:
                start = k
        else:
            if start is not None:
                runs.append((start, k - start))
                start = None
    if start is not None:
        runs.append((start, n - start))
    if cyclic and len(runs) >= 2 and mask[0] and mask[-1]:
        # merge the run touching column n into the one starting at column 1
        first = runs.pop(0)
        last = runs.pop()
        runs.append((last[0], last[1] + first[1]))
    return [r for r in runs if r[1] >= 2]


def _grow_block(
    rows: set[int],
    start0: int,
    length: int,
    nonzero,
    adj: dict[int, set[int]],
    n: int,
    cyclic: bool,
) -> tuple[tuple[int, ...], int, int]:
    """Close a valid seed under one-step extensions; the fixpoint is the
    unique maximal block containing it."""
    changed = True
    while changed:
        changed = False
        # widen columns while every current row stays nonzero
        while length < n:
            left = (start0 - 1) % n
            if (cyclic or start0 > 0) and all(nonzero[r - 1][left] for r in rows):
                start0, length = left, length + 1
                changed = True
                continue
            right = (start0 + length) % n
            if (cyclic or start0 + length < n) and all(nonzero[r - 1][right] for r in rows):
                length += 1
                changed = True
                continue
            break
        cols = [(start0 + t) % n for t in range(length)]
        for cand in range(1, len(nonzero) + 1):
            if cand in rows:
                continue
            if not adj[cand] & rows:
                continue
            if all(nonzero[cand - 1][c] for c in cols):
                rows.add(cand)
                changed = True
    if cyclic and length == n:
        start0 = 0
    return tuple(sorted(rows)), start0, length


def find_one_blocks(a: ExactMatrix, cyclic: bool = False) -> list[OneBlock]:
    """All maximal 1-blocks, sorted by smallest row then start column.

    Seeds are (null-connected row pair, maximal all-nonzero column run);
    each seed is grown to its fixpoint under one-step extensions.  Distinct
    blocks are disjoint, so every seed lands in exactly one block.
    """
    if a.n < 2:
        raise DegenerateMatrix("1-blocks need at least two columns")
    raw = a.raw()
    m, n = a.m, a.n
    vanishes = _vanishes_fn(a)
    nonzero = [[v != 0 for v in row] for row in raw]
    adj: dict[int, set[int]] = {i: set() for i in range(1, m + 1)}
    for i in range(m):
        for j in range(i + 1, m):
            if _null_connected_raw(raw[i], raw[j], vanishes, cyclic):
                adj[i + 1].add(j + 1)
                adj[j + 1].add(i + 1)
    found: dict[tuple, OneBlock] = {}
    cell_cover: set[tuple[int, int]] = set()
    for i in range(1, m + 1):
        for j in sorted(adj[i]):
            if j < i:
                continue
            mask = [nonzero[i - 1][k] and nonzero[j - 1][k] for k in range(n)]
            for start0, length in _nonzero_runs(mask, cyclic):
                if all(
                    (r, (start0 + t) % n) in cell_cover
                    for r in (i, j)
                    for t in range(length)
                ):
                    continue  # seed already inside a found block
                rows, s0, ln = _grow_block(
                    {i, j}, start0, length, nonzero, adj, n, cyclic
                )
                key = (rows, s0, ln)
                if key not in found:
                    block = OneBlock(rows, s0 + 1, ln, cyclic)
                    found[key] = block
                    for r in rows:
                        for t in range(ln):
                            cell_cover.add((r, (s0 + t) % n))
    return sorted(found.values(), key=lambda b: (b.rows[0], b.col_start))


def block_partition(a: ExactMatrix, cyclic: bool = False) -> BlockPartition:
    blocks = find_one_blocks(a, cyclic)
    covered = set()
    for b in blocks:
        covered |= b.cells(a.n)
    raw = a.raw()
    nonzero_single = []
    zero_single = []
    for i in range(1, a.m + 1):
        for j in range(1, a.n + 1):
            if (i, j) in covered:
                continue
            if raw[i - 1][j - 1]:
                nonzero_single.append((i, j))
            else:
                zero_single.append((i, j))
    return BlockPartition(tuple(blocks), tuple(nonzero_single), tuple(zero_single))


def _cell_block_index(a: ExactMatrix, blocks) -> dict[tuple[int, int], int]:
    cellmap: dict[tuple[int, int], int] = {}
    for idx, b in enumerate(blocks):
        for cell in b.cells(a.n):
            cellmap[cell] = idx
    return cellmap


def _canonical_track(cells: list, image: tuple[int, ...], cyclic: bool, n: int) -> OneTrack:
    """Greedy maximal same-block runs over the string's cells.

    cells[p] is the block index containing (image[p], p+1), or None.
    """
    members = []
    if not cyclic:
        pos = 0
        while pos < n:
            b = cells[pos]
            end = pos
            if b is not None:
                while end + 1 < n and cells[end + 1] == b:
                    end += 1
            rows = tuple(sorted(image[pos : end + 1]))
            members.append(TrackMember(rows, pos + 1, end - pos + 1))
            pos = end + 1
        return OneTrack(tuple(members), False)
    merged = [
        cells[p] is not None and cells[p] == cells[(p + 1) % n] for p in range(n)
    ]
    if all(merged):
        return OneTrack(
            (TrackMember(tuple(sorted(image)), 1, n),), True
        )
    starts = [p for p in range(n) if not merged[(p - 1) % n]]
    for p in starts:
        end = p
        length = 1
        while merged[end]:
            end = (end + 1) % n
            length += 1
        rows = tuple(sorted(image[(p + t) % n] for t in range(length)))
        members.append(TrackMember(rows, p + 1, length))
    return OneTrack(tuple(members), True)


def track_of_string(
    a: ExactMatrix, sigma: RowPermutation, cyclic: bool = False
) -> OneTrack:
    """The canonical complete track of the string picked by sigma: extend a
    run while consecutive string cells share one block, else cut."""
    string_of(a, sigma)  # validates shape and nonzero entries
    blocks = find_one_blocks(a, cyclic) if a.n >= 2 else []
    cellmap = _cell_block_index(a, blocks)
    image = sigma.image
    cells = [cellmap.get((image[p], p + 1)) for p in range(a.n)]
    return _canonical_track(cells, image, cyclic, a.n)


def track_sum(a: ExactMatrix, track: OneTrack) -> Scalar:
    """Sum of sgn(sigma) * product(entries) over all strings belonging to the
    track.  Zero whenever some member is a true minor (>= 2 rows)."""
    if not a.is_square:
        raise NotSquare("track sums are defined for square matrices")
    n = a.n
    if not track.is_complete(n):
        raise IncompleteTrack(
            f"track covers {track.total_cols} of {n} columns"
        )
    all_rows = sorted(r for mb in track.members for r in mb.rows)
    spec = a.spec
    if all_rows != list(range(1, n + 1)):
        return spec.zero  # no string can belong to such a track
    raw = a.raw()
    member_cols = [mb.columns(n) for mb in track.members]
    member_perms = [
        list(itertools.permutations(mb.rows)) for mb in track.members
    ]
    if spec.kind is FieldKind.RATIONAL:
        total = Fraction(0)
    else:
        total = 0
    p = spec.p
    for combo in itertools.product(*member_perms):
        image = [0] * n
        for cols, rows in zip(member_cols, combo):
            for c, r in zip(cols, rows):
                image[c - 1] = r
        prod = raw[image[0] - 1][0]
        for c in range(1, n):
            prod *= raw[image[c] - 1][c]
            if not prod:
                break
        if not prod:
            continue
        term = prod if _parity(image) else -prod
        if spec.kind is FieldKind.RATIONAL:
            total += term
        else:
            total = (total + term) % p
    return spec.scalar(total)


def _parity(image: list[int]) -> bool:
    """True for even permutations; image is 1-based values in list positions."""
    n = len(image)
    seen = [False] * n
    even = True
    for start in range(n):
        if seen[start]:
            continue
        k = start
        length = 0
        while not seen[k]:
            seen[k] = True
            k = image[k] - 1
            length += 1
        if length % 2 == 0:
            even = not even
    return even


def complete_tracks(
    a: ExactMatrix, cyclic: bool = False, max_size: int = DEFAULT_TRACK_BOUND
) -> list[OneTrack]:
    """Distinct canonical tracks of all nonzero strings, in first-seen order
    of the lexicographic string enumeration."""
    if not a.is_square:
        raise NotSquare("track enumeration needs a square matrix")
    if a.n > max_size:
        raise SizeBound(f"n={a.n} exceeds the track enumeration bound {max_size}")
    n = a.n
    raw = a.raw()
    blocks = find_one_blocks(a, cyclic) if n >= 2 else []
    cellmap = _cell_block_index(a, blocks)
    col_rows = [
        [r + 1 for r in range(n) if raw[r][c]] for c in range(n)
    ]
    tracks: dict[OneTrack, None] = {}
    image = [0] * n
    used = [False] * n

    def assign(c: int) -> None:
        if c == n:
            cells = [cellmap.get((image[p], p + 1)) for p in range(n)]
            track = _canonical_track(cells, tuple(image), cyclic, n)
            tracks.setdefault(track)
            return
        for r in col_rows[c]:
            if not used[r - 1]:
                used[r - 1] = True
                image[c] = r
                assign(c + 1)
                used[r - 1] = False

    assign(0)
    return list(tracks)


def det_by_tracks(
    a: ExactMatrix, cyclic: bool = False, max_size: int = DEFAULT_TRACK_BOUND
) -> Scalar:
    """Determinant via the string expansion grouped by canonical track."""
    total = a.spec.zero
    for track in complete_tracks(a, cyclic, max_size):
        total = total + track_sum(a, track)
    return total
