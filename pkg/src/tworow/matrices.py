"""Exact matrices, consecutive 2x2 minors, row permutations, determinants.

Rows and columns are 1-indexed throughout the public API; entry(i, j) is the
entry of row i in column j.  Matrices are immutable after construction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import (
    FieldMismatch,
    IndexOutOfRange,
    NotSquare,
    ParseError,
    SizeMismatch,
)
from .fields import FieldKind, FieldSpec, Scalar, parse_field


class ExactMatrix:
    """An immutable m x n matrix of Scalars over a single FieldSpec."""

    __slots__ = ("spec", "m", "n", "_rows", "_raw")

    def __init__(self, spec: FieldSpec, rows) -> None:
        built = []
        for row in rows:
            scalars = tuple(
                v if isinstance(v, Scalar) and v.spec == spec
                else spec.parse_scalar(v) if isinstance(v, str)
                else Scalar(spec, v)
                for v in row
            )
            built.append(scalars)
        if not built or not built[0]:
            raise SizeMismatch("matrices need at least one row and one column")
        width = len(built[0])
        if any(len(r) != width for r in built):
            raise SizeMismatch("ragged rows: all rows must share one length")
        for r in built:
            for v in r:
                if v.spec != spec:
                    raise FieldMismatch("entry spec differs from matrix spec")
        self.spec = spec
        self.m = len(built)
        self.n = width
        self._rows = tuple(built)
        self._raw = None

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "ExactMatrix":
        return cls(spec, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, spec: FieldSpec, m: int, n: int) -> "ExactMatrix":
        return cls(spec, [[0] * n for _ in range(m)])

    @property
    def is_square(self) -> bool:
        return self.m == self.n

    def entry(self, i: int, j: int) -> Scalar:
        self._check_row(i)
        if not 1 <= j <= self.n:
            raise IndexOutOfRange(f"column {j} outside 1..{self.n}")
        return self._rows[i - 1][j - 1]

    def row(self, i: int) -> tuple[Scalar, ...]:
        self._check_row(i)
        return self._rows[i - 1]

    def scalar_rows(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._rows

    def raw(self):
        """Row-major tuple of plain values (int residues or Fractions), cached."""
        if self._raw is None:
            self._raw = tuple(tuple(v.value for v in r) for r in self._rows)
        return self._raw

    def _check_row(self, i: int) -> None:
        if not 1 <= i <= self.m:
            raise IndexOutOfRange(f"row {i} outside 1..{self.m}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.spec == other.spec and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.spec, self._rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in r) for r in self._rows)
        return f"ExactMatrix({self.spec.name}, [{body}])"

    def to_json_dict(self) -> dict:
        return {
            "field": self.spec.name,
            "rows": [[str(v) for v in r] for r in self._rows],
        }

    @staticmethod
    def from_json_dict(obj) -> "ExactMatrix":
        if not isinstance(obj, dict) or "field" not in obj or "rows" not in obj:
            raise ParseError('matrix document needs "field" and "rows" keys')
        spec = parse_field(str(obj["field"]))
        rows = obj["rows"]
        if not isinstance(rows, list) or not rows:
            raise ParseError('"rows" must be a non-empty list of rows')
        out = []
        for r, row in enumerate(rows, start=1):
            if not isinstance(row, list) or not row:
                raise ParseError(f"row {r} must be a non-empty list of entries")
            parsed = []
            for c, cell in enumerate(row, start=1):
                if isinstance(cell, str):
                    try:
                        parsed.append(spec.parse_scalar(cell))
                    except ParseError as exc:
                        raise ParseError(f"row {r}, column {c}: {exc}") from exc
                elif isinstance(cell, int):
                    parsed.append(spec.scalar(cell))
                else:
                    raise ParseError(f"row {r}, column {c}: entries must be strings")
            out.append(parsed)
        try:
            return ExactMatrix(spec, out)
        except SizeMismatch as exc:
            raise ParseError(str(exc)) from exc


def matrix_from_csv_text(text: str, spec: FieldSpec) -> ExactMatrix:
    """Parse comma-separated entries; the field comes from the caller."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parsed = []
        for colno, cell in enumerate(line.split(","), start=1):
            try:
                parsed.append(spec.parse_scalar(cell))
            except ParseError as exc:
                raise ParseError(f"line {lineno}, column {colno}: {exc}") from exc
        rows.append(parsed)
    if not rows:
        raise ParseError("empty CSV matrix")
    try:
        return ExactMatrix(spec, rows)
    except SizeMismatch as exc:
        raise ParseError(str(exc)) from exc


def canonical_json(obj) -> str:
    """Canonical JSON rendering: sorted keys, compact separators, newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


@dataclass(frozen=True)
class RowPermutation:
    """A bijection sigma of {1..n}; image[i-1] = sigma(i)."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise SizeMismatch(f"not a permutation of 1..{n}: {self.image}")

    @property
    def n(self) -> int:
        return len(self.image)

    @staticmethod
    def identity(n: int) -> "RowPermutation":
        return RowPermutation(tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"index {i} outside 1..{self.n}")
        return self.image[i - 1]

    def sign(self) -> int:
        seen = [False] * self.n
        sign = 1
        for start in range(self.n):
            if seen[start]:
                continue
            length = 0
            k = start
            while not seen[k]:
                seen[k] = True
                k = self.image[k] - 1
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign


def permute_rows(a: ExactMatrix, sigma: RowPermutation) -> ExactMatrix:
    """Row i of the result is row sigma(i) of a."""
    if sigma.n != a.m:
        raise SizeMismatch(f"permutation size {sigma.n} != row count {a.m}")
    return ExactMatrix(a.spec, [a.row(sigma(i)) for i in range(1, a.m + 1)])


def consecutive_minor(a: ExactMatrix, i: int, j: int, k: int) -> Scalar:
    """det of the 2x2 minor on rows i, j and consecutive columns k, k+1."""
    if i == j:
        raise IndexOutOfRange("rows i and j must differ")
    if not 1 <= k < a.n:
        raise IndexOutOfRange(f"column window {k} outside 1..{a.n - 1}")
    return a.entry(i, k) * a.entry(j, k + 1) - a.entry(i, k + 1) * a.entry(j, k)


def wrap_minor(a: ExactMatrix, i: int, j: int) -> Scalar:
    """det of the wraparound 2x2 minor on rows i, j and columns (n, 1)."""
    if i == j:
        raise IndexOutOfRange("rows i and j must differ")
    if a.n < 2:
        raise IndexOutOfRange("wrap minor needs at least two columns")
    n = a.n
    return a.entry(i, n) * a.entry(j, 1) - a.entry(i, 1) * a.entry(j, n)


def alternating_square_coefficient(a: ExactMatrix, k: int, i: int, j: int) -> Scalar:
    """Coefficient of e_i ^ e_j in (Lambda^2 a) applied to e_k ^ e_{k+1}.

    Computed from the column images a(e_k), a(e_{k+1}); agrees with
    consecutive_minor(a, i, j, k) for all valid indices.
    """
    if not a.is_square:
        raise NotSquare("alternating square is defined for square matrices here")
    if not i < j:
        raise IndexOutOfRange("need i < j for a basis coefficient")
    if not 1 <= k < a.n:
        raise IndexOutOfRange(f"column window {k} outside 1..{a.n - 1}")
    x_i, x_j = a.entry(i, k), a.entry(j, k)
    y_i, y_j = a.entry(i, k + 1), a.entry(j, k + 1)
    return x_i * y_j - x_j * y_i


def _pack_gf2_rows(raw) -> list[int]:
    packed = []
    for row in raw:
        word = 0
        for j, v in enumerate(row):
            if v:
                word |= 1 << j
        packed.append(word)
    return packed


def _det_gf2_packed(packed: list[int], n: int) -> int:
    rows = list(packed)
    for c in range(n):
        bit = 1 << c
        piv = None
        for r in range(c, n):
            if rows[r] & bit:
                piv = r
                break
        if piv is None:
            return 0
        rows[c], rows[piv] = rows[piv], rows[c]
        prow = rows[c]
        for r in range(c + 1, n):
            if rows[r] & bit:
                rows[r] ^= prow
    return 1


def _det_mod_p(rows, p: int) -> int:
    mat = [list(r) for r in rows]
    n = len(mat)
    det = 1
    for c in range(n):
        piv = None
        for r in range(c, n):
            if mat[r][c] % p:
                piv = r
                break
        if piv is None:
            return 0
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            det = -det
        pivot = mat[c][c] % p
        det = det * pivot % p
        inv = pow(pivot, -1, p)
        for r in range(c + 1, n):
            f = mat[r][c] * inv % p
            if f:
                top = mat[c]
                mat[r] = [(x - f * y) % p for x, y in zip(mat[r], top)]
    return det % p


def _det_bareiss_int(rows) -> int:
    """Fraction-free elimination on an integer matrix; exact divisions only."""
    mat = [list(r) for r in rows]
    n = len(mat)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            piv = None
            for r in range(k + 1, n):
                if mat[r][k]:
                    piv = r
                    break
            if piv is None:
                return 0
            mat[k], mat[piv] = mat[piv], mat[k]
            sign = -sign
        pkk = mat[k][k]
        for i in range(k + 1, n):
            row_i, row_k = mat[i], mat[k]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pkk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pkk
    return sign * mat[n - 1][n - 1]


def _det_rational(raw) -> Fraction:
    scale = 1
    mat = []
    for row in raw:
        d = lcm(*(f.denominator for f in row))
        scale *= d
        mat.append([int(f * d) for f in row])
    return Fraction(_det_bareiss_int(mat), scale)


def determinant(a: ExactMatrix) -> Scalar:
    """Exact determinant: bit-packed over GF(2), modular elimination over
    GF(p), fraction-free (Bareiss) elimination over Q."""
    if not a.is_square:
        raise NotSquare(f"determinant of a {a.m}x{a.n} matrix")
    raw = a.raw()
    spec = a.spec
    if spec.kind is FieldKind.GF2:
        return spec.scalar(_det_gf2_packed(_pack_gf2_rows(raw), a.n))
    if spec.kind is FieldKind.GFP:
        return spec.scalar(_det_mod_p(raw, spec.p))
    return spec.scalar(_det_rational(raw))


def determinant_generic(a: ExactMatrix) -> Scalar:
    """Reference determinant: textbook partial-pivot elimination on Scalars.

    Field-agnostic; kept as the cross-check target for the fast paths.
    """
    if not a.is_square:
        raise NotSquare(f"determinant of a {a.m}x{a.n} matrix")
    n = a.n
    spec = a.spec
    rows = [list(r) for r in a.scalar_rows()]
    det = spec.one
    negate = False
    for c in range(n):
        piv = None
        for r in range(c, n):
            if rows[r][c]:
                piv = r
                break
        if piv is None:
            return spec.zero
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            negate = not negate
        pivot = rows[c][c]
        det = det * pivot
        inv = pivot.inv()
        for r in range(c + 1, n):
            f = rows[r][c] * inv
            if f:
                top = rows[c]
                rows[r] = [x - f * y for x, y in zip(rows[r], top)]
    return -det if negate else det


def rank(a: ExactMatrix) -> int:
    """Rank by exact elimination over the matrix's own field."""
    spec = a.spec
    mat = [list(r) for r in a.raw()]
    r = 0
    for c in range(a.n):
        piv = None
        for i in range(r, a.m):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        mat_piv = mat[r]
        if spec.kind is FieldKind.RATIONAL:
            for i in range(r + 1, a.m):
                if mat[i][c]:
                    f = mat[i][c] / mat_piv[c]
                    mat[i] = [x - f * y for x, y in zip(mat[i], mat_piv)]
        else:
            inv = pow(mat_piv[c], -1, spec.p)
            for i in range(r + 1, a.m):
                if mat[i][c]:
                    f = mat[i][c] * inv % spec.p
                    mat[i] = [(x - f * y) % spec.p for x, y in zip(mat[i], mat_piv)]
        r += 1
        if r == a.m:
            break
    return r
