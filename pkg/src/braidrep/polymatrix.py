"""Square matrices with Laurent polynomial entries.

Indices in the public API are 1-based wherever they name a strand or a
generator (``block_embed``, ``MonomialDecomposition``), matching braid
conventions; ``PolyMatrix.entries`` itself is a plain 0-based tuple of rows.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import DimensionMismatch, DimensionTooLarge, IndexOutOfRange, NotMonomialMatrix
from .laurent import ONE, ZERO, LaurentPolynomial, add, as_poly, format_poly, mul, substitute

MAX_DET_DIM = 6


class PolyMatrix:
    """Immutable n x n matrix over the Laurent ring."""

    __slots__ = ("n", "entries")

    def __init__(self, rows: Sequence[Sequence]):
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have at least one row")
        entries = []
        for row in rows:
            if len(row) != n:
                raise DimensionMismatch(f"expected {n} columns, got {len(row)}")
            entries.append(tuple(as_poly(x) for x in row))
        self.n = n
        self.entries = tuple(entries)

    @classmethod
    def _from_rows(cls, rows) -> "PolyMatrix":
        m = cls.__new__(cls)
        m.n = len(rows)
        m.entries = tuple(tuple(r) for r in rows)
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return multiply(self, other)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return subtract(self, other)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n} vs {other.n}")
        return PolyMatrix._from_rows(
            [[add(x, y) for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        )

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def to_strings(self) -> list[list[str]]:
        return [[format_poly(x) for x in row] for row in self.entries]

    def to_json(self) -> str:
        return json.dumps(self.to_strings())

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]]) -> "PolyMatrix":
        return cls(rows)

    @classmethod
    def from_json(cls, text: str) -> "PolyMatrix":
        return cls.from_strings(json.loads(text))

    def substitute(self, assignment: Mapping[str, int], modulus: int) -> list[list[int]]:
        return [[substitute(x, assignment, modulus) for x in row] for row in self.entries]

    def format(self) -> str:
        """Aligned plain-text rendering, one matrix row per line."""
        cells = self.to_strings()
        widths = [max(len(cells[i][j]) for i in range(self.n)) for j in range(self.n)]
        return "\n".join(
            "  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells
        )

    def __repr__(self):
        return f"PolyMatrix({self.to_strings()!r})"


def identity(n: int) -> PolyMatrix:
    if n < 1:
        raise ValueError("dimension must be positive")
    return PolyMatrix._from_rows([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])


def zeros(n: int) -> PolyMatrix:
    return PolyMatrix._from_rows([[ZERO] * n for _ in range(n)])


def multiply(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    if A.n != B.n:
        raise DimensionMismatch(f"cannot multiply {A.n}x{A.n} by {B.n}x{B.n}")
    n = A.n
    cols = list(zip(*B.entries))
    rows = []
    for arow in A.entries:
        row = []
        for col in cols:
            acc = ZERO
            for x, y in zip(arow, col):
                if x and y:
                    acc = add(acc, mul(x, y))
            row.append(acc)
        rows.append(row)
    return PolyMatrix._from_rows(rows)


def subtract(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    if A.n != B.n:
        raise DimensionMismatch(f"{A.n} vs {B.n}")
    return PolyMatrix._from_rows(
        [[add(x, -y) for x, y in zip(r, s)] for r, s in zip(A.entries, B.entries)]
    )


def block_embed(i: int, block: PolyMatrix, n: int) -> PolyMatrix:
    """``I_{i-1} (+) block (+) I_{n-i-1}``: the 2x2 block on rows/columns i, i+1."""
    if block.n != 2:
        raise DimensionMismatch("block must be 2x2")
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator index {i} outside 1..{n - 1}")
    rows = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    k = i - 1
    for r in range(2):
        for c in range(2):
            rows[k + r][k + c] = block.entries[r][c]
    return PolyMatrix._from_rows(rows)


def is_identity(A: PolyMatrix) -> bool:
    for i, row in enumerate(A.entries):
        for j, x in enumerate(row):
            if i == j:
                if not x.is_one():
                    return False
            elif x:
                return False
    return True


@dataclass(frozen=True)
class MonomialDecomposition:
    """``permutation[i-1] = j`` means row i carries its single entry in column j."""

    permutation: tuple[int, ...]
    values: tuple[LaurentPolynomial, ...]

    def value(self, i: int) -> LaurentPolynomial:
        return self.values[i - 1]

    def reassemble(self) -> PolyMatrix:
        n = len(self.permutation)
        rows = [[ZERO] * n for _ in range(n)]
        for i, (j, v) in enumerate(zip(self.permutation, self.values)):
            rows[i][j - 1] = v
        return PolyMatrix._from_rows(rows)


def monomial_decompose(A: PolyMatrix) -> MonomialDecomposition:
    perm = []
    values = []
    for i, row in enumerate(A.entries):
        support = [j for j, x in enumerate(row) if x]
        if len(support) != 1:
            raise NotMonomialMatrix(f"row {i + 1} has {len(support)} nonzero entries")
        j = support[0]
        if not row[j].is_monomial():
            raise NotMonomialMatrix(f"entry ({i + 1},{j + 1}) = {format_poly(row[j])} is not a monomial")
        perm.append(j + 1)
        values.append(row[j])
    if len(set(perm)) != len(perm):
        raise NotMonomialMatrix("two rows share a column")
    return MonomialDecomposition(tuple(perm), tuple(values))


def _perm_sign(p: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def determinant(A: PolyMatrix) -> LaurentPolynomial:
    """Leibniz expansion; only for n <= 6."""
    if A.n > MAX_DET_DIM:
        raise DimensionTooLarge(f"determinant limited to n <= {MAX_DET_DIM}, got {A.n}")
    total = ZERO
    for p in itertools.permutations(range(A.n)):
        term = ONE
        for i, j in enumerate(p):
            x = A.entries[i][j]
            if not x:
                break
            term = mul(term, x)
        else:
            total = add(total, term if _perm_sign(p) > 0 else -term)
    return total
