"""Dense square matrices over an exact field.

Matrices are immutable; rows and columns are indexed ``0..d`` so a matrix of
size ``d + 1`` has ``m.d == d``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import FieldMismatch, NotMultiplicityFree, SizeMismatch, ZeroScale
from .exactfield import FieldSpec, Scalar


def _common_denominator(rows):
    den = 1
    for r in rows:
        for x in r:
            den = math.lcm(den, x.denominator)
    return [[x.numerator * (den // x.denominator) for x in r] for r in rows], den


def raw_matmul(a: list, b: list, p: Optional[int]) -> list:
    """Product of raw square matrices: Fractions when ``p`` is None, residues mod ``p`` otherwise."""
    if p is None:
        # integer dot products over one common denominator per factor
        ai, da = _common_denominator(a)
        bi, db = _common_denominator(b)
        cols = list(zip(*bi))
        den = da * db
        return [[Fraction(sum(x * y for x, y in zip(r, c)), den) for c in cols] for r in ai]
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) % p for c in cols] for r in a]


def raw_is_zero(a: list) -> bool:
    return all(x == 0 for r in a for x in r)


class Matrix:
    __slots__ = ("rows", "field")

    def __init__(self, rows, field: FieldSpec):
        rows = tuple(tuple(field(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise SizeMismatch("matrix must be square and non-empty")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _from_raw(cls, raw_rows, field: FieldSpec) -> "Matrix":
        # trusted path: raw values are already canonical for ``field``
        m = object.__new__(cls)
        object.__setattr__(m, "rows", tuple(tuple(Scalar(v, field) for v in r) for r in raw_rows))
        object.__setattr__(m, "field", field)
        return m

    def raw(self) -> list:
        """Entries as plain Fraction / int residues, row-major."""
        return [[x.value for x in r] for r in self.rows]

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, n: int, field: FieldSpec) -> "Matrix":
        return cls([[0] * n for _ in range(n)], field)

    @classmethod
    def diag(cls, values: Sequence, field: Optional[FieldSpec] = None) -> "Matrix":
        if field is None:
            field = values[0].field
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def tridiagonal(cls, diagonal, sub, sup, field: Optional[FieldSpec] = None) -> "Matrix":
        """Build from the diagonal (length n), subdiagonal and superdiagonal (length n-1)."""
        if field is None:
            field = diagonal[0].field
        n = len(diagonal)
        if len(sub) != n - 1 or len(sup) != n - 1:
            raise SizeMismatch("off-diagonals must have length n - 1")
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = diagonal[i]
            if i > 0:
                rows[i][i - 1] = sub[i - 1]
                rows[i - 1][i] = sup[i - 1]
        return cls(rows, field)

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def d(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self.rows[i][j]

    def diagonal(self) -> tuple:
        return tuple(self.rows[i][i] for i in range(self.size))

    def _check(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if other.size != self.size:
            raise SizeMismatch(f"{self.size} vs {other.size}")

    def __add__(self, other):
        self._check(other)
        return Matrix(
            [[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.field
        )

    def __sub__(self, other):
        self._check(other)
        return Matrix(
            [[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.field
        )

    def __neg__(self):
        return Matrix([[-x for x in r] for r in self.rows], self.field)

    def __matmul__(self, other):
        self._check(other)
        return Matrix._from_raw(raw_matmul(self.raw(), other.raw(), self.field.p), self.field)

    def _scaled(self, c) -> "Matrix":
        c = self.field(c).value
        p = self.field.p
        if p is None:
            raw = [[x.value * c for x in r] for r in self.rows]
        else:
            raw = [[x.value * c % p for x in r] for r in self.rows]
        return Matrix._from_raw(raw, self.field)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        return self._scaled(other)

    def __rmul__(self, other):
        return self._scaled(other)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)), self.field)

    def is_zero(self) -> bool:
        return all(x.value == 0 for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def to_strings(self) -> list:
        return [[str(x) for x in r] for r in self.rows]

    def __repr__(self):
        body = "; ".join(" ".join(r) for r in self.to_strings())
        return f"Matrix([{body}], {self.field!r})"


@dataclass(frozen=True)
class ShapeReport:
    diagonal: bool
    lower_bidiagonal: bool
    upper_bidiagonal: bool
    tridiagonal: bool
    irreducible_tridiagonal: bool


def shape(m: Matrix) -> ShapeReport:
    n = m.size
    nz = [(i, j) for i in range(n) for j in range(n) if not m[i, j].is_zero()]
    diagonal = all(i == j for i, j in nz)
    lower = all(i == j or i == j + 1 for i, j in nz)
    upper = all(i == j or j == i + 1 for i, j in nz)
    tri = all(abs(i - j) <= 1 for i, j in nz)
    irreducible = tri and all(
        not m[i, i - 1].is_zero() and not m[i - 1, i].is_zero() for i in range(1, n)
    )
    return ShapeReport(diagonal, lower, upper, tri, irreducible)


def constant_row_sum(m: Matrix) -> Optional[Scalar]:
    """The common row sum of ``m``, or None when rows disagree."""
    sums = {sum(r, m.field.zero) for r in m.rows}
    return sums.pop() if len(sums) == 1 else None


def raw_idempotents(m: Matrix, eigs: Sequence) -> list:
    """Spectral projectors ``E_i = prod_{j != i} (m - eigs[j]) / (eigs[i] - eigs[j])`` as raw rows.

    Raises NotMultiplicityFree unless every ``E_i`` is nonzero, ``m E_i = eigs[i] E_i``
    and ``sum E_i = I``. Those imply ``E_i E_j = delta_ij E_i`` (E_j is a Lagrange
    polynomial in m), ``m = sum eigs[i] E_i`` and rank E_i = 1, which are therefore
    not rechecked.
    """
    f = m.field
    eigs = [f(x) for x in eigs]
    n = m.size
    if len(eigs) != n:
        raise SizeMismatch(f"need {n} eigenvalues, got {len(eigs)}")
    if len(set(eigs)) != n:
        raise NotMultiplicityFree("eigenvalues are not distinct")
    p = f.p
    norm = (lambda x: x) if p is None else (lambda x: x % p)
    mr = m.raw()
    ts = [t.value for t in eigs]
    shifted = [[[norm(mr[r][c] - (t if r == c else 0)) for c in range(n)] for r in range(n)] for t in ts]
    ident = [[int(r == c) for c in range(n)] for r in range(n)]
    # the factors commute, so E_i = prefix_i suffix_i / scale_i
    prefix = [ident]
    for k in range(n - 1):
        prefix.append(raw_matmul(prefix[-1], shifted[k], p))
    suffix = [ident] * n
    for k in range(n - 1, 0, -1):
        suffix[k - 1] = raw_matmul(shifted[k], suffix[k], p)
    es = []
    for i, ti in enumerate(eigs):
        scale = f.one
        for j, tj in enumerate(eigs):
            if j != i:
                scale *= ti - tj
        s = scale.inverse().value
        es.append([[norm(x * s) for x in r] for r in raw_matmul(prefix[i], suffix[i], p)])

    total = [[0] * n for _ in range(n)]
    for i, (e, t) in enumerate(zip(es, ts)):
        if raw_is_zero(e):
            raise NotMultiplicityFree(f"E_{i} = 0: theta_{i} is not an eigenvalue")
        lhs = raw_matmul(mr, e, p)
        if any(norm(lhs[r][c] - e[r][c] * t) != 0 for r in range(n) for c in range(n)):
            raise NotMultiplicityFree(f"m E_{i} != theta_{i} E_{i}")
        total = [[norm(x + y) for x, y in zip(r1, r2)] for r1, r2 in zip(total, e)]
    if total != ident:
        raise NotMultiplicityFree("idempotents do not resolve the identity")
    return es


def primitive_idempotents(m: Matrix, eigs: Sequence[Scalar]) -> list:
    """The projectors of ``raw_idempotents`` as Matrix values."""
    return [Matrix._from_raw(e, m.field) for e in raw_idempotents(m, eigs)]


def mat_ops(a: Matrix, b: Matrix, op: str) -> Matrix:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a @ b
    raise ValueError(f"unknown op {op!r}")


def diag_conjugate(a: Matrix, s: Sequence) -> Matrix:
    """``D a D^{-1}`` with ``D = diag(s)``; entry (i, j) becomes ``s_i a_ij / s_j``."""
    if len(s) != a.size:
        raise SizeMismatch(f"need {a.size} scales, got {len(s)}")
    s = [a.field(x) for x in s]
    if any(x.is_zero() for x in s):
        raise ZeroScale("diagonal scales must be nonzero")
    inv = [x.inverse() for x in s]
    return Matrix(
        [[s[i] * a[i, j] * inv[j] for j in range(a.size)] for i in range(a.size)], a.field
    )
