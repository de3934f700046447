"""Dense exact linear algebra over a FiniteField.

Matrices hold element encodings (ints) in row-major nested lists.  All
operations return new objects; nothing is mutated in place.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .errors import AmbientMismatch, FieldMismatch, NotSquare, Singular
from .field import FieldElement, FiniteField


@dataclass(frozen=True)
class MatrixGF:
    field: FiniteField
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...] = dc_field(repr=False)

    @classmethod
    def from_rows(cls, field: FiniteField, rows: Iterable[Sequence[int | FieldElement]], cols: int | None = None) -> "MatrixGF":
        data = []
        for r in rows:
            data.append(tuple(_encode(field, x) for x in r))
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged matrix")
        return cls(field, len(data), cols, tuple(data))

    @classmethod
    def zeros(cls, field: FiniteField, rows: int, cols: int) -> "MatrixGF":
        return cls(field, rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> "MatrixGF":
        return cls(field, n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    @property
    def T(self) -> "MatrixGF":
        return transpose(self)

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        return matmul(self, other)

    def to_json(self) -> dict:
        f = self.field
        return {
            "field": f.descriptor(),
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[f.coeffs(x) for x in r] for r in self.entries],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "MatrixGF":
        from .field import field_from_descriptor

        f = field_from_descriptor(doc["field"])
        rows = [[f.from_coeffs(c) if isinstance(c, list) else f.from_int(c) for c in r] for r in doc["entries"]]
        return cls.from_rows(f, rows, cols=int(doc["cols"]))


def _encode(field: FiniteField, x: int | FieldElement) -> int:
    if isinstance(x, FieldElement):
        if x.field != field:
            raise FieldMismatch(f"{x.field} entry in a {field} matrix")
        return x.value
    return field.from_int(int(x))


def transpose(a: MatrixGF) -> MatrixGF:
    return MatrixGF(a.field, a.cols, a.rows, tuple(zip(*a.entries)) if a.rows else tuple(() for _ in range(a.cols)))


def matmul(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    if a.field != b.field:
        raise FieldMismatch("matrices over different fields")
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch {a.rows}x{a.cols} @ {b.rows}x{b.cols}")
    f = a.field
    add, mul = f.add, f.mul
    bt = list(zip(*b.entries)) if b.rows else [()] * b.cols
    out = []
    for r in a.entries:
        row = []
        for c in bt:
            acc = 0
            for x, y in zip(r, c):
                if x and y:
                    acc = add(acc, mul(x, y))
            row.append(acc)
        out.append(tuple(row))
    return MatrixGF(f, a.rows, b.cols, tuple(out))


def vstack(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    if a.field != b.field:
        raise FieldMismatch("matrices over different fields")
    if a.cols != b.cols:
        raise AmbientMismatch(f"{a.cols} vs {b.cols} columns")
    return MatrixGF(a.field, a.rows + b.rows, a.cols, a.entries + b.entries)


def frobenius_matrix(a: MatrixGF, t: int) -> MatrixGF:
    """Entrywise a_ij^(p^t)."""
    f = a.field
    t %= f.m
    if t == 0:
        return a
    return MatrixGF(f, a.rows, a.cols, tuple(tuple(f.frob(x, t) for x in r) for r in a.entries))


def _rref_rows(f: FiniteField, rows: list[list[int]], cols: int) -> tuple[list[list[int]], list[int]]:
    """Gauss-Jordan on a mutable copy; pivot = first row with a nonzero in the leftmost open column."""
    add, mul, inv, neg = f.add, f.mul, f.inv, f.neg
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(cols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        if lead != 1:
            s = inv(lead)
            rows[r] = [mul(s, x) for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                s = neg(rows[i][c])
                rows[i] = [add(x, mul(s, y)) if y else x for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(a: MatrixGF) -> tuple[MatrixGF, int, tuple[int, ...]]:
    rows, pivots = _rref_rows(a.field, [list(r) for r in a.entries], a.cols)
    out = MatrixGF(a.field, a.rows, a.cols, tuple(tuple(r) for r in rows))
    return out, len(pivots), tuple(pivots)


def rank(a: MatrixGF) -> int:
    return rref(a)[1]


def is_nonsingular(a: MatrixGF) -> bool:
    if a.rows != a.cols:
        raise NotSquare(f"{a.rows}x{a.cols} matrix")
    return rank(a) == a.rows


def inverse(a: MatrixGF) -> MatrixGF:
    if a.rows != a.cols:
        raise NotSquare(f"{a.rows}x{a.cols} matrix")
    n = a.rows
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(a.entries)]
    rows, pivots = _rref_rows(a.field, aug, 2 * n)
    if len(pivots) < n or pivots[n - 1] >= n:
        raise Singular("matrix is singular")
    return MatrixGF(a.field, n, n, tuple(tuple(r[n:]) for r in rows))


def scale_rows(a: MatrixGF, scalars: Sequence[int]) -> MatrixGF:
    f = a.field
    return MatrixGF(f, a.rows, a.cols, tuple(tuple(f.mul(s, x) for x in r) for s, r in zip(scalars, a.entries)))


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n stored by its unique RREF basis."""

    field: FiniteField
    ambient_dim: int
    basis: MatrixGF

    @classmethod
    def span(cls, field: FiniteField, n: int, rows: Iterable[Sequence[int]]) -> "Subspace":
        rows = [list(r) for r in rows]
        if any(len(r) != n for r in rows):
            raise AmbientMismatch(f"vectors must have length {n}")
        red, pivots = _rref_rows(field, rows, n)
        basis = tuple(tuple(r) for r in red[: len(pivots)])
        return cls(field, n, MatrixGF(field, len(basis), n, basis))

    @classmethod
    def row_space(cls, a: MatrixGF) -> "Subspace":
        return cls.span(a.field, a.cols, a.entries)

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self.basis.entries

    def contains(self, v: Sequence[int]) -> bool:
        return Subspace.span(self.field, self.ambient_dim, list(self.rows) + [list(v)]).dim == self.dim

    def __le__(self, other: "Subspace") -> bool:
        _check_compatible(self, other)
        return sum_space(self, other).dim == other.dim


def _check_compatible(u: Subspace, v: Subspace) -> None:
    if u.field != v.field:
        raise FieldMismatch("subspaces over different fields")
    if u.ambient_dim != v.ambient_dim:
        raise AmbientMismatch(f"ambient {u.ambient_dim} vs {v.ambient_dim}")


def kernel(a: MatrixGF) -> Subspace:
    """Right null space {x : A x^T = 0}."""
    f, n = a.field, a.cols
    red, pivots = _rref_rows(f, [list(r) for r in a.entries], n)
    pivset = set(pivots)
    basis = []
    for free in (c for c in range(n) if c not in pivset):
        v = [0] * n
        v[free] = 1
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(red[i][free])
        basis.append(v)
    return Subspace.span(f, n, basis)


def sum_space(u: Subspace, v: Subspace) -> Subspace:
    _check_compatible(u, v)
    return Subspace.span(u.field, u.ambient_dim, list(u.rows) + list(v.rows))


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """U ∩ V via the kernel of [U; -V]^T: coefficient pairs with a U = b V."""
    _check_compatible(u, v)
    f, n = u.field, u.ambient_dim
    if u.dim == 0 or v.dim == 0:
        return Subspace.span(f, n, [])
    neg_v = [[f.neg(x) for x in r] for r in v.rows]
    stacked = MatrixGF.from_rows(f, list(u.rows) + neg_v, cols=n)
    coeffs = kernel(transpose(stacked))
    out = []
    for c in coeffs.rows:
        vec = [0] * n
        for ci, r in zip(c[: u.dim], u.rows):
            if ci:
                vec = [f.add(x, f.mul(ci, y)) for x, y in zip(vec, r)]
        out.append(vec)
    return Subspace.span(f, n, out)
