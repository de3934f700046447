"""Linear codes, s-Galois duals and hulls, the hull decomposition, and distance oracles."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

from . import _vec
from .errors import (
    FieldMismatch,
    InternalInvariantViolation,
    LengthMismatch,
    RequiresExactDistance,
    SOutOfRange,
    ZeroCode,
)
from .field import FieldElement, FiniteField
from .linalg import (
    MatrixGF,
    Subspace,
    frobenius_matrix,
    intersect,
    is_nonsingular,
    kernel,
    matmul,
    transpose,
)

DEFAULT_DISTANCE_BUDGET = 1 << 22


@dataclass(frozen=True)
class LinearCode:
    """An [n, k] code; ``generator`` is always the canonical RREF basis.

    k = 0 is allowed only as the result of hull/decomposition computations.
    """

    field: FiniteField
    n: int
    generator: MatrixGF

    @property
    def k(self) -> int:
        return self.generator.rows

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def is_zero(self) -> bool:
        return self.k == 0

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self.generator.entries

    @property
    def space(self) -> Subspace:
        return Subspace(self.field, self.n, self.generator)

    @classmethod
    def from_subspace(cls, sp: Subspace) -> "LinearCode":
        return cls(sp.field, sp.ambient_dim, sp.basis)

    @classmethod
    def zero(cls, field: FiniteField, n: int) -> "LinearCode":
        return cls(field, n, MatrixGF(field, 0, n, ()))

    def contains(self, v: Sequence[int]) -> bool:
        return self.space.contains(v)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}]_{self.q})"

    def to_json(self) -> dict:
        return {"field": self.field.descriptor(), "n": self.n, "k": self.k, "generator": self.generator.to_json()}


def code_from_generator(field: FiniteField, rows: MatrixGF | Sequence[Sequence[int]]) -> LinearCode:
    if not isinstance(rows, MatrixGF):
        rows = MatrixGF.from_rows(field, rows)
    sp = Subspace.row_space(rows)
    if sp.dim == 0:
        raise ZeroCode("generator matrix has rank 0")
    return LinearCode.from_subspace(sp)


def _check_s(field: FiniteField, s: int) -> None:
    if not 0 <= s < field.m:
        raise SOutOfRange(f"s must lie in [0, {field.m}), got {s}")


def _form(f: FiniteField, x: Sequence[int], y: Sequence[int], s: int) -> int:
    acc = 0
    for a, b in zip(x, y):
        if a and b:
            acc = f.add(acc, f.mul(a, f.frob(b, s)))
    return acc


def galois_form(x: Sequence[FieldElement], y: Sequence[FieldElement], s: int) -> FieldElement:
    """[x, y]_s = sum_i x_i y_i^(p^s)."""
    if len(x) != len(y):
        raise LengthMismatch(f"{len(x)} vs {len(y)}")
    if not x:
        raise LengthMismatch("empty vectors carry no field")
    f = x[0].field
    vals_x = [e.value for e in x]
    vals_y = [e.value for e in y]
    if any(e.field != f for e in list(x) + list(y)):
        raise FieldMismatch("vectors over different fields")
    return FieldElement(f, _form(f, vals_x, vals_y, s))


def galois_dual(code: LinearCode, s: int) -> LinearCode:
    """C^{perp_s}, computed as the Euclidean dual of C^(p^(m-s))."""
    f = code.field
    _check_s(f, s)
    if code.is_zero:
        return LinearCode.from_subspace(kernel(MatrixGF(f, 0, code.n, ())))
    twisted = frobenius_matrix(code.generator, f.m - s)
    return LinearCode.from_subspace(kernel(twisted))


def hull(code: LinearCode, s: int) -> LinearCode:
    """Hull_s(C) = C ∩ C^{perp_s}; may be the zero code."""
    dual = galois_dual(code, s)
    return LinearCode.from_subspace(intersect(code.space, dual.space))


def lcd_certificate(generator: MatrixGF, s: int) -> MatrixGF:
    """G (G^(p^(m-s)))^T."""
    f = generator.field
    return matmul(generator, transpose(frobenius_matrix(generator, f.m - s)))


def is_galois_lcd(code: LinearCode, s: int) -> tuple[bool, MatrixGF]:
    _check_s(code.field, s)
    cert = lcd_certificate(code.generator, s)
    return is_nonsingular(cert), cert


@dataclass(frozen=True)
class HullDecomposition:
    code: LinearCode
    s: int
    hull: LinearCode
    complement: LinearCode
    certificate: MatrixGF
    certificate_nonsingular: bool

    @property
    def h(self) -> int:
        return self.hull.k

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "hull": None if self.hull.is_zero else self.hull.to_json(),
            "complement": self.complement.to_json(),
            "lcd_certificate_nonsingular": self.certificate_nonsingular,
        }


def hull_decompose(code: LinearCode, s: int) -> HullDecomposition:
    """Split C = Hull_s(C) ⊕ D with D an s-Galois LCD code.

    D is spanned by the rows of C's canonical generator that raise the rank
    of the running basis, scanned in order.
    """
    f, n = code.field, code.n
    h_code = hull(code, s)
    basis = [list(r) for r in h_code.rows]
    extra: list[list[int]] = []
    for r in code.rows:
        if Subspace.span(f, n, basis + extra + [list(r)]).dim > len(basis) + len(extra):
            extra.append(list(r))
    if len(basis) + len(extra) != code.k:
        raise InternalInvariantViolation("hull basis did not extend to a basis of C")
    d_code = LinearCode.from_subspace(Subspace.span(f, n, extra)) if extra else LinearCode.zero(f, n)
    cert = lcd_certificate(MatrixGF.from_rows(f, extra, cols=n), s) if extra else MatrixGF(f, 0, 0, ())
    ok = is_nonsingular(cert) if extra else True
    if not ok:
        raise InternalInvariantViolation("complement of the hull is not s-Galois LCD")
    return HullDecomposition(code, s, h_code, d_code, cert, ok)


Exactness = Literal["exact", "lower_bound"]
Method = Literal["exhaustive_messages", "exhaustive_codewords", "structural_bound"]


@dataclass(frozen=True)
class DistanceReport:
    value: int
    exactness: Exactness
    method: Method
    work_budget_used: int

    @property
    def exact(self) -> bool:
        return self.exactness == "exact"

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "exactness": self.exactness,
            "method": self.method,
            "work_budget_used": self.work_budget_used,
        }


def _krawtchouk(j: int, w: int, n: int, q: int) -> int:
    return sum(
        (-1) ** i * (q - 1) ** (j - i) * math.comb(w, i) * math.comb(n - w, j - i) for i in range(j + 1)
    )


def macwilliams(dual_distribution: Sequence[int], n: int, q: int) -> list[int]:
    """Weight distribution of C from that of its Euclidean dual."""
    size = sum(dual_distribution)
    out = []
    for j in range(n + 1):
        total = sum(b * _krawtchouk(j, w, n, q) for w, b in enumerate(dual_distribution) if b)
        if total % size:
            raise InternalInvariantViolation("MacWilliams transform produced a non-integer count")
        out.append(total // size)
    return out


def weight_distribution(code: LinearCode) -> list[int]:
    return _vec.weight_distribution(code.field, code.rows, code.n)


def min_distance(code: LinearCode, budget: int = DEFAULT_DISTANCE_BUDGET) -> DistanceReport:
    """Exact minimum distance when the enumeration fits in ``budget``, else a lower bound of 1.

    Enumerates the message space when q^k <= q^(n-k); otherwise enumerates the
    dual and recovers C's weights through the MacWilliams identities.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if code.is_zero:
        raise ZeroCode("the zero code has no minimum distance")
    q, n, k = code.q, code.n, code.k
    msg_cost, dual_cost = q**k, q ** (n - k)
    if msg_cost <= dual_cost and msg_cost <= budget:
        dist = weight_distribution(code)
        return DistanceReport(_first_weight(dist), "exact", "exhaustive_messages", msg_cost)
    if dual_cost <= budget:
        dual = galois_dual(code, 0)
        dual_dist = weight_distribution(dual) if not dual.is_zero else [1] + [0] * n
        dist = macwilliams(dual_dist, n, q)
        return DistanceReport(_first_weight(dist), "exact", "exhaustive_codewords", dual_cost)
    if msg_cost <= budget:
        dist = weight_distribution(code)
        return DistanceReport(_first_weight(dist), "exact", "exhaustive_messages", msg_cost)
    return DistanceReport(1, "lower_bound", "structural_bound", 0)


def _first_weight(dist: Sequence[int]) -> int:
    return next(w for w in range(1, len(dist)) if dist[w])


def is_mds(code: LinearCode, d: DistanceReport | int) -> bool:
    if isinstance(d, DistanceReport):
        if not d.exact:
            raise RequiresExactDistance("MDS check needs an exact distance")
        d = d.value
    return d == code.n - code.k + 1
