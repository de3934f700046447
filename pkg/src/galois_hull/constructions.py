"""Code families: cyclic/negacyclic codes from defining sets, Gabidulin codes,
self-dual bases, and matrix-product codes."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field as dc_field
from typing import Literal, Sequence

from .codes import (
    DEFAULT_DISTANCE_BUDGET,
    DistanceReport,
    LinearCode,
    code_from_generator,
    galois_dual,
    hull,
    min_distance,
)
from .errors import (
    ClosureEnlarged,
    CoefficientsNotInBaseField,
    EvenExponent,
    FieldMismatch,
    GramNotDiagonal,
    InternalInvariantViolation,
    LengthMismatch,
    NotABasis,
    NotClosedUnderFrobenius,
    NotExists,
    NotFRR,
    NotSquare,
    RootOrderMismatch,
    SearchBudgetExceeded,
    ZeroCode,
)
from .field import FieldElement, FiniteField, embedding, field_create, raw_trace
from .linalg import MatrixGF, Subspace, frobenius_matrix, inverse, is_nonsingular, matmul, rank, transpose

SELF_DUAL_SEARCH_LIMIT = 1 << 14


# ---------------------------------------------------------------------------
# cyclic and negacyclic codes


def multiplicative_order(q: int, modulus: int) -> int:
    if math.gcd(q, modulus) != 1:
        raise ValueError(f"{q} is not a unit mod {modulus}")
    e, x = 1, q % modulus
    while x != 1 % modulus:
        x = x * q % modulus
        e += 1
    return e


def q_closure(exponents: Sequence[int], q: int, modulus: int) -> frozenset[int]:
    out: set[int] = set()
    for e in exponents:
        x = e % modulus
        while x not in out:
            out.add(x)
            x = x * q % modulus
    return frozenset(out)


def _longest_run(values: set[int], modulus: int) -> int:
    """Longest run of consecutive residues mod ``modulus`` inside ``values``."""
    if len(values) >= modulus:
        return modulus
    best = 0
    for v in values:
        if (v - 1) % modulus in values:
            continue
        run = 0
        while (v + run) % modulus in values:
            run += 1
        best = max(best, run)
    return best


@dataclass(frozen=True)
class RootSetCode:
    kind: Literal["cyclic", "negacyclic"]
    field: FiniteField
    n: int
    requested: tuple[int, ...]
    exponents: frozenset[int]
    splitting_field: FiniteField
    root: int
    generator_poly: tuple[int, ...]
    closure_enlarged: bool
    code: LinearCode = dc_field(repr=False)

    @property
    def bch_bound(self) -> int:
        """Designed distance from the longest consecutive run of roots."""
        if self.kind == "cyclic":
            run = _longest_run(set(self.exponents), self.n)
        else:
            run = _longest_run({(e - 1) // 2 for e in self.exponents}, self.n)
        return min(run + 1, self.n - self.code.k + 1)

    def distance_bound(self) -> DistanceReport:
        return DistanceReport(self.bch_bound, "lower_bound", "structural_bound", 0)

    def to_json(self) -> dict:
        f = self.field
        return {
            "kind": self.kind,
            "n": self.n,
            "requested_exponents": sorted(self.requested),
            "defining_set": sorted(self.exponents),
            "closure_enlarged": self.closure_enlarged,
            "splitting_field": self.splitting_field.descriptor(),
            "root": self.splitting_field.coeffs(self.root),
            "generator_poly": [f.coeffs(c) for c in self.generator_poly],
            "bch_bound": self.bch_bound,
        }


def _poly_from_roots(ext: FiniteField, roots: Sequence[int]) -> list[int]:
    coeffs = [1]
    for r in roots:
        nr = ext.neg(r)
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = ext.add(nxt[i + 1], c)
            nxt[i] = ext.add(nxt[i], ext.mul(c, nr))
        coeffs = nxt
    return coeffs


def _splitting(field: FiniteField, order: int) -> tuple[FiniteField, int]:
    e = multiplicative_order(field.order, order)
    ext = field if e == 1 else field_create(field.p, field.m * e)
    return ext, e


def _root_set_code(
    kind: Literal["cyclic", "negacyclic"],
    field: FiniteField,
    n: int,
    exponents: Sequence[int],
    root: int | FieldElement | None,
    strict: bool,
) -> tuple[LinearCode, RootSetCode]:
    q = field.order
    order = n if kind == "cyclic" else 2 * n
    if n < 1 or math.gcd(order, q) != 1:
        raise RootOrderMismatch(f"need gcd({order}, {q}) = 1 for length {n}")
    requested = tuple(int(e) for e in exponents)
    if kind == "negacyclic":
        even = [e for e in requested if e % 2 == 0]
        if even:
            raise EvenExponent(f"negacyclic defining exponents must be odd, got {even}")
    ext, _ = _splitting(field, order)
    if root is None:
        beta = ext.pow(ext.primitive, (ext.order - 1) // order)
    else:
        if isinstance(root, FieldElement):
            if root.field != ext:
                raise FieldMismatch(f"root must lie in the splitting field {ext}")
            root = root.value
        beta = root
        if beta == 0 or ext.order_of(beta) != order:
            raise RootOrderMismatch(f"designated root has order {ext.order_of(beta) if beta else 0}, need {order}")
    reduced = frozenset(e % order for e in requested)
    closed = q_closure(sorted(reduced), q, order)
    enlarged = closed != reduced
    if enlarged:
        msg = f"defining set {sorted(reduced)} is not closed under x{q} mod {order}; closure is {sorted(closed)}"
        if strict:
            raise NotClosedUnderFrobenius(msg)
        warnings.warn(ClosureEnlarged(msg), stacklevel=3)
    g_ext = _poly_from_roots(ext, [ext.pow(beta, e) for e in sorted(closed)])
    if ext is field:
        g = g_ext
    else:
        emb = embedding(field, ext)
        try:
            g = [emb.pullback(c) for c in g_ext]
        except Exception as exc:
            raise CoefficientsNotInBaseField(str(exc)) from None
    deg = len(g) - 1
    if deg >= n:
        raise ZeroCode(f"generator polynomial of degree {deg} yields the zero code of length {n}")
    rows = [[0] * j + g + [0] * (n - deg - 1 - j) for j in range(n - deg)]
    code = code_from_generator(field, rows)
    info = RootSetCode(kind, field, n, requested, closed, ext, beta, tuple(g), enlarged, code)
    _check_divides(field, g, n, kind)
    return code, info


def _check_divides(field: FiniteField, g: Sequence[int], n: int, kind: str) -> None:
    # long division of x^n -/+ 1 by monic g over GF(q)
    target = [0] * (n + 1)
    target[n] = 1
    target[0] = field.neg(1) if kind == "cyclic" else 1
    rem = target[:]
    deg = len(g) - 1
    for shift in range(n - deg, -1, -1):
        c = rem[shift + deg]
        if c:
            for i, gi in enumerate(g):
                rem[shift + i] = field.sub(rem[shift + i], field.mul(c, gi))
    if any(rem[:deg]):
        raise InternalInvariantViolation("generator polynomial does not divide x^n -/+ 1")


def cyclic_code(
    field: FiniteField,
    n: int,
    exponents: Sequence[int],
    root: int | FieldElement | None = None,
    strict: bool = False,
) -> tuple[LinearCode, RootSetCode]:
    """Cyclic code with defining set ``exponents`` w.r.t. a primitive n-th root of unity."""
    return _root_set_code("cyclic", field, n, exponents, root, strict)


def negacyclic_code(
    field: FiniteField,
    n: int,
    exponents: Sequence[int],
    root: int | FieldElement | None = None,
    strict: bool = False,
) -> tuple[LinearCode, RootSetCode]:
    """Negacyclic code: roots beta^e (e odd) of x^n + 1, beta of order 2n."""
    return _root_set_code("negacyclic", field, n, exponents, root, strict)


# ---------------------------------------------------------------------------
# Gabidulin codes and self-dual bases


@dataclass(frozen=True)
class GabidulinSpec:
    base: FiniteField
    m: int
    basis_g: tuple[int, ...]
    k: int
    self_dual: bool = False

    @property
    def ext(self) -> FiniteField:
        return field_create(self.base.p, self.base.m * self.m)

    def to_json(self) -> dict:
        return {
            "base": self.base.descriptor(),
            "m": self.m,
            "k": self.k,
            "basis": [self.ext.coeffs(g) for g in self.basis_g],
            "self_dual": self.self_dual,
        }


def moore_matrix(ext: FiniteField, base_degree: int, g: Sequence[int], rows: int) -> MatrixGF:
    """Rows (g_1^(q^i), ..., g_m^(q^i)) for i < rows, q = p^base_degree."""
    out = []
    cur = list(g)
    for _ in range(rows):
        out.append(cur)
        cur = [ext.frob(x, base_degree) for x in cur]
    return MatrixGF.from_rows(ext, out, cols=len(g))


def trace_gram(base: FiniteField, basis: Sequence[int]) -> MatrixGF:
    """Gram matrix Tr(g_i g_j) of the trace form, with entries in ``base``."""
    ext = field_create(base.p, base.m * len(basis))
    emb = embedding(base, ext)
    rows = [[emb.pullback(raw_trace(ext, ext.mul(a, b), base.m)) for b in basis] for a in basis]
    return MatrixGF.from_rows(base, rows, cols=len(basis))


def is_basis(base: FiniteField, g: Sequence[int]) -> bool:
    ext = field_create(base.p, base.m * len(g))
    return is_nonsingular(moore_matrix(ext, base.m, g, len(g)))


def find_self_dual_basis(base: FiniteField, m: int) -> tuple[int, ...]:
    """First orthonormal basis of GF(q^m)/GF(q) under the trace form, by exhaustive search.

    Candidates are taken in increasing encoding order so the result is
    deterministic; raises NotExists when the search space is exhausted.
    """
    ext = field_create(base.p, base.m * m)
    if ext.order > SELF_DUAL_SEARCH_LIMIT:
        raise SearchBudgetExceeded(f"{ext} exceeds the self-dual basis search limit")
    emb = embedding(base, ext)

    def tr(x: int) -> int:
        return emb.pullback(raw_trace(ext, x, base.m))

    units = [x for x in range(1, ext.order) if tr(ext.mul(x, x)) == 1]

    def extend(chosen: list[int], start: int) -> list[int] | None:
        if len(chosen) == m:
            return chosen
        for i in range(start, len(units)):
            x = units[i]
            if all(tr(ext.mul(x, y)) == 0 for y in chosen):
                found = extend(chosen + [x], i + 1)
                if found:
                    return found
        return None

    found = extend([], 0)
    if found is None:
        raise NotExists(f"no self-dual basis of {ext} over {base}")
    return tuple(found)


def self_dual_basis_exists(q: int, m: int) -> bool:
    return q % 2 == 0 or (q % 2 == 1 and m % 2 == 1)


def gabidulin_spec(base: FiniteField, m: int, k: int, basis: Sequence[int] | None = None) -> GabidulinSpec:
    """Spec with the given basis, or the first self-dual basis when none is given."""
    if basis is None:
        basis = find_self_dual_basis(base, m)
    basis = tuple(basis)
    if len(basis) != m or not is_basis(base, basis):
        raise NotABasis(f"{len(basis)} elements do not form a basis of degree {m}")
    gram = trace_gram(base, basis)
    sd = gram == MatrixGF.identity(base, m)
    return GabidulinSpec(base, m, basis, k, sd)


def gabidulin_code(spec: GabidulinSpec) -> LinearCode:
    """G_k(g): the k-row Moore matrix of the basis, over GF(q^m)."""
    if not 1 <= spec.k <= spec.m:
        raise ValueError(f"k must lie in [1, {spec.m}]")
    if len(spec.basis_g) != spec.m or not is_basis(spec.base, spec.basis_g):
        raise NotABasis("basis elements are linearly dependent over the base field")
    ext = spec.ext
    return code_from_generator(ext, moore_matrix(ext, spec.base.m, spec.basis_g, spec.k))


def gabidulin_hull_dim_formula(m: int, k: int, s: int) -> int:
    """Predicted dim Hull_s(G_k(g)) for a self-dual basis g; s counts powers of q."""
    if not (0 <= s <= m - 1 and 1 <= k <= m):
        raise ValueError(f"need 0 <= s < m and 1 <= k <= m, got m={m}, k={k}, s={s}")
    if s <= k:
        return min(m - k, s)
    return min(m - s, k)


def qpower_to_galois_index(base: FiniteField, sigma: int) -> int:
    """Convert a power-of-q index to the power-of-p index used by the s-Galois form."""
    return sigma * base.m


# ---------------------------------------------------------------------------
# matrix-product codes


@dataclass(frozen=True)
class MatrixProductSpec:
    A: MatrixGF
    constituents: tuple[LinearCode, ...]
    s: int = 0

    @property
    def field(self) -> FiniteField:
        return self.A.field

    @property
    def gram(self) -> MatrixGF:
        f = self.A.field
        return matmul(self.A, transpose(frobenius_matrix(self.A, f.m - self.s)))

    @property
    def lambdas(self) -> tuple[int, ...] | None:
        g = self.gram
        if g.rows != g.cols:
            return None
        diag_ok = all(g[i, j] == 0 for i in range(g.rows) for j in range(g.cols) if i != j)
        lam = tuple(g[i, i] for i in range(g.rows))
        return lam if diag_ok and all(lam) else None

    @property
    def gram_is_diagonal_invertible(self) -> bool:
        return self.lambdas is not None


@dataclass(frozen=True)
class MatrixProductCode:
    spec: MatrixProductSpec
    code: LinearCode
    constituent_distances: tuple[DistanceReport, ...]
    u_distances: tuple[int, ...]

    @property
    def distance_bound(self) -> int:
        """min_i d_i * d(U_A(i))."""
        return min(d.value * u for d, u in zip(self.constituent_distances, self.u_distances))


def _validate_mp(spec: MatrixProductSpec) -> tuple[int, int, int]:
    A, cs = spec.A, spec.constituents
    if len(cs) != A.rows:
        raise LengthMismatch(f"A has {A.rows} rows but {len(cs)} constituents given")
    if A.rows > A.cols or rank(A) != A.rows:
        raise NotFRR("A must have full row rank")
    n = cs[0].n
    for c in cs:
        if c.field != A.field:
            raise FieldMismatch("constituents and A must share one field")
        if c.n != n:
            raise LengthMismatch("constituents must share one length")
    return A.rows, A.cols, n


def mp_generator(A: MatrixGF, gens: Sequence[Sequence[Sequence[int]]], n: int) -> list[list[int]]:
    """Block rows (a_i1 G_i | ... | a_it G_i); empty G_i contribute nothing."""
    f = A.field
    out = []
    for i, g in enumerate(gens):
        for r in g:
            row: list[int] = []
            for j in range(A.cols):
                a = A[i, j]
                row.extend(f.mul(a, x) for x in r)
            out.append(row)
    return out


def _mp_code(A: MatrixGF, codes: Sequence[LinearCode], n: int) -> LinearCode:
    rows = mp_generator(A, [c.rows for c in codes], n)
    sp = Subspace.span(A.field, n * A.cols, rows)
    return LinearCode.from_subspace(sp)


def u_distances(A: MatrixGF) -> tuple[int, ...]:
    """d(U_A(i)) for i = 1..l, U_A(i) the span of A's first i rows."""
    out = []
    for i in range(1, A.rows + 1):
        c = code_from_generator(A.field, [A.row(j) for j in range(i)])
        rep = min_distance(c)
        out.append(rep.value)
    return tuple(out)


def matrix_product_code(spec: MatrixProductSpec, budget: int = DEFAULT_DISTANCE_BUDGET) -> MatrixProductCode:
    _, _, n = _validate_mp(spec)
    code = _mp_code(spec.A, spec.constituents, n)
    if code.k != sum(c.k for c in spec.constituents):
        raise InternalInvariantViolation("matrix-product dimension differs from the sum of constituent dimensions")
    dists = tuple(min_distance(c, budget) for c in spec.constituents)
    return MatrixProductCode(spec, code, dists, u_distances(spec.A))


def matrix_product_dual(spec: MatrixProductSpec) -> LinearCode:
    """Euclidean dual via [C_1^perp, ..., C_l^perp](A^-1)^T, cross-checked against the kernel route."""
    _, t, n = _validate_mp(spec)
    A = spec.A
    if A.rows != t:
        raise NotSquare("matrix-product dual needs a square A")
    a_inv_t = transpose(inverse(A))
    duals = [galois_dual(c, 0) for c in spec.constituents]
    formula = _mp_code(a_inv_t, duals, n)
    direct = galois_dual(_mp_code(A, spec.constituents, n), 0)
    if formula.generator != direct.generator:
        raise InternalInvariantViolation("matrix-product dual formula disagrees with the kernel computation")
    return formula


def matrix_product_hull(spec: MatrixProductSpec) -> LinearCode:
    """[Hull_s(C_1), ..., Hull_s(C_l)] A, valid when A (A^(p^(m-s)))^T is diagonal and invertible."""
    _, t, n = _validate_mp(spec)
    if spec.A.rows != t:
        raise NotSquare("matrix-product hull needs a square A")
    if not spec.gram_is_diagonal_invertible:
        raise GramNotDiagonal("A (A^(p^(m-s)))^T is not an invertible diagonal matrix")
    hulls = [hull(c, spec.s) for c in spec.constituents]
    return _mp_code(spec.A, hulls, n)


def matrix_product_hull_dims(spec: MatrixProductSpec) -> tuple[int, ...]:
    return tuple(hull(c, spec.s).k for c in spec.constituents)


def ones_minus_ones(field: FiniteField) -> MatrixGF:
    """[[1, 1], [1, -1]]."""
    return MatrixGF.from_rows(field, [[1, 1], [1, -1]])
