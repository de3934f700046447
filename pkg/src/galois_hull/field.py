"""Arithmetic in GF(p^m) over a fixed polynomial basis.

Elements are encoded as integers ``v = c_0 + c_1 p + ... + c_{m-1} p^{m-1}``
where ``c_i`` are the polynomial-basis coordinates.  Prime-field elements keep
the same encoding in every extension, which makes GF(p) scalars (including
``-1``) portable between fields of one characteristic.

Fields of order at most 2**16 carry exp/log/Zech tables built eagerly at
construction, so a field object is immutable once returned.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import poly
from .errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    NotASubfield,
    NotPrime,
    ReducibleModulus,
)

TABLE_LIMIT = 1 << 16
MAX_PRIME = (1 << 64) - 1


class FiniteField:
    """The field GF(p^m) = GF(p)[x] / (modulus)."""

    def __init__(self, p: int, m: int, modulus: Sequence[int]) -> None:
        self.p = p
        self.m = m
        self.modulus = tuple(modulus)
        self.order = p**m
        self._mod_list = list(self.modulus)
        self._pow = [p**i for i in range(m)]
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._zech: list[int] | None = None
        self.primitive = self._find_primitive()
        if 2 < self.order <= TABLE_LIMIT:
            self._build_tables()

    # -- descriptor -----------------------------------------------------
    def descriptor(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __call__(self, value: int | Sequence[int]) -> "FieldElement":
        if isinstance(value, int):
            return FieldElement(self, self.from_int(value))
        return FieldElement(self, self.from_coeffs(value))

    # -- encoding -------------------------------------------------------
    def from_int(self, value: int) -> int:
        """Nonnegative ints are encodings; negatives are prime-field residues."""
        if value < 0:
            return value % self.p
        if value >= self.order:
            raise ValueError(f"{value} is not an element encoding of {self}")
        return value

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.m:
            raise ValueError(f"too many coordinates for {self}")
        return sum((c % self.p) * self._pow[i] for i, c in enumerate(coeffs))

    def coeffs(self, v: int) -> list[int]:
        out = []
        for _ in range(self.m):
            v, r = divmod(v, self.p)
            out.append(r)
        return out

    def elements(self) -> range:
        return range(self.order)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def primitive_element(self) -> "FieldElement":
        return FieldElement(self, self.primitive)

    # -- raw arithmetic on encodings --------------------------------------
    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % p
        if self._zech is not None:
            if a == 0:
                return b
            if b == 0:
                return a
            n = self.order - 1
            la = self._log[a]
            z = self._zech[(self._log[b] - la) % n]
            return 0 if z < 0 else self._exp[(la + z) % n]
        return self._digitwise(a, b, 1)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2 or a == 0:
            return a
        if self.m == 1:
            return p - a
        if self._log is not None:
            n = self.order - 1
            return self._exp[(self._log[a] + n // 2) % n]
        return self._digitwise(0, a, -1)

    def _digitwise(self, a: int, b: int, sign: int) -> int:
        p, out, scale = self.p, 0, 1
        for _ in range(self.m):
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + sign * rb) % p) * scale
            scale *= p
        return out

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return self._poly_mul(a, b)

    def _poly_mul(self, a: int, b: int) -> int:
        prod = poly.mul(self.coeffs(a), self.coeffs(b), self.p)
        return self.from_coeffs(poly.mod(prod, self._mod_list, self.p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"zero has no inverse in {self}")
        if self.m == 1:
            return pow(a, -1, self.p)
        if self._log is not None:
            return self._exp[(-self._log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.m == 1:
            return pow(a, e, self.p)
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        result = 1
        while e:
            if e & 1:
                result = self._poly_mul(result, a)
            a = self._poly_mul(a, a)
            e >>= 1
        return result

    def frob(self, a: int, t: int) -> int:
        """a^(p^t); t is reduced mod m."""
        t %= self.m
        if t == 0 or a == 0 or self.m == 1:
            return a
        if self._log is not None:
            return self._exp[(self._log[a] * self.p**t) % (self.order - 1)]
        return self.pow(a, self.p**t)

    def order_of(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        n = self.order - 1
        order = n
        for r in poly.factorize(n):
            while order % r == 0 and self.pow(a, order // r) == 1:
                order //= r
        return order

    def log(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("log of zero")
        if self._log is not None:
            return self._log[a]
        g, x = self.primitive, 1
        for i in range(self.order - 1):
            if x == a:
                return i
            x = self.mul(x, g)
        raise AssertionError("primitive element does not generate the group")

    # -- construction helpers ------------------------------------------
    def _find_primitive(self) -> int:
        n = self.order - 1
        if n == 1:
            return 1
        primes = list(poly.factorize(n))
        for g in range(2, self.order):
            if all(self.pow(g, n // r) != 1 for r in primes):
                return g
        raise AssertionError("multiplicative group of a finite field is cyclic")

    def _build_tables(self) -> None:
        n = self.order - 1
        exp = [0] * n
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._poly_mul(x, self.primitive)
        zech = [-1] * n
        if self.p != 2:
            for i in range(n):
                s = self._digitwise(1, exp[i], 1)
                zech[i] = -1 if s == 0 else log[s]
        self._exp, self._log = exp, log
        self._zech = zech if self.p != 2 and self.m > 1 else None


@dataclass(frozen=True)
class FieldElement:
    """A handle on one element of a FiniteField."""

    field: FiniteField
    value: int

    @property
    def coeffs(self) -> list[int]:
        return self.field.coeffs(self.value)

    def _other(self, other: object) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other) if other >= 0 else other % self.field.p
        return NotImplemented  # type: ignore[return-value]

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(self.field, v)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.value, o))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.field}({self.coeffs})"


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus: tuple[int, ...]) -> FiniteField:
    return FiniteField(p, m, modulus)


def field_create(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FiniteField:
    """GF(p^m); without ``modulus`` the lexicographically smallest monic irreducible is used."""
    if not isinstance(p, int) or p > MAX_PRIME or not poly.is_prime(p):
        raise NotPrime(f"{p} is not a prime")
    if m < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
    if modulus is None:
        mod = poly.smallest_irreducible(m, p)
    else:
        raw = list(modulus)
        mod = poly.trim([c % p for c in raw])
        if len(raw) != m + 1 or len(mod) != m + 1:
            raise DegreeMismatch(f"modulus must have degree exactly {m}")
        if mod[-1] != 1:
            raise DegreeMismatch("modulus must be monic")
        if not poly.is_irreducible(mod, p):
            raise ReducibleModulus(f"{mod} is reducible over GF({p})")
    return _cached_field(p, m, tuple(mod))


def field_from_order(q: int) -> FiniteField:
    """Default field of order q = p^m."""
    factors = poly.factorize(q)
    if len(factors) != 1:
        raise NotPrime(f"{q} is not a prime power")
    ((p, m),) = factors.items()
    return field_create(p, m)


def field_from_descriptor(desc: dict) -> FiniteField:
    return field_create(int(desc["p"]), int(desc.get("m", 1)), desc.get("modulus"))


def frobenius(x: FieldElement, t: int) -> FieldElement:
    """x^(p^t)."""
    if t < 0:
        raise ValueError("frobenius exponent must be nonnegative")
    return FieldElement(x.field, x.field.frob(x.value, t))


class SubfieldEmbedding:
    """A ring embedding GF(p^a) -> GF(p^m), a | m.

    The generator x of ``sub`` is sent to the first root of sub's modulus met
    while walking the fixed field of Frobenius^a in primitive-power order.
    """

    def __init__(self, sub: FiniteField, sup: FiniteField) -> None:
        if sub.p != sup.p or sup.m % sub.m:
            raise NotASubfield(f"{sub} does not embed in {sup}")
        self.sub = sub
        self.sup = sup
        self.image_of_generator = self._find_root()
        self._image = [self._embed_raw(v) for v in sub.elements()]
        self._preimage = {w: v for v, w in enumerate(self._image)}

    def _find_root(self) -> int:
        sub, sup = self.sub, self.sup
        if sub.m == 1:
            return sup.from_int(sub.modulus[0] and sub.p - sub.modulus[0])
        if sub == sup:
            return sup.p  # the element x itself
        step = sup.pow(sup.primitive, (sup.order - 1) // (sub.order - 1))
        r = 1
        for _ in range(sub.order - 1):
            if self._eval_modulus(r) == 0:
                return r
            r = sup.mul(r, step)
        raise AssertionError("subfield modulus must split in the extension")

    def _eval_modulus(self, r: int) -> int:
        sup, acc = self.sup, 0
        for c in reversed(self.sub.modulus):
            acc = sup.add(sup.mul(acc, r), c)
        return acc

    def _embed_raw(self, v: int) -> int:
        sup, acc = self.sup, 0
        for c in reversed(self.sub.coeffs(v)):
            acc = sup.add(sup.mul(acc, self.image_of_generator), c)
        return acc

    def embed(self, x: FieldElement | int) -> FieldElement:
        v = x.value if isinstance(x, FieldElement) else x
        if isinstance(x, FieldElement) and x.field != self.sub:
            raise FieldMismatch(f"expected element of {self.sub}")
        return FieldElement(self.sup, self._image[v])

    def embed_raw(self, v: int) -> int:
        return self._image[v]

    def contains(self, w: int) -> bool:
        return w in self._preimage

    def pullback(self, w: int) -> int:
        """Inverse of the embedding on its image."""
        try:
            return self._preimage[w]
        except KeyError:
            raise NotASubfield(f"{self.sup}({self.sup.coeffs(w)}) is not in the image of {self.sub}") from None


@functools.lru_cache(maxsize=None)
def embedding(sub: FiniteField, sup: FiniteField) -> SubfieldEmbedding:
    return SubfieldEmbedding(sub, sup)


def raw_trace(field: FiniteField, v: int, sub_degree: int) -> int:
    """Relative trace to the degree-``sub_degree`` subfield, left in ``field``."""
    if field.m % sub_degree:
        raise NotASubfield(f"degree {sub_degree} does not divide {field.m}")
    acc, x = 0, v
    for _ in range(field.m // sub_degree):
        acc = field.add(acc, x)
        x = field.frob(x, sub_degree)
    return acc


def trace(x: FieldElement, sub: FiniteField) -> FieldElement:
    """Relative trace Tr_{F/sub}(x) as an element of ``sub``."""
    emb = embedding(sub, x.field)
    return FieldElement(sub, emb.pullback(raw_trace(x.field, x.value, sub.m)))


def elements_from(field: FiniteField, values: Iterable[int]) -> list[FieldElement]:
    return [FieldElement(field, field.from_int(v)) for v in values]
