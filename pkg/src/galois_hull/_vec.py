"""Vectorised span enumeration used by the distance routines."""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from .field import FiniteField

CHUNK = 1 << 14


class VecField:
    """Numpy views of a field's exp/log/Zech tables."""

    def __init__(self, f: FiniteField) -> None:
        self.f = f
        self.q = f.order
        if f.order > 2 and f._log is None:
            raise NotImplementedError(f"{f} is too large for table-driven enumeration")
        if f.order > 2:
            self.exp = np.array(f._exp, dtype=np.int64)
            self.log = np.array(f._log, dtype=np.int64)
            if f._zech is not None:
                self.zech = np.array(f._zech, dtype=np.int64)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        f = self.f
        if f.p == 2:
            return np.bitwise_xor(a, b)
        if f.m == 1:
            return (a + b) % f.p
        a, b = np.broadcast_arrays(a, b)
        n = self.q - 1
        la = self.log[a]
        z = self.zech[(self.log[b] - la) % n]
        out = np.where(z < 0, 0, self.exp[(la + np.maximum(z, 0)) % n])
        out = np.where(a == 0, b, out)
        return np.where(b == 0, a, out)


def _span_block(vf: VecField, rows: Sequence[Sequence[int]], n: int) -> np.ndarray:
    """All q^len(rows) combinations of ``rows`` as an array of shape (q^r, n)."""
    f = vf.f
    block = np.zeros((1, n), dtype=np.int64)
    for g in rows:
        parts = [block]
        for c in range(1, f.order):
            cg = np.array([f.mul(c, x) for x in g], dtype=np.int64)
            parts.append(vf.add(block, cg[None, :]))
        block = np.concatenate(parts, axis=0)
    return block


def span_chunks(f: FiniteField, rows: Sequence[Sequence[int]], n: int) -> Iterator[np.ndarray]:
    """Yield every vector of span(rows) exactly once, in chunks."""
    vf = VecField(f)
    rows = list(rows)
    q = f.order
    low = 0
    while low < len(rows) and q ** (low + 1) <= CHUNK:
        low += 1
    low = max(low, 1) if rows else 0
    base = _span_block(vf, rows[:low], n)
    high_rows = rows[low:]
    if not high_rows:
        yield base
        return
    highs = _span_block(vf, high_rows, n)
    for h in highs:
        yield vf.add(base, h[None, :])


def weight_distribution(f: FiniteField, rows: Sequence[Sequence[int]], n: int) -> list[int]:
    counts = np.zeros(n + 1, dtype=np.int64)
    for chunk in span_chunks(f, rows, n):
        counts += np.bincount(np.count_nonzero(chunk, axis=1), minlength=n + 1)
    return [int(c) for c in counts]


def span_array(f: FiniteField, rows: Sequence[Sequence[int]], n: int) -> np.ndarray:
    return np.concatenate(list(span_chunks(f, rows, n)), axis=0)
