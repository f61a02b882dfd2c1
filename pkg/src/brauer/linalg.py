"""Exact linear algebra over prime fields GF(p).

Matrices are numpy int64 arrays with entries in ``range(p)``.  Only small
primes are used, so products never overflow.
"""

from __future__ import annotations

import numpy as np


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def as_field(a, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    m = as_field(a, p).copy()
    if m.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    n_rows, n_cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            m[hit] = (m[hit] - np.outer(col[hit], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(a, p: int) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a, p: int) -> np.ndarray:
    """Basis (as rows) of ``{x : a @ x = 0}``."""
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    r, pivots = rref(a, p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-r[row, f]) % p
    return basis


def row_space(a, p: int) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        return np.zeros((0, a.shape[1] if a.ndim == 2 else 0), dtype=np.int64)
    return rref(a, p)[0]


def in_span(v, rows, p: int) -> bool:
    rows = np.asarray(rows, dtype=np.int64)
    v = as_field(v, p)
    if not v.any():
        return True
    if rows.size == 0:
        return False
    return rank(np.vstack([rows, v]), p) == rank(rows, p)


class Echelon:
    """Incrementally grown row space with reduction to normal form.

    Rows are kept reduced against each other, so :meth:`reduce` returns a
    vector supported on non-pivot columns only.  Column order matters: the
    leftmost nonzero entry of a new vector becomes its pivot.
    """

    def __init__(self, n_cols: int, p: int):
        self.n_cols = n_cols
        self.p = p
        self.rows: dict[int, np.ndarray] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, v) -> np.ndarray:
        p = self.p
        v = as_field(v, p).copy()
        for c in sorted(self.rows):
            if v[c]:
                v = (v - v[c] * self.rows[c]) % p
        return v

    def add(self, v) -> np.ndarray | None:
        """Add ``v``; returns the new reduced row, or None if already spanned."""
        p = self.p
        w = self.reduce(v)
        nz = np.flatnonzero(w)
        if nz.size == 0:
            return None
        c = int(nz[0])
        w = (w * pow(int(w[c]), -1, p)) % p
        for pc, row in self.rows.items():
            if row[c]:
                self.rows[pc] = (row - row[c] * w) % p
        self.rows[c] = w
        return w

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def matrix(self) -> np.ndarray:
        if not self.rows:
            return np.zeros((0, self.n_cols), dtype=np.int64)
        return np.vstack([self.rows[c] for c in sorted(self.rows)])
