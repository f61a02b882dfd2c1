"""Finite-dimensional quotients of path algebras over GF(p).

A basis element is a path class written right to left, like the paths in
:mod:`brauer.quiver`; idempotents are the empty paths.  Products follow the
same convention: ``mult[i, j]`` holds the coordinates of ``b_i ∘ b_j`` (first
``b_j``, then ``b_i``), which is nonzero only when ``b_j`` ends where ``b_i``
starts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import AlgebraError
from .linalg import Echelon, in_span, is_prime, nullspace, row_space
from .quiver import QuiverWithRelations


@dataclass(frozen=True)
class PathClass:
    src: object
    dst: object
    word: tuple = ()

    @property
    def length(self) -> int:
        return len(self.word)

    def __str__(self):
        return f"e{self.src}" if not self.word else "·".join(str(a) for a in self.word)


@dataclass(eq=False)
class AlgebraTable:
    p: int
    vertices: tuple
    basis: tuple
    mult: np.ndarray
    layer: np.ndarray
    quiver: QuiverWithRelations = field(repr=False, default=None)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def idempotent(self) -> dict:
        return {b.src: i for i, b in enumerate(self.basis) if not b.word}

    @cached_property
    def _between(self) -> dict:
        out: dict = {}
        for i, b in enumerate(self.basis):
            out.setdefault((b.src, b.dst), []).append(i)
        return {k: np.array(v, dtype=np.int64) for k, v in out.items()}

    def between(self, x, y) -> np.ndarray:
        """Indices of basis paths from ``x`` to ``y`` (a basis of e_y Λ e_x)."""
        return self._between.get((x, y), np.zeros(0, dtype=np.int64))

    def unit(self, v) -> np.ndarray:
        out = np.zeros(self.dim, dtype=np.int64)
        out[self.idempotent[v]] = 1
        return out

    def element(self, word) -> np.ndarray:
        """Coordinates of a path given as a right-to-left tuple of arrow ids."""
        q = self.quiver
        out = self.unit(q.arrow(word[-1]).src)
        for a in reversed(word):
            out = self.product(self._arrow_elements[a], out)
        return out

    @cached_property
    def _arrow_elements(self) -> dict:
        out = {}
        where = {b: i for i, b in enumerate(self.basis)}
        for a in self.quiver.arrows:
            i = where.get(PathClass(a.src, a.dst, (a.id,)))
            if i is None:
                raise AlgebraError(f"arrow {a.id!r} vanishes in the quotient; relations are not admissible")
            v = np.zeros(self.dim, dtype=np.int64)
            v[i] = 1
            out[a.id] = v
        return out

    def arrow(self, aid) -> np.ndarray:
        return self._arrow_elements[aid].copy()

    def product(self, x, y) -> np.ndarray:
        """``x ∘ y`` for coordinate vectors."""
        return np.einsum("i,j,ijk->k", x, y, self.mult) % self.p

    def left_matrix(self, x) -> np.ndarray:
        """Row m is ``x ∘ b_m``."""
        return np.einsum("i,imk->mk", x, self.mult) % self.p

    def right_matrix(self, x) -> np.ndarray:
        """Row m is ``b_m ∘ x``."""
        return np.einsum("j,mjk->mk", x, self.mult) % self.p

    def cartan(self) -> np.ndarray:
        """Entry (x, y) is dim e_y Λ e_x, the number of basis paths x -> y."""
        vs = self.vertices
        return np.array([[len(self.between(x, y)) for y in vs] for x in vs], dtype=np.int64)

    # -- radical and socles -----------------------------------------------------------

    def radical_dim(self, x, y, k: int) -> int:
        """dim of e_y rad^k e_x."""
        idx = self.between(x, y)
        return int(np.sum(self.layer[idx] >= k))

    def ext1_loops(self, v) -> int:
        """dim e_v (rad / rad²) e_v, i.e. dim Ext¹(S_v, S_v)."""
        return self.radical_dim(v, v, 1) - self.radical_dim(v, v, 2)

    def _socle(self, side: str) -> dict:
        arrows = [self._arrow_elements[a.id] for a in self.quiver.arrows]
        ops = [self.right_matrix(a) if side == "right" else self.left_matrix(a) for a in arrows]
        big = np.hstack(ops) if ops else np.zeros((self.dim, 0), dtype=np.int64)
        out = {}
        for v in self.vertices:
            # right socle of e_vΛ: paths ending at v killed by every arrow on the right
            if side == "right":
                idx = np.array([i for i, b in enumerate(self.basis) if b.dst == v])
            else:
                idx = np.array([i for i, b in enumerate(self.basis) if b.src == v])
            sub = big[idx]
            ker = nullspace(sub.T, self.p)
            vecs = np.zeros((len(ker), self.dim), dtype=np.int64)
            vecs[:, idx] = ker
            out[v] = vecs
        return out

    @cached_property
    def right_socles(self) -> dict:
        return self._socle("right")

    @cached_property
    def left_socles(self) -> dict:
        return self._socle("left")

    def _socle_vertex(self, vecs, side):
        ends = set()
        for vec in vecs:
            for i in np.flatnonzero(vec):
                b = self.basis[i]
                ends.add(b.src if side == "right" else b.dst)
        return ends

    @cached_property
    def nakayama(self) -> dict | None:
        """``nu[x]`` = vertex of the simple socle of e_xΛ, or None if not selfinjective."""
        nu = {}
        for side, soc in (("right", self.right_socles), ("left", self.left_socles)):
            perm = {}
            for v, vecs in soc.items():
                ends = self._socle_vertex(vecs, side)
                if len(vecs) != 1 or len(ends) != 1:
                    return None
                perm[v] = ends.pop()
            if sorted(map(str, perm.values())) != sorted(map(str, self.vertices)):
                return None
            if side == "right":
                nu = perm
            elif any(perm[nu[x]] != x for x in self.vertices):
                return None
        return nu

    @property
    def is_selfinjective(self) -> bool:
        return self.nakayama is not None

    @property
    def is_weakly_symmetric(self) -> bool:
        nu = self.nakayama
        return nu is not None and all(nu[v] == v for v in self.vertices)

    # -- checks -----------------------------------------------------------------------

    def check_associative(self) -> bool:
        m = self.mult
        lhs = np.tensordot(m, m, axes=([2], [0])) % self.p  # (b_i b_j) b_l
        rhs = np.einsum("jlk,ikm->ijlm", m, m) % self.p  # b_i (b_j b_l)
        return bool(np.array_equal(lhs, rhs))

    def check_idempotents(self) -> bool:
        one = sum(self.unit(v) for v in self.vertices) % self.p
        for i in range(self.dim):
            b = np.zeros(self.dim, dtype=np.int64)
            b[i] = 1
            if not (np.array_equal(self.product(one, b), b) and np.array_equal(self.product(b, one), b)):
                return False
        for v in self.vertices:
            for w in self.vertices:
                prod = self.product(self.unit(v), self.unit(w))
                want = self.unit(v) if v == w else np.zeros(self.dim, dtype=np.int64)
                if not np.array_equal(prod, want):
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "field": self.p,
            "dimension": self.dim,
            "basis": [
                {"src": _j(b.src), "dst": _j(b.dst), "path": [_j(a) for a in b.word], "layer": int(l)}
                for b, l in zip(self.basis, self.layer)
            ],
            "cartan": self.cartan().tolist(),
            "nakayama": None if self.nakayama is None else {str(k): _j(v) for k, v in self.nakayama.items()},
        }


def _j(x):
    return x if isinstance(x, (int, str)) else str(x)


def _enumerate_paths(q: QuiverWithRelations, zero_words: set, max_len: int) -> list[tuple]:
    """All paths of length 1..max_len with no zero monomial as a subword."""
    out_of: dict = {}
    for a in q.arrows:
        out_of.setdefault(a.src, []).append(a)
    longest = max((len(w) for w in zero_words), default=0)
    layer = [(a.id,) for a in q.arrows]
    paths = list(layer)
    for _ in range(max_len - 1):
        nxt = []
        for w in layer:
            end = q.arrow(w[0]).dst
            for a in out_of.get(end, []):
                cand = (a.id,) + w
                if any(cand[:k] in zero_words for k in range(2, min(longest, len(cand)) + 1)):
                    continue
                nxt.append(cand)
        paths.extend(nxt)
        layer = nxt
    return paths


def build_algebra(q: QuiverWithRelations, p: int = 2, cap: int | None = None) -> AlgebraTable:
    """Basis and multiplication table of the quotient of the path algebra of ``q``.

    Paths longer than ``cap`` (default ``2 * (|vertices| + 1)``) must vanish in
    the quotient; otherwise the input is rejected as possibly infinite
    dimensional.  For admissible relations this check certifies the result.
    """
    if not is_prime(p):
        raise AlgebraError(f"field order {p} is not prime")
    if cap is None:
        cap = 2 * (len(q.vertices) + 1)
    for rel in q.relations:
        for side in (rel.left, rel.right):
            if side is not None and len(side) < 2:
                raise AlgebraError(f"relation {rel} is not admissible (involves a path of length < 2)")
    zero_words = {tuple(r.left) for r in q.relations if r.kind == "zero"}
    max_len = cap + 1
    paths = _enumerate_paths(q, zero_words, max_len)
    # longest paths first so that normal forms are the shortest representatives
    paths.sort(key=lambda w: (-len(w), [str(a) for a in w]))
    col = {w: i for i, w in enumerate(paths)}
    n = len(paths)

    def vec(word):
        v = np.zeros(n, dtype=np.int64)
        if word in col:
            v[col[word]] = 1
        return v

    out_of: dict = {}
    into: dict = {}
    for a in q.arrows:
        out_of.setdefault(a.src, []).append(a.id)
        into.setdefault(a.dst, []).append(a.id)

    def shift(v, arrow, left):
        out = np.zeros(n, dtype=np.int64)
        for i in np.flatnonzero(v):
            w = paths[i]
            cand = (arrow,) + w if left else w + (arrow,)
            j = col.get(cand)
            if j is not None:
                out[j] = (out[j] + v[i]) % p
        return out

    ech = Echelon(n, p)
    queue = []
    for rel in q.relations:
        if rel.kind == "equality":
            queue.append((vec(tuple(rel.left)) - vec(tuple(rel.right))) % p)
    while queue:
        row = ech.add(queue.pop())
        if row is None:
            continue
        w0 = paths[int(np.flatnonzero(row)[0])]
        s, d = q.path_ends(w0)
        for a in out_of.get(d, []):
            queue.append(shift(row, a, left=True))
        for a in into.get(s, []):
            queue.append(shift(row, a, left=False))

    for w in paths:
        if len(w) >= cap and ech.reduce(vec(w)).any():
            raise AlgebraError(
                f"infinite-dimensional? path {w} of length {len(w)} survives past the cap {cap}"
            )

    pivots = set(ech.pivots)
    survivors = [i for i in range(n) if i not in pivots]
    survivors.sort(key=lambda i: (len(paths[i]), [str(a) for a in reversed(paths[i])]))
    basis = [PathClass(v, v) for v in q.vertices]
    basis += [PathClass(*q.path_ends(paths[i]), paths[i]) for i in survivors]
    dim = len(basis)
    pos = {i: len(q.vertices) + k for k, i in enumerate(survivors)}

    def coords(word):
        out = np.zeros(dim, dtype=np.int64)
        if word not in col:
            return out
        red = ech.reduce(vec(word))
        for i in np.flatnonzero(red):
            out[pos[i]] = red[i]
        return out

    mult = np.zeros((dim, dim, dim), dtype=np.int64)
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            if bi.src != bj.dst:
                continue
            if not bi.word:
                mult[i, j, j] = 1
            elif not bj.word:
                mult[i, j, i] = 1
            else:
                mult[i, j] = coords(bi.word + bj.word)

    layer = _radical_layers(q, paths, basis, coords, max_len, p)
    alg = AlgebraTable(p, tuple(q.vertices), tuple(basis), mult, layer, q)
    if not alg.check_associative():
        raise AlgebraError("multiplication table is not associative")
    if not alg.check_idempotents():
        raise AlgebraError("vertex idempotents are not a complete orthogonal family")
    return alg


def _radical_layers(q, paths, basis, coords, max_len, p):
    """Largest k with the basis element in rad^k, from spans of long paths."""
    dim = len(basis)
    spans = {}
    rows: list = []
    for k in range(max_len, 0, -1):
        rows.extend(coords(w) for w in paths if len(w) == k)
        spans[k] = row_space(np.vstack(rows), p) if rows else np.zeros((0, dim), dtype=np.int64)
    layer = np.zeros(dim, dtype=np.int64)
    for i, b in enumerate(basis):
        if not b.word:
            continue
        e = np.zeros(dim, dtype=np.int64)
        e[i] = 1
        k = b.length
        while k < max_len and in_span(e, spans[k + 1], p):
            k += 1
        layer[i] = k
    return layer
