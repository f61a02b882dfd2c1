"""Modules, complexes of projectives and Hom spaces in the homotopy category.

Conventions for right modules over an :class:`~brauer.algebra.AlgebraTable`:

* ``P_x = e_x Λ`` is spanned by the basis paths ending at ``x``;
* a path ``w: x -> y`` acts as ``P_x -> P_y`` by ``u ↦ w ∘ u``, so
  ``Hom(P_x, P_y) = e_y Λ e_x`` and composing maps composes paths.

A map between sums of projectives is an array of shape
``(len(target), len(source), alg.dim)`` whose entry ``[r, c]`` is the path
combination sending summand ``c`` to summand ``r``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

import numpy as np

from .algebra import AlgebraTable
from .errors import AlgebraError, ReflectionUndefinedError
from .linalg import Echelon, in_span, nullspace, rank, row_space


# -- representations ---------------------------------------------------------------------


@dataclass
class ModuleRep:
    """Right module as a quiver representation.

    ``space[v]`` has dimension ``dims[v]``; for an arrow ``a: v -> w`` the
    matrix ``maps[a]`` has shape ``(dims[w], dims[v])`` and sends a row vector
    ``x`` in ``M(w)`` to ``x @ maps[a]`` in ``M(v)``.
    """

    dims: dict
    maps: dict

    def evaluate(self, quiver, word) -> np.ndarray:
        s, d = quiver.path_ends(word)
        out = np.eye(self.dims[d], dtype=np.int64)
        for a in word:
            out = out @ self.maps[a]
        return out

    def satisfies(self, quiver, p: int) -> bool:
        for rel in quiver.relations:
            left = self.evaluate(quiver, rel.left) % p
            right = 0 if rel.right is None else self.evaluate(quiver, rel.right) % p
            if ((left - right) % p).any():
                return False
        return True

    def socle(self, quiver, p: int) -> dict:
        """Per vertex, a basis (rows) of the vectors killed by every arrow."""
        out = {}
        for v, n in self.dims.items():
            ops = [self.maps[a.id] for a in quiver.arrows if a.dst == v]
            if n == 0:
                out[v] = np.zeros((0, 0), dtype=np.int64)
            elif not ops:
                out[v] = np.eye(n, dtype=np.int64)
            else:
                out[v] = nullspace(np.hstack(ops).T, p)
        return out

    def quotient(self, quiver, sub: dict, p: int) -> "ModuleRep":
        """Quotient by the submodule spanned per vertex by the rows of ``sub[v]``."""
        keep = {}
        ech = {}
        for v, n in self.dims.items():
            e = Echelon(n, p)
            for row in sub.get(v, np.zeros((0, n), dtype=np.int64)):
                e.add(row)
            ech[v] = e
            keep[v] = [c for c in range(n) if c not in set(e.pivots)]
        maps = {}
        for a in quiver.arrows:
            v, w = a.src, a.dst
            m = np.zeros((len(keep[w]), len(keep[v])), dtype=np.int64)
            for i, c in enumerate(keep[w]):
                x = np.zeros(self.dims[w], dtype=np.int64)
                x[c] = 1
                y = ech[v].reduce(x @ self.maps[a.id])
                m[i] = y[keep[v]]
            maps[a.id] = m
        return ModuleRep({v: len(k) for v, k in keep.items()}, maps)


def projective_rep(alg: AlgebraTable, x) -> tuple[ModuleRep, dict]:
    """``P_x`` as a representation, with the basis indices used at each vertex."""
    idx = {v: alg.between(v, x) for v in alg.vertices}
    maps = {}
    for a in alg.quiver.arrows:
        right = alg.right_matrix(alg.arrow(a.id))
        maps[a.id] = right[np.ix_(idx[a.dst], idx[a.src])]
    return ModuleRep({v: len(i) for v, i in idx.items()}, maps), idx


# -- complexes ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProjComplex:
    """Bounded complex of projectives.

    ``terms[k]`` lists the vertices of the summands in degree ``k``;
    ``diffs[k]`` maps degree ``k`` to degree ``k + 1``.
    """

    terms: dict
    diffs: dict = field(default_factory=dict)

    @property
    def degrees(self) -> list[int]:
        return sorted(k for k, t in self.terms.items() if t)

    def term(self, k) -> tuple:
        return tuple(self.terms.get(k, ()))

    def diff(self, k, dim: int) -> np.ndarray:
        d = self.diffs.get(k)
        if d is None:
            return np.zeros((len(self.term(k + 1)), len(self.term(k)), dim), dtype=np.int64)
        return d

    def shift(self, j: int) -> "ProjComplex":
        """``C[j]``: degree ``k`` holds ``C^{k+j}``, differentials times ``(-1)^j``."""
        sign = -1 if j % 2 else 1
        return ProjComplex(
            {k - j: t for k, t in self.terms.items()},
            {k - j: sign * d for k, d in self.diffs.items()},
        )

    def permuted(self, perms: dict) -> "ProjComplex":
        """Reorder summands; ``perms[k]`` lists old positions in their new order."""
        terms = {k: tuple(t[i] for i in perms.get(k, range(len(t)))) for k, t in self.terms.items()}
        diffs = {}
        for k, d in self.diffs.items():
            rows = list(perms.get(k + 1, range(d.shape[0])))
            cols = list(perms.get(k, range(d.shape[1])))
            diffs[k] = d[np.ix_(rows, cols)]
        return ProjComplex(terms, diffs)

    def to_json(self) -> dict:
        return {
            "terms": {str(k): [str(v) for v in t] for k, t in sorted(self.terms.items())},
            "differentials": {str(k): d.tolist() for k, d in sorted(self.diffs.items())},
        }


def stalk(v, degree: int = 0) -> ProjComplex:
    return ProjComplex({degree: (v,)})


def direct_sum(*complexes: ProjComplex, dim: int) -> ProjComplex:
    terms: dict = {}
    for c in complexes:
        for k, t in c.terms.items():
            terms[k] = terms.get(k, ()) + tuple(t)
    diffs = {}
    for k in sorted(terms):
        if k + 1 not in terms:
            continue
        r0 = c0 = 0
        out = np.zeros((len(terms[k + 1]), len(terms[k]), dim), dtype=np.int64)
        for c in complexes:
            nr, nc = len(c.term(k + 1)), len(c.term(k))
            out[r0:r0 + nr, c0:c0 + nc] = c.diff(k, dim)
            r0 += nr
            c0 += nc
        if out.any():
            diffs[k] = out
    return ProjComplex(terms, diffs)


def compose_maps(alg: AlgebraTable, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``a ∘ b`` for matrices of algebra elements."""
    return np.einsum("rmi,mcj,ijk->rck", a, b, alg.mult) % alg.p


def check_complex(alg: AlgebraTable, c: ProjComplex) -> bool:
    """Differentials have entries in the right Hom spaces and square to zero."""
    for k in c.degrees:
        d = c.diff(k, alg.dim)
        src, dst = c.term(k), c.term(k + 1)
        for r, c_ in iproduct(range(len(dst)), range(len(src))):
            allowed = np.zeros(alg.dim, dtype=bool)
            allowed[alg.between(src[c_], dst[r])] = True
            if (d[r, c_] % alg.p)[~allowed].any():
                return False
        nxt = c.diff(k + 1, alg.dim)
        if nxt.size and d.size and compose_maps(alg, nxt, d).any():
            return False
    return True


# -- Hom complexes -------------------------------------------------------------------------


class HomComplex:
    """Graded Hom space ``Hom^j(C, D) = Π_k Hom(C^k, D^{k+j})`` with its differential.

    Coordinates of a degree-``j`` map list, block by block over
    ``(k, r, c)``, the coefficients on the basis paths from ``C^k[c]`` to
    ``D^{k+j}[r]``.
    """

    def __init__(self, alg: AlgebraTable, C: ProjComplex, D: ProjComplex):
        self.alg, self.C, self.D = alg, C, D
        self._layouts: dict = {}
        self._deltas: dict = {}
        self._lmats: dict = {}
        self._rmats: dict = {}

    def layout(self, j: int):
        if j not in self._layouts:
            blocks, off = {}, 0
            for k in self.C.degrees:
                tgt = self.D.term(k + j)
                for r, c in iproduct(range(len(tgt)), range(len(self.C.term(k)))):
                    idx = self.alg.between(self.C.term(k)[c], tgt[r])
                    if len(idx):
                        blocks[(k, r, c)] = (off, idx)
                        off += len(idx)
            self._layouts[j] = (blocks, off)
        return self._layouts[j]

    def dim(self, j: int) -> int:
        return self.layout(j)[1]

    def _lmat(self, key, x):
        if key not in self._lmats:
            self._lmats[key] = self.alg.left_matrix(x)
        return self._lmats[key]

    def _rmat(self, key, x):
        if key not in self._rmats:
            self._rmats[key] = self.alg.right_matrix(x)
        return self._rmats[key]

    def delta(self, j: int) -> np.ndarray:
        """Matrix (rows = source coordinates) of ``φ ↦ d_D φ - (-1)^j φ d_C``."""
        if j in self._deltas:
            return self._deltas[j]
        alg, p = self.alg, self.alg.p
        src, n_src = self.layout(j)
        dst, n_dst = self.layout(j + 1)
        out = np.zeros((n_src, n_dst), dtype=np.int64)
        sign = -1 if j % 2 else 1
        for (k, r, c), (off, idx) in src.items():
            rows = slice(off, off + len(idx))
            dD = self.D.diff(k + j, alg.dim)
            for r2 in range(dD.shape[0]):
                x = dD[r2, r]
                tgt = dst.get((k, r2, c))
                if tgt is None or not x.any():
                    continue
                L = self._lmat(("D", k + j, r2, r), x)
                out[rows, tgt[0]:tgt[0] + len(tgt[1])] += L[np.ix_(idx, tgt[1])]
            dC = self.C.diff(k - 1, alg.dim)
            for c2 in range(dC.shape[1]):
                x = dC[c, c2]
                tgt = dst.get((k - 1, r, c2))
                if tgt is None or not x.any():
                    continue
                R = self._rmat(("C", k - 1, c, c2), x)
                out[rows, tgt[0]:tgt[0] + len(tgt[1])] -= sign * R[np.ix_(idx, tgt[1])]
        out %= p
        self._deltas[j] = out
        return out

    def homology_dim(self, j: int) -> int:
        p = self.alg.p
        return self.dim(j) - rank(self.delta(j), p) - rank(self.delta(j - 1), p)

    def cycles(self, j: int) -> np.ndarray:
        """Basis (rows) of degree-``j`` chain maps."""
        d = self.delta(j)
        if d.shape[1] == 0:
            return np.eye(d.shape[0], dtype=np.int64)
        return nullspace(d.T, self.alg.p)

    def boundaries(self, j: int) -> np.ndarray:
        """Basis (rows) of null-homotopic degree-``j`` maps."""
        return row_space(self.delta(j - 1), self.alg.p)

    def to_maps(self, vec, j: int) -> dict:
        """Coordinates -> ``{k: array}`` of components ``C^k -> D^{k+j}``."""
        blocks, _ = self.layout(j)
        out = {
            k: np.zeros((len(self.D.term(k + j)), len(self.C.term(k)), self.alg.dim), dtype=np.int64)
            for k in self.C.degrees
        }
        for (k, r, c), (off, idx) in blocks.items():
            out[k][r, c, idx] = vec[off:off + len(idx)]
        return out

    def from_maps(self, maps: dict, j: int) -> np.ndarray:
        blocks, n = self.layout(j)
        vec = np.zeros(n, dtype=np.int64)
        for (k, r, c), (off, idx) in blocks.items():
            if k in maps:
                entry = maps[k][r, c] % self.alg.p
                vec[off:off + len(idx)] = entry[idx]
                mask = np.ones(self.alg.dim, dtype=bool)
                mask[idx] = False
                if entry[mask].any():
                    raise AlgebraError("map component lies outside the expected Hom space")
        return vec


def hom_dim(alg: AlgebraTable, C: ProjComplex, D: ProjComplex, j: int = 0) -> int:
    """dim Hom(C, D[j]) in the homotopy category."""
    return HomComplex(alg, C, D).homology_dim(j)


def compose_chain_maps(alg, psi: dict, phi: dict) -> dict:
    """Degree-0 composition ``ψ ∘ φ`` of component dictionaries."""
    return {k: compose_maps(alg, psi[k], phi[k]) for k in phi if k in psi}


# -- injective presentations and tilting complexes -------------------------------------


@dataclass(frozen=True)
class InjectivePresentation:
    """``0 -> S_t -> E0 --f--> E1`` with E0 = P_t."""

    t: object
    e0: tuple
    f: np.ndarray
    e1: tuple
    socle_dims: dict

    def cone(self) -> ProjComplex:
        return ProjComplex({-1: self.e0, 0: self.e1}, {-1: self.f} if self.e1 else {})


def _kernel_dim(alg, t, f_entries):
    """dim of {u in P_t : f_i ∘ u = 0 for all i}."""
    idx = [i for i, b in enumerate(alg.basis) if b.dst == t]
    cols = []
    for x in f_entries:
        L = alg.left_matrix(x)[idx]
        cols.append(L)
    big = np.hstack(cols) if cols else np.zeros((len(idx), 0), dtype=np.int64)
    return len(idx) - rank(big, alg.p)


def injective_presentation(alg: AlgebraTable, t) -> InjectivePresentation:
    """Minimal injective presentation of the simple module at ``t``.

    Requires ``E(S_t) ≅ P_t`` (the Nakayama permutation fixes ``t``) and
    ``Ext¹(S_t, S_t) = 0``.  ``E1`` is the injective envelope of ``P_t / S_t``;
    the injective envelope of ``S_y`` is ``P_{ν⁻¹(y)}``.
    """
    nu = alg.nakayama
    if nu is None:
        raise ReflectionUndefinedError("the algebra is not selfinjective")
    if nu[t] != t:
        raise ReflectionUndefinedError(f"E(S_{t}) is P_{_inverse(nu)[t]}, not P_{t}")
    if alg.ext1_loops(t):
        raise ReflectionUndefinedError(f"Ext¹(S_{t}, S_{t}) ≠ 0: there is a loop at {t}")
    p = alg.p
    rep, idx = projective_rep(alg, t)
    soc = rep.socle(alg.quiver, p)
    quo = rep.quotient(alg.quiver, soc, p)
    soc2 = quo.socle(alg.quiver, p)
    inv = _inverse(nu)
    e1 = []
    for y in alg.vertices:
        e1.extend([inv[y]] * len(soc2[y]))
    e1 = tuple(e1)
    f = _find_presentation_map(alg, t, e1)
    if f is None:
        raise AlgebraError(f"no radical map P_{t} -> E1 with kernel S_{t} was found")
    return InjectivePresentation(t, (t,), f, e1, {str(y): len(soc2[y]) for y in alg.vertices if len(soc2[y])})


def _inverse(nu):
    return {v: k for k, v in nu.items()}


def _find_presentation_map(alg, t, e1, search_limit=4096):
    """A column f of radical elements ``t -> z_i`` with ker f = soc P_t."""
    p = alg.p
    spaces = []
    for z in e1:
        idx = [i for i in alg.between(t, z) if alg.layer[i] >= 1]
        spaces.append(idx)

    def build(choice):
        f = np.zeros((len(e1), 1, alg.dim), dtype=np.int64)
        for i, vec in enumerate(choice):
            f[i, 0] = vec
        return f

    def ok(choice):
        return _kernel_dim(alg, t, choice) == 1

    # single basis paths, shortest first
    singles = [sorted(s, key=lambda i: (alg.layer[i], i)) for s in spaces]
    for combo in iproduct(*singles):
        choice = []
        for i in combo:
            v = np.zeros(alg.dim, dtype=np.int64)
            v[i] = 1
            choice.append(v)
        if ok(choice):
            return build(choice)
    # general linear combinations, small spaces only
    total = 1
    for s in spaces:
        total *= p ** len(s)
    if total > search_limit:
        return None
    per = []
    for s in spaces:
        vecs = []
        for coeffs in iproduct(range(p), repeat=len(s)):
            v = np.zeros(alg.dim, dtype=np.int64)
            v[list(s)] = coeffs
            vecs.append(v)
        per.append(vecs)
    for choice in iproduct(*per):
        if ok(list(choice)):
            return build(list(choice))
    return None


@dataclass(frozen=True)
class TiltingComplex:
    """``T = T_1 ⊕ E`` with ``E`` the cone of the presentation map at ``t``.

    ``summands`` maps a label to an indecomposable summand: every vertex
    ``i ≠ t`` labels the stalk ``P_i`` and ``t`` labels ``E``.
    """

    t: object
    presentation: InjectivePresentation
    summands: dict

    @property
    def cone(self) -> ProjComplex:
        return self.summands[self.t]

    def total(self, dim: int) -> ProjComplex:
        return direct_sum(*self.summands.values(), dim=dim)


def tilting_complex(alg: AlgebraTable, t) -> TiltingComplex:
    pres = injective_presentation(alg, t)
    summands = {v: (pres.cone() if v == t else stalk(v)) for v in alg.vertices}
    for c in summands.values():
        if not check_complex(alg, c):
            raise AlgebraError("differential does not square to zero")
    return TiltingComplex(t, pres, summands)


def radical_chain_maps(alg, hc: HomComplex, same: bool) -> np.ndarray:
    """Degree-0 chain maps in the radical of the category of summands.

    Between different indecomposable summands every map is radical; for an
    endomorphism, the radical is cut out by zero coefficients on the
    idempotents of matching summands.
    """
    z = hc.cycles(0)
    if not same or len(z) == 0:
        return z
    blocks, n = hc.layout(0)
    cons = []
    for (k, r, c), (off, idx) in blocks.items():
        if r != c:
            continue
        for pos, i in enumerate(idx):
            if not alg.basis[i].word:
                e = np.zeros(n, dtype=np.int64)
                e[off + pos] = 1
                cons.append(e)
    if not cons:
        return z
    # combinations of cycles with vanishing idempotent coefficients
    coeff = (z @ np.vstack(cons).T) % alg.p
    ker = nullspace(coeff.T, alg.p)
    return (ker @ z) % alg.p if len(ker) else np.zeros((0, n), dtype=np.int64)


def in_span_mod(vec, *spaces, p):
    rows = [s for s in spaces if len(s)]
    if not rows:
        return not np.asarray(vec).any()
    return in_span(vec, np.vstack(rows), p)
