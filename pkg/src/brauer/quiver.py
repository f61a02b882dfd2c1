"""Quivers with relations for Brauer tree algebras.

Paths are tuples of arrow ids written right to left: the tuple
``(a3, a2, a1)`` is the path that follows ``a1`` first.  Hence the tuple for
``u ∘ v`` is simply ``u + v``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Hashable, Mapping, Sequence

import numpy as np

from .errors import QuiverShapeError, UnsupportedTreeError
from .tree import PlanarTree

Vertex = Hashable
ArrowId = Hashable


@dataclass(frozen=True)
class Arrow:
    id: ArrowId
    src: Vertex
    dst: Vertex
    cycle: Hashable = None


@dataclass(frozen=True)
class Relation:
    """``left = 0`` (kind ``"zero"``) or ``left = right`` (kind ``"equality"``)."""

    kind: str
    left: tuple
    right: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("zero", "equality"):
            raise ValueError(f"bad relation kind {self.kind!r}")
        if (self.kind == "equality") != (self.right is not None):
            raise ValueError("equality relations need a right-hand side; zero relations must not have one")


@dataclass(frozen=True)
class QuiverWithRelations:
    vertices: tuple
    arrows: tuple[Arrow, ...]
    relations: tuple[Relation, ...] = ()
    _by_id: Mapping = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        by_id = {}
        vset = set(self.vertices)
        for a in self.arrows:
            if a.id in by_id:
                raise ValueError(f"duplicate arrow id {a.id!r}")
            if a.src not in vset or a.dst not in vset:
                raise ValueError(f"arrow {a.id!r} has an endpoint outside the vertex set")
            by_id[a.id] = a
        object.__setattr__(self, "_by_id", by_id)
        for rel in self.relations:
            for side in (rel.left, rel.right):
                if side is not None:
                    self.path_ends(side)
            if rel.kind == "equality" and self.path_ends(rel.left) != self.path_ends(rel.right):
                raise ValueError(f"equality relation {rel} is not between parallel paths")

    def arrow(self, aid) -> Arrow:
        return self._by_id[aid]

    def path_ends(self, path: Sequence) -> tuple:
        """(source, target) of a nonempty right-to-left path; checks composability."""
        if not path:
            raise ValueError("empty path has no well-defined ends")
        arrows = [self._by_id[a] for a in path]
        for later, earlier in zip(arrows, arrows[1:]):
            if earlier.dst != later.src:
                raise ValueError(f"path {tuple(path)} does not compose at {earlier.id!r} -> {later.id!r}")
        return arrows[-1].src, arrows[0].dst

    def arrow_between(self, src, dst) -> Arrow:
        found = [a for a in self.arrows if a.src == src and a.dst == dst]
        if len(found) != 1:
            raise KeyError(f"expected one arrow {src} -> {dst}, found {len(found)}")
        return found[0]

    def cycles(self) -> dict:
        """Cycle tag -> vertices in arrow order, validating the Brauer shape."""
        return cycles_of(self)

    def to_json(self) -> dict:
        return {
            "vertices": [_jsonable(v) for v in self.vertices],
            "arrows": [
                {"id": _jsonable(a.id), "src": _jsonable(a.src), "dst": _jsonable(a.dst),
                 "cycle_tag": _jsonable(a.cycle)}
                for a in self.arrows
            ],
            "relations": [
                {"kind": r.kind, "left": [_jsonable(x) for x in r.left],
                 "right": None if r.right is None else [_jsonable(x) for x in r.right]}
                for r in self.relations
            ],
        }

    @classmethod
    def from_json(cls, data) -> "QuiverWithRelations":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        arrows = tuple(Arrow(a["id"], a["src"], a["dst"], a.get("cycle_tag")) for a in data["arrows"])
        rels = tuple(
            Relation(r["kind"], tuple(r["left"]), None if r.get("right") is None else tuple(r["right"]))
            for r in data["relations"]
        )
        return cls(tuple(data["vertices"]), arrows, rels)


def _jsonable(x):
    return x if isinstance(x, (int, str)) or x is None else str(x)


# -- Brauer presentations ----------------------------------------------------------------


def cycles_of(q: QuiverWithRelations) -> dict:
    """Group arrows by cycle tag and check each group is one simple directed cycle."""
    groups: dict = {}
    for a in q.arrows:
        groups.setdefault(a.cycle, []).append(a)
    cycles = {}
    membership: dict = {}
    for tag, arrows in groups.items():
        nxt = {}
        for a in arrows:
            if a.src in nxt:
                raise QuiverShapeError(f"vertex {a.src!r} has two outgoing arrows in cycle {tag!r}")
            nxt[a.src] = a.dst
        if set(nxt.values()) != set(nxt):
            raise QuiverShapeError(f"arrows tagged {tag!r} do not form a cycle")
        start = min(nxt, key=_sort_key)
        order = [start]
        while nxt[order[-1]] != start:
            order.append(nxt[order[-1]])
            if len(order) > len(nxt):
                break
        if len(order) != len(nxt) or len(order) < 2:
            raise QuiverShapeError(f"arrows tagged {tag!r} do not form a single cycle of length >= 2")
        cycles[tag] = tuple(order)
        for v in order:
            membership.setdefault(v, []).append(tag)
    for v, tags in membership.items():
        if len(tags) > 2:
            raise QuiverShapeError(f"vertex {v!r} lies on {len(tags)} cycles")
    return cycles


def _sort_key(x):
    return (0, x, "") if isinstance(x, int) else (1, 0, str(x))


def _cycle_path_at(cycle_arrows, start, length):
    """Right-to-left tuple of ``length`` consecutive cycle arrows starting at ``start``."""
    out = []
    v = start
    for _ in range(length):
        a = cycle_arrows[v]
        out.append(a.id)
        v = a.dst
    return tuple(reversed(out))


def presentation_from_cycles(vertices, cycles: Mapping, arrow_name=None) -> QuiverWithRelations:
    """Brauer presentation (multiplicity 1) determined by a family of cycles.

    ``cycles`` maps a tag to the quiver vertices in arrow order; each tag
    gives arrows ``c[i] -> c[i+1]``.  Relations: every mixed two-step path
    through a vertex lying on two cycles is zero; the two full cycles at such
    a vertex are equal; at a vertex on a single cycle the cycle followed by one
    more arrow is zero.
    """
    name = arrow_name or (lambda tag, s, d: f"{s}>{d}")
    arrows = []
    out_arrow: dict = {}
    in_arrow: dict = {}
    for tag in sorted(cycles, key=_sort_key):
        cyc = cycles[tag]
        if len(cyc) < 2:
            continue
        for i, s in enumerate(cyc):
            d = cyc[(i + 1) % len(cyc)]
            a = Arrow(name(tag, s, d), s, d, tag)
            arrows.append(a)
            out_arrow.setdefault(tag, {})[s] = a
            in_arrow.setdefault(tag, {})[d] = a
    on = {}
    for tag in sorted(cycles, key=_sort_key):
        if len(cycles[tag]) >= 2:
            for v in cycles[tag]:
                on.setdefault(v, []).append(tag)
    rels = []
    for v in vertices:
        tags = on.get(v, [])
        for u_tag in tags:
            for w_tag in tags:
                if u_tag != w_tag:
                    rels.append(Relation("zero", (out_arrow[w_tag][v].id, in_arrow[u_tag][v].id)))
        if len(tags) == 2:
            u_tag, w_tag = tags
            lu, lw = len(cycles[u_tag]), len(cycles[w_tag])
            rels.append(Relation(
                "equality",
                _cycle_path_at(out_arrow[u_tag], v, lu),
                _cycle_path_at(out_arrow[w_tag], v, lw),
            ))
        elif len(tags) == 1:
            (u_tag,) = tags
            lu = len(cycles[u_tag])
            rels.append(Relation("zero", _cycle_path_at(out_arrow[u_tag], v, lu + 1)))
    return QuiverWithRelations(tuple(vertices), tuple(arrows), tuple(rels))


def tree_cycles(tree: PlanarTree) -> dict:
    return {v: tuple(edges) for v, edges in tree.rotation.items() if len(edges) >= 2}


def _require_basic_tree(tree: PlanarTree):
    if tree.multiplicity != 1:
        raise UnsupportedTreeError("multiplicity > 1 is not supported")
    if tree.n_edges < 2:
        raise UnsupportedTreeError("a Brauer tree with fewer than 2 edges gives a local algebra; need >= 2 edges")


def quiver_of(tree: PlanarTree) -> QuiverWithRelations:
    """Gabriel quiver with relations of the Brauer tree algebra of ``tree``."""
    _require_basic_tree(tree)
    return presentation_from_cycles(tree.edges, tree_cycles(tree))


def brauer_line_presentation(n: int) -> QuiverWithRelations:
    """Quiver ``1 ⇄ 2 ⇄ ... ⇄ n`` with arrows ``alpha_i: i -> i+1``, ``beta_i: i+1 -> i``."""
    if n < 2:
        raise UnsupportedTreeError("a Brauer line needs at least 2 vertices")
    arrows = []
    for i in range(1, n):
        arrows.append(Arrow(f"alpha{i}", i, i + 1, i))
        arrows.append(Arrow(f"beta{i}", i + 1, i, i))
    rels = []
    for i in range(1, n - 1):
        rels.append(Relation("zero", (f"alpha{i + 1}", f"alpha{i}")))
        rels.append(Relation("zero", (f"beta{i}", f"beta{i + 1}")))
        rels.append(Relation("equality", (f"alpha{i}", f"beta{i}"), (f"beta{i + 1}", f"alpha{i + 1}")))
    rels.append(Relation("zero", ("alpha1", "beta1", "alpha1")))
    rels.append(Relation("zero", (f"beta{n - 1}", f"alpha{n - 1}", f"beta{n - 1}")))
    return QuiverWithRelations(tuple(range(1, n + 1)), tuple(arrows), tuple(rels))


def cartan_matrix(tree: PlanarTree) -> np.ndarray:
    """Entry (x, y): 2 on the diagonal, 1 if edges x and y share a vertex, else 0.

    Rows and columns follow ``tree.edges`` (ascending edge id).
    """
    if tree.multiplicity != 1:
        raise UnsupportedTreeError("multiplicity > 1 is not supported")
    edges = tree.edges
    idx = {e: i for i, e in enumerate(edges)}
    c = 2 * np.eye(len(edges), dtype=np.int64)
    for rot in tree.rotation.values():
        for a in rot:
            for b in rot:
                if a != b:
                    c[idx[a], idx[b]] = 1
    return c


# -- comparison and export -----------------------------------------------------------------


def quiver_signature(q: QuiverWithRelations, rename=None) -> tuple:
    """Labelled-isomorphism invariant ignoring arrow ids and cycle tags.

    Arrows are identified by their endpoints (unique in Brauer quivers);
    cycles by their cyclic vertex sequence.
    """
    ren = rename or {}
    r = lambda v: ren.get(v, v)

    def vpath(path):
        return tuple((r(q.arrow(a).src), r(q.arrow(a).dst)) for a in path)

    cycles = set()
    for cyc in cycles_of(q).values():
        cyc = tuple(r(v) for v in cyc)
        k = cyc.index(min(cyc, key=_sort_key))
        cycles.add(cyc[k:] + cyc[:k])
    rels = set()
    for rel in q.relations:
        if rel.kind == "zero":
            rels.add(("zero", vpath(rel.left)))
        else:
            rels.add(("equality", frozenset({vpath(rel.left), vpath(rel.right)})))
    return (
        frozenset(r(v) for v in q.vertices),
        frozenset(cycles),
        frozenset(rels),
    )


_PALETTE = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4", "gold3", "gray40"]


def quiver_dot(q: QuiverWithRelations) -> bytes:
    tags = []
    for a in q.arrows:
        if a.cycle not in tags:
            tags.append(a.cycle)
    color = {t: _PALETTE[i % len(_PALETTE)] for i, t in enumerate(tags)}
    out = ["digraph quiver {"]
    for v in q.vertices:
        out.append(f'  "{v}";')
    for a in q.arrows:
        out.append(f'  "{a.src}" -> "{a.dst}" [label="{a.id}", color={color[a.cycle]}];')
    out.append("}")
    return ("\n".join(out) + "\n").encode("utf-8")
