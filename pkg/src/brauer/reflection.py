"""Reflection at an edge: tree surgery and the matching quiver transformation."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import QuiverShapeError, UnknownEdgeError, UnsupportedTreeError
from .quiver import QuiverWithRelations, _sort_key, cycles_of, presentation_from_cycles
from .tree import PlanarTree


@dataclass(frozen=True)
class ReflectionResult:
    tree: PlanarTree
    new_edge: int
    removed_edge: int
    slide_a: int
    slide_b: int | None = None

    @property
    def rename(self) -> dict:
        return {self.removed_edge: self.new_edge}


def _insert_after(seq, anchor, item):
    seq = list(seq)
    seq.insert(seq.index(anchor) + 1, item)
    return seq


def reflect_tree(tree: PlanarTree, t: int, new_edge: int | None = None) -> ReflectionResult:
    """Slide edge ``t`` along its anti-clockwise neighbours.

    At an endpoint ``x`` of degree >= 2 the edge ``a`` following ``t``
    anti-clockwise is selected and its far vertex ``z`` becomes an endpoint of
    the new edge, inserted just after ``a`` in the rotation at ``z``.  If the
    other endpoint ``y`` is a leaf, it stays attached to the new edge.
    """
    if tree.multiplicity != 1:
        raise UnsupportedTreeError("reflection is only defined here for multiplicity 1")
    if tree.n_edges < 2:
        raise UnsupportedTreeError("reflection needs at least 2 edges")
    if t not in tree.edges:
        raise UnknownEdgeError(f"unknown edge id {t}")
    if new_edge is None:
        new_edge = max(tree.edges) + 1
    elif new_edge in tree.edges:
        raise ValueError(f"new edge id {new_edge} is already in use")

    x, y = tree.ends(t)
    if tree.degree(x) == 1:
        x, y = y, x
    rot = {v: list(edges) for v, edges in tree.rotation.items()}

    a_p = tree.successor(x, t)
    z = tree.other_end(a_p, x)
    rot[x].remove(t)
    rot[z] = _insert_after(rot[z], a_p, new_edge)

    if tree.degree(y) == 1:
        rot[y] = [new_edge]
        b_r = None
    else:
        b_r = tree.successor(y, t)
        w = tree.other_end(b_r, y)
        rot[y].remove(t)
        rot[w] = _insert_after(rot[w], b_r, new_edge)
    out = PlanarTree(rot, tree.multiplicity, tree.exceptional)
    return ReflectionResult(out, new_edge, t, a_p, b_r)


def reflect_quiver(q: QuiverWithRelations, t, new_vertex=None) -> QuiverWithRelations:
    """Transform the quiver of a Brauer tree algebra under the reflection at ``t``.

    Each cycle through ``t`` loses ``t``; the arrows ``a_1 -> t -> a_p`` are
    replaced by ``theta: a_1 -> a_p`` (dropped when ``a_1 = a_p``).  The new
    vertex is spliced into the other cycle through ``a_p`` right after it
    (arrows ``zeta: a_p -> t'`` and ``eta: t' -> next``), or forms a new
    2-cycle with ``a_p`` when there is none.  Relations are regenerated from the
    new cycles.
    """
    if t not in q.vertices:
        raise UnknownEdgeError(f"unknown quiver vertex {t!r}")
    cycles = {tag: list(c) for tag, c in cycles_of(q).items()}
    if new_vertex is None:
        ints = [v for v in q.vertices if isinstance(v, int)]
        new_vertex = (max(ints) + 1) if ints else f"{t}'"
    if new_vertex in q.vertices:
        raise ValueError(f"vertex {new_vertex!r} already exists")

    def other_cycle(v, tag):
        found = [g for g, c in cycles_of_original.items() if v in c and g != tag]
        return found[0] if found else None

    cycles_of_original = {tag: tuple(c) for tag, c in cycles.items()}
    through_t = [tag for tag, c in cycles_of_original.items() if t in c]
    if not through_t:
        raise QuiverShapeError(f"vertex {t!r} lies on no cycle")

    species = {}
    new_cycles = {tag: list(c) for tag, c in cycles.items()}
    fresh = _fresh_tags(cycles)
    inserts = []
    for tag in through_t:
        c = cycles_of_original[tag]
        i = c.index(t)
        a_p = c[(i + 1) % len(c)]
        a_1 = c[(i - 1) % len(c)]
        rest = [v for v in c if v != t]
        if len(rest) >= 2:
            k = rest.index(a_p)
            new_cycles[tag] = rest[k:] + rest[:k]
            species[(a_1, a_p)] = "theta"
        else:
            del new_cycles[tag]
        inserts.append((a_p, other_cycle(a_p, tag)))
    for a_p, ztag in inserts:
        if ztag is None:
            new_cycles[next(fresh)] = [a_p, new_vertex]
            species[(a_p, new_vertex)] = "zeta"
            species[(new_vertex, a_p)] = "eta"
        else:
            zc = new_cycles[ztag]
            nxt = zc[(zc.index(a_p) + 1) % len(zc)]
            new_cycles[ztag] = _insert_after(zc, a_p, new_vertex)
            species[(a_p, new_vertex)] = "zeta"
            species[(new_vertex, nxt)] = "eta"

    old_ids = {(a.src, a.dst, a.cycle): a.id for a in q.arrows}

    def name(tag, s, d):
        if (s, d) in species:
            return f"{species[(s, d)]}:{s}>{d}"
        return old_ids.get((s, d, tag), f"{s}>{d}")

    vertices = tuple(new_vertex if v == t else v for v in q.vertices)
    return presentation_from_cycles(vertices, new_cycles, arrow_name=name)


def _fresh_tags(cycles):
    ints = [g for g in cycles if isinstance(g, int)]
    k = (max(ints) + 1) if ints else 0
    while True:
        while k in cycles:
            k += 1
        yield k
        k += 1
