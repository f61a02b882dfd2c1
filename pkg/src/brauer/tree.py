"""Plane trees carrying Brauer-tree data.

A tree is stored as a rotation system: every vertex maps to the list of its
incident edges in anti-clockwise order.  Edge endpoints are derived from the
rotations, so the rotation system is the single source of truth.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import BoundExceeded, TreeFormatError, TreeInvariantError, UnknownEdgeError

MAX_ENUMERATION_EDGES = 10


def _rotate_to_min(seq):
    seq = tuple(seq)
    if not seq:
        return seq
    k = seq.index(min(seq))
    return seq[k:] + seq[:k]


@dataclass(frozen=True, eq=False)
class PlanarTree:
    """An immutable Brauer tree ``(B, v, m)``.

    ``rotation[v]`` lists the edges at ``v`` anti-clockwise.  Rotations are
    normalised to start at their smallest edge id, so two trees compare equal
    exactly when they are the same labelled plane tree.
    """

    rotation: Mapping[int, tuple[int, ...]]
    multiplicity: int = 1
    exceptional: int | None = None

    def __init__(self, rotation, multiplicity=1, exceptional=None):
        rot = {int(v): _rotate_to_min(int(e) for e in edges) for v, edges in rotation.items()}
        object.__setattr__(self, "rotation", MappingProxyType(dict(sorted(rot.items()))))
        object.__setattr__(self, "multiplicity", multiplicity)
        object.__setattr__(self, "exceptional", exceptional)
        object.__setattr__(self, "_ends", self._validate())

    def _validate(self):
        m, exc = self.multiplicity, self.exceptional
        if not isinstance(m, int) or m < 1:
            raise TreeInvariantError("bad multiplicity", f"multiplicity must be a positive integer, got {m!r}")
        if (m > 1) != (exc is not None):
            raise TreeInvariantError(
                "bad multiplicity", "an exceptional vertex is required exactly when multiplicity > 1"
            )
        if exc is not None and exc not in self.rotation:
            raise TreeInvariantError("bad multiplicity", f"exceptional vertex {exc} is not a vertex")
        if not self.rotation:
            raise TreeInvariantError("empty tree", "no vertices")
        ends: dict[int, list[int]] = {}
        for v, edges in self.rotation.items():
            if len(set(edges)) != len(edges):
                dup = sorted(e for e in set(edges) if edges.count(e) > 1)
                raise TreeInvariantError("duplicate in rotation", f"vertex {v} lists edge {dup[0]} twice")
            for e in edges:
                if e < 0:
                    raise TreeInvariantError("edge degree ≠ 2", f"edge id {e} is negative")
                ends.setdefault(e, []).append(v)
        for e, vs in sorted(ends.items()):
            if len(vs) != 2:
                raise TreeInvariantError(
                    "edge degree ≠ 2", f"edge {e} appears in {len(vs)} rotation list(s)"
                )
        if not ends:
            raise TreeInvariantError("empty tree", "a Brauer tree needs at least one edge")
        # connectivity by union-find over edge endpoints
        parent = {v: v for v in self.rotation}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b in ends.values():
            parent[find(a)] = find(b)
        roots = {find(v) for v in self.rotation}
        if len(roots) > 1:
            raise TreeInvariantError("disconnected", f"{len(roots)} components")
        if len(ends) != len(self.rotation) - 1:
            raise TreeInvariantError(
                "cycle present", f"{len(ends)} edges on {len(self.rotation)} vertices"
            )
        return MappingProxyType({e: tuple(vs) for e, vs in sorted(ends.items())})

    # -- structure -----------------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self.rotation)

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(self._ends)

    @property
    def n_edges(self) -> int:
        return len(self._ends)

    def ends(self, e: int) -> tuple[int, int]:
        try:
            return self._ends[e]
        except KeyError:
            raise UnknownEdgeError(f"unknown edge id {e}") from None

    def other_end(self, e: int, v: int) -> int:
        a, b = self.ends(e)
        if v == a:
            return b
        if v == b:
            return a
        raise ValueError(f"vertex {v} is not an endpoint of edge {e}")

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def successor(self, v: int, e: int) -> int:
        """Anti-clockwise successor of edge ``e`` around vertex ``v``."""
        rot = self.rotation[v]
        return rot[(rot.index(e) + 1) % len(rot)]

    def predecessor(self, v: int, e: int) -> int:
        rot = self.rotation[v]
        return rot[(rot.index(e) - 1) % len(rot)]

    def __eq__(self, other):
        if not isinstance(other, PlanarTree):
            return NotImplemented
        return (
            dict(self.rotation) == dict(other.rotation)
            and self.multiplicity == other.multiplicity
            and self.exceptional == other.exceptional
        )

    def __hash__(self):
        return hash((tuple(self.rotation.items()), self.multiplicity, self.exceptional))

    def __repr__(self):
        rot = ", ".join(f"{v}: {list(es)}" for v, es in self.rotation.items())
        extra = f", m={self.multiplicity}, exceptional={self.exceptional}" if self.multiplicity > 1 else ""
        return f"PlanarTree({{{rot}}}{extra})"


@dataclass(frozen=True)
class NumericalInvariants:
    edge_count: int
    multiplicity: int


def numerical_invariants(tree: PlanarTree) -> NumericalInvariants:
    return NumericalInvariants(tree.n_edges, tree.multiplicity)


def is_line(tree: PlanarTree) -> bool:
    return all(len(edges) <= 2 for edges in tree.rotation.values())


def relabel(tree: PlanarTree, vertex_map=None, edge_map=None) -> PlanarTree:
    vmap = vertex_map or {}
    emap = edge_map or {}
    rot = {vmap.get(v, v): [emap.get(e, e) for e in edges] for v, edges in tree.rotation.items()}
    exc = None if tree.exceptional is None else vmap.get(tree.exceptional, tree.exceptional)
    return PlanarTree(rot, tree.multiplicity, exc)


def labeled_equal(a: PlanarTree, b: PlanarTree) -> bool:
    """Same edge labels, incidences and cyclic orders; vertex ids may differ."""
    if set(a.edges) != set(b.edges) or a.multiplicity != b.multiplicity:
        return False

    def key(t):
        out = {}
        for v, edges in t.rotation.items():
            out[frozenset(edges)] = (edges, v == t.exceptional)
        return out

    return key(a) == key(b)


# -- canonical codes -------------------------------------------------------------------


def _contour_word(tree: PlanarTree, root: int, first: int) -> str:
    """Dyck word of the ordered tree obtained by rooting at the dart (root, first)."""
    out: list[str] = []
    rot = tree.rotation[root]
    k = rot.index(first)
    stack = [(root, None, list(rot[k:] + rot[:k]))]
    while stack:
        v, via, todo = stack[-1]
        if not todo:
            stack.pop()
            if via is not None:
                out.append("0")
            continue
        e = todo.pop(0)
        u = tree.other_end(e, v)
        r = tree.rotation[u]
        i = r.index(e)
        children = list(r[i + 1:] + r[:i])
        out.append("1")
        stack.append((u, e, children))
    return "".join(out)


def canonical_code(tree: PlanarTree) -> bytes:
    """Code identifying the orientation-preserving plane-isomorphism class.

    The contour word is minimised over all darts (all roots and all starting
    edges).  Mirror images generally get different codes.  When an
    exceptional vertex is present only darts leaving it are considered.
    """
    roots = [tree.exceptional] if tree.exceptional is not None else list(tree.rotation)
    best = min(_contour_word(tree, v, e) for v in roots for e in tree.rotation[v])
    prefix = f"m{tree.multiplicity}" + ("e" if tree.exceptional is not None else "")
    return f"{prefix}:{best}".encode("ascii")


def tree_from_dyck(word: str) -> PlanarTree:
    """Build the rooted plane tree of a Dyck word (1 = descend, 0 = return)."""
    rotation: dict[int, list[int]] = {0: []}
    stack = [0]
    next_vertex, next_edge = 1, 1
    for ch in word:
        if ch == "1":
            v, e = next_vertex, next_edge
            next_vertex += 1
            next_edge += 1
            rotation[stack[-1]].append(e)
            rotation[v] = [e]
            stack.append(v)
        elif ch == "0":
            stack.pop()
            if not stack:
                raise ValueError("unbalanced Dyck word")
        else:
            raise ValueError(f"bad Dyck letter {ch!r}")
    if len(stack) != 1:
        raise ValueError("unbalanced Dyck word")
    return PlanarTree(rotation)


def _dyck_words(n: int):
    def rec(prefix, opened, depth):
        if opened == n and depth == 0:
            yield prefix
            return
        if opened < n:
            yield from rec(prefix + "1", opened + 1, depth + 1)
        if depth > 0:
            yield from rec(prefix + "0", opened, depth - 1)

    yield from rec("", 0, 0)


def enumerate_plane_trees(n: int) -> list[PlanarTree]:
    """One representative per plane-isomorphism class of ``n``-edge trees (m = 1).

    Representatives are built from their canonical contour word and returned
    in increasing code order.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ENUMERATION_EDGES:
        raise BoundExceeded(f"enumeration is limited to {MAX_ENUMERATION_EDGES} edges, got {n}")
    words = set()
    for w in _dyck_words(n):
        words.add(canonical_code(tree_from_dyck(w)))
    return [tree_from_dyck(code.decode().split(":", 1)[1]) for code in sorted(words)]


# -- text format -----------------------------------------------------------------------

_VERTEX_RE = re.compile(r"v?(\d+)$")


def _vertex_id(token: str, line: int, col: int) -> int:
    m = _VERTEX_RE.match(token)
    if not m:
        raise TreeFormatError(f"bad vertex id {token!r}", line, col)
    return int(m.group(1))


def parse_tree(text) -> PlanarTree:
    """Parse the line-oriented tree format.

    ::

        multiplicity 1
        vertex v0: 1 2 3
        vertex v1: 1
        ...
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    multiplicity = None
    exceptional = None
    rotation: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        head, head_col = tokens[0]
        if head == "multiplicity":
            if multiplicity is not None:
                raise TreeFormatError("duplicate multiplicity line", lineno, head_col)
            if len(tokens) != 2 or not re.fullmatch(r"-?\d+", tokens[1][0]):
                col = tokens[1][1] if len(tokens) > 1 else len(line) + 1
                raise TreeFormatError("expected 'multiplicity <integer>'", lineno, col)
            multiplicity = int(tokens[1][0])
        elif head == "exceptional":
            if exceptional is not None:
                raise TreeFormatError("duplicate exceptional line", lineno, head_col)
            if len(tokens) != 2:
                raise TreeFormatError("expected 'exceptional <vertex>'", lineno, len(line) + 1)
            exceptional = _vertex_id(tokens[1][0], lineno, tokens[1][1])
        elif head == "vertex":
            colon = line.find(":")
            if colon < 0:
                raise TreeFormatError("expected ':' after vertex id", lineno, len(line) + 1)
            vid_text = line[indent + len("vertex"):colon].strip()
            if not vid_text:
                raise TreeFormatError("missing vertex id", lineno, colon + 1)
            vid = _vertex_id(vid_text, lineno, line.index(vid_text) + 1)
            if vid in rotation:
                raise TreeFormatError(f"vertex {vid} listed twice", lineno, head_col)
            edges = []
            for m in re.finditer(r"\S+", line[colon + 1:]):
                tok = m.group()
                if not tok.isdigit() or int(tok) < 1:
                    raise TreeFormatError(
                        f"edge ids must be positive integers, got {tok!r}", lineno, colon + 2 + m.start()
                    )
                edges.append(int(tok))
            rotation[vid] = edges
        else:
            raise TreeFormatError(f"unknown directive {head!r}", lineno, head_col)
    if multiplicity is None:
        multiplicity = 1
    return PlanarTree(rotation, multiplicity, exceptional)


def serialize_tree(tree: PlanarTree) -> str:
    lines = [f"multiplicity {tree.multiplicity}"]
    if tree.exceptional is not None:
        lines.append(f"exceptional v{tree.exceptional}")
    for v, edges in tree.rotation.items():
        lines.append(f"vertex v{v}: " + " ".join(str(e) for e in edges))
    return "\n".join(lines) + "\n"


def tree_to_json(tree: PlanarTree) -> dict:
    return {
        "multiplicity": tree.multiplicity,
        "exceptional": tree.exceptional,
        "rotation": {str(v): list(edges) for v, edges in tree.rotation.items()},
        "edges": {str(e): list(tree.ends(e)) for e in tree.edges},
    }


def render_dot(tree: PlanarTree) -> bytes:
    """Graphviz description; each node's ``comment`` carries its rotation."""
    out = ["graph brauer_tree {", f'  label="multiplicity {tree.multiplicity}";']
    for v, edges in tree.rotation.items():
        shape = "doublecircle" if v == tree.exceptional else "circle"
        rot = " ".join(str(e) for e in edges)
        out.append(f'  v{v} [label="v{v}", shape={shape}, comment="rotation: {rot}"];')
    for e in tree.edges:
        a, b = tree.ends(e)
        out.append(f'  v{a} -- v{b} [label="{e}"];')
    out.append("}")
    return ("\n".join(out) + "\n").encode("utf-8")


def star(n: int) -> PlanarTree:
    """Star with centre 0 and rotation (1, ..., n)."""
    rot = {0: list(range(1, n + 1))}
    rot.update({e: [e] for e in range(1, n + 1)})
    return PlanarTree(rot)


def path_tree(n: int) -> PlanarTree:
    """Line with edges 1..n, edge i joining vertices i-1 and i."""
    rot: dict[int, list[int]] = {0: [1], n: [n]}
    for v in range(1, n):
        rot[v] = [v, v + 1]
    return PlanarTree(rot)


def random_labeled_tree(n: int, rng) -> PlanarTree:
    """Uniform labelled tree on n + 1 vertices with random rotations and edge ids."""
    if n == 1:
        return PlanarTree({0: [1], 1: [1]})
    verts = n + 1
    prufer = [rng.randrange(verts) for _ in range(verts - 2)]
    degree = [1] * verts
    for v in prufer:
        degree[v] += 1
    pairs = []
    for v in prufer:
        leaf = min(u for u in range(verts) if degree[u] == 1)
        pairs.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(verts) if degree[x] == 1]
    pairs.append((u, w))
    ids = rng.sample(range(1, 10 * n + 1), n)
    rotation: dict[int, list[int]] = {v: [] for v in range(verts)}
    for e, (a, b) in zip(ids, pairs):
        rotation[a].append(e)
        rotation[b].append(e)
    for edges in rotation.values():
        rng.shuffle(edges)
    return PlanarTree(rotation)


def all_rotation_systems(pairs: Iterable[tuple[int, int]], edge_ids=None):
    """Every plane tree on a fixed abstract tree (all cyclic orders at every vertex)."""
    pairs = list(pairs)
    edge_ids = list(edge_ids or range(1, len(pairs) + 1))
    inc: dict[int, list[int]] = {}
    for e, (a, b) in zip(edge_ids, pairs):
        inc.setdefault(a, []).append(e)
        inc.setdefault(b, []).append(e)
    verts = sorted(inc)
    choices = []
    for v in verts:
        first, rest = inc[v][0], inc[v][1:]
        choices.append([[first, *perm] for perm in itertools.permutations(rest)])
    for combo in itertools.product(*choices):
        yield PlanarTree(dict(zip(verts, combo)))
