"""Sequences of reflections turning a Brauer tree into a Brauer line."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field

from .errors import PlanBudgetError, UnsupportedTreeError
from .reflection import reflect_tree
from .tree import PlanarTree, canonical_code, is_line, numerical_invariants


@dataclass(frozen=True)
class PlanStep:
    edge: int
    new_edge: int
    code: bytes

    @property
    def rename(self):
        return {self.edge: self.new_edge}


@dataclass(frozen=True)
class ReflectionPlan:
    initial: bytes
    final: bytes
    steps: tuple[PlanStep, ...] = ()
    strategy: str = "greedy"
    trees: tuple[PlanarTree, ...] = field(default=(), repr=False, compare=False)

    def __len__(self):
        return len(self.steps)

    @property
    def final_tree(self) -> PlanarTree:
        return self.trees[-1]

    def to_json(self) -> dict:
        return {
            "initial": self.initial.decode(),
            "final": self.final.decode(),
            "strategy": self.strategy,
            "length": len(self.steps),
            "steps": [
                {"edge": s.edge, "new_edge": s.new_edge, "rename": {str(s.edge): s.new_edge},
                 "code": s.code.decode()}
                for s in self.steps
            ],
        }


def excess(tree: PlanarTree) -> int:
    """How far from a line: total degree above 2."""
    return sum(max(0, len(r) - 2) for r in tree.rotation.values())


def _greedy_edge(tree: PlanarTree) -> int | None:
    top = max(tree.degree(v) for v in tree.vertices)
    if top < 3:
        return None
    best = None
    for x in tree.vertices:
        if tree.degree(x) != top:
            continue
        for t in tree.rotation[x]:
            z = tree.other_end(tree.successor(x, t), x)
            key = (excess(reflect_tree(tree, t).tree), tree.degree(z), t)
            if best is None or key < best:
                best = key
    return best[2]


def replay(tree: PlanarTree, edges) -> list[PlanarTree]:
    out = [tree]
    for e in edges:
        out.append(reflect_tree(out[-1], e).tree)
    return out


def _plan_from(tree, pairs, strategy):
    trees = [tree]
    steps = []
    for e in pairs:
        res = reflect_tree(trees[-1], e)
        trees.append(res.tree)
        steps.append(PlanStep(e, res.new_edge, canonical_code(res.tree)))
    return ReflectionPlan(canonical_code(tree), canonical_code(trees[-1]), tuple(steps), strategy, tuple(trees))


def _greedy(tree, max_steps):
    seen = {canonical_code(tree)}
    edges = []
    cur = tree
    while not is_line(cur):
        if len(edges) >= max_steps:
            return None
        t = _greedy_edge(cur)
        cur = reflect_tree(cur, t).tree
        code = canonical_code(cur)
        if code in seen:
            return None
        seen.add(code)
        edges.append(t)
    return edges


def _bfs(tree, max_steps):
    """Shortest plan by breadth-first search over isomorphism classes."""
    start = canonical_code(tree)
    parent = {start: None}
    frontier = deque([(tree, start, 0)])
    best = (excess(tree), start, tree)
    while frontier:
        cur, code, depth = frontier.popleft()
        if is_line(cur):
            edges = []
            while parent[code] is not None:
                code, e = parent[code]
                edges.append(e)
            return list(reversed(edges)), best
        if depth == max_steps:
            continue
        for t in cur.edges:
            nxt = reflect_tree(cur, t).tree
            ncode = canonical_code(nxt)
            if ncode in parent:
                continue
            parent[ncode] = (code, t)
            best = min(best, (excess(nxt), ncode, nxt), key=lambda b: (b[0], b[1]))
            frontier.append((nxt, ncode, depth + 1))
    return None, best


def _best_first(tree, max_steps):
    """Expand the state of least excess first; plans are not necessarily shortest."""
    start = canonical_code(tree)
    parent = {start: None}
    heap = [(excess(tree), 0, start, 0, tree)]
    tick = 1
    while heap:
        _, depth, code, _, cur = heapq.heappop(heap)
        if is_line(cur):
            edges = []
            while parent[code] is not None:
                code, e = parent[code]
                edges.append(e)
            return list(reversed(edges))
        if depth == max_steps:
            continue
        for t in cur.edges:
            nxt = reflect_tree(cur, t).tree
            ncode = canonical_code(nxt)
            if ncode in parent:
                continue
            parent[ncode] = (code, t)
            heapq.heappush(heap, (excess(nxt), depth + 1, ncode, tick, nxt))
            tick += 1
    return None


def reduce_to_line(tree: PlanarTree, max_steps: int | None = None) -> ReflectionPlan:
    """Find reflections taking ``tree`` to a line within ``max_steps`` steps.

    The greedy rule reflects an edge at a vertex of maximal degree whose slide
    target has the smallest degree.  If the walk revisits a tree or runs out of
    budget, a best-first search ordered by excess degree takes over, and a
    breadth-first search over isomorphism classes is the last resort.
    """
    if tree.multiplicity != 1:
        raise UnsupportedTreeError("reduction is only implemented for multiplicity 1")
    if max_steps is None:
        max_steps = 10 * tree.n_edges
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    if is_line(tree):
        return _plan_from(tree, [], "trivial")
    edges = _greedy(tree, max_steps)
    if edges is not None:
        plan = _plan_from(tree, edges, "greedy")
    elif (edges := _best_first(tree, max_steps)) is not None:
        plan = _plan_from(tree, edges, "best-first")
    else:
        edges, best = _bfs(tree, max_steps)
        if edges is None:
            raise PlanBudgetError(
                f"no line reached within {max_steps} reflections; best state has excess degree {best[0]}",
                best=best[2],
            )
        plan = _plan_from(tree, edges, "bfs")
    assert numerical_invariants(plan.final_tree) == numerical_invariants(tree)
    return plan
