import json

import numpy as np
import pytest

from brauer import (
    QuiverWithRelations,
    Relation,
    UnsupportedTreeError,
    brauer_line_presentation,
    build_algebra,
    cartan_matrix,
    enumerate_plane_trees,
    path_tree,
    quiver_of,
    quiver_signature,
    reflect_tree,
    star,
)
from brauer.quiver import Arrow, cycles_of, quiver_dot

import golden
from oracles import count_paths_avoiding


def small_trees(max_edges):
    for n in range(2, max_edges + 1):
        yield from enumerate_plane_trees(n)


class TestQuiverOf:
    def test_two_path(self):
        q = quiver_of(path_tree(2))
        assert sorted((a.src, a.dst) for a in q.arrows) == [(1, 2), (2, 1)]
        zero = {r.left for r in q.relations if r.kind == "zero"}
        # cycle plus one arrow vanishes at both ends, nothing else
        assert zero == {("1>2", "2>1", "1>2"), ("2>1", "1>2", "2>1")}
        assert all(r.kind == "zero" for r in q.relations)

    def test_two_path_projective_dimension(self):
        q = quiver_of(path_tree(2))
        zero = [r.left for r in q.relations]
        # brute-force path count avoiding the zero words: e1, 2>1, 2>1∘1>2
        assert count_paths_avoiding(q, zero, end=1, max_len=6) == 3
        alg = build_algebra(q, 2)
        assert alg.dim == 6
        assert sum(1 for b in alg.basis if b.dst == 1) == 3

    def test_single_edge_rejected(self):
        with pytest.raises(UnsupportedTreeError):
            quiver_of(path_tree(1))

    def test_multiplicity_rejected(self):
        from brauer import PlanarTree

        with pytest.raises(UnsupportedTreeError):
            quiver_of(PlanarTree(star(3).rotation, multiplicity=2, exceptional=0))

    @pytest.mark.parametrize("tree", list(small_trees(8)), ids=lambda t: str(t.n_edges))
    def test_shape_invariants(self, tree):
        q = quiver_of(tree)
        assert len(q.arrows) == sum(d for d in map(len, tree.rotation.values()) if d >= 2)
        cycles = cycles_of(q)
        assert set(cycles) == {v for v, r in tree.rotation.items() if len(r) >= 2}
        for v in q.vertices:
            outs = [a for a in q.arrows if a.src == v]
            ins = [a for a in q.arrows if a.dst == v]
            assert len(outs) <= 2 and len(ins) <= 2
            assert len({a.cycle for a in outs}) == len(outs)
        for rel in q.relations:
            q.path_ends(rel.left)

    def test_star_relations(self):
        q = quiver_of(star(3))
        kinds = sorted(r.kind for r in q.relations)
        assert kinds == ["zero"] * 3
        assert all(len(r.left) == 4 for r in q.relations)


class TestBrauerLine:
    def test_two_vertices(self):
        q = brauer_line_presentation(2)
        assert len(q.vertices) == 2 and len(q.arrows) == 2
        assert {r.kind for r in q.relations} == {"zero"}
        assert len(q.relations) == 2

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_matches_path_tree(self, n):
        # the interior relation identifies the two 2-cycles through vertex i+1
        assert quiver_signature(brauer_line_presentation(n)) == quiver_signature(quiver_of(path_tree(n)))

    def test_matches_last_golden_line(self):
        row = golden.ROWS[4]
        line = reflect_tree(row["before"], row["edge"], golden.NEW).tree
        rename = {k + 1: e for k, e in enumerate(golden.LAST_LINE)}
        assert quiver_signature(brauer_line_presentation(5), rename) == quiver_signature(quiver_of(line))

    def test_too_small(self):
        with pytest.raises(UnsupportedTreeError):
            brauer_line_presentation(1)

    def test_interior_equality_is_parallel(self):
        q = brauer_line_presentation(4)
        for rel in q.relations:
            if rel.kind == "equality":
                assert q.path_ends(rel.left) == q.path_ends(rel.right)


class TestCartan:
    def test_path(self):
        assert cartan_matrix(path_tree(3)).tolist() == [[2, 1, 0], [1, 2, 1], [0, 1, 2]]

    def test_star(self):
        c = cartan_matrix(star(3))
        assert np.array_equal(c, np.ones((3, 3), dtype=int) + np.eye(3, dtype=int))

    def test_single_edge(self):
        assert cartan_matrix(path_tree(1)).tolist() == [[2]]

    @pytest.mark.parametrize("tree", list(small_trees(7)), ids=lambda t: str(t.n_edges))
    def test_symmetric_with_line_graph_row_sums(self, tree):
        c = cartan_matrix(tree)
        assert np.array_equal(c, c.T)
        assert set(np.diag(c)) == {2}
        for i, e in enumerate(tree.edges):
            a, b = tree.ends(e)
            line_degree = tree.degree(a) + tree.degree(b) - 2
            assert c[i].sum() == 2 + line_degree

    @pytest.mark.parametrize("p", [2, 3])
    @pytest.mark.parametrize("tree", [star(3), path_tree(4), golden.ROWS[1]["before"]], ids=["star3", "path4", "row2"])
    def test_equals_algebra_dimensions(self, tree, p):
        assert np.array_equal(build_algebra(quiver_of(tree), p).cartan(), cartan_matrix(tree))


class TestQuiverType:
    def test_json_roundtrip(self):
        q = quiver_of(golden.ROWS[2]["before"])
        again = QuiverWithRelations.from_json(json.dumps(q.to_json()))
        assert again.to_json() == q.to_json()
        assert quiver_signature(again) == quiver_signature(q)

    def test_rejects_non_composable_relation(self):
        arrows = (Arrow("a", 1, 2), Arrow("b", 2, 1))
        with pytest.raises(ValueError):
            QuiverWithRelations((1, 2), arrows, (Relation("zero", ("a", "a")),))

    def test_rejects_non_parallel_equality(self):
        arrows = (Arrow("a", 1, 2), Arrow("b", 2, 1), Arrow("c", 2, 3), Arrow("d", 3, 2))
        with pytest.raises(ValueError):
            QuiverWithRelations((1, 2, 3), arrows, (Relation("equality", ("b", "a"), ("c", "a")),))

    def test_relation_kind_checked(self):
        with pytest.raises(ValueError):
            Relation("zero", ("a",), ("b",))
        with pytest.raises(ValueError):
            Relation("other", ("a",))

    def test_dot_colours_by_cycle(self):
        out = quiver_dot(quiver_of(path_tree(3))).decode()
        assert out.count("->") == 4
        assert "color=red" in out and "color=blue" in out
