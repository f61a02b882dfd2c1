import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brauer import (
    PlanarTree,
    QuiverShapeError,
    UnknownEdgeError,
    UnsupportedTreeError,
    canonical_code,
    enumerate_plane_trees,
    labeled_equal,
    numerical_invariants,
    path_tree,
    quiver_of,
    quiver_signature,
    reflect_quiver,
    reflect_tree,
    star,
)
from brauer.quiver import cycles_of
from brauer.tree import random_labeled_tree, relabel

import golden


@pytest.mark.parametrize("row", golden.ROWS, ids=[f"row{i + 1}" for i in range(5)])
def test_golden_rows(row):
    res = reflect_tree(row["before"], row["edge"], new_edge=golden.NEW)
    assert labeled_equal(res.tree, row["after"])
    assert res.rename == {row["edge"]: golden.NEW}


class TestReflectTree:
    def test_star_spoke(self):
        res = reflect_tree(star(5), 1)
        assert res.new_edge == 6
        assert res.slide_a == 2 and res.slide_b is None
        assert res.tree.ends(6) == (1, 2)
        assert res.tree.degree(0) == 4

    def test_last_row_is_the_line(self):
        row = golden.ROWS[4]
        res = reflect_tree(row["before"], row["edge"], golden.NEW)
        assert (res.slide_a, res.slide_b) == (5, 4)
        walk = []
        leaf = next(v for v, r in res.tree.rotation.items() if len(r) == 1 and 1 in r)
        prev, v = None, leaf
        while True:
            nxt = [e for e in res.tree.rotation[v] if e != prev]
            if not nxt:
                break
            prev = nxt[0]
            walk.append(prev)
            v = res.tree.other_end(prev, v)
        assert walk == golden.LAST_LINE

    def test_errors(self):
        with pytest.raises(UnknownEdgeError):
            reflect_tree(star(3), 7)
        with pytest.raises(UnsupportedTreeError):
            reflect_tree(path_tree(1), 1)
        with pytest.raises(UnsupportedTreeError):
            reflect_tree(PlanarTree(star(3).rotation, multiplicity=2, exceptional=0), 1)
        with pytest.raises(ValueError):
            reflect_tree(star(3), 1, new_edge=2)

    def test_two_path_end(self):
        res = reflect_tree(path_tree(2), 1)
        assert canonical_code(res.tree) == canonical_code(path_tree(2))

    @pytest.mark.parametrize("tree", [t for n in range(2, 7) for t in enumerate_plane_trees(n)])
    def test_degree_bookkeeping(self, tree):
        for t in tree.edges:
            res = reflect_tree(tree, t)
            x, y = tree.ends(t)
            if tree.degree(x) == 1:
                x, y = y, x
            z = tree.other_end(res.slide_a, x)
            out = res.tree
            assert len(out.rotation[x]) == tree.degree(x) - 1
            assert len(out.rotation[z]) == tree.degree(z) + 1
            if res.slide_b is None:
                assert len(out.rotation[y]) == 1
            else:
                w = tree.other_end(res.slide_b, y)
                assert len(out.rotation[y]) == tree.degree(y) - 1
                assert len(out.rotation[w]) == tree.degree(w) + 1
            assert numerical_invariants(out) == numerical_invariants(tree)
            assert res.new_edge not in tree.edges

    @given(st.integers(3, 8), st.integers(0, 10**6))
    @settings(max_examples=60, deadline=None)
    def test_endpoint_order_is_immaterial(self, n, seed):
        rng = random.Random(seed)
        tree = random_labeled_tree(n, rng)
        t = rng.choice(tree.edges)
        flip = {v: 1000 - v for v in tree.vertices}
        a = reflect_tree(tree, t).tree
        b = reflect_tree(relabel(tree, flip), t).tree
        assert labeled_equal(a, b)


class TestReflectQuiver:
    def test_two_path_end(self):
        q = reflect_quiver(quiver_of(path_tree(2)), 1, new_vertex=3)
        assert sorted(q.vertices) == [2, 3]
        assert sorted((a.src, a.dst) for a in q.arrows) == [(2, 3), (3, 2)]

    def test_star_matches_tree_surgery(self):
        res = reflect_tree(star(5), 1)
        lhs = reflect_quiver(quiver_of(star(5)), 1, res.new_edge)
        assert quiver_signature(lhs) == quiver_signature(quiver_of(res.tree))
        species = {a.id.split(":")[0] for a in lhs.arrows if ":" in str(a.id)}
        assert species == {"zeta", "eta", "theta"}

    def test_two_cycles_both_get_two_cycles(self):
        row = golden.ROWS[4]
        q = reflect_quiver(quiver_of(row["before"]), 3, golden.NEW)
        cycles = {tuple(sorted(c)) for c in cycles_of(q).values()}
        assert (5, golden.NEW) in cycles and (4, golden.NEW) in cycles

    def test_unknown_vertex(self):
        with pytest.raises(UnknownEdgeError):
            reflect_quiver(quiver_of(star(3)), 9)

    def test_vertex_taken(self):
        with pytest.raises(ValueError):
            reflect_quiver(quiver_of(star(3)), 1, new_vertex=2)

    def test_rejects_non_brauer_shape(self):
        from brauer.presets import square_algebra

        with pytest.raises(QuiverShapeError):
            reflect_quiver(square_algebra(), 2)

    @pytest.mark.parametrize("tree", [t for n in range(2, 7) for t in enumerate_plane_trees(n)])
    def test_commutes_with_tree_surgery(self, tree):
        q = quiver_of(tree)
        for t in tree.edges:
            res = reflect_tree(tree, t)
            assert quiver_signature(reflect_quiver(q, t, res.new_edge)) == quiver_signature(quiver_of(res.tree))
