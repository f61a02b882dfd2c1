"""
Reducing a star to a line
=========================

Every reflection slides one edge along its anti-clockwise neighbour.  A short
sequence of them turns any plane tree into a line, and the numerical
invariants never change along the way.
"""

#%%
# A star with five spokes, and its quiver: one oriented cycle per vertex of
# degree at least 2.
from brauer import cartan_matrix, numerical_invariants, quiver_of, reduce_to_line, replay, serialize_tree, star

tree = star(5)
print(serialize_tree(tree))
q = quiver_of(tree)
print(len(q.arrows), "arrows,", len(q.relations), "relations")
print(cartan_matrix(tree))

#%%
# Plan the reflections and replay them, printing the tree after each step.
plan = reduce_to_line(tree)
print(f"{len(plan)} reflections via {plan.strategy}")
for step, t in zip(plan.steps, replay(tree, [s.edge for s in plan.steps])[1:]):
    print(f"reflect at {step.edge} -> new edge {step.new_edge}")
    print(serialize_tree(t))

#%%
# The invariants of the end result agree with the start.
print(numerical_invariants(tree), numerical_invariants(plan.final_tree))
