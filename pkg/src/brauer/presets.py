"""Hand-entered quivers with relations that are not Brauer tree presentations.

``square_algebra`` is a selfinjective algebra on four vertices arranged in a
square, with an arrow each way along every side.  ``square_reflected`` is the
presentation of its reflection at vertex 2; vertex 2 there stands for the
complex replacing P_2.
"""

from __future__ import annotations

from .quiver import Arrow, QuiverWithRelations, Relation


def _zero(*word):
    return Relation("zero", tuple(word))


def _eq(left, right):
    return Relation("equality", tuple(left), tuple(right))


def square_algebra() -> QuiverWithRelations:
    arrows = (
        Arrow("alpha1", 2, 1), Arrow("alpha2", 3, 2), Arrow("alpha3", 4, 3), Arrow("alpha4", 1, 4),
        Arrow("beta1", 1, 2), Arrow("beta2", 2, 3), Arrow("beta3", 3, 4), Arrow("beta4", 4, 1),
    )
    rels = (
        _eq(("beta2", "beta1"), ("alpha3", "alpha4")),
        _eq(("beta4", "beta3"), ("alpha1", "alpha2")),
        _eq(("beta1", "alpha1"), ("alpha2", "beta2")),
        _eq(("beta3", "alpha3"), ("alpha4", "beta4")),
        _zero("alpha4", "alpha1"), _zero("alpha2", "alpha3"),
        _zero("beta1", "beta4"), _zero("beta3", "beta2"),
        _zero("alpha1", "beta1"), _zero("beta2", "alpha2"),
        _zero("alpha3", "beta3"), _zero("beta4", "alpha4"),
    )
    return QuiverWithRelations((1, 2, 3, 4), arrows, rels)


def square_reflected() -> QuiverWithRelations:
    arrows = (
        Arrow("gamma1", 1, 2), Arrow("gamma2", 4, 1), Arrow("gamma3", 2, 4),
        Arrow("delta1", 3, 2), Arrow("delta2", 4, 3), Arrow("delta3", 2, 4),
    )
    rels = (
        _eq(("gamma1", "gamma2", "gamma3"), ("delta1", "delta2", "delta3")),
        _eq(("delta3", "gamma1", "gamma2"), ("gamma3", "delta1", "delta2")),
        _zero("gamma3", "gamma1"), _zero("delta3", "delta1"),
        _zero("gamma2", "delta3"), _zero("delta2", "gamma3"),
        _zero("gamma3", "delta1", "delta2", "delta3"),
        _zero("delta3", "gamma1", "gamma2", "gamma3"),
    )
    return QuiverWithRelations((1, 2, 3, 4), arrows, rels)
