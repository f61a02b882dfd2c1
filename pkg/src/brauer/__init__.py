"""Brauer trees, their reflections, and finite-field checks of the tilting complexes behind them."""

from .algebra import AlgebraTable, PathClass, build_algebra
from .complexes import (
    HomComplex,
    InjectivePresentation,
    ModuleRep,
    ProjComplex,
    TiltingComplex,
    hom_dim,
    injective_presentation,
    stalk,
    tilting_complex,
)
from .errors import (
    AlgebraError,
    BoundExceeded,
    BrauerError,
    PlanBudgetError,
    QuiverShapeError,
    ReflectionUndefinedError,
    TreeFormatError,
    TreeInvariantError,
    UnknownEdgeError,
    UnsupportedTreeError,
)
from .planner import ReflectionPlan, excess, reduce_to_line, replay
from .quiver import (
    Arrow,
    QuiverWithRelations,
    Relation,
    brauer_line_presentation,
    cartan_matrix,
    quiver_of,
    quiver_signature,
)
from .reflection import ReflectionResult, reflect_quiver, reflect_tree
from .tree import (
    NumericalInvariants,
    PlanarTree,
    canonical_code,
    enumerate_plane_trees,
    is_line,
    labeled_equal,
    numerical_invariants,
    parse_tree,
    path_tree,
    render_dot,
    serialize_tree,
    star,
)
from .verify import VerificationReport, verify_reflection, verify_tilting

__version__ = "0.1.0"
