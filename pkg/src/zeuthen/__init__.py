"""Exact counts of plane rational curves through points and tangent to curves.

The engine enumerates floor diagrams (weighted oriented bipartite trees)
with marked labels, weights each by a product of local vertex multiplicities
built from open Hurwitz numbers, and sums.  A degeneration recursion reduces
higher-degree tangency conditions to the diagram count.  Everything is exact
rational arithmetic; built-in oracles recompute key values independently.
"""

from .characteristic import CharProblem, characteristic_number, expand_step
from .counting import (
    BlackLocalProfile,
    black_multiplicity,
    black_profile,
    count_fd,
    enumerate_diagrams,
    enumerate_markings,
    marked_multiplicity,
    white_multiplicity,
)
from .diagram import (
    BLACK,
    WHITE,
    FloorDiagram,
    MarkedDiagram,
    Marking,
    automorphisms,
    canonical_key,
    diagram_degree,
    induced_weights,
    validate_diagram,
    validate_marking,
)
from .errors import (
    ConstraintCountMismatch,
    DegreeTooLarge,
    InfeasibleProblem,
    IntegralityFailure,
    InvalidDegree,
    NoSplittableConstraint,
    UnsupportedGenus,
    ZeroFlowEdge,
)
from .hurwitz import (
    HurwitzProblem,
    TropicalCover,
    closed_hurwitz,
    enumerate_tropical_covers,
    open_hurwitz,
)
from .oracles import InvarianceReport, invariance_audit, kontsevich_gw, monodromy_hurwitz
from .verify import CheckResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "BLACK",
    "WHITE",
    "BlackLocalProfile",
    "CharProblem",
    "CheckResult",
    "ConstraintCountMismatch",
    "DegreeTooLarge",
    "FloorDiagram",
    "HurwitzProblem",
    "InfeasibleProblem",
    "IntegralityFailure",
    "InvalidDegree",
    "InvarianceReport",
    "MarkedDiagram",
    "Marking",
    "NoSplittableConstraint",
    "TropicalCover",
    "UnsupportedGenus",
    "ZeroFlowEdge",
    "automorphisms",
    "black_multiplicity",
    "black_profile",
    "canonical_key",
    "characteristic_number",
    "closed_hurwitz",
    "count_fd",
    "diagram_degree",
    "enumerate_diagrams",
    "enumerate_markings",
    "enumerate_tropical_covers",
    "expand_step",
    "induced_weights",
    "invariance_audit",
    "kontsevich_gw",
    "marked_multiplicity",
    "monodromy_hurwitz",
    "open_hurwitz",
    "validate_diagram",
    "validate_marking",
    "white_multiplicity",
    "__version__",
]
