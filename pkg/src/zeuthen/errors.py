"""Exception types shared across the package."""


class ZeroFlowEdge(ValueError):
    """A divergence assignment admits no positive edge weight on some edge.

    Carries the offending edge index in ``args[0]``.
    """

    def __init__(self, edge_index: int):
        super().__init__(edge_index)
        self.edge_index = edge_index


class InvalidDegree(ValueError):
    """Degree must be a positive integer."""


class DegreeTooLarge(ValueError):
    """The brute-force monodromy oracle only runs for small degrees."""


class InfeasibleProblem(ValueError):
    """Cover enumeration was asked for a boundary/branch problem with no covers."""


class ConstraintCountMismatch(ValueError):
    """Points plus tangency constraints must number 3d - 1 for degree d."""


class UnsupportedGenus(ValueError):
    """Only genus 0 counts are computed."""


class NoSplittableConstraint(ValueError):
    """Expansion requires a tangency constraint of degree at least 2."""


class IntegralityFailure(RuntimeError):
    """A characteristic number came out non-integral or negative; internal inconsistency."""
