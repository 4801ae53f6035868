"""Exception types shared across the package."""


class NoncommLabError(Exception):
    """Base class for all package errors."""


class GroupSpecError(NoncommLabError):
    """The group spec string could not be parsed."""


class OrderCapExceededError(NoncommLabError):
    """Requested group order exceeds the configured cap."""


class GroupTableError(NoncommLabError):
    """A built Cayley table violates a group axiom (internal bug signal)."""


class AbelianGroupError(NoncommLabError):
    """Noncommuting graph requested for an abelian group (empty vertex set)."""


class IsolatedVertexError(NoncommLabError):
    """An operation requiring mu_x > 0 hit a vertex with no neighbors."""


class UnreachableVertexError(NoncommLabError):
    """Directed vertex weight requested for a vertex at infinite distance."""


class NoAdmissiblePairError(NoncommLabError):
    """The nu_r infimum has no admissible (xi, x) pair (e.g. edgeless graph)."""


class BudgetExceededError(NoncommLabError):
    """Exhaustive search requested beyond the configured size cap."""


class DimensionTooSmallError(NoncommLabError):
    """Isoperimetric constant requires n > 1."""


class SobolevExponentUndefinedError(NoncommLabError):
    """p = 2n/(n-2) requires n > 2."""


class ExponentRangeError(NoncommLabError):
    """Sobolev inequality requires p < n."""


class NoFiniteCError(NoncommLabError):
    """No finite constant makes the inequality hold over the given family."""
