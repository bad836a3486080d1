"""Exception types shared across the package.

Three failure classes are distinguished so callers (and the CLI) can map
them to exit codes and machine-readable error objects:

- ConstraintError: parameters outside the supported range of a family,
  construction or search (e.g. a Kneser graph with n < 2k+1, or a ground
  set larger than one machine word).
- DomainError: structurally valid objects used in the wrong place (a set
  that is not a vertex of the given graph, mixed ground sets, an unknown
  formula identifier).
- PreconditionError: a closed formula or reduction evaluated outside the
  parameter range for which it is stated.
"""


class MvlabError(Exception):
    """Base class for all package-specific errors."""

    kind = "error"


class ConstraintError(MvlabError, ValueError):
    kind = "constraint"


class DomainError(MvlabError, ValueError):
    kind = "domain"


class PreconditionError(MvlabError, ValueError):
    kind = "precondition"
