"""Domain errors shared across the package.

Everything here derives from :class:`DomainError` so callers (and the
CLI, which maps these to exit status 1) can catch the whole family at
once.  Malformed *input values* (bad chain text, non-coprime pairs)
raise plain :class:`ValueError` instead: those are usage problems, not
domain outcomes.
"""


class DomainError(Exception):
    """Base class for all mathematical-domain failures."""


class NotAdmissible(DomainError):
    """A convergent numerator dropped to zero or below before the final index."""


class NotAContractibleEntry(DomainError):
    """Attempted to blow down an entry that is not equal to 1."""


class NegativeWeight(DomainError):
    """A contraction step would leave an entry <= 0 in a chain of length >= 2."""


class NotAdmissibleForChains(DomainError):
    """The chain does not survive self-concatenation with inserted 1's."""


class MalformedChain(DomainError):
    """A T-step undo would push an end weight below 2."""


class InvalidCenter(DomainError):
    """The supplied center is not admissible for chains."""


class NotAmple(DomainError):
    """Seed fails the positive-bridge-degree gate for blow-up families."""


class IndexTooSmall(DomainError):
    """The singularity index n is too small for the requested formula."""


class MissingParameter(DomainError):
    """A case-table record lacks a parameter its case requires."""


class IncompleteLedger(DomainError):
    """A bound check needs a ledger field that was not supplied."""


class TooFewTerms(DomainError):
    """Limit detection needs at least two sequence terms."""
