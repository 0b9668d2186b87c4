"""Exception hierarchy shared by every harmonia module."""

from __future__ import annotations


class HarmoniaError(Exception):
    """Base class for all library errors."""


class InputError(HarmoniaError, ValueError):
    """Malformed or out-of-range input (bad spec string, length mismatch, ...)."""


class SizeError(InputError):
    """Group order exceeds the configured maximum or a search cap."""


class StructureError(InputError):
    """A Cayley table that does not describe a group."""


class NormalizationError(StructureError):
    """A valid group table whose identity is not element 0."""


class NormalityError(HarmoniaError):
    """A subgroup that was required to be normal is not."""


class ParityError(HarmoniaError):
    """An operation restricted to odd order was given even order."""


class PreconditionError(HarmoniaError):
    """An input sequence failed the verification an operation requires."""


class AnchorError(PreconditionError):
    """A sequence that must start at the identity does not."""


class NonSolvableError(HarmoniaError):
    """The derived subgroup equals the whole group, so recursion cannot proceed."""


class ConsistencyError(HarmoniaError, AssertionError):
    """An internal invariant of the lifting construction failed."""
