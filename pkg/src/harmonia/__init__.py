"""Symmetric harmonious sequences in finite groups."""

from .construct import LiftScaffold, LiftTrace, lift, synthesize
from .errors import HarmoniaError
from .groups import FiniteGroup, from_cayley_table, make_builtin, make_cyclic, make_direct_product
from .seqcheck import GroupSequence, VerificationReport, verify_harmonious, verify_symmetric_harmonious

__all__ = [
    "FiniteGroup",
    "GroupSequence",
    "HarmoniaError",
    "LiftScaffold",
    "LiftTrace",
    "VerificationReport",
    "from_cayley_table",
    "lift",
    "make_builtin",
    "make_cyclic",
    "make_direct_product",
    "synthesize",
    "verify_harmonious",
    "verify_symmetric_harmonious",
]
