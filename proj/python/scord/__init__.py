"""Countable scattered linear orders, executable.

Terms denote orders built from singletons, w-sums, and w*-sums; the module
decides embeddability, computes minimal decompositions and block partitions,
manipulates eventually-periodic subsets and structural self-embeddings, and
names the separative quotient of the poset of copies where the fragment
identifies it.
"""

from ._scord import (
    Error,
    ParseError,
    PreconditionError,
    ShapeError,
    Term,
    blocks,
    contains_copy,
    disjoint,
    embeds,
    le_star,
    mdecomp,
    ord_value,
    ordinal_sq,
    restrict,
    sq,
    sq_report,
    witness,
)

__all__ = [
    "Error",
    "ParseError",
    "PreconditionError",
    "ShapeError",
    "Term",
    "blocks",
    "contains_copy",
    "disjoint",
    "embeds",
    "le_star",
    "mdecomp",
    "ord_value",
    "ordinal_sq",
    "parse",
    "restrict",
    "sq",
    "sq_report",
    "witness",
]

__version__ = "0.1.0"


def parse(text):
    """Parse the concrete syntax into a Term."""
    return Term.parse(text)
