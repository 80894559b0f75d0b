"""Colimits of presented categories and strict symmetric tensor categories."""

from ._core import CatcolimError, Document, run

__all__ = ["CatcolimError", "Document", "run", "error_code"]


def error_code(exc: CatcolimError) -> str:
    """The error code name carried by a CatcolimError, e.g. "ParseError"."""
    return str(exc).split(":", 1)[0]
