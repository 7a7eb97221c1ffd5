"""Exact verification toolkit for refined enumerations of alternating sign matrices."""

__version__ = "0.1.0"
