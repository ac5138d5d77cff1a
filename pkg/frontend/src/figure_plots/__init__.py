"""Renders the dynmod experiment CSVs into publication-style figures."""

from .render import RENDERERS, read_csv, render
from .schemas import FIGURE_FILES, SCHEMAS, SchemaError

__all__ = ["FIGURE_FILES", "RENDERERS", "SCHEMAS", "SchemaError",
           "read_csv", "render"]
