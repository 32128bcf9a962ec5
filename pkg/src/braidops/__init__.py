"""Exact computational workbench for braid, chord-diagram and coherence algebra."""

__version__ = "0.1.0"
