"""Sibling and tuft numbers of graphs: a cycle-index-series engine, a small-graph
kernel, and cross-checks between the two."""

__version__ = "0.1.0"
