"""Small-graph kernel: bitset graphs, canonical forms, reductions, enumeration."""

from .canon import automorphisms, canonical_form, canonical_graph, canonical_labeling, is_isomorphic, vertex_orbits
from .core import Graph, from_graph6, to_graph6
from .decorated import TaggedGraph, decorate, is_valid, tag_violations, undecorate
from .generate import count_connected, enumerate_connected, labeled_connected_graphs, labeled_oracle_classes
from .invariants import (
    has_induced_cycle_geq4,
    has_siblings,
    induced_cycle_lengths,
    is_chordal,
    leaf_counts,
    sibling_classes,
    sibling_number,
    sibling_tuft,
    tuft_number,
)
from .patches import Patch, PatchDecomposition, comating_graph, patch_compose
from .reduction import ReductionStep, contract_siblings, is_reduced, reduce, reduction_trace, remove_leaves, rho_lambda

__all__ = [
    "Graph", "from_graph6", "to_graph6",
    "automorphisms", "canonical_form", "canonical_graph", "canonical_labeling", "is_isomorphic", "vertex_orbits",
    "TaggedGraph", "decorate", "is_valid", "tag_violations", "undecorate",
    "count_connected", "enumerate_connected", "labeled_connected_graphs", "labeled_oracle_classes",
    "has_induced_cycle_geq4", "has_siblings", "induced_cycle_lengths", "is_chordal", "leaf_counts",
    "sibling_classes", "sibling_number", "sibling_tuft", "tuft_number",
    "Patch", "PatchDecomposition", "comating_graph", "patch_compose",
    "ReductionStep", "contract_siblings", "is_reduced", "reduce", "reduction_trace", "remove_leaves", "rho_lambda",
]
