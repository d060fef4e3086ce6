"""Identifying codes in graphs: predicates, exact solvers, families, enumeration and checks."""

from .codes import IMPLICATIONS, CodeKind, Violation, is_valid, iset, iset_of_set, violation_witness
from .enumeration import (
    GraphStream,
    canonical_form,
    canonical_key,
    enumerate_connected,
    enumerate_graphs,
    enumerate_trees,
    is_isomorphic,
    parse_edgelists,
    parse_graph6,
    write_edgelist,
    write_graph6,
)
from .graph import Graph, GraphError, VertexSet, build_graph, structural_summary
from .harness import Report, is_extremal_member, verify
from .solver import GuardError, SolveResult, all_minimum_codes, build_constraints, minimum_code, parameter

__version__ = "0.1.0"
