"""Deciding and computing the 3-admissibility of graphs."""

from .driver import Decision, compute_potential, compute_value, decide, lower_bound
from .flow import (
    FlowNet,
    augment_packing,
    build_full_network,
    build_subnetwork,
    find_augmenting_path,
    max_flow_value,
)
from .graph import Graph, ParseError, Partition, degeneracy, load_edge_list, read_edge_list, write_edge_list
from .oracle import Oracle
from .packing import Packing, check_chordless, check_covering
from .reference import ExactResult, enumerate_pp, exact_adm, exact_pp, verify_ordering
from .vias import ViasStore

__all__ = [
    "Decision",
    "ExactResult",
    "FlowNet",
    "Graph",
    "Oracle",
    "Packing",
    "ParseError",
    "Partition",
    "ViasStore",
    "augment_packing",
    "build_full_network",
    "build_subnetwork",
    "check_chordless",
    "check_covering",
    "compute_potential",
    "compute_value",
    "decide",
    "degeneracy",
    "enumerate_pp",
    "exact_adm",
    "exact_pp",
    "find_augmenting_path",
    "load_edge_list",
    "lower_bound",
    "max_flow_value",
    "read_edge_list",
    "verify_ordering",
    "write_edge_list",
]
