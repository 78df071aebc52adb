"""Graph module for fedges.

This module handles:
- DAG / PDAG / moral-graph representations and variable orders
- Acyclicity, topological order, moralization, d-separation
- DAG <-> CPDAG conversion, Meek closure, consistent extension
- The plain-text edge-list format for learned graphs
"""

from fedges.graph.cpdag import apply_meek_rules, dag_to_cpdag, pdag_to_dag
from fedges.graph.dag import (
    Dag,
    Edge,
    Order,
    UndirectedGraph,
    is_acyclic,
    moralize,
    topological_order,
)
from fedges.graph.dsep import d_separated, reachable
from fedges.graph.io import (
    header_names,
    parse_edge_list,
    read_graph,
    read_structure,
    render_edge_list,
    write_graph,
)
from fedges.graph.pdag import Pdag

__all__ = [
    # Types
    "Dag",
    "Edge",
    "Order",
    "Pdag",
    "UndirectedGraph",
    # Algorithms
    "is_acyclic",
    "topological_order",
    "moralize",
    "d_separated",
    "reachable",
    "dag_to_cpdag",
    "pdag_to_dag",
    "apply_meek_rules",
    # Edge-list format
    "render_edge_list",
    "parse_edge_list",
    "write_graph",
    "read_graph",
    "read_structure",
    "header_names",
]
