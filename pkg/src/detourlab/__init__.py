"""detourlab: exact detour orders, detour-saturated graphs, and
isomorph-free exhaustive search for small graphs (order <= 64)."""

from .core import (
    VERTEX_CAP,
    Girth,
    Graph,
    add_edge,
    components,
    delete_vertex,
    girth,
    graph6_decode,
    graph6_encode,
    graph_from_edges,
    is_connected,
    nonedges,
)
from .pathfinder import DetourResult, VertexPath, detour_order, has_hamilton_cycle, has_path_of_order
from .props import (
    PropertyReport,
    is_detour_saturated,
    is_hamiltonian,
    is_hypohamiltonian,
    is_maximal_hypohamiltonian,
    is_maximally_nonhamiltonian,
    saturate,
)
from .iso import CanonicalCert, are_isomorphic, canonical_cert, canonical_form
from .atlas import NamedGraph, coxeter, coxeter_split, flower_snark, j_split, petersen, pr, split_vertex
from .searcher import Hit, SearchOutcome, SearchSpec, enumerate_graphs, resume_search, search_detour_saturated

__version__ = "0.1.0"
