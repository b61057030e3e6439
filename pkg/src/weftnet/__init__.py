"""weftnet: in-memory storage and queries for large multilayer networks.

Layers of one population of nodes can be one-mode (node-to-node edges,
directed or symmetric, binary or valued) or two-mode (named hyperedges of
member nodes). Two-mode layers answer edge and neighbourhood queries from
their membership indexes directly, so the quadratic one-mode projection is
never built.
"""

__version__ = "0.1.0"

from .errors import WeftError
from .model import (
    ABSENT,
    AttrType,
    EdgeTraversal,
    LayerMode,
    LayerOneMode,
    LayerSpec,
    LayerTwoMode,
    Network,
    Nodeset,
    create_nodeset,
)
from .query import (
    PathResult,
    check_edge_exists,
    connected_components,
    degree,
    density,
    get_edge_value,
    get_node_alters,
    projected_count_from_sizes,
    projected_edge_count,
    shortest_path,
    summarize_attribute,
)
from .generators import generate_ba, generate_er, generate_two_mode, generate_ws
from .processing import dichotomize, filter_edges, symmetrize
from .io import (
    export_layer,
    import_layer,
    load_network,
    load_nodeset,
    save_network,
    save_nodeset,
)

__all__ = [
    "ABSENT",
    "AttrType",
    "EdgeTraversal",
    "LayerMode",
    "LayerOneMode",
    "LayerSpec",
    "LayerTwoMode",
    "Network",
    "Nodeset",
    "PathResult",
    "WeftError",
    "check_edge_exists",
    "connected_components",
    "create_nodeset",
    "degree",
    "density",
    "dichotomize",
    "export_layer",
    "filter_edges",
    "generate_ba",
    "generate_er",
    "generate_two_mode",
    "generate_ws",
    "get_edge_value",
    "get_node_alters",
    "import_layer",
    "load_network",
    "load_nodeset",
    "projected_count_from_sizes",
    "projected_edge_count",
    "save_network",
    "save_nodeset",
    "shortest_path",
    "summarize_attribute",
    "symmetrize",
]
