"""ordercert: certifying graph-class recognition through vertex orderings."""

__version__ = "0.1.0"
from .api import async_batch_recognize, async_recognize, batch_recognize
from .bandwidth import bound_ordering, exact_bandwidth, find_spanning_caterpillar
from .certificates import to_certificate, verify_certificate
from .conditions import ConditionId, check_all, check_ordering
from .generators import enumerate_all_graphs, gen
from .graph import Graph, VertexOrdering, from_edge_list, parse_graph6, read_graph
from .recognition import ClassId, find_ordering, recognize

__all__ = [
    "ClassId",
    "ConditionId",
    "Graph",
    "VertexOrdering",
    "__version__",
    "async_batch_recognize",
    "async_recognize",
    "batch_recognize",
    "bound_ordering",
    "check_all",
    "check_ordering",
    "enumerate_all_graphs",
    "exact_bandwidth",
    "find_ordering",
    "find_spanning_caterpillar",
    "from_edge_list",
    "gen",
    "parse_graph6",
    "read_graph",
    "recognize",
    "to_certificate",
    "verify_certificate",
]
