"""Star graphs: intersection graphs of maximal induced stars."""

from .canon import are_isomorphic, augmentations, canonical_form, canonical_graph, isomorphism
from .cover import (
    CoverVerdict,
    StarPartitionedCover,
    covers_nonnested,
    extract_cover,
    reconstruct_preimage,
    verify_cover,
)
from .critical import (
    bound_report,
    critical_core,
    graph_is_star_critical,
    is_star_critical,
    is_vertex_star_critical,
    monotonicity_check,
)
from .graph import CapacityError, Graph, GraphError, GraphFormatError
from .graph6 import parse_graph6, to_graph6
from .props import check_preimage_bounds, check_star_graph_properties, classify_degree_two
from .recognition import CensusResult, RecognitionOutcome, census, find_preimage, frontier_status
from .squares import PreconditionError, graph_power, pendant_extension, triangle_free_identity
from .stars import MaximalStar, StarGraphResult, iterated_star, maximal_stars, star_graph

__version__ = "0.1.0"
