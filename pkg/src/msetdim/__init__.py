"""Exact computation of multiset dimension (equivalently, ID-number) of graphs."""
from msetdim.codes import (
    IdCode,
    MultisetCode,
    id_code,
    id_to_multiset,
    is_id_coloring,
    is_multiset_resolving,
    is_resolving,
    multiset_rep,
    multiset_to_id,
    shift,
)
from msetdim.errors import DisconnectedGraphError, FormulaError, GraphError, GuardExceededError, MsetDimError
from msetdim.graph import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    TwinReport,
    all_pairs_distances,
    diameter,
    distance_shell,
    from_edge_list,
    is_connected,
    twin_classes,
)
from msetdim.products import (
    classify_strong_with_complete,
    complete_graph,
    is_multiset_distance_irregular,
    king_grid,
    king_grid_witness,
    path_graph,
    predicted_border_code,
    spider,
    star,
    strong_product,
)
from msetdim.solver import (
    DimResult,
    counting_lower_bound,
    metric_dimension,
    multichoose,
    multiset_dimension,
    multiset_dimension_constrained,
)

__version__ = "0.1.0"
