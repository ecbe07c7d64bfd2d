"""Wiener index of graphs by the cut method.

For a partial cube the Wiener index is the sum, over the classes of the
Djokovic-Winkler relation, of the products of the two component sizes left by
removing the class.  Everything is checked against a brute-force BFS oracle.
"""

from .cuts import (
    Cut,
    CutPartition,
    ScaledCutFamily,
    ValidationReport,
    condition_iii_implied,
    is_convex,
    odd_cycle_cut_family,
    split_by_cut,
    verify_ipartition,
    wiener_cut,
    wiener_from_partition,
    wiener_scaled,
)
from .generators import (
    HexSystem,
    benzenoid,
    cartesian_product,
    circumcoronene,
    cycle,
    hypercube,
    path,
    random_tree,
)
from .graph import (
    UNREACHABLE,
    DistanceOracle,
    Graph,
    all_pairs,
    bfs_distances,
    build_graph,
    components_excluding,
    is_bipartite,
    wiener_brute,
)
from .theta import (
    PartialCubeCertificate,
    ThetaPartition,
    is_partial_cube,
    theta_classes,
    theta_related,
)

__version__ = "0.1.0"
