"""Rank reduction on partition, transversal and graphical matroids.

Exact solvers, the transversal / min t-edge / densest k-subgraph reductions,
and the Clique to bipartite maximum vertex cover gadget, each checked against
brute-force oracles at desk scale.
"""

from rankred.errors import (
    CapExceeded,
    InfeasibleError,
    InputError,
    NotMaximumError,
    NotNiceError,
    OracleInconsistency,
    ParseError,
    RankredError,
    StrategyFault,
)
from rankred.graphs import (
    BipartiteGraph,
    Graph,
    Matching,
    deficiency_witness,
    konig_cover,
    max_matching,
)
from rankred.matroids import (
    GraphicalModel,
    IndependenceOracle,
    PartitionModel,
    TransversalModel,
    intersection_max_common,
    rank_graphical,
    rank_partition,
    rank_transversal,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "CapExceeded",
    "Graph",
    "GraphicalModel",
    "IndependenceOracle",
    "InfeasibleError",
    "InputError",
    "Matching",
    "NotMaximumError",
    "NotNiceError",
    "OracleInconsistency",
    "ParseError",
    "PartitionModel",
    "RankredError",
    "StrategyFault",
    "TransversalModel",
    "deficiency_witness",
    "intersection_max_common",
    "konig_cover",
    "max_matching",
    "rank_graphical",
    "rank_partition",
    "rank_transversal",
]
