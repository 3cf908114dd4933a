"""Active label selection and transductive prediction on graphs and
hypergraphs, with exact strength certificates.

The core quantity is the strength of a candidate labeled set: the minimum,
over nonempty node sets avoiding it, of cut value per separated node.  The
package computes it exactly (rational arithmetic, flow-based minimization),
selects labeled sets maximizing it under a target or a budget, predicts the
remaining labels by constrained minimum cut or label propagation, and reports
a deterministic error certificate for any prediction.
"""

from .construct import knn_graph, ratings_to_hypergraph, sigma_heuristic
from .estimators import MincutClassifier, QuadraticLabelPropagation, StrengthSelector
from .experiment import ExperimentSpec, run_experiment, run_experiment_data
from .flow import (
    FlowNetwork,
    hypergraph_flow,
    hypergraph_strength_network,
    min_st_cut,
    seeded_min_cut,
    strength_network,
)
from .graphs import Hypergraph, WeightedGraph
from .oracles import (
    CutOracle,
    GraphCutOracle,
    HypergraphCutOracle,
    SymmetrizedOracle,
    graph_cut,
    hypergraph_cut,
    labeling_cost,
    symmetrize,
    verify_cut_oracle,
)
from .prediction import (
    PredictionReport,
    class_mass_normalize,
    error_certificate,
    label_prop_predict,
    label_prop_scores,
    mincut_predict,
)
from .selection import (
    SelectionResult,
    random_subset,
    select_for_budget,
    select_for_target,
)
from .sets import Labeling, NodeSet
from .strength import (
    StrengthCertificate,
    adversarial_labeling,
    strength,
    strength_by_enumeration,
    strength_deficit,
)

__version__ = "0.1.0"

__all__ = [
    "NodeSet",
    "Labeling",
    "WeightedGraph",
    "Hypergraph",
    "CutOracle",
    "GraphCutOracle",
    "HypergraphCutOracle",
    "SymmetrizedOracle",
    "graph_cut",
    "hypergraph_cut",
    "symmetrize",
    "labeling_cost",
    "verify_cut_oracle",
    "FlowNetwork",
    "min_st_cut",
    "strength_network",
    "hypergraph_strength_network",
    "seeded_min_cut",
    "hypergraph_flow",
    "StrengthCertificate",
    "strength",
    "strength_deficit",
    "strength_by_enumeration",
    "adversarial_labeling",
    "SelectionResult",
    "select_for_target",
    "select_for_budget",
    "random_subset",
    "PredictionReport",
    "mincut_predict",
    "label_prop_predict",
    "label_prop_scores",
    "class_mass_normalize",
    "error_certificate",
    "knn_graph",
    "sigma_heuristic",
    "ratings_to_hypergraph",
    "ExperimentSpec",
    "run_experiment",
    "run_experiment_data",
    "StrengthSelector",
    "MincutClassifier",
    "QuadraticLabelPropagation",
    "__version__",
]
