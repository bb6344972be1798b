"""Finite primal topological space engine.

Thin re-export of the compiled core: finite set algebra, topology and primal
validation, the diamond operators, the induced topologies and the executable
theorem catalog.
"""

from primaltop._core import (
    EngineError,
    OperatorTable,
    Primal,
    PrimalSpace,
    SetFamily,
    Subset,
    Topology,
    Universe,
    __version__,
    base_family,
    check_theorem,
    cl_diamond,
    cl_diamond_r,
    default_point_names,
    diamond,
    diamond_r,
    enumerate_primals,
    enumerate_topologies,
    find_counterexample,
    kuratowski_check,
    load_space,
    parse_space,
    sweep,
    tau_diamond,
    tau_diamond_r,
    theorem_catalog,
    topology_from_base,
)

__all__ = [
    "EngineError",
    "OperatorTable",
    "Primal",
    "PrimalSpace",
    "SetFamily",
    "Subset",
    "Topology",
    "Universe",
    "__version__",
    "base_family",
    "check_theorem",
    "cl_diamond",
    "cl_diamond_r",
    "default_point_names",
    "diamond",
    "diamond_r",
    "enumerate_primals",
    "enumerate_topologies",
    "find_counterexample",
    "kuratowski_check",
    "load_space",
    "parse_space",
    "sweep",
    "tau_diamond",
    "tau_diamond_r",
    "theorem_catalog",
    "topology_from_base",
]
