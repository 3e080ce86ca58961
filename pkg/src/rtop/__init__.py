"""Covering rough sets and finite-topology approximation operators.

The engine works over finite universes of labelled elements represented
as bitmasks. Coverings, binary relations and finite topologies each carry
their own pair of lower/upper approximation operators; explicit bridge
operations convert between the three structures, and a brute-force
verifier sweeps the powerset to check the algebraic claims relating them.
"""

__version__ = "0.1.0"

from .core import (
    MAX_POWERSET_SIZE,
    MAX_UNIVERSE_SIZE,
    SetFamily,
    Subset,
    Universe,
    enumerate_powerset,
    intersect_all,
    union_all,
)
from .errors import CapExceededError, DocumentError
from .relations import BinaryRelation, relation_from_covering
from .coverings import (
    Covering,
    covering_from_relation,
    covering_from_topology,
    transform_F,
)
from .topology import (
    DEFAULT_MAX_OPENS,
    Subbase,
    Topology,
    check_family_axioms,
    family_is_topology,
    generate_from_subbase,
    subbase_from_relation,
    topologies_equal,
)
from .approximations import (
    OPERATORS,
    ApproxResult,
    approximate,
    family_G,
    family_H,
    topo_lower,
    topo_upper,
    xu_zhang_lower,
    xu_zhang_upper,
    yao3_lower,
    yao3_upper,
    yao4_lower,
    yao4_upper,
    zhu_lower,
    zhu_upper,
)
from .infosystem import InformationSystem
from .reducts import (
    RelationFamily,
    ReductReport,
    family_topology,
    is_superfluous,
    minimal_reducts,
    topology_fingerprint,
)
from .verifier import (
    CLAIM_IDS,
    CLAIMS,
    EXPECTED_STATUS,
    ClaimVerdict,
    Counterexample,
    SuiteConfig,
    SuiteReport,
    run_suite,
)

__all__ = [
    "__version__",
    "MAX_POWERSET_SIZE",
    "MAX_UNIVERSE_SIZE",
    "SetFamily",
    "Subset",
    "Universe",
    "enumerate_powerset",
    "intersect_all",
    "union_all",
    "CapExceededError",
    "DocumentError",
    "BinaryRelation",
    "relation_from_covering",
    "Covering",
    "covering_from_relation",
    "covering_from_topology",
    "transform_F",
    "DEFAULT_MAX_OPENS",
    "Subbase",
    "Topology",
    "check_family_axioms",
    "family_is_topology",
    "generate_from_subbase",
    "subbase_from_relation",
    "topologies_equal",
    "OPERATORS",
    "ApproxResult",
    "approximate",
    "family_G",
    "family_H",
    "topo_lower",
    "topo_upper",
    "xu_zhang_lower",
    "xu_zhang_upper",
    "yao3_lower",
    "yao3_upper",
    "yao4_lower",
    "yao4_upper",
    "zhu_lower",
    "zhu_upper",
    "InformationSystem",
    "RelationFamily",
    "ReductReport",
    "family_topology",
    "is_superfluous",
    "minimal_reducts",
    "topology_fingerprint",
    "CLAIM_IDS",
    "CLAIMS",
    "EXPECTED_STATUS",
    "ClaimVerdict",
    "Counterexample",
    "SuiteConfig",
    "SuiteReport",
    "run_suite",
]
