"""Long cycles in essentially 4-connected plane graphs."""

from .cycle import Cycle, CycleContext, build_context, extendable_edges, is_isolating
from .discharge import DischargeReport, check_inequality1, run_discharging
from .embed import (
    EmbeddedGraph,
    essential_4_connectivity,
    faces,
    is_3_connected,
    parse_planar_code,
    parse_rotation_text,
)
from .extend import (
    Certificate,
    ExtensionStep,
    extend_basic,
    hamiltonian_small,
    initial_isolating_cycle,
    local_search_extension,
    long_cycle,
    match_case,
)

__all__ = [
    "Certificate",
    "Cycle",
    "CycleContext",
    "DischargeReport",
    "EmbeddedGraph",
    "ExtensionStep",
    "build_context",
    "check_inequality1",
    "essential_4_connectivity",
    "extend_basic",
    "extendable_edges",
    "faces",
    "hamiltonian_small",
    "initial_isolating_cycle",
    "is_3_connected",
    "is_isolating",
    "local_search_extension",
    "long_cycle",
    "match_case",
    "parse_planar_code",
    "parse_rotation_text",
    "run_discharging",
]
