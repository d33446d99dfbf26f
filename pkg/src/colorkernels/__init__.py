"""Kernels by rainbow and properly colored paths in arc-colored digraphs."""

from .digraph import (
    ColoredDigraph,
    GuardError,
    ParseError,
    PathWitness,
    Tournament,
    ValidationError,
    induced_subdigraph,
    is_acyclic,
    is_strongly_connected,
    parse_digraph,
    parse_tournament,
    serialize_digraph,
    serialize_dot,
    serialize_tournament,
    strongly_connected_components,
    validate_tournament,
)
from .kernels import (
    ClosureDigraph,
    KernelCertificate,
    acyclic_rainbow_kernel,
    kernel_of,
    pc_closure,
    pcp_kernel_tournament,
    rainbow_closure,
    rainbow_kernel,
    rainbow_kernel_tournament,
    validate_rainbow_kernel,
)
from .reachability import (
    LayeredPcRelation,
    PcState,
    pc_closure_layers,
    pc_reachable,
    pc_reachable_bruteforce,
    rainbow_reachable,
    rainbow_reachable_bruteforce,
)
from .reductions import (
    Hypergraph3,
    RpogInstance,
    build_dh,
    build_td,
    parse_hypergraph,
    parse_rpog,
    serialize_hypergraph,
    serialize_rpog,
    solve_3dpm_bruteforce,
    verify_chain,
)
from .generators import (
    HypothesisReport,
    check_all_cycles_rainbow,
    check_all_triangles_rainbow,
    check_lemma1_instance,
    check_theorem2_hypothesis,
    explore_fk_conjecture,
    explore_problem1,
    random_acyclic_digraph,
    random_digraph,
    random_tournament,
    random_tstar_shaped,
    t5_star,
    t_star,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
