"""Longest path and minimum path cover on cocomparability graphs."""

from .errors import (
    CapExceededError,
    CocolpError,
    InternalConsistencyError,
    OrderingError,
    ParseError,
    PreconditionError,
)
from .generators import GenSpec, gen_cocomparability, gen_interval, gen_permutation, generate
from .graph import Graph, PathCover, complement, induced_subgraph, is_valid_path, parse_graph
from .longest_path import (
    AugmentedOrdering,
    DpTable,
    Step,
    build_dp,
    in_g_ij,
    is_normal,
    is_typical,
    longest_path,
    reconstruct,
    solve,
)
from .oracle import brute_is_maximal_path, brute_longest_path, brute_min_path_cover
from .orderings import (
    TripleKind,
    TripleWitness,
    VertexOrdering,
    find_bad_triple,
    is_i_ordering,
    is_umbrella_free,
    restrict,
)
from .search import RmnResult, ldfs, ldfs_plus, min_path_cover, rmn

__version__ = "0.1.0"
