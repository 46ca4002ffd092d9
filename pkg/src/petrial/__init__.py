"""Partial Petrial polynomials of bouquets and circle graphs."""

__version__ = "0.1.0"

from .bouquet import (  # noqa: E402
    Bouquet,
    BouquetStats,
    intersection_graph,
    interlaced,
    parse_cdf,
    parse_cdf_line,
    partial_petrial,
    path_bouquet,
    stats,
    trace_boundaries,
)
from .errors import (  # noqa: E402
    InternalInvariantError,
    InvalidInputError,
    ParseError,
    PetrialError,
    PreconditionError,
    ResourceLimitError,
)
from .gf2 import GF2Matrix, corank, rank  # noqa: E402
from .graph import (  # noqa: E402
    Graft,
    GraphClass,
    SimpleGraph,
    graft_adjacency,
    graft_lc_delete,
    is_path,
    local_complement,
    local_complement_delete,
    neighbours,
    parse_edge_list,
    structure_classify,
)
from .poly import (  # noqa: E402
    PetrialPolynomial,
    degree,
    is_binomial,
    is_interpolating,
    path_closed_form,
    poly_by_corank,
    poly_by_tracing,
)
from .witness import (  # noqa: E402
    WitnessCertificate,
    certify_nonbinomial,
    check_witness,
    nonpath_witness,
    path_witness,
)
