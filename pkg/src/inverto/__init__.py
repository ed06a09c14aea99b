"""Exact computation engine for set-inversions on tournaments: indices,
Boolean dimension, graphic distance, decompositions, catalogs, and finite
universal samples."""

from .booldim import Representation, boolean_dimension, minimum_representation, parity_set_system
from .core import (
    AnnotatedTournament,
    SimpleGraph,
    Tournament,
    boolean_sum,
    delete_vertex,
    dual,
    from_code,
    invert,
    invert_seq,
    is_acyclic,
    restrict,
    to_code,
)
from .errors import CapExceeded, ParseError
from .families import (
    bound_b6,
    bounds_of_i1,
    c3_dot_2,
    critical_t,
    critical_u,
    critical_v,
    d5,
    minus_one_critical,
    paley7,
    t5,
    transitive,
    v5,
)
from .hereditary import (
    IsoClassCatalog,
    canonical_code,
    canonical_form,
    embeds,
    enumerate_classes,
    find_embedding,
    membership,
    obstructions,
)
from .index import (
    IndexResult,
    IndexTable,
    count_low_index,
    counting_lower_bound,
    distance,
    index_all,
    index_table,
    inversion_index,
    log2_lower_bound,
)
from .structure import (
    AcyclicDecomposition,
    acyclic_decompose,
    intervals,
    is_acyclically_indecomposable,
    is_critical_tournament,
    is_critical_vertex,
    is_indecomposable,
    is_interval,
    lex_sum,
    noncritical_vertices,
)
from .universal import (
    ChainPoint,
    WSample,
    build_sample,
    compare_points,
    default_points,
    escalate_universality,
    format_sample_file,
    parse_sample_file,
    universality_check,
)

__all__ = [
    "AnnotatedTournament",
    "AcyclicDecomposition",
    "CapExceeded",
    "ChainPoint",
    "IndexResult",
    "IndexTable",
    "IsoClassCatalog",
    "ParseError",
    "Representation",
    "SimpleGraph",
    "Tournament",
    "WSample",
    "acyclic_decompose",
    "boolean_dimension",
    "boolean_sum",
    "bound_b6",
    "bounds_of_i1",
    "build_sample",
    "c3_dot_2",
    "canonical_code",
    "canonical_form",
    "compare_points",
    "count_low_index",
    "counting_lower_bound",
    "critical_t",
    "critical_u",
    "critical_v",
    "d5",
    "default_points",
    "delete_vertex",
    "distance",
    "dual",
    "embeds",
    "enumerate_classes",
    "escalate_universality",
    "find_embedding",
    "format_sample_file",
    "from_code",
    "index_all",
    "index_table",
    "intervals",
    "invert",
    "invert_seq",
    "inversion_index",
    "is_acyclic",
    "is_acyclically_indecomposable",
    "is_critical_tournament",
    "is_critical_vertex",
    "is_indecomposable",
    "is_interval",
    "lex_sum",
    "log2_lower_bound",
    "membership",
    "minimum_representation",
    "minus_one_critical",
    "noncritical_vertices",
    "obstructions",
    "paley7",
    "parity_set_system",
    "parse_sample_file",
    "restrict",
    "t5",
    "to_code",
    "transitive",
    "universality_check",
    "v5",
]
