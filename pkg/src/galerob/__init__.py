"""Exact Gale-Robinson cluster variables with principal coefficients.

Three independent engines compute the same Laurent polynomials:
quiver-seed mutation (`quiver`), the coefficient recurrence
(`sequences`), and weighted perfect-matching enumeration on pinecone
graphs (`pinecone` + `matching`).  The `kuo` module implements the
condensation bijection behind the matching formula, and `cli` ties
everything to a command line with SVG rendering.
"""

from .laurent import LaurentPolynomial
from .sequences import (
    GRSpec,
    d,
    d_popoviciu,
    gr_recurrence_principal,
    gr_sequence_plain,
)
from .quiver import (
    build_gale_robinson,
    c_vector_closed_form,
    c_vector_direct,
    cluster_variable,
    is_periodic,
    mutate,
    seed_mutate,
)
from .pinecone import build_pinecone, build_pinecone_aztec, subpinecone
from .matching import (
    covering_monomial,
    enumerate_matchings,
    graph_weight,
    minimal_matching,
)
from .kuo import delta_backward, delta_forward

__all__ = [
    "build_pinecone",
    "build_pinecone_aztec",
    "subpinecone",
    "enumerate_matchings",
    "minimal_matching",
    "covering_monomial",
    "graph_weight",
    "delta_forward",
    "delta_backward",
    "LaurentPolynomial",
    "GRSpec",
    "d",
    "d_popoviciu",
    "gr_sequence_plain",
    "gr_recurrence_principal",
    "build_gale_robinson",
    "mutate",
    "seed_mutate",
    "cluster_variable",
    "is_periodic",
    "c_vector_direct",
    "c_vector_closed_form",
]
