"""Spectral operators of hypergraphs with real coefficients and interlacing checks."""

from .eigen import EigenDecomposition, Spectrum, rayleigh_quotient, symmetric_spectrum
from .hypergraph import (
    Edge,
    GeneratorParams,
    Hypergraph,
    cardinality,
    classify,
    degree,
    delete_edges,
    delete_vertex,
    generate_random,
    restrict,
    validate,
)
from .interlacing import (
    InterlacingReport,
    Theorem,
    check_shifted_interlacing,
    verify_butler,
    verify_edge_deletion_kirchhoff,
    verify_edge_set,
    verify_loop_removal,
    verify_trace_identities,
    verify_vertex_deletion,
)

__version__ = "0.1.0"
