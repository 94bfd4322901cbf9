"""Edge codes of hypergraphs: evaluation codes on the affine torus (F_q^*)^s."""

from ._kernels import BACKEND
from .field import FieldSpec, build_field
from .hypergraph import (
    Branch,
    Hypergraph,
    classify,
    clutter_branch,
    edge_removed,
    family,
    parse_hypergraph,
    partite_path_clutter,
    serialize_hypergraph,
)
from .metrics import minimum_distance_exhaustive, weight_distribution
from .torus import EdgeCode, EdgePolynomial, count_zeros, encode, generator_matrix, gram_matrix
from .verify import run_suite

__all__ = [
    "BACKEND",
    "Branch",
    "EdgeCode",
    "EdgePolynomial",
    "FieldSpec",
    "Hypergraph",
    "build_field",
    "classify",
    "clutter_branch",
    "count_zeros",
    "edge_removed",
    "encode",
    "family",
    "generator_matrix",
    "gram_matrix",
    "minimum_distance_exhaustive",
    "parse_hypergraph",
    "partite_path_clutter",
    "run_suite",
    "serialize_hypergraph",
    "weight_distribution",
]
__version__ = "0.1.0"
