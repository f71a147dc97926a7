"""Counterexample hypergraphs, their independence polynomials, and root
certificates for zero-free regions."""

from .hypergraph import (
    Hypergraph,
    covered_edges,
    degree_profile,
    is_linear,
    parse_hypergraph,
    remove_vertex,
    serialize_hypergraph,
    uniformity,
)
from .construct import counterexample, find_prime_in, h_construction, s_transform
from .polynomial import (
    IntPolynomial,
    eval_point_closed_form,
    evaluate_exact,
    independence_poly_bruteforce,
    z_sg_closed_form,
)
from .kernels import BACKEND

__version__ = "0.1.0"
