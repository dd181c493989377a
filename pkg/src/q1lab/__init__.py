"""Signless Laplacian spectral radius versus clique number.

Graph construction, exact invariants, the Jacobi eigensolver, closed-form
bounds, named extremal families and exhaustive small-graph verification.
"""
from q1lab.graph import (
    DegreeProfile,
    Graph,
    GraphError,
    chromatic_number,
    clique_number,
    complement,
    degree_profile,
    duplicate_vertex,
    from_edge_list,
    is_connected,
    join,
    union,
)
from q1lab.kernels import BACKEND
from q1lab.spectral import SpectralSummary, q1, q_min, signless_laplacian, spectrum

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DegreeProfile",
    "Graph",
    "GraphError",
    "SpectralSummary",
    "chromatic_number",
    "clique_number",
    "complement",
    "degree_profile",
    "duplicate_vertex",
    "from_edge_list",
    "is_connected",
    "join",
    "q1",
    "q_min",
    "signless_laplacian",
    "spectrum",
    "union",
]
