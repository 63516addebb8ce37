"""Laplacian eigenvalue certificates for graph invariants, checked against exact oracles."""

from .certificates import Certificate, CertId, Kind, evaluate_all
from .families import FamilySpec, enumerate_graphs, generate_family, parse_family
from .graph import Graph, VertexSet, boundary_sets, connected_components, subset_stats
from .harness import Report, ScanConfig, report_render, scan
from .io import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .oracles import ExactInvariants, OracleCaps, compute_invariants, family_closed_forms, forwarding_exact
from .spectral import (
    Spectrum,
    SpectralSummary,
    closed_form_spectrum,
    eigenvalues_symmetric,
    laplacian,
    laplacian_spectrum,
    spectral_summary,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "CertId",
    "Certificate",
    "ExactInvariants",
    "FamilySpec",
    "Graph",
    "Kind",
    "OracleCaps",
    "Report",
    "ScanConfig",
    "SpectralSummary",
    "Spectrum",
    "VertexSet",
    "boundary_sets",
    "closed_form_spectrum",
    "compute_invariants",
    "connected_components",
    "eigenvalues_symmetric",
    "enumerate_graphs",
    "evaluate_all",
    "family_closed_forms",
    "forwarding_exact",
    "generate_family",
    "laplacian",
    "laplacian_spectrum",
    "parse_edge_list",
    "parse_family",
    "parse_graph6",
    "report_render",
    "scan",
    "spectral_summary",
    "subset_stats",
    "summarize",
    "write_edge_list",
    "write_graph6",
]
