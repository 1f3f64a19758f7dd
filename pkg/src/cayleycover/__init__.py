"""Abelian Cayley graphs, lattice coverings of Z^d, and exact certificates.

The degree-diameter problem for Abelian groups is equivalent to finding
dense lattice coverings of Z^d by l1 balls (undirected) or simplices
(directed).  This package walks that bridge in both directions: it
builds the known extremal graph families, verifies diameters and
covering properties exactly, reproduces the exhaustive search tables,
and checks rational local-optimality certificates.
"""

from .groups import (
    AbelianGroup,
    DiameterResult,
    GeneratorSet,
    cyclic,
    diameter,
    from_orders,
    moore_bound,
)
from .lattices import (
    Lattice,
    QuotientStructure,
    RationalLattice,
    hermite_normal_form,
    kernel_lattice,
    member,
    quotient_structure,
    round_real_lattice,
    scale_covering,
    smith_normal_form,
)
from .shapes import Shape, enumerate_points, octahedron, order2ball, real_volume, size, tetrahedron
from .coverings import (
    CoverReport,
    Certificate,
    CertificateReport,
    FundamentalRegion,
    bcc_lattice,
    certify_local_optimality,
    covers,
    efficiency_pair,
    fundamental_region,
    l7_lattice,
    verify_simplex_cover_L7,
)
from .constructions import (
    Construction,
    Layout,
    build,
    interleave,
    max_wire_length,
    ring_layout,
    simplex_centroid_lattice,
    twisted_mesh_layout,
)
from .search import SearchResult, SearchSpec, best_graph, enumerate_abelian_groups, ffz_bound

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "Certificate",
    "CertificateReport",
    "Construction",
    "CoverReport",
    "DiameterResult",
    "FundamentalRegion",
    "GeneratorSet",
    "Lattice",
    "Layout",
    "QuotientStructure",
    "RationalLattice",
    "SearchResult",
    "SearchSpec",
    "Shape",
    "bcc_lattice",
    "best_graph",
    "build",
    "certify_local_optimality",
    "covers",
    "cyclic",
    "diameter",
    "efficiency_pair",
    "enumerate_abelian_groups",
    "enumerate_points",
    "ffz_bound",
    "from_orders",
    "fundamental_region",
    "hermite_normal_form",
    "interleave",
    "kernel_lattice",
    "l7_lattice",
    "max_wire_length",
    "member",
    "moore_bound",
    "octahedron",
    "order2ball",
    "quotient_structure",
    "real_volume",
    "ring_layout",
    "round_real_lattice",
    "scale_covering",
    "simplex_centroid_lattice",
    "size",
    "smith_normal_form",
    "tetrahedron",
    "twisted_mesh_layout",
    "verify_simplex_cover_L7",
]
