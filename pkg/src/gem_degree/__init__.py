"""gem_degree - exact gems, crystallizations and degrees of simplicial maps."""

from .cli import main
from .cli_io import export_dot, parse, serialize, serialize_map
from .complex import euler_characteristic, f_vector, num_vertices_of_K, simplex_counts
from .constructions import (
    boundary_necklace,
    cylinder_gem,
    family,
    glued_sphere,
    necklace_sphere,
    product_gem,
    product_standard,
    reduced_cylinder,
    standard_sphere,
)
from .degree_maps import (
    algebraic_number,
    build_g_d_product,
    build_sphere_map,
    canonical_orientation,
    compose,
    constant_map,
    degree,
    facet_counts,
    identity_map,
    map_degree,
    orientation_reversal,
    product_map_of_degree,
    sphere_map_of_degree,
    validate_map,
)
from .errors import GemError
from .gem_core import (
    boundary_graph,
    color_isomorphic,
    is_closed,
    is_contracted,
    new_gem,
    orientation,
    residue_count,
    residues,
)
from .genus import (
    bicolored_cycle_count,
    canonical_permutations,
    certify_sphere,
    chi,
    regular_genus,
    rho,
)
from .models import (
    ColoredVertexMap,
    CyclicPermutation,
    DegreeResult,
    DipoleSpec,
    FVector,
    Gem,
    GemDocument,
    GenusReport,
    GlueMoveSpec,
    Orientation,
    SphereCertificate,
    VertexLabel,
)
from .moves import (
    add_dipole,
    apply_glue_schedule,
    cancel_dipole,
    find_dipoles,
    polyhedral_glue,
    reduce_cylinder,
)
from .types import EdgeViolation, ErrorRecord, MoveLogEntry

__all__ = [
    "main",
    "Gem",
    "VertexLabel",
    "Orientation",
    "FVector",
    "DipoleSpec",
    "GlueMoveSpec",
    "CyclicPermutation",
    "GenusReport",
    "SphereCertificate",
    "ColoredVertexMap",
    "DegreeResult",
    "GemDocument",
    "GemError",
    "EdgeViolation",
    "ErrorRecord",
    "MoveLogEntry",
    "new_gem",
    "is_closed",
    "is_contracted",
    "residues",
    "residue_count",
    "orientation",
    "boundary_graph",
    "color_isomorphic",
    "simplex_counts",
    "f_vector",
    "euler_characteristic",
    "num_vertices_of_K",
    "find_dipoles",
    "cancel_dipole",
    "add_dipole",
    "polyhedral_glue",
    "apply_glue_schedule",
    "reduce_cylinder",
    "bicolored_cycle_count",
    "canonical_permutations",
    "chi",
    "rho",
    "regular_genus",
    "certify_sphere",
    "standard_sphere",
    "necklace_sphere",
    "cylinder_gem",
    "product_standard",
    "product_gem",
    "glued_sphere",
    "boundary_necklace",
    "reduced_cylinder",
    "family",
    "validate_map",
    "algebraic_number",
    "degree",
    "map_degree",
    "canonical_orientation",
    "build_sphere_map",
    "sphere_map_of_degree",
    "build_g_d_product",
    "product_map_of_degree",
    "orientation_reversal",
    "compose",
    "identity_map",
    "constant_map",
    "facet_counts",
    "serialize",
    "serialize_map",
    "parse",
    "export_dot",
]
