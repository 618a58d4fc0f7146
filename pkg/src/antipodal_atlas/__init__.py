"""Exact antipodal-set atlas for irreducible compact symmetric spaces.

Everything is computed in rational arithmetic: restricted root systems,
Cartan polyhedra and their quotient cuts, base points of the antipodal
orbits, tangent root sets and orbit dimensions, for every space in the
reference catalog.
"""

from .antipodal import (
    AntipodalOrbit,
    AntipodalReport,
    EquivalentMaximum,
    UnlistedTie,
    antipodal_report,
    orbit_dimension,
    resolve_space,
    tangent_roots,
)
from .catalog import SpaceDescriptor, dim_space, evaluate, find_spaces, spaces
from .centers import GammaSubgroup, cyclic_subgroup, resolve_subgroup, subgroups
from .oracle import OracleReport, check_roots, enumerate_roots_oracle, vertex_check_oracle
from .polytopes import (
    BasePoint,
    PGammaPolytope,
    UnexpectedVertexError,
    cartan_polyhedron,
    max_prime,
    maximal_corners,
    p_gamma,
)
from .roots import Root, RootSystem, build

__version__ = "0.1.0"

__all__ = [
    "AntipodalOrbit",
    "AntipodalReport",
    "BasePoint",
    "EquivalentMaximum",
    "GammaSubgroup",
    "OracleReport",
    "PGammaPolytope",
    "Root",
    "RootSystem",
    "SpaceDescriptor",
    "UnexpectedVertexError",
    "UnlistedTie",
    "antipodal_report",
    "build",
    "cartan_polyhedron",
    "check_roots",
    "cyclic_subgroup",
    "dim_space",
    "enumerate_roots_oracle",
    "evaluate",
    "find_spaces",
    "max_prime",
    "maximal_corners",
    "orbit_dimension",
    "p_gamma",
    "resolve_space",
    "resolve_subgroup",
    "spaces",
    "subgroups",
    "tangent_roots",
    "vertex_check_oracle",
]
