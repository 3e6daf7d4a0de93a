from numrad.fov.geometry import (
    BoundaryScan,
    boundary_polygon,
    cone_fit,
    crawford_number,
    is_accretive,
    is_accretive_dissipative,
    pencil_spectrum,
    sectorial_index,
    sectorial_index_sweep,
)
from numrad.fov.protocol import CertifiedRadius, RayCone, SectorCone
from numrad.fov.radius import numerical_radius, support_function

__all__ = [
    "BoundaryScan",
    "CertifiedRadius",
    "RayCone",
    "SectorCone",
    "boundary_polygon",
    "cone_fit",
    "crawford_number",
    "is_accretive",
    "is_accretive_dissipative",
    "numerical_radius",
    "pencil_spectrum",
    "sectorial_index",
    "sectorial_index_sweep",
    "support_function",
]
