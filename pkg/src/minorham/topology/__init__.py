from .connectivity import (
    DisjointPaths,
    internally_disjoint_paths,
    is_3_connected,
    is_block,
    is_k_connected,
    vertex_connectivity,
)
from .outerplanar import OuterplaneEmbedding, is_outerplanar, outer_cycle, outerplanar_embedding, xy_outerplanar_embedding
from .planarity import NonplanarWitness, PlanarEmbedding, is_planar, planar_embedding

__all__ = [
    "DisjointPaths",
    "NonplanarWitness",
    "OuterplaneEmbedding",
    "PlanarEmbedding",
    "internally_disjoint_paths",
    "is_3_connected",
    "is_block",
    "is_k_connected",
    "is_outerplanar",
    "is_planar",
    "outer_cycle",
    "outerplanar_embedding",
    "planar_embedding",
    "vertex_connectivity",
    "xy_outerplanar_embedding",
]
