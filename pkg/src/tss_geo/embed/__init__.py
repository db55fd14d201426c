"""Rectilinear embeddings of planar graphs with maximum degree 4."""

from tss_geo.embed.embedding import (
    Polyline,
    RectilinearEmbedding,
    embedding_area,
    polyline_interior_points,
    validate_embedding,
)
from tss_geo.embed.router import compute_embedding
from tss_geo.embed.svg import render_disks_svg, render_embedding_svg

__all__ = [
    "Polyline",
    "RectilinearEmbedding",
    "compute_embedding",
    "embedding_area",
    "polyline_interior_points",
    "render_disks_svg",
    "render_embedding_svg",
    "validate_embedding",
]
