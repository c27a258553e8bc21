"""
Lower-bound certificate document
"""

from pydantic import BaseModel, Field


class LowerBoundCertificate(BaseModel):
    """
    Self-contained witness that every spanning tree has degree >= bound.

    `layers` holds B_0..B_{h+1}; the vertices of B_0..B_h are removed from the
    tree, `clean_components` are components of what remains, and the union of
    all layers is the boundary set W. Ids are 0-based.
    """

    n: int = Field(ge=1)
    k: int
    eps: float
    layers: list[list[int]]
    h: int = Field(ge=0)
    clean_components: list[list[int]]
    bound: int = Field(ge=0)

    @property
    def removed(self) -> set[int]:
        return {u for layer in self.layers[: self.h + 1] for u in layer}

    @property
    def boundary_set(self) -> set[int]:
        return {u for layer in self.layers[: self.h + 2] for u in layer}
