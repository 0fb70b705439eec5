"""Complexes over a base, the objects the fibration machinery acts on."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .simplicial import SimplicialMap, SimplicialSet


@dataclass
class FiberedComplex:
    """``projection: total -> base``.  ``category`` is set when ``base`` is its nerve."""

    total: SimplicialSet
    base: SimplicialSet
    projection: SimplicialMap
    category: object = None
    name: str | None = None

    def __post_init__(self):
        if self.projection.domain is not self.total or self.projection.codomain is not self.base:
            raise ValidationError("projection must run from total to base")

    @property
    def max_dim(self) -> int:
        return self.total.max_dim

    def validate(self) -> None:
        self.total.validate()
        self.base.validate()
        self.projection.validate()
        if self.category is not None and self.base is not self.category.nerve(self.base.max_dim):
            raise ValidationError("base is not the nerve of the declared category")

    def fiber(self, k: int, b: int) -> list[int]:
        return self.projection.fiber(k, b)

    def vertex_fibers(self) -> list[list[int]]:
        out = [[] for _ in range(self.base.size(0))]
        for x, b in enumerate(self.projection.levels[0]):
            out[b].append(x)
        return out
