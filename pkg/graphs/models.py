"""
Pydantic v2 models for graph-level results.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


# ---------------------------------------------------------------------------
# Twins and blow-ups
# ---------------------------------------------------------------------------

class BlowUpSpec(BaseModel):
    """Per-vertex copy counts for a blow-up."""

    model_config = ConfigDict(frozen=True)

    multiplicities: tuple[int, ...] = Field(description="Copies of each base vertex")

    @field_validator("multiplicities")
    @classmethod
    def _positive(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        for v, mult in enumerate(value):
            if mult < 1:
                raise ValueError(f"[blow_up] vertex {v} has multiplicity {mult}, must be >= 1")
        return value


class TwinPartition(BaseModel):
    """Maximal groups of vertices with identical open neighbourhoods."""

    model_config = ConfigDict(frozen=True)

    classes: tuple[tuple[int, ...], ...] = Field(
        description="Twin classes, each sorted, ordered by smallest member"
    )

    @property
    def is_twin_free(self) -> bool:
        return all(len(c) == 1 for c in self.classes)

    def twin_pairs(self):
        """Yield every unordered twin pair (u, v) with u < v."""
        for cls_ in self.classes:
            for i, u in enumerate(cls_):
                for v in cls_[i + 1:]:
                    yield u, v


# ---------------------------------------------------------------------------
# Saturation
# ---------------------------------------------------------------------------

class SaturationReport(BaseModel):
    """Outcome of a K_r-freeness and K_r-saturation check."""

    r: int
    is_free: bool
    is_saturated: bool
    violating_pair: Optional[tuple[int, int]] = Field(
        default=None, description="Missing edge whose addition creates no K_r"
    )
    clique_witness: Optional[list[int]] = Field(
        default=None, description="Vertices of a K_r found in the graph"
    )

    @model_validator(mode="after")
    def _consistent(self) -> "SaturationReport":
        if self.is_saturated and not self.is_free:
            raise ValueError("[saturation] saturated report must be K_r-free")
        if (self.clique_witness is not None) == self.is_free:
            raise ValueError("[saturation] clique witness present iff not K_r-free")
        if self.is_free and (self.violating_pair is None) != self.is_saturated:
            raise ValueError("[saturation] free report needs exactly one of violating pair / saturated")
        return self
