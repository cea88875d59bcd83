"""
Pydantic v2 models for (r,t)-systems: families of host vertex sets, system
instances, validity reports and the JSON document format.
"""

from __future__ import annotations

from typing import Iterator, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from graphs.bits import to_mask
from graphs.graph import Graph


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

class VertexSetFamily(BaseModel):
    """Ordered list of host vertex sets with positive multiplicities."""

    model_config = ConfigDict(frozen=True)

    sets: tuple[tuple[int, ...], ...] = Field(default=(), description="Sorted vertex tuples")
    multiplicities: tuple[int, ...] = Field(default=(), description="Copies of each set; empty means all ones")

    @field_validator("sets")
    @classmethod
    def _normalise(cls, value: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        normalised = []
        for s in value:
            members = tuple(sorted(set(s)))
            if members and members[0] < 0:
                raise ValueError(f"[VertexSetFamily] negative vertex in {s}")
            normalised.append(members)
        return tuple(normalised)

    @model_validator(mode="before")
    @classmethod
    def _default_multiplicities(cls, data):
        if isinstance(data, dict) and data.get("sets") and not data.get("multiplicities"):
            data = {**data, "multiplicities": (1,) * len(data["sets"])}
        return data

    @model_validator(mode="after")
    def _multiplicities(self) -> "VertexSetFamily":
        if len(self.multiplicities) != len(self.sets):
            raise ValueError(
                f"[VertexSetFamily] {len(self.multiplicities)} multiplicities for {len(self.sets)} sets"
            )
        for i, mult in enumerate(self.multiplicities):
            if mult < 1:
                raise ValueError(f"[VertexSetFamily] set {i} has multiplicity {mult}")
        return self

    @classmethod
    def of(cls, sets, multiplicities=None) -> "VertexSetFamily":
        return cls(sets=tuple(tuple(s) for s in sets), multiplicities=tuple(multiplicities or ()))

    def masks(self) -> tuple[int, ...]:
        return tuple(to_mask(s) for s in self.sets)

    @property
    def total(self) -> int:
        """Number of family members counted with multiplicity."""
        return sum(self.multiplicities)

    def __len__(self) -> int:
        return len(self.sets)

    def instances(self) -> Iterator[tuple[int, ...]]:
        """Every member, repeated per multiplicity, in family order."""
        for s, mult in zip(self.sets, self.multiplicities):
            for _ in range(mult):
                yield s

    def membership_counts(self, n: int) -> list[int]:
        """s(v): number of members (with multiplicity) containing v."""
        counts = [0] * n
        for s, mult in zip(self.sets, self.multiplicities):
            for v in s:
                counts[v] += mult
        return counts

    def has_repeats(self) -> bool:
        return any(m > 1 for m in self.multiplicities) or len(set(self.sets)) != len(self.sets)

    def max_vertex(self) -> int:
        return max((s[-1] for s in self.sets if s), default=-1)


# ---------------------------------------------------------------------------
# System instances
# ---------------------------------------------------------------------------

class SystemInstance(BaseModel):
    """A host graph with a family of vertex sets and the parameters it claims."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    host: Graph
    family: VertexSetFamily = Field(default_factory=VertexSetFamily)
    r: int = Field(default=3, ge=3)
    t: Optional[int] = Field(default=None, description="Uniform set size, when claimed")
    primed: bool = Field(default=False, description="(3,t)'-system: no intersection condition")
    maximal: bool = Field(default=False, description="Claims maximality")

    @model_validator(mode="after")
    def _parameters(self) -> "SystemInstance":
        if self.family.max_vertex() >= self.host.n:
            raise ValueError(
                f"[SystemInstance] vertex {self.family.max_vertex()} outside host of size {self.host.n}"
            )
        if self.primed and self.r != 3:
            raise ValueError(f"[SystemInstance] primed systems need r=3, got r={self.r}")
        if self.t is not None and self.t < self.r - 2:
            raise ValueError(f"[SystemInstance] t={self.t} below r-2={self.r - 2}")
        return self

    @property
    def m(self) -> int:
        return self.host.n

    @property
    def size(self) -> int:
        return self.family.total

    def with_changes(self, **changes) -> "SystemInstance":
        data = {
            "host": self.host,
            "family": self.family,
            "r": self.r,
            "t": self.t,
            "primed": self.primed,
            "maximal": self.maximal,
        }
        data.update(changes)
        return SystemInstance(**data)

    def __repr__(self) -> str:
        kind = f"({self.r},{self.t})" + ("'" if self.primed else "")
        return f"SystemInstance{kind}(m={self.m}, e={self.host.edge_count}, |F|={self.size})"


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

class ConditionResult(BaseModel):
    name: str
    passed: bool
    skipped: bool = False
    counterexample: Optional[str] = None


class SystemReport(BaseModel):
    """Per-condition verdicts of check_system."""

    valid: bool
    conditions: list[ConditionResult]

    def condition(self, name: str) -> ConditionResult:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def first_failure(self) -> Optional[ConditionResult]:
        return next((c for c in self.conditions if not c.passed), None)


class MaximalityReport(BaseModel):
    is_maximal: bool
    violating_edge: Optional[tuple[int, int]] = Field(
        default=None, description="Missing host edge that creates neither K_r nor K_(r-1) in a set"
    )


# ---------------------------------------------------------------------------
# Serialisation
# ---------------------------------------------------------------------------

class SystemDocument(BaseModel):
    """JSON form of a system: host as graph6, sets as int lists."""

    host: str = Field(description="graph6 encoding of the host")
    sets: list[list[int]]
    mults: list[int]
    r: int
    t: Optional[int] = None
    primed: bool = False
    maximal: bool = False
