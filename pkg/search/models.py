"""
Records, budgets and budget accounting for the exhaustive searches.
"""

from __future__ import annotations

import time
from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class BudgetExceeded(RuntimeError):
    """A search hit one of its caps; reason names the cap."""

    def __init__(self, reason: str) -> None:
        super().__init__(f"[budget] {reason}")
        self.reason = reason


# ---------------------------------------------------------------------------
# Enums
# ---------------------------------------------------------------------------

class RecordKind(str, Enum):
    SAT = "sat"
    TSAT = "tsat"
    TSAT_MIN_DEG = "tsat_min_deg"
    S_RT = "s_rt"
    S3T_PRIME = "s3t_prime"
    E_RT = "e_rt"
    E_RT_MAXIMAL = "e_rt_maximal"
    E3T_DOUBLEPRIME = "e3t_doubleprime"
    M_SHATTER = "m_shatter"


class RecordStatus(str, Enum):
    FOUND = "found"
    NONEXISTENT = "nonexistent"
    BUDGET_EXCEEDED = "budget_exceeded"


class WitnessFormat(str, Enum):
    GRAPH6 = "graph6"
    SYSTEM = "system"
    SEQUENCES = "sequences"


# ---------------------------------------------------------------------------
# Budget
# ---------------------------------------------------------------------------

class EnumerationBudget(BaseModel):
    """Caps on every exhaustive search; hitting any of them yields budget_exceeded."""

    model_config = ConfigDict(frozen=True)

    max_vertices: int = Field(default=9, gt=0, description="Largest host or graph order enumerated")
    max_free_vertices: int = Field(default=12, gt=0, description="Largest order for triangle-free enumeration")
    max_edges: int = Field(default=36, gt=0, description="Largest host edge count tried by e_rt searches")
    max_candidates: int = Field(default=10_000_000, gt=0, description="Candidate extensions and sets examined")
    max_clique_nodes: int = Field(default=10_000_000, gt=0, description="Branch-and-bound nodes in clique searches")
    wall_time_cap: float = Field(default=600.0, gt=0, description="Seconds per search")

    @classmethod
    def from_config(cls, cfg: Any) -> "EnumerationBudget":
        return cls(
            max_vertices=cfg.max_vertices,
            max_free_vertices=cfg.max_free_vertices,
            max_edges=cfg.max_edges,
            max_candidates=cfg.max_candidates,
            max_clique_nodes=cfg.max_clique_nodes,
            wall_time_cap=cfg.wall_time_cap,
        )

    def fingerprint(self) -> str:
        return (
            f"v{self.max_vertices}-f{self.max_free_vertices}-e{self.max_edges}"
            f"-c{self.max_candidates}-q{self.max_clique_nodes}"
        )

    def vertex_cap(self, triangle_free: bool) -> int:
        return max(self.max_vertices, self.max_free_vertices) if triangle_free else self.max_vertices


class BudgetTracker:
    """Counts work against an EnumerationBudget and enforces the wall-time cap."""

    def __init__(self, budget: Optional[EnumerationBudget] = None) -> None:
        self.budget = budget or EnumerationBudget()
        self.started = time.monotonic()
        self.candidates = 0
        self.clique_nodes = 0
        self.hosts = 0

    def charge_candidates(self, count: int = 1) -> None:
        self.candidates += count
        if self.candidates > self.budget.max_candidates:
            raise BudgetExceeded(f"more than {self.budget.max_candidates} candidates")
        self.check_time()

    def charge_clique_nodes(self, count: int = 1) -> None:
        self.clique_nodes += count
        if self.clique_nodes > self.budget.max_clique_nodes:
            raise BudgetExceeded(f"more than {self.budget.max_clique_nodes} clique nodes")
        if self.clique_nodes % 4096 == 0:
            self.check_time()

    def charge_host(self) -> None:
        self.hosts += 1
        self.check_time()

    def require_vertices(self, n: int, triangle_free: bool = False) -> None:
        cap = self.budget.vertex_cap(triangle_free)
        if n > cap:
            raise BudgetExceeded(f"{n} vertices exceeds cap {cap}")

    def require_edges(self, e: int) -> None:
        if e > self.budget.max_edges:
            raise BudgetExceeded(f"{e} edges exceeds cap {self.budget.max_edges}")

    def check_time(self) -> None:
        if time.monotonic() - self.started > self.budget.wall_time_cap:
            raise BudgetExceeded(f"wall time over {self.budget.wall_time_cap}s")

    def spent(self) -> dict[str, int]:
        """Work counters (elapsed time is not recorded)."""
        return {"candidates": self.candidates, "clique_nodes": self.clique_nodes, "hosts": self.hosts}


# ---------------------------------------------------------------------------
# Records
# ---------------------------------------------------------------------------

class ExtremalRecord(BaseModel):
    """Outcome of one extremal search."""

    kind: RecordKind
    params: dict[str, int] = Field(description="n/m/s, r, t, k as applicable")
    status: RecordStatus
    value: Optional[int] = Field(default=None, description="Absent unless status is found")
    witness: Optional[str] = Field(default=None, description="graph6, system JSON or sequence list")
    witness_format: Optional[WitnessFormat] = None
    method: str = Field(default="exhaustive", description="exhaustive | construction")
    budget_spent: dict[str, int] = Field(default_factory=dict)
    budget_fingerprint: str = ""
    reason: Optional[str] = Field(default=None, description="Why the budget was exceeded")
    cached: bool = False

    @model_validator(mode="after")
    def _value_matches_status(self) -> "ExtremalRecord":
        if (self.value is not None) != (self.status == RecordStatus.FOUND):
            raise ValueError(f"[ExtremalRecord] value {self.value} inconsistent with status {self.status.value}")
        return self

    def key(self) -> str:
        return record_key(self.kind, self.params, self.budget_fingerprint)

    def to_line(self) -> str:
        return self.model_dump_json(exclude={"cached"})


def record_key(kind: RecordKind | str, params: dict[str, int], fingerprint: str) -> str:
    """Cache key: kind, sorted parameters and budget fingerprint."""
    name = kind.value if isinstance(kind, RecordKind) else kind
    joined = ",".join(f"{k}={v}" for k, v in sorted(params.items()))
    return f"{name}({joined})@{fingerprint}"
