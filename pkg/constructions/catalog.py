"""
Construction catalog: CLI names mapped to builders and the parameters they take.
"""

from __future__ import annotations

from typing import Any, Callable

from constructions.families import ConstructionParams, lifted_family, system_family
from constructions.shattering import shattering_set
from constructions.small import ehm_graph, named_small
from constructions.twin_free import twin_free_saturated
from constructions.witnesses import (
    e34_upper_witness,
    e35_upper_witness,
    many_sets_witness,
    tsat_min_deg_upper_witness,
    tsat_upper_witness,
)

# name -> (parameter names, builder); builders return a Graph, a SystemInstance or a ShatteringSet
CATALOG: dict[str, tuple[tuple[str, ...], Callable[..., Any]]] = {
    "ehm": (("n", "r"), ehm_graph),
    "small": (("name",), named_small),
    "shattering": (("k",), shattering_set),
    "twinfree": (("n", "r"), twin_free_saturated),
    "system": (("t", "l"), lambda t, l: system_family(ConstructionParams(t=t, l=l))),
    "lifted": (("t", "l"), lambda t, l: lifted_family(ConstructionParams(t=t, l=l))),
    "tsat_witness": (("n",), tsat_upper_witness),
    "tsat_min_deg_witness": (("n", "r", "t"), tsat_min_deg_upper_witness),
    "e34_witness": (("s",), e34_upper_witness),
    "e35_witness": (("s",), e35_upper_witness),
    "many_sets": (("m",), many_sets_witness),
}


def build(name: str, params: dict[str, Any]) -> Any:
    """
    Run the catalog builder for `name` with the parameters it declares.

    Raises:
        KeyError: if the name is not in the catalog.
        ValueError: if a declared parameter is missing.
    """
    if name not in CATALOG:
        raise KeyError(f"[catalog] unknown construction {name!r}; known: {sorted(CATALOG)}")
    wanted, builder = CATALOG[name]
    missing = [p for p in wanted if params.get(p) is None]
    if missing:
        raise ValueError(f"[catalog] {name} needs --{' --'.join(missing)}")
    return builder(*(params[p] for p in wanted))
