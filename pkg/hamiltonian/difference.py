import logging
from dataclasses import dataclass
from typing import Dict, Tuple

import settings as st
from errors import RejectedInputError, ResourceCapError
from graphs.cayley import finite_cayley_graph
from groups.finite import FiniteGroupTable, FiniteModel, make_finite
from tsp.exact import solve_exact
from tsp.instance import TspInstance


logger = logging.getLogger("lamplighter.hamiltonian")


@dataclass(frozen=True)
class HamiltonianDifferenceReport:
    group: str
    gens: str
    value: int
    closed_ts: int                  # TS(e -> e; G), edges
    max_open_ts: int                # max over g != e of TS(e -> g; G), edges
    argmax: int                     # smallest element index attaining it
    argmax_label: str
    walks: Dict[int, Tuple[int, ...]]

    def as_row(self) -> dict:
        return {
            'group': self.group,
            'gens': self.gens,
            'hamiltonian_difference': self.value,
            'closed_ts': self.closed_ts,
            'max_open_ts': self.max_open_ts,
            'argmax': self.argmax_label,
        }


def _as_model(table, gens) -> FiniteModel:
    if isinstance(table, FiniteModel):
        return table
    if isinstance(table, FiniteGroupTable):
        return make_finite(table, gens or [])
    raise RejectedInputError(f"expected a finite group, got {type(table).__name__}")


def hamiltonian_difference_report(table, gens=None) -> HamiltonianDifferenceReport:
    model = _as_model(table, gens)
    n = model.order
    if n < 2:
        raise RejectedInputError(f"{model.name}: the Hamiltonian difference needs a nontrivial group")
    if n > st.MAX_REQUIRED:
        raise ResourceCapError(
            f"{model.name} has {n} elements, above the exact TSP limit {st.MAX_REQUIRED}",
            cap_name='MAX_REQUIRED', cap=st.MAX_REQUIRED,
        )
    graph = finite_cayley_graph(model)
    everything = frozenset(range(n))
    e = model.identity

    walks = {}
    lengths = {}
    for g in range(n):
        sol = solve_exact(TspInstance(graph, e, g, everything))
        lengths[g] = sol.length
        walks[g] = sol.walk
    others = [g for g in range(n) if g != e]
    top = max(lengths[g] for g in others)
    argmax = min(g for g in others if lengths[g] == top)
    report = HamiltonianDifferenceReport(
        group=model.name,
        gens=model.format_gens(),
        value=top - lengths[e],
        closed_ts=lengths[e],
        max_open_ts=top,
        argmax=argmax,
        argmax_label=model.format(argmax),
        walks=walks,
    )
    logger.debug("H(%s, %s) = %d", report.group, report.gens, report.value)
    return report


def hamiltonian_difference(table, gens=None) -> int:
    """max over g != e of TS(e -> g; G) minus TS(e -> e; G), on the whole Cayley graph."""
    return hamiltonian_difference_report(table, gens).value
