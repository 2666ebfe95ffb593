"""
Elements built to be deep dead ends, and the dead-end test over free bases.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, Optional

import settings as st
from errors import RejectedInputError, ResourceCapError
from graphs.cayley import cayley_ball
from groups.free import FreeModel, tree_path_edges
from tsp.exact import solve_exact
from tsp.instance import TspInstance
from wreath.elements import Lamplighter, WreathElement


logger = logging.getLogger("lamplighter.wreath")


def lit_interval_witness(group: Lamplighter, n: int, F: Optional[Iterable] = None) -> WreathElement:
    """
    Lamps set to the deep lamp element on F (default: the ball of radius n
    in the base), lamplighter at e.
    """
    if n < 0:
        raise RejectedInputError(f"n must be >= 0, got {n}")
    positions = cayley_ball(group.base, n).elements if F is None else list(F)
    return group.lit(positions)


def lit_ball_element(group: Lamplighter, radius: int, position=None) -> WreathElement:
    """Lamps lit on the base ball of `radius`, lamplighter anywhere."""
    if radius < 0:
        raise RejectedInputError(f"radius must be >= 0, got {radius}")
    return group.lit(cayley_ball(group.base, radius).elements, position)


def finite_base_deepest_element(group: Lamplighter) -> WreathElement:
    """
    Over a finite base: every lamp set to the deep lamp element and the
    lamplighter at an x maximising TS(e -> x; B), smallest vertex on ties.
    Its depth is at least the depth of the deep lamp element.
    """
    B = group.base
    if not B.is_finite:
        raise RejectedInputError(f"{B.name} is infinite")
    ball = cayley_ball(B, B.order)
    n = len(ball)
    if n > st.MAX_REQUIRED:
        raise ResourceCapError(
            f"{B.name} has {n} elements, above the exact TSP limit {st.MAX_REQUIRED}",
            cap_name='MAX_REQUIRED', cap=st.MAX_REQUIRED,
        )
    everything = frozenset(range(n))
    lengths = [solve_exact(TspInstance(ball.graph, 0, x, everything)).length for x in range(n)]
    x = lengths.index(max(lengths))
    logger.debug("deepest position over %s: %s with TS %d", B.name, B.format(ball.elements[x]), lengths[x])
    return group.lit(ball.elements, ball.elements[x])


@dataclass(frozen=True)
class DeadEndConditions:
    lamp_dead_end: bool     # f(x) is a dead end of the lamps group
    edges_covered: bool     # [e, supp f] contains every edge at x
    at_identity: bool       # x = e

    @property
    def all(self) -> bool:
        return self.lamp_dead_end and self.edges_covered and self.at_identity


def free_dead_end_conditions(g: WreathElement) -> DeadEndConditions:
    """The three conditions characterising dead ends of A wr F(S)."""
    group = g.group
    A, B = group.lamps, group.base
    if not isinstance(B, FreeModel):
        raise RejectedInputError(f"the dead-end conditions concern free bases, got {B.name}")
    x = g.position
    value = g.lamp(x)
    lamp_dead_end = all(A.length(A.mul(value, s)) <= A.length(value) for s in A.gens)

    hull = set()
    for y in g.support:
        hull |= tree_path_edges(B, B.identity, y)
    edges_covered = all(frozenset((x, B.mul(x, s))) in hull for s in B.gens)
    return DeadEndConditions(lamp_dead_end, edges_covered, x == B.identity)
