"""
Depth dichotomy for lamplighters over a free product H * K of finite groups:
uniformly bounded depth exactly when H(H) + H(K) >= 1, H being the
Hamiltonian difference. For abelian factors the same answer follows from
the shapes of the two Cayley graphs alone, which `classify_abelian_free_product`
reads off case by case.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from errors import RejectedInputError
from graphs.cayley import finite_cayley_graph
from groups.finite import FiniteGroupTable, FiniteModel, make_finite
from hamiltonian.difference import hamiltonian_difference


logger = logging.getLogger("lamplighter.wreath")

BOUNDED = 'uniformly_bounded'
UNBOUNDED = 'unbounded'


@dataclass(frozen=True)
class Verdict:
    H: str
    K: str
    h_H: Optional[int]      # None for a trivial factor
    h_K: Optional[int]
    verdict: str
    case: Optional[str] = None
    depth_bound: Optional[int] = None     # bounded verdicts only

    @property
    def total(self) -> Optional[int]:
        if self.h_H is None or self.h_K is None:
            return None
        return self.h_H + self.h_K

    def to_dict(self) -> dict:
        return {
            'H': self.H,
            'K': self.K,
            'hamiltonian_difference_H': self.h_H,
            'hamiltonian_difference_K': self.h_K,
            'sum': self.total,
            'verdict': self.verdict,
            'case': self.case,
            'depth_bound': self.depth_bound,
        }


@dataclass(frozen=True)
class CaseReport:
    case: str
    verdict: str
    reason: str


def _as_model(table, gens=None) -> FiniteModel:
    if isinstance(table, FiniteModel):
        return table
    if isinstance(table, FiniteGroupTable):
        return make_finite(table, gens or [])
    raise RejectedInputError(f"expected a finite group, got {type(table).__name__}")


def _describe(model: FiniteModel) -> str:
    return f"{model.name} {model.format_gens()}"


def depth_bound(H: FiniteModel, K: FiniteModel) -> int:
    """
    Steps needed to lengthen any element of A wr (H * K) when the depth is
    uniformly bounded: 2|H| + |K| with H the larger factor.
    """
    big, small = max(H.order, K.order), min(H.order, K.order)
    return 2 * big + small


def depth_verdict(H, K, gens_H=None, gens_K=None) -> Verdict:
    """A wr (H * K) has uniformly bounded depth iff H(H) + H(K) >= 1."""
    H, K = _as_model(H, gens_H), _as_model(K, gens_K)
    if H.order == 1 or K.order == 1:
        # H * K is finite; depth is unbounded as soon as the lamps' is
        h_H = None if H.order == 1 else hamiltonian_difference(H)
        h_K = None if K.order == 1 else hamiltonian_difference(K)
        return Verdict(_describe(H), _describe(K), h_H, h_K, UNBOUNDED)
    h_H, h_K = hamiltonian_difference(H), hamiltonian_difference(K)
    verdict = BOUNDED if h_H + h_K >= 1 else UNBOUNDED
    bound = depth_bound(H, K) if verdict == BOUNDED else None
    logger.info("verdict %s * %s: %d + %d -> %s", H.name, K.name, h_H, h_K, verdict)
    return Verdict(_describe(H), _describe(K), h_H, h_K, verdict, depth_bound=bound)


def _shape(model: FiniteModel):
    graph = finite_cayley_graph(model)
    return graph.is_cycle(), graph.is_bipartite()


def classify_abelian_free_product(H, K, gens_H=None, gens_K=None) -> CaseReport:
    """Case of the abelian classification that applies to (H, K), read from graph shapes."""
    H, K = _as_model(H, gens_H), _as_model(K, gens_K)
    for name, model in (('H', H), ('K', K)):
        if not model.table.is_abelian():
            raise RejectedInputError(f"{name} = {model.name} is not abelian")
    h, k = H.order, K.order
    if h == 1 or k == 1:
        return CaseReport('1', UNBOUNDED, "a trivial factor makes the base finite")

    h_cycle, h_bip = _shape(H)
    k_cycle, k_bip = _shape(K)
    if h in (2, 3) or k in (2, 3):
        # the small factor is an edge or a triangle; the other must be a long cycle
        small_h = h in (2, 3)
        other, other_cycle = (k, k_cycle) if small_h else (h, h_cycle)
        if other_cycle and other >= 8:
            return CaseReport('2a', BOUNDED, f"the other factor is a cycle of length {other} >= 8")
        return CaseReport('2b', UNBOUNDED, "the other factor is not a cycle of length >= 8")

    if not h_cycle and not k_cycle:
        return CaseReport('3', UNBOUNDED, "neither Cayley graph is a cycle")

    # (4) H is a cycle; (5) is the same statement with H and K exchanged
    label, n, other, o_cycle, o_bip = ('4', h, k, k_cycle, k_bip) if h_cycle else ('5', k, h, h_cycle, h_bip)
    if n in (4, 5):
        bounded = o_cycle and other >= 6
        why = f"cycle of length {n}; the other factor {'is' if bounded else 'is not'} a cycle of length >= 6"
        return CaseReport(label + 'a', BOUNDED if bounded else UNBOUNDED, why)
    if n in (6, 7):
        bounded = o_cycle or o_bip
        why = f"cycle of length {n}; the other factor {'is' if bounded else 'is not'} a cycle or bipartite"
        return CaseReport(label + 'b', BOUNDED if bounded else UNBOUNDED, why)
    return CaseReport(label + 'c', BOUNDED, f"cycle of length {n} >= 8")
