"""
Dead ends, depth and retreat depth in A wr B.

All three come out of one layered search around g: layer n holds the
elements g h with |h| = n (right multiplication, states deduplicated).
The first layer containing an element longer than g fixes the depth; the
same layers carry, for every element, the best lowest norm along a
geodesic from g, which gives the retreat depth.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np
import pandas as pd

import settings as st
from errors import InternalError, RejectedInputError, ResourceCapError
from wreath.elements import Lamplighter, State, WreathElement
from wreath.metric import MetricBackend, WordMetric


logger = logging.getLogger("lamplighter.wreath")

PROFILE_COLUMNS = ['element', 'word_length', 'depth', 'depth_exact', 'retreat_depth', 'retreat_exact', 'flags']


@dataclass
class DepthReport:
    element: str
    word_length: int
    depth: int
    depth_exact: bool               # False: depth is a lower bound
    retreat_depth: Optional[int] = None
    retreat_exact: bool = False
    witness: Tuple[str, ...] = ()   # generator labels of a shortest length-increasing multiplier
    dead_end: bool = False
    maximal: bool = False           # the whole finite group was searched without an increase
    partial: bool = False           # stopped by the frontier cap

    def check(self):
        if self.depth_exact and self.retreat_exact and self.retreat_depth > self.depth:
            raise InternalError(f"{self.element}: retreat depth {self.retreat_depth} above depth {self.depth}")
        return True

    @property
    def flags(self) -> str:
        marks = [name for name, on in (('dead_end', self.dead_end), ('maximal', self.maximal),
                                       ('partial', self.partial)) if on]
        if not self.depth_exact:
            marks.append('lower_bound')
        return '|'.join(marks)

    def as_row(self) -> dict:
        return {
            'element': self.element,
            'word_length': self.word_length,
            'depth': self.depth,
            'depth_exact': self.depth_exact,
            'retreat_depth': self.retreat_depth,
            'retreat_exact': self.retreat_exact,
            'flags': self.flags,
        }


@dataclass
class _Scan:
    depth: int
    exact: bool
    witness: Tuple[int, ...] = ()
    retreat: Optional[int] = None
    retreat_exact: bool = False
    maximal: bool = False
    partial: bool = False


def _metric(group: Lamplighter, backend, metric: Optional[WordMetric]) -> WordMetric:
    metric = metric or WordMetric(group, backend)
    if not metric.exact:
        raise RejectedInputError(
            f"backend {metric.backend.strategy!r} only gives upper bounds; depth needs exact word lengths"
        )
    return metric


def _word(parent: Dict[State, Tuple[State, int]], y: State) -> Tuple[int, ...]:
    word = []
    while y in parent:
        y, i = parent[y]
        word.append(i)
    return tuple(reversed(word))


def _scan(group: Lamplighter, state: State, metric: WordMetric, k_max: int) -> _Scan:
    """
    Layers around `state` until one holds a longer element or k_max + 1
    layers are done. best[y] is the largest possible minimum norm over the
    geodesics from `state` to y, `state` itself included.
    """
    L = metric.length(state)
    cap = st.frontier_cap()
    seen = {state}
    parent: Dict[State, Tuple[State, int]] = {}
    best = {state: L}
    layer = [state]
    for n in range(1, k_max + 2):
        nxt: List[State] = []
        nxt_best: Dict[State, int] = {}
        for x in layer:
            for y, i in group.neighbor_states(x):
                if y in seen and y not in nxt_best:
                    continue
                if y not in seen:
                    seen.add(y)
                    parent[y] = (x, i)
                    nxt.append(y)
                    nxt_best[y] = -1
                nxt_best[y] = max(nxt_best[y], min(best[x], metric.length(y)))
            if len(seen) > cap:
                raise ResourceCapError(
                    f"depth search around {group.format_state(state)} exceeded {cap} elements at layer {n}",
                    cap_name='LAMPLIGHTER_CAP', cap=cap, lower_bound=n - 1,
                )
        if not nxt:
            # finite group exhausted without an increase
            return _Scan(n - 1, False, maximal=True)
        higher = [y for y in nxt if metric.length(y) > L]
        if higher:
            top = max(nxt_best[y] for y in higher)
            witness = min(higher, key=lambda y: (-nxt_best[y], _word(parent, y)))
            return _Scan(n - 1, True, _word(parent, witness), L - top, True)
        layer, best = nxt, nxt_best
    return _Scan(k_max, False, retreat=L - max(best.values()), retreat_exact=False)


def _report(group: Lamplighter, state: State, metric: WordMetric, k_max: int) -> DepthReport:
    if k_max < 0:
        raise RejectedInputError(f"k_max must be >= 0, got {k_max}")
    L = metric.length(state)
    try:
        scan = _scan(group, state, metric, k_max)
    except ResourceCapError as err:
        logger.warning("depth of %s: %s", group.format_state(state), err)
        scan = _Scan(err.lower_bound, False, partial=True)
    if scan.depth >= 1:
        dead_end = True
    elif scan.exact:
        dead_end = False
    elif scan.partial:
        dead_end = _no_increase(group, state, metric)
    else:
        dead_end = True
    report = DepthReport(
        element=group.format_state(state),
        word_length=L,
        depth=scan.depth,
        depth_exact=scan.exact,
        retreat_depth=scan.retreat if dead_end else None,
        retreat_exact=scan.retreat_exact if dead_end else False,
        witness=tuple(group.generators[i].label for i in scan.witness),
        dead_end=dead_end,
        maximal=scan.maximal,
        partial=scan.partial,
    )
    report.check()
    return report


def _no_increase(group: Lamplighter, state: State, metric: WordMetric) -> bool:
    L = metric.length(state)
    return all(metric.length(y) <= L for y, _ in group.neighbor_states(state))


def depth(g: WreathElement, k_max: int, backend: Optional[MetricBackend] = None,
          metric: Optional[WordMetric] = None) -> DepthReport:
    """
    Largest n <= k_max such that no multiplier of length <= n makes g
    longer. `depth_exact` is False when no increase was found by k_max,
    and the depth is then a lower bound.
    """
    return _report(g.group, g.state, _metric(g.group, backend, metric), k_max)


def is_dead_end(g: WreathElement, backend: Optional[MetricBackend] = None,
                metric: Optional[WordMetric] = None) -> bool:
    return _no_increase(g.group, g.state, _metric(g.group, backend, metric))


def retreat_depth(g: WreathElement, k_max: int, backend: Optional[MetricBackend] = None,
                  metric: Optional[WordMetric] = None) -> Tuple[int, bool]:
    """
    (k, exact): the least k such that a geodesic from g to the sphere of
    radius |g| + 1 stays outside the ball of radius |g| - k - 1. When no
    longer element lies within k_max + 1 steps, k is a lower bound.
    """
    metric = _metric(g.group, backend, metric)
    if not _no_increase(g.group, g.state, metric):
        raise RejectedInputError(f"{g} is not a dead end; retreat depth is defined for dead ends")
    report = _report(g.group, g.state, metric, k_max)
    if report.maximal:
        raise RejectedInputError(f"{g} has maximal length in a finite group; no longer element exists")
    if report.partial or report.retreat_depth is None:
        raise ResourceCapError(
            f"retreat search around {g} stopped early",
            cap_name='LAMPLIGHTER_CAP', cap=st.frontier_cap(), lower_bound=report.depth,
        )
    return report.retreat_depth, report.retreat_exact


# ####### PROFILES ########
#      ############
#         #####

def iter_shells(group: Lamplighter, radius: int) -> Iterator[Tuple[int, List[State]]]:
    """BFS shells of A wr B around the identity: (word length, states)."""
    if radius < 0:
        raise RejectedInputError(f"radius must be >= 0, got {radius}")
    cap = st.frontier_cap()
    layer = [group.identity_state]
    seen = set(layer)
    yield 0, layer
    for n in range(1, radius + 1):
        nxt = []
        for x in layer:
            for y, _ in group.neighbor_states(x):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > cap:
            raise ResourceCapError(
                f"ball of radius {n} in {group.name} exceeds {cap} elements",
                cap_name='LAMPLIGHTER_CAP', cap=cap, lower_bound=n - 1,
            )
        if not nxt:
            return
        layer = nxt
        yield n, layer


def word_length_bfs(group: Lamplighter, radius: int) -> Dict[State, int]:
    """Distances from the identity in the Cayley graph of A wr B, up to `radius`."""
    return {y: n for n, shell in iter_shells(group, radius) for y in shell}


def iter_depth_profile(group: Lamplighter, radius: int, k_max: int, backend: Optional[MetricBackend] = None,
                       sample: Optional[int] = None, seed: int = 0) -> Iterator[DepthReport]:
    """
    Depth reports shell by shell, elements ordered by their canonical id.
    With `sample`, at most that many elements per shell, drawn with `seed`.
    A ball that outgrows the frontier cap raises ResourceCapError after
    the reports of the completed shells.
    """
    metric = _metric(group, backend, None)
    rng = np.random.default_rng(seed)
    for n, shell in iter_shells(group, radius):
        for y in shell:
            metric.memo.setdefault(y, n)
        chosen = sorted(shell, key=group.format_state)
        if sample is not None and len(chosen) > sample:
            picks = sorted(rng.choice(len(chosen), size=sample, replace=False))
            chosen = [chosen[i] for i in picks]
        logger.debug("depth profile %s: shell %d, %d of %d elements", group.name, n, len(chosen), len(shell))
        for y in chosen:
            yield _report(group, y, metric, k_max)


def depth_profile(group: Lamplighter, radius: int, k_max: int, backend: Optional[MetricBackend] = None,
                  sample: Optional[int] = None, seed: int = 0) -> pd.DataFrame:
    rows, partial = [], False
    try:
        for report in iter_depth_profile(group, radius, k_max, backend, sample, seed):
            partial = partial or report.partial
            rows.append(report.as_row())
    except ResourceCapError as err:
        logger.warning("depth profile of %s cut short: %s", group.name, err)
        partial = True
    df = pd.DataFrame(rows, columns=PROFILE_COLUMNS)
    df.attrs['partial'] = partial
    return df


def profile_summary(df: pd.DataFrame) -> pd.DataFrame:
    """Per word-length shell: element count, dead ends and the largest depth found."""
    if df.empty:
        return pd.DataFrame(columns=['word_length', 'elements', 'dead_ends', 'max_depth'])
    dead = df['flags'].str.contains('dead_end')
    summary = df.assign(dead_end=dead).groupby('word_length').agg(
        elements=('element', 'size'),
        dead_ends=('dead_end', 'sum'),
        max_depth=('depth', 'max'),
    ).reset_index()
    return summary
