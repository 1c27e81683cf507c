"""Graph-theoretic analysis of quivers.

Everything the algebra reports need reduces to a handful of graph facts:
the strongly connected components, how cycles sit inside them, and four
connectivity notions of increasing strength (connected, strongly connected,
pairwise strongly connected, path reversible).

The cycle vocabulary:

* a cycle is *source-like* if some arrow leaves one of its vertices without
  belonging to the cycle's component's cycle structure, i.e. a vertex on a
  cycle has out-degree at least 2; *sink-like* dually with in-degree;
* all cycles are *isolated* when neither happens;
* the *exclusive condition* holds when distinct cycles share no vertex,
  equivalently every nontrivial strongly connected component is a single
  simple cycle;
* a *chain of cycles* of length n is a sequence of n distinct cycles with a
  path from each to the next; under the exclusive condition the longest
  chain is finite and is computed on the condensation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .infinity import INFINITE, Extent
from .intmatrix import BoolMatrix, bool_multiply, support
from .kronecker import kronecker_square
from .quiver import Quiver, adjacency_matrix


@dataclass(frozen=True)
class SccDecomposition:
    """Strongly connected components of a quiver, deterministically ordered.

    Components are numbered by their least member's vertex index, and each
    component tuple lists its vertices in declaration order.  ``condensation``
    gives, per component, the sorted tuple of distinct successor components
    (self-loops excluded).  A component is *nontrivial* when at least one
    arrow has both endpoints inside it; a nontrivial component is exactly one
    that carries a cycle.
    """

    components: tuple[tuple[str, ...], ...]
    internal_arrow_counts: tuple[int, ...]
    condensation: tuple[tuple[int, ...], ...]

    @cached_property
    def component_of(self) -> Mapping[str, int]:
        out = {}
        for idx, comp in enumerate(self.components):
            for v in comp:
                out[v] = idx
        return out

    def is_nontrivial(self, index: int) -> bool:
        return self.internal_arrow_counts[index] >= 1

    @property
    def nontrivial_indices(self) -> tuple[int, ...]:
        return tuple(
            i for i in range(len(self.components)) if self.is_nontrivial(i)
        )


def scc(q: Quiver) -> SccDecomposition:
    """Tarjan's algorithm, iterative so deep quivers cannot overflow the stack."""
    n = len(q.vertices)
    index_of = q.vertex_index
    adj: list[list[int]] = [[] for _ in range(n)]
    for a in q.arrows:
        adj[index_of[a.source]].append(index_of[a.target])

    order = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    raw_components: list[list[int]] = []
    counter = 0

    for root in range(n):
        if order[root] != -1:
            continue
        work: list[list[int]] = [[root, 0]]
        while work:
            v, child_pos = work[-1]
            if child_pos == 0:
                order[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while child_pos < len(adj[v]):
                w = adj[v][child_pos]
                child_pos += 1
                if order[w] == -1:
                    work[-1][1] = child_pos
                    work.append([w, 0])
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], order[w])
            if advanced:
                continue
            if low[v] == order[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                raw_components.append(comp)
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])

    raw_components.sort(key=min)
    comp_index = [0] * n
    for idx, comp in enumerate(raw_components):
        for v in comp:
            comp_index[v] = idx

    internal = [0] * len(raw_components)
    successors: list[set[int]] = [set() for _ in raw_components]
    for a in q.arrows:
        cs = comp_index[index_of[a.source]]
        ct = comp_index[index_of[a.target]]
        if cs == ct:
            internal[cs] += 1
        else:
            successors[cs].add(ct)

    return SccDecomposition(
        components=tuple(
            tuple(q.vertices[v] for v in sorted(comp)) for comp in raw_components
        ),
        internal_arrow_counts=tuple(internal),
        condensation=tuple(tuple(sorted(s)) for s in successors),
    )


@dataclass(frozen=True)
class CycleClassification:
    """The cycle-related facts the algebra reports are built from.

    ``max_chain_length`` is the length of the longest chain of cycles when
    the exclusive condition holds (0 when there is no cycle at all); when the
    exclusive condition fails the number of paths grows too fast for chains
    to measure anything and the field is the infinite sentinel.
    """

    has_cycle: bool
    has_source_cycle: bool
    has_sink_cycle: bool
    all_cycles_isolated: bool
    exclusive_condition: bool
    max_chain_length: Extent


def classify_cycles(q: Quiver) -> CycleClassification:
    """Classify the cycles of ``q`` via its strongly connected components.

    The reductions used, each an exact restatement of the definitions:

    * a cycle through v exists iff v's component is nontrivial;
    * some cycle is source-like iff some vertex of a nontrivial component
      has total out-degree >= 2, sink-like dually;
    * the exclusive condition holds iff every nontrivial component is a
      single simple cycle: as many internal arrows as vertices, and every
      member has exactly one internal outgoing and one internal incoming
      arrow;
    * the longest chain of cycles is the maximum, over directed paths in
      the condensation, of the number of nontrivial components visited.
    """
    decomposition = scc(q)
    index_of = q.vertex_index
    comp_of = decomposition.component_of

    nontrivial = [decomposition.is_nontrivial(i) for i in range(len(decomposition.components))]
    has_cycle = any(nontrivial)

    out_deg = {v: 0 for v in q.vertices}
    in_deg = {v: 0 for v in q.vertices}
    internal_out = {v: 0 for v in q.vertices}
    internal_in = {v: 0 for v in q.vertices}
    for a in q.arrows:
        out_deg[a.source] += 1
        in_deg[a.target] += 1
        if comp_of[a.source] == comp_of[a.target]:
            internal_out[a.source] += 1
            internal_in[a.target] += 1

    has_source_cycle = False
    has_sink_cycle = False
    exclusive = True
    for idx, comp in enumerate(decomposition.components):
        if not nontrivial[idx]:
            continue
        if decomposition.internal_arrow_counts[idx] != len(comp):
            exclusive = False
        for v in comp:
            if out_deg[v] >= 2:
                has_source_cycle = True
            if in_deg[v] >= 2:
                has_sink_cycle = True
            if internal_out[v] != 1 or internal_in[v] != 1:
                exclusive = False

    max_chain: Extent
    if not exclusive:
        max_chain = INFINITE
    elif not has_cycle:
        max_chain = 0
    else:
        # longest condensation path weighted by nontrivial components,
        # computed in reverse topological order
        order = _topological_order(decomposition.condensation)
        best = [0] * len(decomposition.components)
        for c in reversed(order):
            succ_best = max(
                (best[d] for d in decomposition.condensation[c]), default=0
            )
            best[c] = (1 if nontrivial[c] else 0) + succ_best
        max_chain = max(best)

    return CycleClassification(
        has_cycle=has_cycle,
        has_source_cycle=has_source_cycle,
        has_sink_cycle=has_sink_cycle,
        all_cycles_isolated=not has_source_cycle and not has_sink_cycle,
        exclusive_condition=exclusive,
        max_chain_length=max_chain,
    )


def _topological_order(successors: tuple[tuple[int, ...], ...]) -> list[int]:
    n = len(successors)
    indegree = [0] * n
    for succ in successors:
        for t in succ:
            indegree[t] += 1
    frontier = [i for i in range(n) if indegree[i] == 0]
    out: list[int] = []
    while frontier:
        v = frontier.pop()
        out.append(v)
        for t in successors[v]:
            indegree[t] -= 1
            if indegree[t] == 0:
                frontier.append(t)
    return out


def is_connected(q: Quiver) -> bool:
    """Connectivity of the underlying undirected graph."""
    if not q.vertices:
        return True
    neighbours: dict[str, set[str]] = {v: set() for v in q.vertices}
    for a in q.arrows:
        neighbours[a.source].add(a.target)
        neighbours[a.target].add(a.source)
    seen = {q.vertices[0]}
    frontier = [q.vertices[0]]
    while frontier:
        v = frontier.pop()
        for w in neighbours[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == len(q.vertices)


def is_strongly_connected(q: Quiver) -> bool:
    return len(scc(q).components) == 1


def is_pairwise_strongly_connected(q: Quiver) -> bool:
    """Common-length connectivity between all ordered vertex pairs.

    Decided through the Kronecker square: the condition holds exactly when
    the square is strongly connected.  The definitional check by boolean
    adjacency powers is kept alongside (see
    :func:`is_pairwise_strongly_connected_definitional`); the two can differ
    on quivers like a plain 2-cycle, where same-length paths exist between
    the genuinely distinct pairs but the square still splits apart.
    """
    return is_strongly_connected(kronecker_square(q).square)


def is_pairwise_strongly_connected_definitional(
    q: Quiver, max_iterations: int = 1_000_000
) -> bool:
    """Literal reading: for every i != j and i' != j' there are equal-length
    paths i -> j and i' -> j'.

    The boolean supports B_k of the adjacency powers are eventually periodic,
    so iterating until a repeat visits every distinct support; the quantifier
    then ranges over that finite set.  ``max_iterations`` only guards against
    a runaway loop and raises a diagnostic if ever hit.
    """
    n = len(q.vertices)
    b1 = support(adjacency_matrix(q))
    seen: set[BoolMatrix] = set()
    b = b1
    while b not in seen:
        if len(seen) >= max_iterations:
            raise RuntimeError(
                "boolean power iteration did not close after "
                f"{max_iterations} steps on a quiver with {n} vertices"
            )
        seen.add(b)
        b = bool_multiply(b, b1)

    pairs = [
        (i, j) for i in range(n) for j in range(n) if i != j
    ]
    for i, j in pairs:
        for i2, j2 in pairs:
            if not any(m.rows[i][j] and m.rows[i2][j2] for m in seen):
                return False
    return True


def is_path_reversible(q: Quiver) -> bool:
    """Whenever there is a path u -> v there is also a path v -> u.

    Equivalent to every arrow having both endpoints in one strongly
    connected component: paths reverse iff their arrows do.
    """
    decomposition = scc(q)
    comp_of = decomposition.component_of
    return all(comp_of[a.source] == comp_of[a.target] for a in q.arrows)
