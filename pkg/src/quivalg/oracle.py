"""Slow, definition-shaped reference computations.

Everything in this module re-answers a question the fast modules already
answer, but by brute force straight from the definitions: explicit path
walking, explicit reachability, explicit cycle enumeration.  Nothing here
calls the fast implementations; the only shared code is the ``Quiver`` type
itself.  Tests compare the two sides.
"""

from __future__ import annotations

import random
from typing import Iterator, Union

from .quiver import Arrow, Path, Quiver


class CapExceeded:
    """Result marker: the enumeration passed the requested cap."""

    _instance: "CapExceeded | None" = None

    def __new__(cls) -> "CapExceeded":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "cap exceeded"


CAP_EXCEEDED = CapExceeded()


class ExclusiveConditionError(ValueError):
    """Raised when a computation requires the exclusive condition but it fails."""


def _out_arrows(q: Quiver) -> dict[str, list[Arrow]]:
    out: dict[str, list[Arrow]] = {v: [] for v in q.vertices}
    for a in q.arrows:
        out[a.source].append(a)
    return out


def _walks(q: Quiver, start: str, length: int) -> Iterator[tuple[str, ...]]:
    """All arrow-name sequences of exactly ``length`` starting at ``start``.

    Iterative so that the nesting depth never limits the walk length.
    """
    if length == 0:
        yield ()
        return
    out = _out_arrows(q)
    acc: list[str] = []
    stack: list[Iterator[Arrow]] = [iter(out[start])]
    while stack:
        arrow = next(stack[-1], None)
        if arrow is None:
            stack.pop()
            if acc:
                acc.pop()
            continue
        acc.append(arrow.name)
        if len(acc) == length:
            yield tuple(acc)
            acc.pop()
        else:
            stack.append(iter(out[arrow.target]))


def _paths_of_length(q: Quiver, length: int) -> list[Path]:
    return [
        Path(v, arrows) for v in q.vertices for arrows in _walks(q, v, length)
    ]


def _reachable(q: Quiver, start: str) -> set[str]:
    out = _out_arrows(q)
    seen = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for a in out[v]:
            if a.target not in seen:
                seen.add(a.target)
                frontier.append(a.target)
    return seen


def oracle_dimension(q: Quiver, cap: int = 1_000_000) -> Union[int, CapExceeded]:
    """Count all paths by plain enumeration, degree by degree.

    Starts from the trivial paths and extends every path by every outgoing
    arrow, keeping one endpoint entry per live path.  Stops at the first
    empty degree; returns ``CAP_EXCEEDED`` once the running total passes
    ``cap`` (which it must, eventually, on any quiver with a cycle).
    """
    out = _out_arrows(q)
    endpoints = list(q.vertices)
    total = 0
    while endpoints:
        total += len(endpoints)
        if total > cap:
            return CAP_EXCEEDED
        extended: list[str] = []
        for v in endpoints:
            for a in out[v]:
                extended.append(a.target)
                if total + len(extended) > cap:
                    return CAP_EXCEEDED
        endpoints = extended
    return total


def oracle_face_dimension_both_readings(q: Quiver) -> tuple[int, int]:
    """The two readings of the face dimension formula, by path enumeration.

    Returns ``(sum of squared per-endpoint path counts, sum of squared
    total path counts)``.  Only the second equals the face algebra's
    dimension; the first is what a literal entrywise squaring of the path
    count matrix would give.  Requires an acyclic quiver.
    """
    entrywise = 0
    total_reading = 0
    length = 0
    while True:
        counts: dict[tuple[str, str], int] = {}
        found = 0
        for v in q.vertices:
            for arrows in _walks(q, v, length):
                at = v
                for name in arrows:
                    at = q.arrow_by_name[name].target
                counts[(v, at)] = counts.get((v, at), 0) + 1
                found += 1
        if found == 0:
            return entrywise, total_reading
        if length > len(q.vertices):
            raise ValueError("quiver has a cycle; face dimension is infinite")
        entrywise += sum(c * c for c in counts.values())
        total_reading += found * found
        length += 1


def oracle_path_reversible(q: Quiver, max_len: int = 4) -> bool:
    """Check reversibility of every path of length up to ``max_len``.

    A path reverses iff its endpoints are mutually reachable, and arrows
    (length 1) already decide the property, so any bound >= 1 is exact.
    """
    reach = {v: _reachable(q, v) for v in q.vertices}
    for length in range(1, max_len + 1):
        for p in _paths_of_length(q, length):
            if p.start not in reach[q.path_target(p)]:
                return False
    return True


def _simple_cycles(q: Quiver) -> list[tuple[tuple[str, ...], tuple[str, ...]]]:
    """All simple cycles, once each, as (vertex tuple, arrow-name tuple).

    A simple cycle visits distinct vertices; each cycle is generated exactly
    once by rooting it at its least-index vertex.
    """
    out = _out_arrows(q)
    index = q.vertex_index
    cycles: list[tuple[tuple[str, ...], tuple[str, ...]]] = []

    def go(root: str, at: str, vertices: list[str], arrows: list[str]) -> None:
        for a in out[at]:
            if a.target == root:
                cycles.append((tuple(vertices), tuple(arrows + [a.name])))
            elif a.target not in vertices and index[a.target] > index[root]:
                vertices.append(a.target)
                arrows.append(a.name)
                go(root, a.target, vertices, arrows)
                arrows.pop()
                vertices.pop()

    for root in q.vertices:
        go(root, root, [root], [])
    return cycles


def oracle_max_chain(q: Quiver) -> int:
    """Longest chain of cycles, by enumerating cycles and their reachability.

    Requires the exclusive condition, checked definitionally here: distinct
    simple cycles must be pairwise vertex-disjoint.  Chains are sequences of
    distinct cycles each reaching the next by a path.
    """
    cycles = _simple_cycles(q)
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            if set(cycles[i][0]) & set(cycles[j][0]):
                raise ExclusiveConditionError(
                    "distinct cycles share a vertex: "
                    f"{cycles[i][1]} and {cycles[j][1]}"
                )
    if not cycles:
        return 0

    reach = {v: _reachable(q, v) for v in q.vertices}
    count = len(cycles)
    successors: list[list[int]] = [[] for _ in range(count)]
    for i in range(count):
        for j in range(count):
            if i == j:
                continue
            if any(w in reach[v] for v in cycles[i][0] for w in cycles[j][0]):
                successors[i].append(j)

    # disjointness makes reachability between cycles a strict partial order,
    # so plain memoised descent terminates
    best: dict[int, int] = {}

    def longest_from(i: int) -> int:
        if i not in best:
            best[i] = 1 + max(
                (longest_from(j) for j in successors[i]), default=0
            )
        return best[i]

    return max(longest_from(i) for i in range(count))


def random_quiver(
    rng: random.Random, max_vertices: int = 5, max_arrows: int = 8
) -> Quiver:
    """A small random quiver: uniform vertex count in [1, max_vertices],
    uniform arrow count in [0, max_arrows], endpoints uniform."""
    n = rng.randint(1, max_vertices)
    m = rng.randint(0, max_arrows)
    vertices = tuple(f"v{i + 1}" for i in range(n))
    arrows = tuple(
        Arrow(f"a{j + 1}", rng.choice(vertices), rng.choice(vertices))
        for j in range(m)
    )
    return Quiver(vertices, arrows)
