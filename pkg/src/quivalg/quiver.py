"""Finite quivers and their paths.

A quiver is a finite directed multigraph: a list of vertex labels together
with a list of named arrows between them.  Loops and parallel arrows are
allowed.  Declaration order is significant: vertices and arrows are indexed
by their position in the declaration, and every deterministic ordering in
this package (matrix rows, path enumeration, composite labels) derives from
those positions.

Paths are read left to right: in a path ``p1 p2 ... pk`` the target of each
arrow is the source of the next.  A path of length 0 is a trivial path and
carries the vertex it sits at.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union


@dataclass(frozen=True)
class Arrow:
    """A named arrow from ``source`` to ``target``."""

    name: str
    source: str
    target: str


ArrowLike = Union[Arrow, Sequence[str]]


@dataclass(frozen=True)
class Violation:
    """A single well-formedness failure found by :func:`validate`."""

    rule: str
    subject: str
    message: str

    def __str__(self) -> str:
        return self.message


class InvalidQuiverError(ValueError):
    """Raised when an operation requires a valid quiver but got violations."""

    def __init__(self, violations: Sequence[Violation]):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


@dataclass(frozen=True)
class Quiver:
    """A finite quiver with ordered vertices and ordered named arrows.

    Construction does not enforce well-formedness; :func:`validate` reports
    violations so that callers (for example a file parser) can surface them.
    All other operations assume a valid quiver.
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __init__(self, vertices: Iterable[str], arrows: Iterable[ArrowLike] = ()):
        object.__setattr__(self, "vertices", tuple(vertices))
        fixed: list[Arrow] = []
        for a in arrows:
            if not isinstance(a, Arrow):
                name, source, target = a
                a = Arrow(name, source, target)
            fixed.append(a)
        object.__setattr__(self, "arrows", tuple(fixed))

    @cached_property
    def vertex_index(self) -> Mapping[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def arrow_index(self) -> Mapping[str, int]:
        return {a.name: i for i, a in enumerate(self.arrows)}

    @cached_property
    def arrow_by_name(self) -> Mapping[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def arrows_from(self) -> Mapping[str, tuple[Arrow, ...]]:
        """Outgoing arrows per vertex, in declaration order."""
        out: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            out[a.source].append(a)
        return {v: tuple(lst) for v, lst in out.items()}

    def arrow(self, name: str) -> Arrow:
        return self.arrow_by_name[name]

    def out_degree(self, vertex: str) -> int:
        return len(self.arrows_from[vertex])

    def in_degree(self, vertex: str) -> int:
        return sum(1 for a in self.arrows if a.target == vertex)

    def is_path(self, path: "Path") -> bool:
        """True when ``path`` is a path of this quiver."""
        if path.start not in self.vertex_index:
            return False
        at = path.start
        for name in path.arrows:
            a = self.arrow_by_name.get(name)
            if a is None or a.source != at:
                return False
            at = a.target
        return True

    def path_target(self, path: "Path") -> str:
        """End vertex of a path of this quiver (the start vertex if trivial)."""
        if path.arrows:
            return self.arrow(path.arrows[-1]).target
        return path.start


@dataclass(frozen=True)
class Path:
    """A path in some quiver: a start vertex and the arrow names traversed.

    The start vertex makes trivial paths (length 0) well defined.  For a
    non-empty path the start vertex equals the source of the first arrow.
    """

    start: str
    arrows: tuple[str, ...] = field(default=())

    def __init__(self, start: str, arrows: Iterable[str] = ()):
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "arrows", tuple(arrows))

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows


def validate(q: Quiver) -> tuple[Violation, ...]:
    """Well-formedness report; an empty tuple means the quiver is valid.

    Checks: non-empty vertex list, distinct vertex labels, distinct arrow
    names, and arrow endpoints that are declared vertices.
    """
    violations: list[Violation] = []
    if not q.vertices:
        violations.append(
            Violation("empty-vertex-list", "", "quiver has no vertices")
        )
    seen_v: set[str] = set()
    for v in q.vertices:
        if v in seen_v:
            violations.append(
                Violation("duplicate-vertex-label", v, f"duplicate vertex label {v!r}")
            )
        seen_v.add(v)
    seen_a: set[str] = set()
    for a in q.arrows:
        if a.name in seen_a:
            violations.append(
                Violation("duplicate-arrow-id", a.name, f"duplicate arrow id {a.name!r}")
            )
        seen_a.add(a.name)
        for endpoint in (a.source, a.target):
            if endpoint not in seen_v:
                violations.append(
                    Violation(
                        "dangling-endpoint",
                        a.name,
                        f"arrow {a.name!r} endpoint {endpoint!r} is not a declared vertex",
                    )
                )
    return tuple(violations)


def require_valid(q: Quiver) -> Quiver:
    violations = validate(q)
    if violations:
        raise InvalidQuiverError(violations)
    return q


def adjacency_matrix(q: Quiver):
    """Adjacency matrix C of the quiver: C[i][j] counts arrows i -> j.

    Row and column order is vertex declaration order.  The (i, j) entry of
    C^k then counts paths of length k from vertex i to vertex j.
    """
    from .intmatrix import IntMatrix

    n = len(q.vertices)
    index = q.vertex_index
    rows = [[0] * n for _ in range(n)]
    for a in q.arrows:
        rows[index[a.source]][index[a.target]] += 1
    return IntMatrix(rows)


def enumerate_paths(q: Quiver, k: int) -> list[Path]:
    """All paths of length exactly ``k``, in a stable deterministic order.

    Order is lexicographic by (start vertex index, arrow index sequence).
    For k = 0 this is one trivial path per vertex, in declaration order.
    """
    if k < 0:
        raise ValueError("path length must be non-negative")
    if k == 0:
        return [Path(v) for v in q.vertices]
    out = q.arrows_from
    results: list[Path] = []
    chosen: list[str] = []

    def extend(at: str) -> None:
        if len(chosen) == k:
            results.append(Path(start, tuple(chosen)))
            return
        for a in out[at]:
            chosen.append(a.name)
            extend(a.target)
            chosen.pop()

    for start in q.vertices:
        extend(start)
    return results


def count_paths(q: Quiver, k: int) -> int:
    """Number of paths of length exactly ``k``, via the adjacency matrix.

    Equals the sum of all entries of C^k, and therefore also the length of
    :func:`enumerate_paths`.
    """
    from .intmatrix import power

    if k < 0:
        raise ValueError("path length must be non-negative")
    return power(adjacency_matrix(q), k).total()
