"""The Kronecker square of a quiver.

The Kronecker square of Q has one vertex ``(i,j)`` for every ordered pair of
vertices of Q and one arrow ``(p,q)`` for every ordered pair of arrows, with
``(p,q)`` running from ``(s(p),s(q))`` to ``(t(p),t(q))``.  Its adjacency
matrix is the Kronecker product of the adjacency matrix of Q with itself,
and its paths of length k are exactly the ordered pairs of length-k paths
of Q.  That pairing is the whole point: it identifies the face algebra of Q
with the path algebra of the square.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .quiver import Arrow, Path, Quiver


def _pair_label(a: str, b: str) -> str:
    return f"({a},{b})"


@dataclass(frozen=True)
class KroneckerSquare:
    """A quiver together with its Kronecker square and the pairing maps.

    Vertex order of the square is lexicographic in the base vertex order, so
    the flat position of ``(i,j)`` is ``index(i) * n + index(j)``, matching
    the flat index convention of the matrix Kronecker product.  Arrow order
    is lexicographic in the base arrow order likewise.
    """

    base: Quiver
    square: Quiver

    @cached_property
    def vertex_pair_of(self) -> Mapping[str, tuple[str, str]]:
        n = len(self.base.vertices)
        out = {}
        for i, v in enumerate(self.base.vertices):
            for j, w in enumerate(self.base.vertices):
                out[self.square.vertices[i * n + j]] = (v, w)
        return out

    @cached_property
    def arrow_pair_of(self) -> Mapping[str, tuple[str, str]]:
        m = len(self.base.arrows)
        out = {}
        for i, p in enumerate(self.base.arrows):
            for j, q in enumerate(self.base.arrows):
                out[self.square.arrows[i * m + j].name] = (p.name, q.name)
        return out

    def vertex_label(self, v: str, w: str) -> str:
        return _pair_label(v, w)

    def arrow_label(self, p: str, q: str) -> str:
        return _pair_label(p, q)


def kronecker_square(q: Quiver) -> KroneckerSquare:
    """Construct the Kronecker square of ``q``.

    Composite labels are ``(i,j)`` and ``(p,q)`` built verbatim from the base
    labels, so the construction round-trips through the text format whenever
    the base labels do.
    """
    vertices = tuple(
        _pair_label(v, w) for v in q.vertices for w in q.vertices
    )
    arrows = tuple(
        Arrow(
            _pair_label(p.name, q2.name),
            _pair_label(p.source, q2.source),
            _pair_label(p.target, q2.target),
        )
        for p in q.arrows
        for q2 in q.arrows
    )
    return KroneckerSquare(base=q, square=Quiver(vertices, arrows))


def pair_to_path(ks: KroneckerSquare, a: Path, b: Path) -> Path:
    """The square's path corresponding to an ordered pair of equal-length paths."""
    if a.length != b.length:
        raise ValueError(
            f"paths have different lengths ({a.length} and {b.length})"
        )
    for p in (a, b):
        if not ks.base.is_path(p):
            raise ValueError(f"{p!r} is not a path of the base quiver")
    return Path(
        _pair_label(a.start, b.start),
        tuple(_pair_label(x, y) for x, y in zip(a.arrows, b.arrows)),
    )


def path_to_pair(ks: KroneckerSquare, h: Path) -> tuple[Path, Path]:
    """Inverse of :func:`pair_to_path`."""
    if not ks.square.is_path(h):
        raise ValueError(f"{h!r} is not a path of the square")
    va, vb = ks.vertex_pair_of[h.start]
    firsts = []
    seconds = []
    for name in h.arrows:
        p, q = ks.arrow_pair_of[name]
        firsts.append(p)
        seconds.append(q)
    return Path(va, tuple(firsts)), Path(vb, tuple(seconds))
