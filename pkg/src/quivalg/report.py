"""Exact algebraic reports for path algebras and face algebras.

For a finite quiver Q the path algebra kQ has the paths of Q as a basis, so
every algebraic property reported here is decided exactly from the graph:

* finite dimensional  iff  Q is acyclic; the dimension is the path count;
* the Hilbert series is (I - Ct)^{-1} = I + Ct + C^2 t^2 + ... for C the
  adjacency matrix;
* GK dimension is finite iff the exclusive condition holds, and then equals
  the longest chain of cycles (0 when Q is acyclic);
* right Noetherian iff no cycle is source-like, left Noetherian iff no
  cycle is sink-like;
* prime iff Q is strongly connected;
* semiprime iff Q is path reversible;
* hereditary always; global dimension 0 exactly when Q has no arrows;
* Koszul always (the relations are monomial quadratic).

The face algebra H(Q) is analysed through the Kronecker square: H(Q) is the
path algebra of the square, so the same dictionary applies to the square.
Independent shortcuts exist for most properties (dimension, GK dimension,
Noetherianity, semiprimeness, global dimension transfer directly from Q) and
are cross-checked here; a mismatch can only mean a bug, so it raises.  The
one deliberate exception is primeness: strong connectivity of Q with a cycle
does not always force strong connectivity of the square (a plain 2-cycle is
the smallest counterexample), so the report trusts the square itself.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .graph import (
    classify_cycles,
    is_path_reversible,
    is_strongly_connected,
)
from .infinity import INFINITE, Extent, Infinite, is_finite
from .intmatrix import IntMatrix, kron, multiply, nilpotency_index
from .kronecker import kronecker_square
from .quiver import Quiver, adjacency_matrix

PATH_ALGEBRA = "path-algebra"
FACE_ALGEBRA = "face-algebra"


class InternalInconsistencyError(RuntimeError):
    """A theorem-level cross-check failed; this signals an implementation bug."""


@dataclass(frozen=True)
class AlgebraReport:
    """Exact answers for one algebra (path algebra of Q, or face algebra of Q)."""

    algebra: str
    finite_dimensional: bool
    dimension: Extent
    gk_dimension: Extent
    noetherian: bool
    noetherian_left: bool
    noetherian_right: bool
    prime: bool
    semiprime: bool
    global_dimension: int
    hereditary: bool
    koszul: bool


@dataclass(frozen=True)
class HilbertSeriesTruncation:
    """Matrix Hilbert series coefficients up to ``degree`` inclusive.

    ``coefficients[k]`` is C^k for the path algebra and C^k (x) C^k for the
    face algebra: entry (i, j) counts the degree-k basis elements running
    from vertex i to vertex j.
    """

    degree: int
    coefficients: tuple[IntMatrix, ...]


def dimension(q: Quiver) -> Extent:
    """Total number of paths of ``q``; infinite exactly when ``q`` has a cycle.

    The adjacency matrix C is nilpotent iff the quiver is acyclic, and then
    the sum I + C + C^2 + ... terminates at the nilpotency index.
    """
    c = adjacency_matrix(q)
    steps = nilpotency_index(c)
    if steps is None:
        return INFINITE
    total = len(q.vertices)
    p = c
    for _ in range(1, steps):
        total += p.total()
        p = multiply(p, c)
    return total


def face_dimension(q: Quiver) -> Extent:
    """Total dimension of the face algebra: the sum over k of |Q_k|^2.

    Each graded piece of the face algebra has one basis element per ordered
    pair of equal-length paths, so its dimension is the square of the path
    count, not the sum of squared matrix entries.
    """
    c = adjacency_matrix(q)
    steps = nilpotency_index(c)
    if steps is None:
        return INFINITE
    total = len(q.vertices) ** 2
    p = c
    for _ in range(1, steps):
        total += p.total() ** 2
        p = multiply(p, c)
    return total


def hilbert_series(q: Quiver, degree: int) -> HilbertSeriesTruncation:
    """Truncated matrix Hilbert series of the path algebra: C^0, ..., C^degree."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    c = adjacency_matrix(q)
    coeffs = [IntMatrix.identity(c.dimension)]
    for _ in range(degree):
        coeffs.append(multiply(coeffs[-1], c))
    return HilbertSeriesTruncation(degree=degree, coefficients=tuple(coeffs))


def face_hilbert_series(q: Quiver, degree: int) -> HilbertSeriesTruncation:
    """Truncated matrix Hilbert series of the face algebra: (C^k (x) C^k) per degree.

    Coincides with the Hilbert series of the Kronecker square because the
    square's adjacency matrix is C (x) C and powers of a Kronecker product
    are Kronecker products of powers.
    """
    base = hilbert_series(q, degree)
    return HilbertSeriesTruncation(
        degree=degree,
        coefficients=tuple(kron(m, m) for m in base.coefficients),
    )


def analyze_path_algebra(q: Quiver) -> AlgebraReport:
    """Full report for the path algebra kQ, decided from the graph of Q."""
    cycles = classify_cycles(q)
    dim = dimension(q)
    acyclic = not cycles.has_cycle
    if acyclic != is_finite(dim):
        raise InternalInconsistencyError(
            "cycle detection and nilpotency disagree about finiteness"
        )
    gk: Extent
    if cycles.exclusive_condition:
        gk = cycles.max_chain_length
    else:
        gk = INFINITE
    noeth_right = not cycles.has_source_cycle
    noeth_left = not cycles.has_sink_cycle
    return AlgebraReport(
        algebra=PATH_ALGEBRA,
        finite_dimensional=acyclic,
        dimension=dim,
        gk_dimension=gk,
        noetherian=noeth_left and noeth_right,
        noetherian_left=noeth_left,
        noetherian_right=noeth_right,
        prime=is_strongly_connected(q),
        semiprime=is_path_reversible(q),
        global_dimension=0 if not q.arrows else 1,
        hereditary=True,
        koszul=True,
    )


def analyze_face_algebra(q: Quiver) -> AlgebraReport:
    """Full report for the face algebra H(Q), via the Kronecker square.

    The square is analysed directly with :func:`analyze_path_algebra`; the
    transfer shortcuts from Q are then used as cross-checks.  Any mismatch
    other than primeness is an internal error.  Primeness is intentionally
    not cross-checked: the direct answer from the square is authoritative.
    """
    square = kronecker_square(q).square
    face = replace(analyze_path_algebra(square), algebra=FACE_ALGEBRA)
    base = analyze_path_algebra(q)

    def mismatch(what: str) -> InternalInconsistencyError:
        return InternalInconsistencyError(
            f"face algebra report disagrees with the transfer rule for {what}"
        )

    if face.finite_dimensional != base.finite_dimensional:
        raise mismatch("finite dimensionality")
    if base.finite_dimensional and face.dimension != face_dimension(q):
        raise mismatch("dimension")
    expected_gk: Extent
    if isinstance(base.gk_dimension, Infinite):
        expected_gk = INFINITE
    elif base.gk_dimension == 0:
        expected_gk = 0
    else:
        expected_gk = 2 * base.gk_dimension - 1
    if face.gk_dimension != expected_gk:
        raise mismatch("GK dimension")
    if (
        face.noetherian_left != base.noetherian_left
        or face.noetherian_right != base.noetherian_right
        or face.noetherian != base.noetherian
    ):
        raise mismatch("noetherianity")
    if face.semiprime != base.semiprime:
        raise mismatch("semiprimeness")
    if face.global_dimension != base.global_dimension:
        raise mismatch("global dimension")
    return face
