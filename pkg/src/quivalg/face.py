"""The face algebra of a quiver, symbolically and exactly.

The face algebra H(Q) has one basis element ``x(a, b)`` for every ordered
pair of equal-length paths of Q.  The whole multiplication table is one
rule:

    x(a, b) * x(c, d) = x(ac, bd)   if t(a) = s(c) and t(b) = s(d),
                        0           otherwise,

and the unit is the sum of all x(e_i, e_j) over ordered vertex pairs.  The
three families of defining relations (orthogonality of the degree-0
elements, compatibility of arrows with them, and the quadratic arrow rule)
are consequences, and :func:`verify_presentation` re-derives all of them in
bounded degree instead of trusting the shortcut.

Pairing each x(a, b) with the path (a, b) of the Kronecker square is an
isomorphism onto the square's path algebra; :func:`phi` realises it and the
verifier checks bijectivity and multiplicativity degree by degree.

Coefficients are exact rationals.  The structure constants are all 0 or 1,
so nothing here depends on the ground field.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .kronecker import KroneckerSquare, kronecker_square, pair_to_path
from .quiver import Path, Quiver, count_paths, enumerate_paths

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class FaceBasis:
    """Basis element x(left, right): an ordered pair of equal-length paths."""

    left: Path
    right: Path

    def __post_init__(self) -> None:
        if self.left.length != self.right.length:
            raise ValueError(
                "face basis needs equal-length paths, got lengths "
                f"{self.left.length} and {self.right.length}"
            )

    @property
    def degree(self) -> int:
        return self.left.length

    def __str__(self) -> str:
        return f"x({_path_str(self.left)}, {_path_str(self.right)})"


def _path_str(p: Path) -> str:
    if p.is_trivial:
        return f"e:{p.start}"
    return ".".join(p.arrows)


def _term_key(b: FaceBasis) -> tuple:
    return (b.degree, b.left.start, b.left.arrows, b.right.start, b.right.arrows)


class FaceElement:
    """A finite rational linear combination of face basis elements.

    Terms are kept in a canonical order (degree, then lexicographic on the
    two path encodings) with no zero coefficients, so equal elements compare
    and hash equal.
    """

    __slots__ = ("quiver", "terms")

    quiver: Quiver
    terms: tuple[tuple[FaceBasis, Fraction], ...]

    def __init__(
        self,
        quiver: Quiver,
        terms: Union[Mapping[FaceBasis, Scalar], Iterable[tuple[FaceBasis, Scalar]]] = (),
    ):
        acc: dict[FaceBasis, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for basis, coeff in items:
            c = Fraction(coeff)
            if c == 0:
                continue
            acc[basis] = acc.get(basis, Fraction(0)) + c
        cleaned = [(b, c) for b, c in acc.items() if c != 0]
        cleaned.sort(key=lambda item: _term_key(item[0]))
        for basis, _ in cleaned:
            if not (quiver.is_path(basis.left) and quiver.is_path(basis.right)):
                raise ValueError(f"{basis} is not over the given quiver")
        object.__setattr__(self, "quiver", quiver)
        object.__setattr__(self, "terms", tuple(cleaned))

    def __setattr__(self, name, value):
        raise AttributeError("FaceElement is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, basis: FaceBasis) -> Fraction:
        for b, c in self.terms:
            if b == basis:
                return c
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FaceElement)
            and self.quiver == other.quiver
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.quiver, self.terms))

    def __add__(self, other: "FaceElement") -> "FaceElement":
        self._require_same_quiver(other)
        return FaceElement(self.quiver, list(self.terms) + list(other.terms))

    def __neg__(self) -> "FaceElement":
        return FaceElement(self.quiver, [(b, -c) for b, c in self.terms])

    def __sub__(self, other: "FaceElement") -> "FaceElement":
        return self + (-other)

    def __rmul__(self, scalar: Scalar) -> "FaceElement":
        c = Fraction(scalar)
        return FaceElement(self.quiver, [(b, c * x) for b, x in self.terms])

    def __mul__(self, other: "FaceElement") -> "FaceElement":
        return face_multiply(self, other)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for b, c in self.terms:
            parts.append(str(b) if c == 1 else f"{c}*{b}")
        return " + ".join(parts)

    def _require_same_quiver(self, other: "FaceElement") -> None:
        if self.quiver != other.quiver:
            raise ValueError("elements are over different quivers")


def basis_element(q: Quiver, a: Path, b: Path) -> FaceElement:
    return FaceElement(q, [(FaceBasis(a, b), 1)])


def face_basis(q: Quiver, degree: int) -> list[FaceBasis]:
    """All degree-``degree`` basis elements, in canonical order."""
    paths = enumerate_paths(q, degree)
    return [FaceBasis(a, b) for a in paths for b in paths]


def face_unit(q: Quiver) -> FaceElement:
    """The unit: the sum of x(e_i, e_j) over all ordered vertex pairs."""
    return FaceElement(
        q,
        [
            (FaceBasis(Path(v), Path(w)), 1)
            for v in q.vertices
            for w in q.vertices
        ],
    )


def _concat(q: Quiver, a: Path, c: Path) -> Optional[Path]:
    """ac when t(a) = s(c), else None."""
    if q.path_target(a) != c.start:
        return None
    return Path(a.start, a.arrows + c.arrows)


def face_multiply(x: FaceElement, y: FaceElement) -> FaceElement:
    """Bilinear extension of the single product rule."""
    x._require_same_quiver(y)
    q = x.quiver
    acc: dict[FaceBasis, Fraction] = {}
    for b1, c1 in x.terms:
        for b2, c2 in y.terms:
            left = _concat(q, b1.left, b2.left)
            if left is None:
                continue
            right = _concat(q, b1.right, b2.right)
            if right is None:
                continue
            key = FaceBasis(left, right)
            acc[key] = acc.get(key, Fraction(0)) + c1 * c2
    return FaceElement(q, acc)


class PathAlgebraElement:
    """A rational linear combination of paths, multiplied by concatenation."""

    __slots__ = ("quiver", "terms")

    quiver: Quiver
    terms: tuple[tuple[Path, Fraction], ...]

    def __init__(
        self,
        quiver: Quiver,
        terms: Union[Mapping[Path, Scalar], Iterable[tuple[Path, Scalar]]] = (),
    ):
        acc: dict[Path, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for path, coeff in items:
            c = Fraction(coeff)
            if c == 0:
                continue
            acc[path] = acc.get(path, Fraction(0)) + c
        cleaned = [(p, c) for p, c in acc.items() if c != 0]
        cleaned.sort(key=lambda item: (item[0].length, item[0].start, item[0].arrows))
        for path, _ in cleaned:
            if not quiver.is_path(path):
                raise ValueError(f"{path!r} is not a path of the given quiver")
        object.__setattr__(self, "quiver", quiver)
        object.__setattr__(self, "terms", tuple(cleaned))

    def __setattr__(self, name, value):
        raise AttributeError("PathAlgebraElement is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PathAlgebraElement)
            and self.quiver == other.quiver
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.quiver, self.terms))

    def __add__(self, other: "PathAlgebraElement") -> "PathAlgebraElement":
        if self.quiver != other.quiver:
            raise ValueError("elements are over different quivers")
        return PathAlgebraElement(self.quiver, list(self.terms) + list(other.terms))

    def __mul__(self, other: "PathAlgebraElement") -> "PathAlgebraElement":
        if self.quiver != other.quiver:
            raise ValueError("elements are over different quivers")
        acc: dict[Path, Fraction] = {}
        for p1, c1 in self.terms:
            for p2, c2 in other.terms:
                joined = _concat(self.quiver, p1, p2)
                if joined is None:
                    continue
                acc[joined] = acc.get(joined, Fraction(0)) + c1 * c2
        return PathAlgebraElement(self.quiver, acc)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            _path_str(p) if c == 1 else f"{c}*{_path_str(p)}" for p, c in self.terms
        )


def phi(x: FaceElement, square: Optional[KroneckerSquare] = None) -> PathAlgebraElement:
    """The pairing isomorphism: x(a, b) goes to the square's path (a, b)."""
    ks = square if square is not None else kronecker_square(x.quiver)
    if ks.base != x.quiver:
        raise ValueError("element is not over the square's base quiver")
    return PathAlgebraElement(
        ks.square,
        [(pair_to_path(ks, b.left, b.right), c) for b, c in x.terms],
    )


@dataclass(frozen=True)
class PresentationCheck:
    """Outcome of one family of identities, with the instance count tried."""

    name: str
    ok: bool
    instances: int
    counterexample: Optional[str] = None


@dataclass(frozen=True)
class PresentationReport:
    """Everything :func:`verify_presentation` established, failures included.

    ``graded_dimensions[k]`` is the number of degree-k basis elements found;
    a failed identity shows up as a check with ``ok=False`` carrying its
    first counterexample, never as an exception.
    """

    ok: bool
    max_degree: int
    graded_dimensions: tuple[int, ...]
    checks: tuple[PresentationCheck, ...]

    @property
    def failure(self) -> Optional[str]:
        for check in self.checks:
            if not check.ok:
                return f"{check.name}: {check.counterexample}"
        return None


def verify_presentation(q: Quiver, max_degree: int = 3) -> PresentationReport:
    """Machine-check the face algebra's presentation up to ``max_degree``.

    Verifies, exhaustively in bounded degree: the three defining relation
    families, the unit law, associativity on all basis triples of total
    degree at most ``max_degree``, the graded dimension count |Q_k|^2, and
    that the pairing with the square's paths is a degree-preserving bijection
    compatible with multiplication on all basis pairs of total degree at
    most ``max_degree``.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")

    ks = kronecker_square(q)
    checks: list[PresentationCheck] = []

    # Flat indexed basis up to max_degree, with a definitional product table.
    by_degree: list[list[FaceBasis]] = [
        face_basis(q, k) for k in range(max_degree + 1)
    ]
    flat: list[FaceBasis] = [b for bs in by_degree for b in bs]
    index_of = {b: i for i, b in enumerate(flat)}
    degree = [b.degree for b in flat]
    source_pair = [(b.left.start, b.right.start) for b in flat]
    target_pair = [
        (q.path_target(b.left), q.path_target(b.right)) for b in flat
    ]
    starts: list[int] = []
    offset = 0
    for k in range(max_degree + 1):
        starts.append(offset)
        offset += len(by_degree[k])

    def block(k: int) -> range:
        return range(starts[k], starts[k] + len(by_degree[k]))

    # table[(i, j)] is the index of the product basis element, or -1 for zero;
    # only pairs of total degree <= max_degree are tabulated.  Iteration goes
    # by degree blocks so the pair count stays proportional to the table size.
    table: dict[tuple[int, int], int] = {}
    for d1 in range(max_degree + 1):
        for d2 in range(max_degree + 1 - d1):
            for i in block(d1):
                bi = flat[i]
                ti = target_pair[i]
                for j in block(d2):
                    if ti != source_pair[j]:
                        table[(i, j)] = -1
                        continue
                    bj = flat[j]
                    product = FaceBasis(
                        Path(bi.left.start, bi.left.arrows + bj.left.arrows),
                        Path(bi.right.start, bi.right.arrows + bj.right.arrows),
                    )
                    table[(i, j)] = index_of[product]

    singles = [FaceElement(q, [(b, 1)]) for b in flat]

    def run(name: str, iterator) -> None:
        count = 0
        failure = None
        for described, holds in iterator:
            count += 1
            if not holds and failure is None:
                failure = described
        checks.append(
            PresentationCheck(
                name=name, ok=failure is None, instances=count, counterexample=failure
            )
        )

    zero = FaceElement(q)
    trivial = {v: Path(v) for v in q.vertices}

    def vertex_orthogonality():
        for v1 in q.vertices:
            for w1 in q.vertices:
                x1 = basis_element(q, trivial[v1], trivial[w1])
                for v2 in q.vertices:
                    for w2 in q.vertices:
                        x2 = basis_element(q, trivial[v2], trivial[w2])
                        expected = x1 if (v1 == v2 and w1 == w2) else zero
                        yield (
                            f"x(e:{v1}, e:{w1}) * x(e:{v2}, e:{w2})",
                            face_multiply(x1, x2) == expected,
                        )

    def arrow_compatibility():
        for p in q.arrows:
            for r in q.arrows:
                x = basis_element(q, Path(p.source, (p.name,)), Path(r.source, (r.name,)))
                left_unit = basis_element(q, trivial[p.source], trivial[r.source])
                right_unit = basis_element(q, trivial[p.target], trivial[r.target])
                yield (
                    f"x(e:{p.source}, e:{r.source}) * x({p.name}, {r.name})",
                    face_multiply(left_unit, x) == x,
                )
                yield (
                    f"x({p.name}, {r.name}) * x(e:{p.target}, e:{r.target})",
                    face_multiply(x, right_unit) == x,
                )

    def arrow_products():
        for p1 in q.arrows:
            for r1 in q.arrows:
                x1 = basis_element(
                    q, Path(p1.source, (p1.name,)), Path(r1.source, (r1.name,))
                )
                for p2 in q.arrows:
                    for r2 in q.arrows:
                        x2 = basis_element(
                            q, Path(p2.source, (p2.name,)), Path(r2.source, (r2.name,))
                        )
                        if p1.target == p2.source and r1.target == r2.source:
                            expected = basis_element(
                                q,
                                Path(p1.source, (p1.name, p2.name)),
                                Path(r1.source, (r1.name, r2.name)),
                            )
                        else:
                            expected = zero
                        yield (
                            f"x({p1.name}, {r1.name}) * x({p2.name}, {r2.name})",
                            face_multiply(x1, x2) == expected,
                        )

    def unit_law():
        unit = face_unit(q)
        for i, b in enumerate(flat):
            x = singles[i]
            yield (f"1 * {b}", face_multiply(unit, x) == x)
            yield (f"{b} * 1", face_multiply(x, unit) == x)

    def product_map_matches_rule():
        # the general bilinear product against the definitional table
        for (i, j), k in table.items():
            expected = zero if k == -1 else singles[k]
            got = face_multiply(singles[i], singles[j])
            yield (f"{flat[i]} * {flat[j]}", got == expected)

    def associativity():
        for d1 in range(max_degree + 1):
            for d2 in range(max_degree + 1 - d1):
                for d3 in range(max_degree + 1 - d1 - d2):
                    for i in block(d1):
                        for j in block(d2):
                            ij = table[(i, j)]
                            for k in block(d3):
                                left = -1 if ij == -1 else table[(ij, k)]
                                jk = table[(j, k)]
                                right = -1 if jk == -1 else table[(i, jk)]
                                if left != right:
                                    yield (
                                        f"({flat[i]} * {flat[j]}) * {flat[k]} vs "
                                        f"{flat[i]} * ({flat[j]} * {flat[k]})",
                                        False,
                                    )
                                else:
                                    yield ("", True)

    def graded_dimensions_match():
        for k in range(max_degree + 1):
            yield (
                f"degree {k}: {len(by_degree[k])} basis elements vs "
                f"path count squared {count_paths(q, k) ** 2}",
                len(by_degree[k]) == count_paths(q, k) ** 2,
            )

    images = [pair_to_path(ks, b.left, b.right) for b in flat]

    def pairing_bijection():
        offset = 0
        for k in range(max_degree + 1):
            block = images[offset : offset + len(by_degree[k])]
            offset += len(by_degree[k])
            expected = enumerate_paths(ks.square, k)
            yield (
                f"degree {k}: images are not exactly the square's paths",
                len(set(block)) == len(block) and set(block) == set(expected),
            )

    def pairing_multiplicative():
        square = ks.square
        for (i, j), k in table.items():
            a = images[i]
            b = images[j]
            if square.path_target(a) == b.start:
                product = Path(a.start, a.arrows + b.arrows)
            else:
                product = None
            expected = None if k == -1 else images[k]
            yield (
                f"pairing of {flat[i]} * {flat[j]}",
                product == expected,
            )

    run("vertex-orthogonality", vertex_orthogonality())
    run("arrow-unit-compatibility", arrow_compatibility())
    run("arrow-products", arrow_products())
    run("unit-law", unit_law())
    run("product-rule", product_map_matches_rule())
    run("associativity", associativity())
    run("graded-dimensions", graded_dimensions_match())
    run("pairing-bijection", pairing_bijection())
    run("pairing-multiplicative", pairing_multiplicative())

    return PresentationReport(
        ok=all(c.ok for c in checks),
        max_degree=max_degree,
        graded_dimensions=tuple(len(bs) for bs in by_degree),
        checks=tuple(checks),
    )
