"""Symbolic face algebra: product rule, canonical form, pairing, verification."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from quivalg import (
    FaceBasis,
    FaceElement,
    Path,
    PathAlgebraElement,
    PresentationCheck,
    PresentationReport,
    basis_element,
    count_paths,
    enumerate_paths,
    face_basis,
    face_multiply,
    face_unit,
    kronecker_square,
    phi,
    verify_presentation,
)

from quiverzoo import a_chain, isolated, loops_quiver, three_cycle, two_cycle


def triv(v: str) -> Path:
    return Path(v)


def arrow_path(q, name: str) -> Path:
    a = q.arrow_by_name[name]
    return Path(a.source, (name,))


# ---------------------------------------------------------------------------
# basis elements


def test_basis_rejects_unequal_lengths():
    q = a_chain(3)
    with pytest.raises(ValueError, match="equal-length"):
        FaceBasis(triv("v1"), arrow_path(q, "a1"))


def test_basis_degree_and_rendering():
    q = a_chain(3)
    b = FaceBasis(triv("v1"), triv("v2"))
    assert b.degree == 0
    assert str(b) == "x(e:v1, e:v2)"
    two = FaceBasis(
        Path("v1", ("a1", "a2")), Path("v1", ("a1", "a2"))
    )
    assert two.degree == 2
    assert str(two) == "x(a1.a2, a1.a2)"


def test_face_basis_enumeration_counts():
    q = a_chain(3)
    for k in range(4):
        assert len(face_basis(q, k)) == count_paths(q, k) ** 2
    assert len(face_basis(two_cycle(), 5)) == 4  # two paths of each length


# ---------------------------------------------------------------------------
# element canonical form and arithmetic


def test_terms_merge_and_zeros_drop():
    q = a_chain(3)
    b = FaceBasis(triv("v1"), triv("v1"))
    x = FaceElement(q, [(b, 2), (b, -2)])
    assert x.is_zero()
    y = FaceElement(q, [(b, 1), (b, Fraction(1, 2))])
    assert y.coefficient(b) == Fraction(3, 2)
    assert len(y.terms) == 1


def test_equal_elements_compare_and_hash_equal():
    q = a_chain(3)
    b1 = FaceBasis(triv("v1"), triv("v2"))
    b2 = FaceBasis(arrow_path(q, "a1"), arrow_path(q, "a1"))
    x = FaceElement(q, [(b1, 1), (b2, 2)])
    y = FaceElement(q, [(b2, 2), (b1, 1)])
    assert x == y
    assert hash(x) == hash(y)


def test_elements_are_immutable():
    q = a_chain(3)
    x = face_unit(q)
    with pytest.raises(AttributeError):
        x.terms = ()


def test_linear_operations_are_exact():
    q = a_chain(3)
    b = FaceBasis(triv("v2"), triv("v3"))
    x = FaceElement(q, [(b, Fraction(1, 3))])
    y = FaceElement(q, [(b, Fraction(1, 6))])
    assert (x + y).coefficient(b) == Fraction(1, 2)
    assert (x - y).coefficient(b) == Fraction(1, 6)
    assert (-x).coefficient(b) == Fraction(-1, 3)
    assert (Fraction(3, 5) * x).coefficient(b) == Fraction(1, 5)
    assert (2 * x).coefficient(b) == Fraction(2, 3)


def test_foreign_paths_are_rejected():
    q = a_chain(3)
    with pytest.raises(ValueError, match="not over the given quiver"):
        FaceElement(q, [(FaceBasis(Path("w"), Path("w")), 1)])


def test_cross_quiver_arithmetic_is_rejected():
    x = face_unit(a_chain(2))
    y = face_unit(a_chain(3))
    with pytest.raises(ValueError, match="different quivers"):
        x + y
    with pytest.raises(ValueError, match="different quivers"):
        face_multiply(x, y)


# ---------------------------------------------------------------------------
# the product rule


def test_product_concatenates_both_sides():
    q = a_chain(3)
    x = basis_element(q, arrow_path(q, "a1"), arrow_path(q, "a1"))
    y = basis_element(q, arrow_path(q, "a2"), arrow_path(q, "a2"))
    long = Path("v1", ("a1", "a2"))
    assert x * y == basis_element(q, long, long)
    # target/source mismatch on either side kills the product
    assert (y * x).is_zero()
    z = basis_element(q, arrow_path(q, "a2"), arrow_path(q, "a1"))
    assert (x * z).is_zero()  # right sides do not compose


def test_trivial_pairs_are_orthogonal_idempotents():
    q = a_chain(3)
    e12 = basis_element(q, triv("v1"), triv("v2"))
    e21 = basis_element(q, triv("v2"), triv("v1"))
    assert e12 * e12 == e12
    assert (e12 * e21).is_zero()


def test_unit_is_two_sided():
    q = a_chain(3)
    one = face_unit(q)
    assert len(one.terms) == 9
    for k in range(3):
        for b in face_basis(q, k):
            x = FaceElement(q, [(b, 1)])
            assert one * x == x
            assert x * one == x


def test_product_is_bilinear():
    q = two_cycle()
    rng = random.Random(7)
    pool = [b for k in range(3) for b in face_basis(q, k)]

    def rand_element() -> FaceElement:
        picks = rng.sample(pool, rng.randint(1, 4))
        return FaceElement(
            q, [(b, Fraction(rng.randint(-3, 3), rng.randint(1, 4))) for b in picks]
        )

    for _ in range(40):
        x, y, z = rand_element(), rand_element(), rand_element()
        assert (x + y) * z == x * z + y * z
        assert x * (y + z) == x * y + x * z
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        assert (c * x) * y == c * (x * y)


def test_product_is_associative_on_random_elements():
    q = three_cycle()
    rng = random.Random(11)
    pool = [b for k in range(3) for b in face_basis(q, k)]
    for _ in range(30):
        xs = [
            FaceElement(
                q,
                [
                    (b, rng.randint(-2, 2))
                    for b in rng.sample(pool, rng.randint(1, 3))
                ],
            )
            for _ in range(3)
        ]
        assert (xs[0] * xs[1]) * xs[2] == xs[0] * (xs[1] * xs[2])


def test_scalars_stay_rational():
    q = a_chain(3)
    x = Fraction(1, 2) * basis_element(q, arrow_path(q, "a1"), arrow_path(q, "a1"))
    y = Fraction(1, 3) * basis_element(q, arrow_path(q, "a2"), arrow_path(q, "a2"))
    product = x * y
    long = FaceBasis(Path("v1", ("a1", "a2")), Path("v1", ("a1", "a2")))
    assert product.coefficient(long) == Fraction(1, 6)


# ---------------------------------------------------------------------------
# the pairing with the square


def test_phi_sends_basis_to_square_paths():
    q = a_chain(3)
    ks = kronecker_square(q)
    x = basis_element(q, arrow_path(q, "a1"), arrow_path(q, "a2"))
    image = phi(x, ks)
    assert image.terms == (
        (Path("(v1,v2)", ("(a1,a2)",)), Fraction(1)),
    )


def test_phi_is_linear_and_multiplicative():
    q = two_cycle()
    ks = kronecker_square(q)
    rng = random.Random(3)
    pool = [b for k in range(3) for b in face_basis(q, k)]

    def rand_element() -> FaceElement:
        picks = rng.sample(pool, rng.randint(1, 4))
        return FaceElement(q, [(b, rng.randint(-3, 3)) for b in picks])

    for _ in range(40):
        x, y = rand_element(), rand_element()
        assert phi(x + y, ks) == phi(x, ks) + phi(y, ks)
        assert phi(x * y, ks) == phi(x, ks) * phi(y, ks)


def test_phi_sends_unit_to_unit():
    q = two_cycle()
    ks = kronecker_square(q)
    image = phi(face_unit(q), ks)
    expected = PathAlgebraElement(
        ks.square, [(Path(v), 1) for v in ks.square.vertices]
    )
    assert image == expected


def test_phi_is_injective_on_the_graded_basis():
    q = a_chain(3)
    ks = kronecker_square(q)
    for k in range(3):
        images = {phi(FaceElement(q, [(b, 1)]), ks) for b in face_basis(q, k)}
        assert len(images) == len(face_basis(q, k))
        # and surjective: every degree-k path of the square is hit
        paths = (
            {im.terms[0][0] for im in images}
        )
        assert paths == set(enumerate_paths(ks.square, k))


def test_phi_rejects_foreign_square():
    q = a_chain(3)
    other = kronecker_square(a_chain(2))
    with pytest.raises(ValueError, match="base quiver"):
        phi(face_unit(q), other)


# ---------------------------------------------------------------------------
# path algebra elements on the square


def test_path_algebra_element_product_is_concatenation():
    q = a_chain(3)
    p1 = PathAlgebraElement(q, [(arrow_path(q, "a1"), 1)])
    p2 = PathAlgebraElement(q, [(arrow_path(q, "a2"), 1)])
    assert p1 * p2 == PathAlgebraElement(q, [(Path("v1", ("a1", "a2")), 1)])
    assert (p2 * p1).is_zero()


def test_path_algebra_element_rejects_foreign_path():
    with pytest.raises(ValueError, match="not a path"):
        PathAlgebraElement(a_chain(2), [(Path("v9"), 1)])


# ---------------------------------------------------------------------------
# bounded-degree verification


def test_presentation_verifies_on_a_chain():
    report = verify_presentation(a_chain(4), max_degree=3)
    assert report.ok
    assert report.failure is None
    assert report.max_degree == 3
    assert report.graded_dimensions == (16, 9, 4, 1)
    names = [c.name for c in report.checks]
    assert names == [
        "vertex-orthogonality",
        "arrow-unit-compatibility",
        "arrow-products",
        "unit-law",
        "product-rule",
        "associativity",
        "graded-dimensions",
        "pairing-bijection",
        "pairing-multiplicative",
    ]
    by_name = {c.name: c for c in report.checks}
    assert by_name["vertex-orthogonality"].instances == 256  # (4^2)^2 pairs
    assert by_name["unit-law"].instances == 60  # both sides of 30 elements
    assert by_name["graded-dimensions"].instances == 4
    # the product table is exercised once per tabulated pair, in both checks
    assert (
        by_name["product-rule"].instances
        == by_name["pairing-multiplicative"].instances
    )
    assert all(c.counterexample is None for c in report.checks)


def test_presentation_verifies_with_cycles():
    report = verify_presentation(two_cycle(), max_degree=4)
    assert report.ok
    assert report.graded_dimensions == (4, 4, 4, 4, 4)


def test_presentation_verifies_on_a_loop():
    report = verify_presentation(loops_quiver(1), max_degree=4)
    assert report.ok
    assert report.graded_dimensions == (1, 1, 1, 1, 1)


def test_presentation_verifies_on_arrowless_quiver():
    report = verify_presentation(isolated(3), max_degree=2)
    assert report.ok
    assert report.graded_dimensions == (9, 0, 0)


def test_presentation_rejects_degree_below_one():
    with pytest.raises(ValueError, match="at least 1"):
        verify_presentation(a_chain(2), max_degree=0)


def test_failure_surfaces_first_bad_check():
    report = PresentationReport(
        ok=False,
        max_degree=2,
        graded_dimensions=(1,),
        checks=(
            PresentationCheck("fine", True, 5),
            PresentationCheck("broken", False, 9, "x * y came out wrong"),
        ),
    )
    assert report.failure == "broken: x * y came out wrong"
