from itertools import combinations, permutations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Poly, expand, prod, symbols
from sympy.combinatorics import Permutation

from arnold_algebra import (
    ArnoldClass,
    ExteriorElement,
    GeneratorIndex,
    Ring,
    basis,
    dim,
    format_class,
    format_terms,
    generator,
    generators,
    multiply,
    parse_class,
    reduce_mod2,
    rewrite_step,
    sort_with_sign,
    straighten,
    straighten_word,
    termination_measure,
    three_term_relator,
    unit,
)
from errors import ClassSyntaxError, DegreeError, GeneratorIndexError, RingMismatchError

G = GeneratorIndex
t = symbols("t")


def A(n, i, j, ring=Ring.Z):
    return generator(n, i, j, ring)


def poincare_coefficients(n):
    return Poly(expand(prod(1 + k * t for k in range(1, n))), t).all_coeffs()[::-1]


def test_generator():
    assert str(A(3, 2, 1)) == "A[2,1]"
    assert str(A(3, 3, 2)) == "A[3,2]"
    with pytest.raises(GeneratorIndexError):
        A(3, 1, 2)
    with pytest.raises(GeneratorIndexError):
        A(3, 4, 1)


def test_straighten_shared_first_index():
    c = straighten_word(3, [G(3, 1), G(3, 2)])
    assert c == A(3, 2, 1) * A(3, 3, 2) - A(3, 2, 1) * A(3, 3, 1)
    assert str(c) == "-A[2,1]*A[3,1] + A[2,1]*A[3,2]"


def test_square_is_zero_and_admissible_words_are_fixed():
    assert straighten_word(3, [G(2, 1), G(2, 1)]).is_zero()
    c = straighten_word(3, [G(2, 1), G(3, 1)])
    assert c.terms == (((G(2, 1), G(3, 1)), 1),)


def test_multiply_examples():
    assert str(multiply(A(3, 2, 1), A(3, 3, 2))) == "A[2,1]*A[3,2]"
    lhs = multiply(A(3, 3, 1) + A(3, 3, 2), A(3, 3, 2))
    assert lhs == straighten_word(3, [G(3, 1), G(3, 2)])
    mod2 = A(3, 3, 1, Ring.F2) * A(3, 3, 2, Ring.F2)
    assert str(mod2) == "A[2,1]*A[3,1] + A[2,1]*A[3,2]"


def test_basis_examples():
    assert basis(3, 1) == [(G(2, 1),), (G(3, 1),), (G(3, 2),)]
    assert basis(3, 2) == [(G(2, 1), G(3, 1)), (G(2, 1), G(3, 2))]
    assert basis(5, 0) == [()]
    assert basis(3, 3) == []
    assert basis(3, -1) == []


@pytest.mark.parametrize("n", range(1, 8))
def test_dimensions_match_poincare_series(n):
    coefficients = poincare_coefficients(n)
    for degree in range(0, 7):
        expected = coefficients[degree] if degree < len(coefficients) else 0
        assert dim(n, degree) == expected


def test_dim_examples():
    assert dim(4, 2) == 11
    assert dim(5, 4) == 24
    assert dim(6, 0) == 1


def test_reduce_mod2_examples():
    assert reduce_mod2(2 * A(3, 2, 1)).is_zero()
    assert reduce_mod2(A(3, 2, 1) - A(3, 3, 1)) == A(3, 2, 1, Ring.F2) + A(3, 3, 1, Ring.F2)
    c = 3 * (A(3, 2, 1) * A(3, 3, 2))
    assert reduce_mod2(c) == A(3, 2, 1, Ring.F2) * A(3, 3, 2, Ring.F2)


@pytest.mark.parametrize("ring", [Ring.Z, Ring.F2])
def test_three_term_relator_straightens_to_zero(ring):
    for n in range(3, 7):
        for j, tt, i in combinations(range(1, n + 1), 3):
            rel = three_term_relator(n, i, tt, j, ring)
            assert len(rel.terms) == 3
            assert straighten(rel).is_zero()


def test_three_term_relator_terms():
    rel = three_term_relator(3, 3, 2, 1)
    assert str(rel) == "A[2,1]*A[3,1] - A[2,1]*A[3,2] + A[3,1]*A[3,2]"
    with pytest.raises(GeneratorIndexError):
        three_term_relator(3, 2, 3, 1)


def test_rewrite_steps_decrease_the_measure():
    n = 5
    for degree in (2, 3):
        for word in combinations(generators(n), degree):
            step = rewrite_step(word)
            if step is None:
                assert all(a.i < b.i for a, b in zip(word, word[1:]))
                continue
            for _, new_word in step:
                assert termination_measure(new_word) < termination_measure(word)


def test_sort_with_sign():
    assert sort_with_sign([G(3, 1), G(2, 1)]) == (-1, (G(2, 1), G(3, 1)))
    assert sort_with_sign([G(3, 1), G(3, 1)]) == (0, None)


def test_unit_is_multiplicative_identity():
    a = A(4, 3, 1) + 2 * A(4, 4, 2)
    assert unit(4) * a == a
    assert a * unit(4) == a


def test_mismatched_algebras_raise():
    with pytest.raises(RingMismatchError):
        A(3, 2, 1) * A(4, 2, 1)
    with pytest.raises(RingMismatchError):
        A(3, 2, 1) + A(3, 2, 1, Ring.F2)
    with pytest.raises(DegreeError):
        A(3, 2, 1) + A(3, 2, 1) * A(3, 3, 2)


def test_free_exterior_algebra():
    a = ExteriorElement.word(3, [G(3, 1), G(3, 2)])
    b = ExteriorElement.word(3, [G(3, 2), G(3, 1)])
    assert a == -b
    assert straighten(a) == straighten_word(3, [G(3, 1), G(3, 2)])
    with pytest.raises(DegreeError):
        ExteriorElement.linear_form(3, [1, 0])


# -- text syntax -------------------------------------------------------------

def test_parse_and_format_round_trip():
    for n in (3, 4):
        for degree in range(n):
            for mono in basis(n, degree):
                c = ArnoldClass(n, Ring.Z, degree, ((mono, -2),))
                assert parse_class(format_class(c), n, degree=degree) == c
    c = parse_class("A[3,1]*A[3,2] - A[2,1]*A[3,2]", 3)
    assert c == straighten_word(3, [G(3, 1), G(3, 2)]) - A(3, 2, 1) * A(3, 3, 2)
    assert parse_class(str(c), 3) == c


def test_parse_coefficients_and_zero():
    assert parse_class("2*A[2,1] + 3*A[3,1]", 3) == 2 * A(3, 2, 1) + 3 * A(3, 3, 1)
    assert parse_class("A[2,1]*A[2,1]", 3).is_zero()
    zero = parse_class("0", 3, degree=2)
    assert zero.degree == 2 and zero.is_zero()
    assert format_terms(()) == "0"


@pytest.mark.parametrize("text, error", [
    ("", ClassSyntaxError),
    ("A[2,1", ClassSyntaxError),
    ("B[2,1]", ClassSyntaxError),
    ("A[2,1]A[3,1]", ClassSyntaxError),
    ("A[1,2]", GeneratorIndexError),
    ("A[2,1] + A[2,1]*A[3,2]", DegreeError),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_class(text, 3)


def test_parse_checks_requested_degree():
    with pytest.raises(DegreeError):
        parse_class("A[2,1]", 3, degree=2)


# -- algebraic identities ----------------------------------------------------

@st.composite
def degree_one(draw, n, ring=Ring.Z):
    coefficients = draw(st.lists(st.integers(-3, 3), min_size=comb(n, 2), max_size=comb(n, 2)))
    return straighten(ExteriorElement.linear_form(n, coefficients, ring))


@settings(max_examples=40, deadline=None)
@given(st.data(), st.sampled_from([4, 5]))
def test_associativity(data, n):
    a, b, c = (data.draw(degree_one(n)) for _ in range(3))
    assert (a * b) * c == a * (b * c)


@settings(max_examples=60, deadline=None)
@given(st.data(), st.sampled_from([3, 4, 5]))
def test_graded_anticommutativity(data, n):
    a, b = data.draw(degree_one(n)), data.draw(degree_one(n))
    assert (a * b + b * a).is_zero()


@settings(max_examples=60, deadline=None)
@given(st.data(), st.sampled_from([4, 5, 6]))
def test_confluence_under_reordering(data, n):
    gens = generators(n)
    size = data.draw(st.integers(2, min(4, n - 1)))
    word = data.draw(st.lists(st.sampled_from(gens), min_size=size, max_size=size, unique=True))
    order = data.draw(st.permutations(range(size)))
    shuffled = [word[k] for k in order]
    sign = Permutation(list(order)).signature()
    assert straighten_word(n, shuffled) == sign * straighten_word(n, word)

    left = A(n, *word[0])
    for g in word[1:]:
        left = left * A(n, *g)
    right = A(n, *word[-1])
    for g in reversed(word[:-1]):
        right = A(n, *g) * right
    assert left == right == straighten_word(n, word)


def test_degree_above_cohomological_dimension_vanishes():
    n = 4
    for word in permutations([G(2, 1), G(3, 1), G(4, 1), G(4, 2)]):
        assert straighten_word(n, list(word)).is_zero()
