import random
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arnold_algebra import ArnoldClass, Ring, basis, generator, parse_class
from char_classes import (
    SWPair,
    ToralRep,
    TorusClass,
    alpha_rep,
    beta_rep,
    is_stably_trivial,
    is_trivial_over_pure_braid,
    ku_rep_is_trivial,
    pairing_witness,
    parse_toral_rep,
    parse_toral_rep_file,
    realize_sw,
    realize_sw_torus,
    sw_pair,
    sw_total,
    whitney_sum,
)
from errors import DegreeError, InputFileError, RepParseError, RepresentationError

REPS = Path(__file__).resolve().parents[1] / "inputs" / "reps"


def rep(*rows):
    return ToralRep.from_rows(rows)


def e(rank, *monomials):
    degree = len(monomials[0]) if monomials else 1
    return TorusClass(rank, degree, frozenset(tuple(m) for m in monomials))


def test_sw_total_examples():
    assert sw_total(rep((1, 0), (0, 1)), 2) == e(2, (0, 1))
    assert str(sw_total(rep((1, 0), (0, 1)), 2)) == "e1*e2"
    doubled = rep((1, 0), (1, 0))
    assert not sw_total(doubled, 1) and not sw_total(doubled, 2)
    three = rep((1, 0), (0, 1), (1, 1))
    assert not sw_total(three, 1)
    assert sw_total(three, 2) == e(2, (0, 1))


def test_sw_total_degree_bounds():
    r = rep((1, 0, 1), (0, 1, 1))
    assert sw_total(r, 0) == TorusClass.one(3)
    assert not sw_total(r, 3)
    with pytest.raises(DegreeError):
        sw_total(r, -1)


def test_stable_triviality():
    assert is_stably_trivial(rep((1, 0), (1, 0)))
    assert not is_stably_trivial(rep((1, 0), (0, 1), (1, 1)))
    assert is_stably_trivial(ToralRep((), 3))
    assert not is_stably_trivial(rep((1, 1)))


def test_pairing_witness_examples():
    w = pairing_witness(rep((1, 0), (0, 1), (0, 1), (1, 0)))
    assert w.is_trivial
    assert w.to_dict()["pairs"] == [[1, 4], [2, 3]]
    w = pairing_witness(rep((1, 1), (1, 1), (0, 0)))
    assert w.pairs == ((0, 1),) and w.zero_rows == (2,) and w.residual == ()
    w = pairing_witness(rep((1, 0), (0, 1), (1, 1)))
    assert not w.is_trivial
    assert w.obstruction_degree == 2 and str(w.obstruction) == "e1*e2"
    w = pairing_witness(rep((1, 0), (0, 1)))
    assert w.obstruction_degree == 1 and str(w.obstruction) == "e1 + e2"


def test_seven_nonzero_vectors_are_trivial_without_a_pairing():
    r = parse_toral_rep_file(REPS / "seven_points.txt")
    assert r.q == 7
    assert is_stably_trivial(r)
    w = pairing_witness(r)
    assert w.is_trivial and w.pairs == () and len(w.residual) == 7


def test_torus_versus_pure_braid_triviality():
    r = parse_toral_rep_file(REPS / "relator_p3.txt")
    pair = sw_pair(r)
    assert not pair.w1
    assert str(pair.w2) == "e1*e2 + e1*e3 + e2*e3"
    assert not is_stably_trivial(r)
    assert is_trivial_over_pure_braid(r, 3)
    w1, w2 = pair.to_arnold(3)
    assert w1.is_zero() and w2.is_zero()


def test_to_arnold_requires_matching_rank():
    with pytest.raises(RepresentationError):
        e(3, (0,)).to_arnold(4)
    assert e(3, (1,)).to_arnold(3) == generator(3, 3, 1, Ring.F2)


def test_whitney_sum():
    a, b = rep((1, 0)), rep((0, 1), (1, 1))
    assert whitney_sum(a, b).rows == ((1, 0), (0, 1), (1, 1))
    assert (a + b) == whitney_sum(a, b)
    with pytest.raises(RepresentationError):
        a + rep((1, 0, 0))


def test_toral_rep_validation():
    with pytest.raises(RepresentationError):
        ToralRep(((1, 2),), 2)
    with pytest.raises(RepresentationError):
        ToralRep(((1, 0),), 3)
    with pytest.raises(RepresentationError):
        ToralRep(((1, 0), (0, 1)), 2, special_orthogonal=True)
    assert ToralRep(((1, 0), (1, 0)), 2, special_orthogonal=True).q == 2


def test_parse_toral_rep():
    r = parse_toral_rep("# header\n1 0 1\n\n0 1 1  # comment\n")
    assert r.rows == ((1, 0, 1), (0, 1, 1))
    with pytest.raises(RepParseError, match="line 2"):
        parse_toral_rep("1 0\n1 2\n")
    with pytest.raises(RepParseError, match="line 2"):
        parse_toral_rep("1 0\n1 0 1\n")
    with pytest.raises(RepParseError):
        parse_toral_rep("# empty\n")
    assert parse_toral_rep("", n=4) == ToralRep((), 4)


def test_parse_toral_rep_file_rejects_binary_input(tmp_path):
    path = tmp_path / "rep.txt"
    path.write_bytes(b"1 0\n\xff 1\n")
    with pytest.raises(InputFileError, match="not UTF-8"):
        parse_toral_rep_file(path)
    with pytest.raises(InputFileError):
        parse_toral_rep_file(tmp_path / "absent.txt")


# -- alpha / beta representations ---------------------------------------------

def pairwise_sum(n, mono):
    total = ArnoldClass.zero(n, 2, Ring.F2)
    for a in range(len(mono)):
        for b in range(a + 1, len(mono)):
            total = total + generator(n, *mono[a], Ring.F2) * generator(n, *mono[b], Ring.F2)
    return total


def linear_sum(n, mono):
    total = ArnoldClass.zero(n, 1, Ring.F2)
    for g in mono:
        total = total + generator(n, *g, Ring.F2)
    return total


def test_alpha_beta_examples():
    w1, w2 = sw_pair(alpha_rep(3, [(2, 1)])).to_arnold(3)
    assert str(w1) == "A[2,1]" and w2.is_zero()
    w1, w2 = sw_pair(alpha_rep(3, [(2, 1), (3, 2)])).to_arnold(3)
    assert str(w2) == "A[2,1]*A[3,2]"
    empty = alpha_rep(3, [])
    assert empty.q == 0 and is_stably_trivial(empty)

    b = beta_rep(3, [(2, 1), (3, 2)])
    w1, w2 = sw_pair(b).to_arnold(3)
    assert w1.is_zero() and str(w2) == "A[2,1]*A[3,2]"
    assert b.special_orthogonal and b.q == 3
    single = beta_rep(3, [(2, 1)])
    assert single.rows == ((1, 0, 0), (1, 0, 0)) and is_stably_trivial(single)
    assert beta_rep(3, []).rows == ((0, 0, 0),)


def test_alpha_rejects_inadmissible_monomials():
    with pytest.raises(RepresentationError):
        alpha_rep(3, [(3, 1), (3, 2)])
    with pytest.raises(RepresentationError):
        beta_rep(4, [(3, 1), (2, 1)])


def test_strand_count_must_be_positive():
    for build in (alpha_rep, beta_rep):
        with pytest.raises(RepresentationError, match="at least 1"):
            build(0, [])
    zero1 = parse_class("0", -1, Ring.F2, degree=1)
    zero2 = parse_class("0", -1, Ring.F2, degree=2)
    with pytest.raises(RepresentationError, match="at least 1"):
        realize_sw(-1, zero1, zero2)


@pytest.mark.parametrize("n", [4, 5])
def test_alpha_beta_formulas_on_every_basis_monomial(n):
    for degree in range(n):
        for mono in basis(n, degree):
            a1, a2 = sw_pair(alpha_rep(n, mono)).to_arnold(n)
            b1, b2 = sw_pair(beta_rep(n, mono)).to_arnold(n)
            assert a1 == linear_sum(n, mono)
            assert a2 == pairwise_sum(n, mono)
            assert b1.is_zero()
            assert b2 == pairwise_sum(n, mono)


# -- realization -------------------------------------------------------------

def test_realize_sw_examples():
    r = realize_sw(3, parse_class("A[2,1]", 3, Ring.F2), parse_class("0", 3, Ring.F2, degree=2))
    assert r.q == 1
    r = realize_sw(3, parse_class("0", 3, Ring.F2, degree=1), parse_class("A[2,1]*A[3,1]", 3, Ring.F2))
    assert r.q == 3 and r.special_orthogonal
    zeta1 = parse_class("A[3,2]", 3, Ring.F2)
    zeta2 = parse_class("A[2,1]*A[3,2] + A[2,1]*A[3,1]", 3, Ring.F2)
    r = realize_sw(3, zeta1, zeta2)
    assert r.q == 7
    assert sw_pair(r).to_arnold(3) == (zeta1, zeta2)


def test_realize_sw_rejects_wrong_degrees():
    with pytest.raises(DegreeError):
        realize_sw(3, parse_class("A[2,1]*A[3,1]", 3, Ring.F2), parse_class("A[2,1]*A[3,1]", 3, Ring.F2))
    with pytest.raises(RepresentationError):
        realize_sw(4, parse_class("A[2,1]", 3, Ring.F2), parse_class("0", 3, Ring.F2, degree=2))


def random_class(rng, n, degree):
    total = ArnoldClass.zero(n, degree, Ring.F2)
    for mono in basis(n, degree):
        if rng.random() < 0.5:
            total = total + ArnoldClass(n, Ring.F2, degree, ((mono, 1),))
    return total


@pytest.mark.parametrize("n", [4, 5])
def test_realize_sw_round_trip(n):
    rng = random.Random(20 + n)
    for _ in range(100):
        zeta1, zeta2 = random_class(rng, n, 1), random_class(rng, n, 2)
        r = realize_sw(n, zeta1, zeta2)
        assert sw_pair(r).to_arnold(n) == (zeta1, zeta2)


def test_realize_sw_accepts_integral_classes():
    zeta2 = parse_class("3*A[2,1]*A[3,2]", 3)
    r = realize_sw(3, parse_class("2*A[3,1]", 3), zeta2)
    assert r.q == 3


def test_realize_sw_torus():
    zeta1 = e(4, (0,), (3,))
    zeta2 = e(4, (0, 1), (2, 3))
    r = realize_sw_torus(4, zeta1, zeta2)
    assert sw_pair(r) == SWPair(zeta1, zeta2)
    assert r.q == 7


def test_ku_rep_is_trivial():
    assert ku_rep_is_trivial() is True


# -- randomized identities ---------------------------------------------------

@st.composite
def toral_reps(draw, n=None):
    n = n if n is not None else draw(st.integers(1, 5))
    q = draw(st.integers(0, 6))
    rows = draw(st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=q, max_size=q))
    return ToralRep(tuple(tuple(r) for r in rows), n)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_whitney_formula_through_degree_two(data):
    n = data.draw(st.integers(1, 5))
    a, b = data.draw(toral_reps(n)), data.draw(toral_reps(n))
    s = sw_pair(a + b)
    pa, pb = sw_pair(a), sw_pair(b)
    assert s.w1 == pa.w1 + pb.w1
    assert s.w2 == pa.w2 + pa.w1 * pb.w1 + pb.w2
    assert not (pa.w1 * pa.w1)


@settings(max_examples=100, deadline=None)
@given(toral_reps())
def test_doubling_is_stably_trivial(r):
    assert is_stably_trivial(r + r)
    w = pairing_witness(r + r)
    assert w.is_trivial and not w.residual
