from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cydegen.gradedring import (
    GradedClass,
    NotDivisible,
    Ring,
    SplitBundle,
    chern_character,
    chern_class,
    chern_root_ring,
    divide_by_class,
    integrate_pn,
    lambda_ch,
    p_classes,
    todd_star,
    todd_star_coefficients,
)

from oracles import todd_series_by_long_division

F = Fraction


def test_ring_constructor():
    ring = Ring({"x1": 1, "x2": 1, "e": 1}, 3)
    assert ring.ngens == 3 and ring.cutoff == 3
    assert Ring({"h": 1}, 4).one().constant_term() == 1


@pytest.mark.parametrize(
    "gens, cutoff",
    [([("x", 1), ("x", 1)], 2), ([("x", 0)], 2), ([("x", -1)], 2), ([("x", 1)], 0), ([("x", 3)], 2), ([], 2)],
)
def test_ring_rejects(gens, cutoff):
    with pytest.raises(ValueError):
        Ring(gens, cutoff)


def test_floats_refused():
    ring = Ring({"x": 1}, 2)
    with pytest.raises(TypeError):
        GradedClass(ring, {(1,): 0.5})


def test_todd_star_single_root_matches_long_division():
    ring = Ring({"x": 1}, 4)
    td = todd_star(SplitBundle(ring, ("x",)))
    oracle = todd_series_by_long_division(4)
    assert [td.coefficient((k,)) for k in range(5)] == oracle
    assert oracle == [1, F(-1, 2), F(1, 12), 0, F(-1, 720)]


def test_todd_star_coefficients_long():
    assert todd_star_coefficients(12) == todd_series_by_long_division(12)


def test_todd_star_two_roots_and_empty():
    ring = Ring({"x": 1, "y": 1}, 3)
    x, y = ring.gens()
    td = todd_star(SplitBundle(ring, ("x", "y")))
    assert td.degree_part(1) == (x + y) * F(-1, 2)
    # product of the two single-root expansions
    tx = todd_star(SplitBundle(ring, ("x",)))
    ty = todd_star(SplitBundle(ring, ("y",)))
    assert td == tx * ty
    assert todd_star(SplitBundle(ring, ())) == ring.one()


def test_chern_character():
    ring = Ring({"x": 1}, 2)
    x = ring.gen("x")
    assert chern_character(SplitBundle(ring, ("x",))) == 1 + x + x * x * F(1, 2)
    ring2 = Ring({"x": 1, "y": 1}, 3)
    ch = chern_character(SplitBundle(ring2, ("x", "y")))
    assert ch.degree_part(0) == ring2.scalar(2)
    assert ch.degree_part(1) == ring2.gen("x") + ring2.gen("y")


def test_lambda_ch():
    ring, Q = chern_root_ring(2, 3, extra=())
    assert lambda_ch(Q, 0) == ring.one()
    x1, x2 = ring.gens()
    assert lambda_ch(Q, 2).degree_part(1) == x1 + x2
    ring3, Q3 = chern_root_ring(3, 3, extra=())
    assert lambda_ch(Q3, 1) == chern_character(Q3)
    with pytest.raises(ValueError):
        lambda_ch(Q3, 4)


def test_chern_class():
    ring, Q = chern_root_ring(3, 3, extra=())
    x, y, z = ring.gens()
    assert chern_class(Q, 0) == ring.one()
    assert chern_class(Q, 1) == x + y + z
    ring2, Q2 = chern_root_ring(2, 2, extra=())
    a, b = ring2.gens()
    assert chern_class(Q2, 2) == a * b
    with pytest.raises(ValueError):
        chern_class(Q2, 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_p_is_top_chern_class(n):
    ring, Q = chern_root_ring(n, n + 2, extra=())
    assert p_classes(Q).P == chern_class(Q, n) * (-1) ** n


def test_p_second_vanishes_for_line_bundle():
    ring, L = chern_root_ring(1, 4, extra=())
    assert p_classes(L).P2.is_zero()


def test_p_prime_rank_two_low_terms():
    ring, Q = chern_root_ring(2, 4, extra=())
    P1 = p_classes(Q).P1
    assert P1.degree_part(0).is_zero()
    assert P1.degree_part(1) == chern_class(Q, 1)
    assert P1.degree_part(2) == chern_class(Q, 2)


def test_split_bundle_validation():
    ring = Ring({"x": 1, "q": 2}, 4)
    with pytest.raises(ValueError):
        SplitBundle(ring, ("q",))
    with pytest.raises(ValueError):
        SplitBundle(ring, ("x", "x"))


def test_divide_todd():
    ring = Ring({"x": 1}, 4)
    x = ring.gen("x")
    q = divide_by_class(todd_star(SplitBundle(ring, ("x",))) - 1, x)
    assert q.cutoff == 3
    assert [q.coefficient((k,)) for k in range(4)] == [F(-1, 2), F(1, 12), 0, F(-1, 720)]
    # multiply back
    assert (q * x).truncate(3) == (todd_star(SplitBundle(ring, ("x",))) - 1).truncate(3)


def test_divide_simple_and_failures():
    ring = Ring({"x": 1, "y": 1}, 4)
    x, y = ring.gens()
    assert divide_by_class(x * x, x) == x.truncate(3)
    with pytest.raises(NotDivisible):
        divide_by_class(1 + x, x)
    with pytest.raises(NotDivisible):
        divide_by_class(y * y, x)
    with pytest.raises(NotDivisible):
        divide_by_class(x, ring.zero())


def test_divide_by_unit():
    ring = Ring({"h": 1}, 5)
    h = ring.gen("h")
    inv = divide_by_class(ring.one(), 1 + 2 * h)
    assert inv == sum((h ** k * (-2) ** k for k in range(6)), ring.zero())


def test_integrate_pn():
    ring = Ring({"h": 1}, 3)
    h = ring.gen("h")
    assert integrate_pn(h ** 3, 3) == 1
    assert integrate_pn(h ** 3 * 5 - h ** 2, 3) == 5
    # K3: c_2 of a quartic surface, 4h (1+h)^4 / (1+4h)
    total = divide_by_class((1 + h) ** 4, 1 + 4 * h)
    assert integrate_pn(total * h * 4, 3) == 24
    two = Ring({"h": 1, "k": 1}, 3)
    with pytest.raises(ValueError):
        integrate_pn(two.one(), 3)


def test_str_roundtrip_looks_sane():
    ring = Ring({"x": 1}, 4)
    q = divide_by_class(todd_star(SplitBundle(ring, ("x",))) - 1, ring.gen("x"))
    assert str(q) == "-1/2 + 1/12*x - 1/720*x^3"


# properties ---------------------------------------------------------------

NAMES = ("a", "b", "c")


def ring_with(cutoff):
    return Ring([(n, 1) for n in NAMES], cutoff)


monomials = st.tuples(*[st.integers(0, 3) for _ in NAMES])
coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=7)
term_maps = st.dictionaries(monomials, coefficients, max_size=6)


@settings(max_examples=60, deadline=None)
@given(term_maps, term_maps, term_maps)
def test_mul_commutative_associative(ta, tb, tc):
    ring = ring_with(5)
    a, b, c = (GradedClass(ring, t) for t in (ta, tb, tc))
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(term_maps, term_maps, st.integers(1, 4))
def test_truncation_consistency(ta, tb, cutoff):
    small, big = ring_with(cutoff), ring_with(9)
    prod_small = GradedClass(small, ta) * GradedClass(small, tb)
    prod_big = GradedClass(big, ta) * GradedClass(big, tb)
    for mono, c in prod_big.terms.items():
        if sum(mono) <= cutoff:
            assert prod_small.coefficient(mono) == c
    assert all(sum(m) <= cutoff for m in prod_small.terms)


@settings(max_examples=60, deadline=None)
@given(term_maps, term_maps)
def test_divide_then_multiply(tq, tu):
    ring = ring_with(6)
    a = ring.gen("a")
    den = a + GradedClass(ring, {m: c for m, c in tu.items() if sum(m) >= 2})
    num = GradedClass(ring, tq) * den
    q = divide_by_class(num, den)
    assert (q * den).truncate(q.cutoff) == num.truncate(q.cutoff)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.data())
def test_p_class_multiplicativity(rank, data):
    rank_f = data.draw(st.integers(1, 5 - rank) if rank < 5 else st.just(0))
    total = rank + rank_f
    ring, Q = chern_root_ring(total, total + 1, extra=())
    roots = list(Q.roots)
    perm = data.draw(st.permutations(roots))
    Fb = SplitBundle(ring, tuple(perm[:rank]))
    Gb = SplitBundle(ring, tuple(perm[rank:]))
    pF, pG, pS = p_classes(Fb), p_classes(Gb), p_classes(Fb + Gb)
    assert pS.P == pF.P * pG.P
    assert pS.P1 == pF.P1 * pG.P + pF.P * pG.P1
    assert pS.P2 == pF.P2 * pG.P + pF.P1 * pG.P1 + pF.P * pG.P2
