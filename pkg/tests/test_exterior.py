import random

import pytest
import sympy as sp

import oracle
from twistorcheck.checks import random_bidegree, random_form, random_scalar
from twistorcheck.exterior import (
    DZ, SIGMA, BidegreeError, Form, conjugate_form, convert_frame, d_oracle, del_, del_delbar, delbar,
    exterior_derivative as d, gen, scalar_form, wedge,
)
from twistorcheck.scalars import I, M, MB, ONE

s1, s2, dm, sb1, sb2, dmb = (gen(n) for n in SIGMA.generators)
dz1, dz2, dzb1, dzb2 = (gen(n) for n in DZ.generators[:4])
D = ONE + M * MB


def degree(a):
    return a.degree()


def test_wedge_examples():
    assert wedge(s1, s1) == 0
    assert wedge(sb1, s1) == -wedge(s1, sb1)
    assert wedge(sb1.scale(M), sb2) == Form({(3, 4): M})


def test_conjugate_examples():
    assert conjugate_form(sb1) == s1
    assert conjugate_form(sb1.scale(M) + sb2) == s1.scale(MB) + s2
    assert conjugate_form(wedge(s1, sb1).scale(I)) == wedge(s1, sb1).scale(I)


def test_structure_equation_for_sigma_bar_1():
    expected = (wedge(dmb, s2) - wedge(dm, sb1).scale(MB)).scale(1 / D)
    assert d(sb1) == expected
    assert d(dm) == 0 and d(dmb) == 0


def test_leibniz_example_has_no_02_part():
    a = sb1.scale(M)
    assert d(a) == wedge(dm, sb1) + d(sb1).scale(M)
    assert d(a).component(0, 2) == 0
    assert d_oracle(a) == d(a)


def test_del_delbar_examples():
    dl, db = del_delbar(sb1)
    assert dl == d(sb1) and db == 0
    assert del_delbar(sb1.scale(M))[1] == 0
    f = M**2 * MB / D
    dl, db = del_delbar(scalar_form(f))
    assert dl == dm.scale(f.diff(0)) and db == dmb.scale(f.diff(1))


def test_del_delbar_rejects_mixed_and_dz_input():
    with pytest.raises(BidegreeError):
        del_delbar(s1 + sb1)
    with pytest.raises(BidegreeError):
        del_delbar(dz1)
    # the convenience splitters accept sums of pure pieces
    assert del_(s1 + sb1) + delbar(s1 + sb1) == d(s1 + sb1)


def test_convert_frame_examples():
    assert convert_frame(sb1, "dz") == (dzb1.scale(MB) - dz2).scale(1 / D)
    assert convert_frame(dz1, "sigma") == sb2 + s1.scale(MB)
    x = wedge(s1, sb2)
    assert convert_frame(convert_frame(x, "dz"), "sigma") == x


def test_inverse_relations_against_sympy():
    # invert sigma_bar = A dz_bar-ish linear system with sympy, independent of linalg.py
    z1, z2, zb1, zb2 = sp.symbols("z1 z2 zb1 zb2")
    Dm = oracle.D
    sbar1 = (oracle.mb * zb1 - z2) / Dm
    sbar2 = (oracle.mb * zb2 + z1) / Dm
    sig1 = (oracle.m * z1 - zb2) / Dm  # conj of sbar1
    sig2 = (oracle.m * z2 + zb1) / Dm
    S1, S2, SB1, SB2 = sp.symbols("S1 S2 SB1 SB2")
    sol = sp.solve([sp.Eq(S1, sig1), sp.Eq(S2, sig2), sp.Eq(SB1, sbar1), sp.Eq(SB2, sbar2)], [z1, z2, zb1, zb2])
    assert sp.simplify(sol[z1] - (SB2 + oracle.mb * S1)) == 0
    assert sp.simplify(sol[z2] - (oracle.mb * S2 - SB1)) == 0
    assert convert_frame(dz2, "sigma") == s2.scale(MB) - sb1
    assert convert_frame(dzb1, "sigma") == sb1.scale(M) + s2
    assert convert_frame(dzb2, "sigma") == sb2.scale(M) - s1


def test_oracle_on_generators_and_h02_rep():
    for g in (s1, s2, dm, sb1, sb2, dmb):
        assert d_oracle(g) == d(g)
    a = wedge(sb1, sb2).scale(M**2)
    assert d_oracle(a) == d(a)
    assert d_oracle(dm) == 0


def test_d_squared_zero_random():
    rng = random.Random(11)
    for _ in range(200):
        a = random_form(rng)
        assert d(d(a)) == 0


def test_leibniz_random():
    rng = random.Random(12)
    for _ in range(100):
        a = random_form(rng, random_bidegree(rng, 3))
        b = random_form(rng, random_bidegree(rng, 3))
        sign = -1 if degree(a) % 2 else 1
        assert d(wedge(a, b)) == wedge(d(a), b) + wedge(a, d(b)).scale(sign)


def test_conjugation_commutes_with_d_and_swaps_del():
    rng = random.Random(13)
    for _ in range(100):
        a = random_form(rng, random_bidegree(rng, 5))
        assert conjugate_form(d(a)) == d(conjugate_form(a))
        dl, db = del_delbar(a)
        assert conjugate_form(dl) == del_delbar(conjugate_form(a))[1]
        assert conjugate_form(conjugate_form(a)) == a


def test_bidegree_purity_of_d():
    for g in SIGMA.generators:
        del_delbar(gen(g))
    rng = random.Random(14)
    for _ in range(100):
        a = random_form(rng, random_bidegree(rng, 5))
        (p, q) = a.bidegree()
        assert d(a).bidegrees() <= {(p + 1, q), (p, q + 1)}


def test_wedge_associative_and_graded_commutative():
    rng = random.Random(15)
    for _ in range(100):
        a, b, c = (random_form(rng, random_bidegree(rng, 2)) for _ in range(3))
        assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))
        sign = -1 if (degree(a) * degree(b)) % 2 else 1
        assert wedge(a, b) == wedge(b, a).scale(sign)


def test_oracle_matches_on_random_forms():
    rng = random.Random(16)
    for _ in range(50):
        a = random_form(rng)
        assert d_oracle(a) == d(a)


def test_bidegree_queries():
    assert (s1 + sb1).bidegree() is None
    assert wedge(s1, sb2).bidegree() == (1, 1)
    with pytest.raises(BidegreeError):
        dz1.bidegree()
