import random

import pytest

from twistorcheck.diamonds import (
    FAKE_PROJECTIVE_PLANE, S1_X_S3, S4, TORUS, CohomologyNumbers, Known, MissingNumberError, TopologicalInput,
    Unknown, betti_Z, ddbar_decision, delta, delta_from_diamonds, diamond, frolicher_E1_check,
)

TORUS_NUMBERS = CohomologyNumbers(h11_bc=4, h11_a=5, h12_bc=4, h11=4, h12=4)


def random_input(rng):
    t = TopologicalInput(rng.randrange(8), rng.randrange(8), rng.randrange(8))
    pick = lambda: rng.choice([None] + list(range(10)))  # noqa: E731
    return t, CohomologyNumbers(h11_bc=pick(), h11_a=pick(), h12_bc=pick(), h11=pick(), h12=pick())


# -- Betti numbers -------------------------------------------------------------------

def test_betti_examples():
    assert betti_Z(TORUS) == [1, 4, 7, 8, 7, 4, 1]
    assert betti_Z(S4) == [1, 0, 1, 0, 1, 0, 1]
    assert betti_Z(FAKE_PROJECTIVE_PLANE) == [1, 0, 2, 0, 2, 0, 1]
    assert TORUS.b2 == 6


def test_betti_palindromic():
    rng = random.Random(1)
    for _ in range(200):
        b = betti_Z(random_input(rng)[0])
        assert b == b[::-1]


def test_negative_input_rejected():
    with pytest.raises(ValueError):
        TopologicalInput(-1, 0, 0)


# -- diamonds -----------------------------------------------------------------------

def test_bott_chern_torus_entries():
    bc = diamond(TORUS, "bott_chern")
    assert bc.value(3, 1) == 3 and bc.value(3, 2) == 4 and bc.value(1, 0) == 0
    assert bc.unknowns() == ["h11", "h12", "h21", "h22"]


def test_aeppli_torus_entries():
    a = diamond(TORUS, "aeppli")
    assert a.value(1, 0) == 4 and a.value(2, 0) == 3 and a.value(3, 0) == 0
    assert a.value(0, 0) == 1 and a.value(3, 3) == 1


def test_hodge_diamond_of_torus_twistor_space():
    h = diamond(TORUS, "hodge", TORUS_NUMBERS)
    expected = {
        (0, 0): 1,
        (1, 0): 0, (0, 1): 4,
        (2, 0): 0, (1, 1): 4, (0, 2): 3,
        (3, 0): 0, (2, 1): 4, (1, 2): 4, (0, 3): 0,
        (3, 1): 3, (2, 2): 4, (1, 3): 0,
        (3, 2): 4, (2, 3): 0,
        (3, 3): 1,
    }
    assert {pq: h.value(*pq) for pq in expected} == expected


def test_hodge_template_unknowns():
    h = diamond(S1_X_S3, "hodge")
    assert h.value(0, 1) == 1 and h.value(0, 2) == 0
    assert h.unknowns() == ["h11", "h12", "h21", "h22"]


def test_kind_aliases():
    assert diamond(TORUS, "bc").kind == "bott_chern"
    assert diamond(TORUS, "a").kind == "aeppli"
    with pytest.raises(ValueError):
        diamond(TORUS, "spin")


def test_betti_kind():
    d = diamond(S4, "betti")
    assert [d.value(k, 0) for k in range(7)] == [1, 0, 1, 0, 1, 0, 1]
    assert d.render() == "b0=1  b1=0  b2=1  b3=0  b4=1  b5=0  b6=1"


def test_aeppli_is_bc_dual_and_bc_symmetric_sweep():
    rng = random.Random(20240229)
    for _ in range(1000):
        t, n = random_input(rng)
        bc, a = diamond(t, "bott_chern", n), diamond(t, "aeppli", n)
        for p in range(4):
            for q in range(4):
                assert a.value(p, q) == bc.value(3 - p, 3 - q)
                if isinstance(bc[(p, q)], Known) and isinstance(bc[(q, p)], Known):
                    assert bc.value(p, q) == bc.value(q, p)
                if isinstance(a[(p, q)], Unknown):
                    assert isinstance(bc[(3 - p, 3 - q)], Unknown)


def test_inequality_warnings():
    d = diamond(TORUS, "bott_chern", CohomologyNumbers(h11_bc=1, h11_a=1, h12_bc=0))
    assert len(d.warnings) == 2
    assert diamond(TORUS, "bott_chern", TORUS_NUMBERS).warnings == []


def test_render_layout():
    lines = diamond(TORUS, "bott_chern").render().splitlines()
    assert len(lines) == 7
    assert lines[0].strip() == "1" and lines[-1].strip() == "1"
    # p decreases from left to right: (3,1)=b- then (2,2) then (1,3)=b-
    assert lines[4].split() == ["3", "h22", "3"]


def test_json_shape():
    j = diamond(TORUS, "aeppli").to_json()
    assert j["kind"] == "aeppli" and len(j["entries"]) == 16
    e = j["entries"][0]
    assert set(e) == {"p", "q", "value", "symbol"}


# -- Delta ------------------------------------------------------------------------

def test_delta_examples():
    assert delta(1, TORUS).value == 0
    assert delta(2, TORUS, CohomologyNumbers(h11_bc=4, h11_a=5)).value == 1
    assert delta(3, TORUS, CohomologyNumbers(h12_bc=4)).value == 0
    assert delta(0, TORUS).value == 0


def test_delta_missing_numbers():
    with pytest.raises(MissingNumberError) as info:
        delta(2, TORUS, CohomologyNumbers(h11_bc=4))
    assert info.value.name == "h11_a"
    with pytest.raises(ValueError):
        delta(7, TORUS)


def test_delta_duality_and_sum_rule():
    rng = random.Random(7)
    for _ in range(300):
        t = TopologicalInput(rng.randrange(6), rng.randrange(6), rng.randrange(6))
        n = CohomologyNumbers(h11_bc=rng.randrange(9), h11_a=rng.randrange(9), h12_bc=rng.randrange(9))
        for k in range(7):
            assert delta(k, t, n).value == delta(6 - k, t, n).value
            assert delta(k, t, n).value == delta_from_diamonds(k, t, n), (t, n, k)


def test_delta_nonnegative_when_inequalities_hold():
    rng = random.Random(8)
    for _ in range(300):
        t = TopologicalInput(rng.randrange(6), rng.randrange(6), rng.randrange(6))
        n = CohomologyNumbers(h11_bc=rng.randrange(12), h11_a=rng.randrange(12), h12_bc=rng.randrange(9))
        if diamond(t, "bc", n).warnings:
            continue
        assert all(delta(k, t, n).value >= 0 for k in range(7))


# -- del-delbar-lemma --------------------------------------------------------------

def test_ddbar_s4_mode_b():
    v = ddbar_decision(S4, CohomologyNumbers(h11_bc=1, h11_a=1, h12_bc=0), "B")
    assert v.holds and v.summary() == "YES"
    assert v.bc_diamond.value(1, 1) == 1
    assert v.betti_profile == [1, 0, 1, 0, 1, 0, 1]


def test_ddbar_torus_fails_by_delta2():
    v = ddbar_decision(TORUS, CohomologyNumbers(h11_bc=4, h11_a=5), "A")
    assert not v.holds and v.summary() == "NO: Delta^2=1"
    assert v.bc_diamond is None


def test_ddbar_saturated_case_both_modes():
    n = CohomologyNumbers(h11_bc=1, h11_a=1, h12_bc=0)
    for mode in "AB":
        v = ddbar_decision(S4, n, mode)
        assert v.holds and v.flags == []


def test_ddbar_flag_manifold_profile():
    v = ddbar_decision(FAKE_PROJECTIVE_PLANE, CohomologyNumbers(h11_bc=2, h11_a=2, h12_bc=0), "B")
    assert v.holds and v.bc_diamond.value(1, 1) == 2 and v.bc_diamond.value(2, 2) == 2


def test_ddbar_missing_number():
    with pytest.raises(MissingNumberError):
        ddbar_decision(S4, CohomologyNumbers(h11_bc=1, h11_a=1), "A")
    with pytest.raises(ValueError):
        ddbar_decision(S4, CohomologyNumbers(), "C")


def test_modes_agree_or_flag():
    rng = random.Random(9)
    for _ in range(500):
        t = TopologicalInput(rng.randrange(3), rng.randrange(4), rng.randrange(3))
        n = CohomologyNumbers(h11_bc=rng.randrange(5), h11_a=rng.randrange(5), h12_bc=rng.randrange(3))
        a, b = ddbar_decision(t, n, "A"), ddbar_decision(t, n, "B")
        flagged = any("non-realizable" in f for f in a.flags)
        if t.b1 == 0 and t.b_minus == 0:
            # the twistor identities h10_A = b1, h20_A = b- are trivially met
            assert a.holds == b.holds or flagged
        assert flagged == (a.holds != b.holds)


# -- Frolicher ----------------------------------------------------------------------

def test_frolicher_fake_projective_plane():
    r = frolicher_E1_check(FAKE_PROJECTIVE_PLANE, regular=True)
    assert not r.consistent
    assert r.trace[-1] == "h21=0 => kernel dim must be 2, but equals b-+1=1"
    assert r.summary().startswith("Contradiction")


def test_frolicher_s1_x_s3():
    r = frolicher_E1_check(S1_X_S3)
    assert r.consistent
    assert (r.hodge_numbers["h01"], r.hodge_numbers["h11"], r.hodge_numbers["h21"]) == (1, 1, 1)


def test_frolicher_torus():
    r = frolicher_E1_check(TORUS, regular=True)
    assert r.consistent and r.hodge_numbers["h11"] == 4
    assert r.hodge_numbers["h11"] == 1 + TORUS.b_plus


def test_frolicher_without_regularity_has_no_exact_sequence():
    assert frolicher_E1_check(FAKE_PROJECTIVE_PLANE, regular=False).consistent
