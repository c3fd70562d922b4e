import random
from fractions import Fraction

import pytest
import sympy as sp

import oracle
from twistorcheck.checks import random_scalar
from twistorcheck.scalars import (
    I, M, MB, ONE, ZERO, GaussianRational, PoleError, Polynomial, RationalFunction,
    conjugate_scalar, evaluate, field_op, format_scalar, partial,
)

D = ONE + M * MB
to_sympy = oracle.to_sympy


def test_gaussian_rational_lowest_terms_and_conjugation():
    z = GaussianRational(Fraction(2, 4), Fraction(-6, 8))
    assert z.re == Fraction(1, 2) and z.im == Fraction(-3, 4)
    assert z.conjugate().conjugate() == z
    assert z.conjugate().im == Fraction(3, 4)
    assert z * z.inverse() == GaussianRational(1)


def test_field_op_examples():
    assert field_op(M, MB, "mul") == M * MB
    assert field_op(M * MB + M, M, "div") == MB + 1
    assert field_op(1 / D, M * MB / D, "add") == ONE
    assert field_op(M, M, "sub") == ZERO


def test_division_by_zero_is_explicit():
    with pytest.raises(ZeroDivisionError):
        field_op(M, ZERO, "div")


def test_canonical_denominator_is_monic():
    f = RationalFunction(Polynomial({(1, 0): 1}), Polynomial({(1, 1): 3, (0, 0): 3}))
    assert f.den.leading_coefficient() == GaussianRational(1)
    assert f == M / (3 * D)


def test_partial_examples():
    assert partial(M**2 * MB, "m") == 2 * M * MB
    assert partial(RationalFunction(GaussianRational(3, 2)), "m") == ZERO
    # frozen from the sympy oracle: diff(mb/(1+m*mb), mb) = 1/(1+m*mb)^2
    assert oracle.equal(sp.diff(oracle.mb / oracle.D, oracle.mb), 1 / oracle.D**2)
    assert partial(MB / D, "mb") == 1 / D**2


def test_conjugation_examples():
    assert conjugate_scalar(I * M / D) == -I * MB / D
    assert conjugate_scalar(D) == D


def test_evaluate_examples():
    assert evaluate(D, 1) == GaussianRational(2)
    with pytest.raises(PoleError, match="m\\^2 \\+ 1"):
        evaluate(1 / (M**2 + 1), GaussianRational(0, 1))
    # sympy oracle: mb/(1+m*mb) at m = 1+i, mb = 1-i
    val = (oracle.mb / oracle.D).subs({oracle.m: 1 + sp.I, oracle.mb: 1 - sp.I})
    assert sp.nsimplify(val) == sp.Rational(1, 3) - sp.I / 3
    assert evaluate(MB / D, GaussianRational(1, 1)) == GaussianRational(Fraction(1, 3), Fraction(-1, 3))


def test_canonical_form_independent_of_operation_order():
    rng = random.Random(1)
    for _ in range(50):
        f, g, h = (random_scalar(rng) for _ in range(3))
        a = (f + g) * h
        b = h * g + f * h
        assert a == b
        assert a.num == b.num and a.den == b.den
        assert hash(a) == hash(b)


def test_field_axioms_random():
    rng = random.Random(2)
    for _ in range(50):
        f, g, h = (random_scalar(rng) for _ in range(3))
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f + g == g + f and f * g == g * f
        if g:
            assert (f / g) * g == f


def test_derivation_and_conjugation_properties():
    rng = random.Random(3)
    for _ in range(60):
        f, g = random_scalar(rng), random_scalar(rng)
        for v in ("m", "mb"):
            assert partial(f * g, v) == partial(f, v) * g + f * partial(g, v)
        assert partial(conjugate_scalar(f), "mb") == conjugate_scalar(partial(f, "m"))
        assert conjugate_scalar(conjugate_scalar(f)) == f


def test_against_sympy_oracle():
    rng = random.Random(4)
    for _ in range(30):
        f, g = random_scalar(rng), random_scalar(rng)
        for ours, theirs in (
            (f * g + f, to_sympy(f) * to_sympy(g) + to_sympy(f)),
            (partial(f, "m"), sp.diff(to_sympy(f), oracle.m)),
            (partial(g, "mb"), sp.diff(to_sympy(g), oracle.mb)),
            (conjugate_scalar(f), oracle.conj(to_sympy(f))),
        ):
            assert oracle.equal(to_sympy(ours), theirs)


def test_evaluate_is_a_homomorphism():
    rng = random.Random(5)
    points = [GaussianRational(3), GaussianRational(Fraction(1, 2), 2), GaussianRational(-1, 3)]
    for _ in range(40):
        f, g = random_scalar(rng), random_scalar(rng)
        for z in points:
            try:
                fz, gz = evaluate(f, z), evaluate(g, z)
            except PoleError:
                continue
            assert evaluate(f + g, z) == fz + gz
            assert evaluate(f * g, z) == fz * gz
            assert evaluate(conjugate_scalar(f), z) == fz.conjugate()


def test_format_scalar():
    assert format_scalar(M**2 * MB) == "m^2*mb"
    assert format_scalar(1 / D) == "1/(m*mb + 1)"
    assert format_scalar(-I * M + MB) == "-i*m + mb"
    assert format_scalar(MB / M) == "mb/m"


def test_poly_gcd_against_sympy():
    from twistorcheck.scalars import poly_gcd
    rng = random.Random(31)
    shared = [(M * MB + 1).num, (M + I).num, (M * M + MB + 2).num, (MB - 3).num]
    for _ in range(20):
        f, g = random_scalar(rng, 3).num, random_scalar(rng, 3).num
        if f.is_zero() or g.is_zero():
            continue
        c = rng.choice(shared)
        if rng.random() < 0.5:
            c = c * rng.choice(shared)
        f, g = f * c, g * c
        ours = RationalFunction(poly_gcd(f, g), Polynomial.constant(1))
        theirs = sp.gcd(sp.Poly(oracle.to_sympy(RationalFunction(f, Polynomial.constant(1))), oracle.m, oracle.mb,
                                extension=sp.I),
                        sp.Poly(oracle.to_sympy(RationalFunction(g, Polynomial.constant(1))), oracle.m, oracle.mb,
                                extension=sp.I))
        # both are determined up to a unit of Q(i)
        ratio = sp.cancel(oracle.to_sympy(ours) / theirs.as_expr())
        assert ratio.free_symbols == set(), (f, g)
