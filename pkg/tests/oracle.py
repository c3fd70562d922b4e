"""Independent sympy oracle for scalar values and the Hodge star.

The star is solved from the defining relation in the sigma basis using Gram
determinants, without the coframe tables used by the package.
"""
from itertools import combinations

import sympy as sp

m, mb = sp.symbols("m mb")
D = 1 + m * mb
GENS = ("s1", "s2", "dm", "sb1", "sb2", "dmb")


def conj(e):
    return sp.sympify(e).xreplace({m: mb, mb: m, sp.I: -sp.I})


def simp(e):
    return sp.factor(sp.cancel(sp.together(e)))


def equal(a, b) -> bool:
    return sp.cancel(sp.together(a - b)) == 0


# coframe rows in the basis (s1, s2, dm): omega_0, omega_2, dm / D
P = sp.Matrix([[mb, 1, 0], [-1, mb, 0], [0, 0, 1 / D]])
NORM = 2
Q = P.inv()
# <e_i, e_j> for e = (s1, s2, dm)
G = sp.Matrix(3, 3, lambda i, j: sp.cancel(sum(Q[i, a] * conj(Q[j, a]) * NORM for a in range(3))))
# hand expansion of omega^3 / 6 on s1*s2*dm*sb1*sb2*dmb
VOL = sp.I / 8 * (m**2 + 1) * (mb**2 + 1) / D**2


def _sign(seq):
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def inner(a, b):
    """<e_a, e_b> for canonical monomials given as index tuples."""
    if len(a) != len(b):
        return 0
    A = [g for g in a if g < 3]
    B = [g - 3 for g in a if g >= 3]
    C = [g for g in b if g < 3]
    E = [g - 3 for g in b if g >= 3]
    if len(A) != len(C):
        return 0
    d1 = G.extract(A, C).det() if A else 1
    d2 = G.extract(B, E).applyfunc(conj).det() if B else 1
    return sp.cancel(d1 * d2)


def astar(form):
    """form: dict mono -> sympy coefficient.  Returns the antilinear star."""
    out = {}
    for k in range(7):
        for alpha in combinations(range(6), k):
            comp = tuple(g for g in range(6) if g not in alpha)
            val = sum(inner(alpha, beta) * conj(c) for beta, c in form.items())
            if val != 0:
                # alpha ^ x e_comp = x sign(alpha+comp) top = <alpha, form> vol
                coeff = simp(val * VOL * _sign(alpha + comp))
                if coeff != 0:
                    out[comp] = coeff
    return out


def to_sympy(f):
    """Package RationalFunction -> sympy expression."""
    def poly(p):
        return sum((sp.Rational(c.re.numerator, c.re.denominator) + sp.I * sp.Rational(c.im.numerator, c.im.denominator))
                   * m**i * mb**j for (i, j), c in p.terms.items())
    return poly(f.num) / poly(f.den)


def form_to_sympy(a):
    """Package sigma-frame Form -> dict mono -> sympy coefficient."""
    return {mono: to_sympy(c) for mono, c in a.terms.items()}
