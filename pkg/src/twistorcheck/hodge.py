"""Hermitian metrics given by orthogonal (1,0)-coframes, and the Hodge star.

A metric is declared by three (1,0)-forms phi_a with squared norms nu_a; its
fundamental form is ``i * sum(phi_a ^ conj(phi_a) / nu_a)``.  All star
computations happen in the coframe basis (where the star is diagonal up to
complements) and are mapped back to the sigma frame.  Coefficients stay in
Q(i)(m, mb), so identities are checked on the dense set where the coframe is
nondegenerate.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .exterior import (
    SIGMA,
    BidegreeError,
    Form,
    FrameMap,
    Frame,
    _merge,
    conjugate_form,
    del_delbar,
    exterior_derivative,
    wedge,
)
from .scalars import I, ONE, ZERO, GaussianRational, PoleError, RationalFunction, as_scalar

__all__ = [
    "HermitianMetric",
    "DegenerateMetricError",
    "HarmonicityResult",
    "volume_form",
    "antilinear_star",
    "linear_star",
    "inner_product",
    "harmonicity",
    "independence_rank",
]

COFRAME = Frame(
    "coframe",
    ("p1", "p2", "p3", "pb1", "pb2", "pb3"),
    (3, 4, 5, 0, 1, 2),
    ((1, 0), (1, 0), (1, 0), (0, 1), (0, 1), (0, 1)),
)
_TOP = (0, 1, 2, 3, 4, 5)


class DegenerateMetricError(ValueError):
    pass


class HermitianMetric:
    def __init__(self, coframe: Sequence[Form], norms: Sequence[object]):
        if len(coframe) != 3 or len(norms) != 3:
            raise ValueError("a metric on Z needs three coframe forms and three norms")
        for phi in coframe:
            if phi.frame is not SIGMA or phi.bidegree() != (1, 0) or phi.is_zero():
                raise BidegreeError("coframe forms must be nonzero (1,0)-forms in the sigma frame")
        norms = tuple(as_scalar(n) for n in norms)
        for nu in norms:
            if not nu or nu.conjugate() != nu:
                raise ValueError(f"norm {nu} is not a nonzero real function")
        self.coframe = tuple(coframe)
        self.norms = norms

        # phi_a = sum_j P[a][j] e_j with e = (s1, s2, dm)
        P = [[phi.terms.get((j,), ZERO) for j in range(3)] for phi in coframe]
        try:
            Q = linalg.inverse(P, ONE, ZERO)
        except ZeroDivisionError:
            raise DegenerateMetricError("coframe forms are linearly dependent (phi1^phi2^phi3 = 0)") from None
        self._P = P
        # e_j = sum_a Q[j][a] phi_a, and conjugates
        to_images = [Form({(a,): Q[j][a] for a in range(3)}, COFRAME) for j in range(3)]
        to_images += [Form({(a + 3,): Q[j][a].conjugate() for a in range(3)}, COFRAME) for j in range(3)]
        self._to = FrameMap(SIGMA, COFRAME, to_images)
        back = list(coframe) + [conjugate_form(phi) for phi in coframe]
        self._from = FrameMap(COFRAME, SIGMA, back)

        omega = Form.zero(COFRAME)
        for a in range(3):
            omega = omega + Form({(a, a + 3): I / norms[a]}, COFRAME)
        self._omega = omega
        vol = wedge(wedge(omega, omega), omega).scale(RationalFunction(1, 6))
        self._vol_coeff = vol.terms[_TOP]
        self._star_table: Dict[Tuple[int, ...], Tuple[Tuple[int, ...], RationalFunction]] = {}
        for k in range(7):
            for mono in combinations(range(6), k):
                comp = tuple(g for g in range(6) if g not in mono)
                sign, _ = _merge(mono, comp)
                kappa = self._norm_of(mono) * self._vol_coeff
                self._star_table[mono] = (comp, -kappa if sign < 0 else kappa)

    def _norm_of(self, mono) -> RationalFunction:
        out = ONE
        for g in mono:
            out = out * self.norms[g % 3]
        return out

    # -- change of basis --------------------------------------------------

    def to_coframe(self, a: Form) -> Form:
        return self._to(a)

    def from_coframe(self, a: Form) -> Form:
        return self._from(a)

    def fundamental_form(self) -> Form:
        return self._from(self._omega)

    def coframe_wedge(self) -> Form:
        return wedge(wedge(self.coframe[0], self.coframe[1]), self.coframe[2])

    def volume(self) -> Form:
        return self._from(Form({_TOP: self._vol_coeff}, COFRAME))

    def basis_inner_product(self, mono_a, mono_b) -> RationalFunction:
        """Inner product of two coframe basis monomials."""
        return self._norm_of(mono_a) if mono_a == mono_b else ZERO

    def star_coframe(self, a: Form) -> Form:
        out = {}
        for mono, c in a.terms.items():
            comp, kappa = self._star_table[mono]
            out[comp] = c.conjugate() * kappa
        return Form._wrap(out, COFRAME)


def volume_form(g: HermitianMetric) -> Form:
    return g.volume()


def inner_product(a: Form, b: Form, g: HermitianMetric) -> RationalFunction:
    """Pointwise Hermitian product, linear in a and antilinear in b."""
    ca, cb = g.to_coframe(a), g.to_coframe(b)
    total = ZERO
    for mono, x in ca.terms.items():
        y = cb.terms.get(mono)
        if y is not None:
            total = total + x * y.conjugate() * g._norm_of(mono)
    return total


def antilinear_star(a: Form, g: HermitianMetric) -> Form:
    """The conjugate-linear star with a ^ star(b) = <a, b> vol; maps (p,q) to (3-p,3-q)."""
    if a.frame is not SIGMA:
        raise BidegreeError("the star is defined on sigma-frame forms")
    if a.bidegree() is None:
        raise BidegreeError(f"star needs a form of pure bidegree, got {sorted(a.bidegrees())}")
    return g.from_coframe(g.star_coframe(g.to_coframe(a)))


def linear_star(a: Form, g: HermitianMetric) -> Form:
    """Complex-linear star: the antilinear star after conjugation; (p,q) -> (3-q,3-p)."""
    return antilinear_star(conjugate_form(a), g)


# ---------------------------------------------------------------------------
# harmonicity predicates

@dataclass(frozen=True)
class HarmonicityResult:
    flavor: str
    holds: bool
    witness: Optional[Form] = None
    failed: Optional[str] = None

    def __bool__(self):
        return self.holds


def _ddbar(a: Form) -> Form:
    return del_delbar(del_delbar(a)[1])[0]


def harmonicity(a: Form, g: HermitianMetric, flavor: str) -> HarmonicityResult:
    """Closedness pair for a harmonic representative of the given flavor.

    delbar: delbar a = 0 and delbar(star a) = 0
    del:    del a = 0 and del(star a) = 0
    bc:     d a = 0 and del delbar(star a) = 0
    aeppli: del delbar a = 0 and d(star a) = 0
    """
    if a.bidegree() is None:
        raise BidegreeError("harmonicity needs a form of pure bidegree")
    if flavor == "delbar":
        conditions = [
            ("delbar a", lambda: del_delbar(a)[1]),
            ("delbar(star a)", lambda: del_delbar(antilinear_star(a, g))[1]),
        ]
    elif flavor == "del":
        conditions = [
            ("del a", lambda: del_delbar(a)[0]),
            ("del(star a)", lambda: del_delbar(antilinear_star(a, g))[0]),
        ]
    elif flavor == "bc":
        conditions = [
            ("d a", lambda: exterior_derivative(a)),
            ("del delbar(star a)", lambda: _ddbar(antilinear_star(a, g))),
        ]
    elif flavor == "aeppli":
        conditions = [
            ("del delbar a", lambda: _ddbar(a)),
            ("d(star a)", lambda: exterior_derivative(antilinear_star(a, g))),
        ]
    else:
        raise ValueError(f"unknown flavor {flavor!r}; expected delbar, del, bc or aeppli")
    for label, compute in conditions:
        w = compute()
        if w:
            return HarmonicityResult(flavor, False, w, label)
    return HarmonicityResult(flavor, True)


# ---------------------------------------------------------------------------
# linear independence over constants

_DEGENERATE = (GaussianRational(0, 1), GaussianRational(0, -1))


def independence_rank(forms: Sequence[Form], sample_points: Sequence[object]) -> int:
    """Rank over Q(i) of the coefficient vectors of ``forms`` sampled at the
    given values of m (mb takes the conjugate value)."""
    points = [GaussianRational.coerce(p) for p in sample_points]
    for z in points:
        if z in _DEGENERATE:
            raise PoleError(f"sample point m = {z} lies on the degeneracy locus m^2 + 1 = 0")
    monos = sorted({mono for f in forms for mono in f.terms}, key=lambda t: (len(t), t))
    frames = {f.frame for f in forms}
    if len(frames) > 1:
        raise ValueError("forms must share a frame")
    rows: List[List[GaussianRational]] = []
    for f in forms:
        row = []
        for z in points:
            for mono in monos:
                c = f.terms.get(mono)
                row.append(c.evaluate(z) if c is not None else GaussianRational())
        rows.append(row)
    return linalg.rank(rows)
