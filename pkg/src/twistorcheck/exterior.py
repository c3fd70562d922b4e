"""Exterior algebra on the six twistor frame generators.

Two frames share one ``Form`` type:

* ``SIGMA`` -- s1, s2, dm of type (1,0) and sb1, sb2, dmb of type (0,1).
  This is the frame in which bidegrees, d, del and delbar are defined.
* ``DZ`` -- dz1, dz2, dzb1, dzb2, dm, dmb.  Every generator is closed, so d
  only differentiates coefficients; the generators have no pure type.

A monomial is a strictly increasing tuple of generator indices; the sign of
a product comes from the parity of the merge into canonical order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from . import linalg
from .scalars import MB, M, ONE, ZERO, RationalFunction, as_scalar

__all__ = [
    "Frame",
    "SIGMA",
    "DZ",
    "Form",
    "FrameMap",
    "BidegreeError",
    "wedge",
    "conjugate_form",
    "exterior_derivative",
    "del_delbar",
    "del_",
    "delbar",
    "convert_frame",
    "d_oracle",
    "gen",
    "scalar_form",
]

Monomial = Tuple[int, ...]


class BidegreeError(ValueError):
    """An operation needed a form of pure bidegree (or a typed frame)."""


@dataclass(frozen=True)
class Frame:
    name: str
    generators: Tuple[str, ...]
    conj: Tuple[int, ...]
    types: Optional[Tuple[Tuple[int, int], ...]] = None

    def index(self, name: str) -> int:
        return self.generators.index(name)

    def __repr__(self):
        return f"Frame({self.name})"


_T10, _T01 = (1, 0), (0, 1)

SIGMA = Frame(
    "sigma",
    ("s1", "s2", "dm", "sb1", "sb2", "dmb"),
    (3, 4, 5, 0, 1, 2),
    (_T10, _T10, _T10, _T01, _T01, _T01),
)
DZ = Frame(
    "dz",
    ("dz1", "dz2", "dzb1", "dzb2", "dm", "dmb"),
    (2, 3, 0, 1, 5, 4),
)


@lru_cache(maxsize=None)
def _merge(a: Monomial, b: Monomial):
    """(sign, merged) for a ^ b, or None when a generator repeats."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    if set(a) & set(b):
        return None
    inversions = 0
    for x in a:
        for y in b:
            if y < x:
                inversions += 1
    return (-1 if inversions & 1 else 1), tuple(sorted(a + b))


@lru_cache(maxsize=None)
def _sort_sign(seq: Tuple[int, ...]):
    """(sign, sorted) of a tuple of distinct indices, or None with repeats."""
    if len(set(seq)) != len(seq):
        return None
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return (-1 if inversions & 1 else 1), tuple(sorted(seq))


class Form:
    """Element of the exterior algebra over Q(i)(m, mb) in a given frame.

    ``terms`` maps monomials to nonzero coefficients; zero terms are never
    stored, so equality of forms is equality of the term maps.
    """

    __slots__ = ("frame", "terms")

    def __init__(self, terms: Mapping[Monomial, object] = None, frame: Frame = SIGMA):
        self.frame = frame
        clean = {}
        for mono, c in (terms or {}).items():
            c = as_scalar(c)
            if c is NotImplemented:
                raise TypeError(f"bad coefficient {c!r}")
            if c:
                clean[tuple(mono)] = c
        self.terms: Dict[Monomial, RationalFunction] = clean

    @classmethod
    def _wrap(cls, terms, frame):
        obj = object.__new__(cls)
        obj.frame = frame
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, frame: Frame = SIGMA) -> "Form":
        return cls._wrap({}, frame)

    # -- grading ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set:
        return {len(mono) for mono in self.terms}

    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) > 1:
            raise BidegreeError("form is not of pure degree")
        return degs.pop() if degs else 0

    def bidegree_of(self, mono: Monomial) -> Tuple[int, int]:
        types = self.frame.types
        if types is None:
            raise BidegreeError(f"bidegree is undefined in the {self.frame.name} frame")
        p = sum(1 for g in mono if types[g] == _T10)
        return p, len(mono) - p

    def bidegrees(self) -> set:
        return {self.bidegree_of(mono) for mono in self.terms}

    def bidegree(self) -> Optional[Tuple[int, int]]:
        """(p, q) for a homogeneous form, None when mixed.  Zero counts as (0, 0)."""
        bds = self.bidegrees()
        if not bds:
            return (0, 0)
        if len(bds) > 1:
            return None
        return bds.pop()

    def component(self, p: int, q: int) -> "Form":
        return Form._wrap({mono: c for mono, c in self.terms.items() if self.bidegree_of(mono) == (p, q)}, self.frame)

    def scalar_part(self) -> RationalFunction:
        return self.terms.get((), ZERO)

    # -- linear structure ------------------------------------------------

    def _check(self, other: "Form"):
        if other.frame is not self.frame:
            raise ValueError(f"cannot combine {self.frame.name} and {other.frame.name} forms")

    def __add__(self, other):
        if not isinstance(other, Form):
            other = scalar_form(other, self.frame)
        self._check(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono)
            if s is None:
                out[mono] = c
            else:
                s = s + c
                if s:
                    out[mono] = s
                else:
                    del out[mono]
        return Form._wrap(out, self.frame)

    __radd__ = __add__

    def __neg__(self):
        return Form._wrap({mono: -c for mono, c in self.terms.items()}, self.frame)

    def __sub__(self, other):
        if not isinstance(other, Form):
            other = scalar_form(other, self.frame)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, f) -> "Form":
        f = as_scalar(f)
        if not f:
            return Form.zero(self.frame)
        if f == ONE:
            return self
        return Form._wrap({mono: c * f for mono, c in self.terms.items()}, self.frame)

    def __mul__(self, other):
        """Scalar product, or wedge when both operands are forms."""
        if isinstance(other, Form):
            return wedge(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(1 / as_scalar(other))

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if isinstance(other, Form):
            return self.frame is other.frame and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.frame.name, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __repr__(self):
        from .syntax import format_form

        return f"Form[{self.frame.name}]({format_form(self)})"

    def __str__(self):
        from .syntax import format_form

        return format_form(self)


def scalar_form(f, frame: Frame = SIGMA) -> Form:
    f = as_scalar(f)
    return Form._wrap({(): f} if f else {}, frame)


def gen(name: str, frame: Frame = None) -> Form:
    """The generator called ``name`` (frame inferred from the name)."""
    if frame is None:
        frame = SIGMA if name in SIGMA.generators else DZ
    return Form._wrap({(frame.index(name),): ONE}, frame)


def wedge(a: Form, b: Form) -> Form:
    a._check(b)
    out: Dict[Monomial, RationalFunction] = {}
    for ma, ca in a.terms.items():
        for mb_, cb in b.terms.items():
            r = _merge(ma, mb_)
            if r is None:
                continue
            sign, mono = r
            c = ca * cb
            if sign < 0:
                c = -c
            s = out.get(mono)
            out[mono] = c if s is None else s + c
    return Form._wrap({k: v for k, v in out.items() if v}, a.frame)


def wedge_all(forms: Iterable[Form], frame: Frame = SIGMA) -> Form:
    result = scalar_form(ONE, frame)
    for f in forms:
        result = wedge(result, f)
    return result


def conjugate_form(a: Form) -> Form:
    conj = a.frame.conj
    out = {}
    for mono, c in a.terms.items():
        sign, new = _sort_sign(tuple(conj[g] for g in mono))
        c = c.conjugate()
        out[new] = -c if sign < 0 else c
    return Form._wrap(out, a.frame)


# ---------------------------------------------------------------------------
# derivatives

def _dscalar(f: RationalFunction, frame: Frame) -> Form:
    out = {}
    dm = f.diff(0)
    dmb = f.diff(1)
    if dm:
        out[(frame.index("dm"),)] = dm
    if dmb:
        out[(frame.index("dmb"),)] = dmb
    return Form._wrap(out, frame)


def _structure_equations() -> Dict[int, Form]:
    D = ONE + M * MB
    s1, s2, dm, sb1, sb2, dmb = (gen(n) for n in SIGMA.generators)
    d_sb1 = (wedge(dmb, s2) - wedge(dm, sb1).scale(MB)).scale(1 / D)
    d_sb2 = (-wedge(dm, sb2).scale(MB) - wedge(dmb, s1)).scale(1 / D)
    return {
        0: conjugate_form(d_sb1),
        1: conjugate_form(d_sb2),
        2: Form.zero(),
        3: d_sb1,
        4: d_sb2,
        5: Form.zero(),
    }


_D_GEN: Dict[int, Form] = {}


@lru_cache(maxsize=None)
def _d_monomial(mono: Monomial) -> Form:
    """d of a unit-coefficient sigma monomial via the graded Leibniz rule."""
    if not _D_GEN:
        _D_GEN.update(_structure_equations())
    total = Form.zero()
    for k, g in enumerate(mono):
        dg = _D_GEN[g]
        if not dg:
            continue
        left = Form._wrap({mono[:k]: ONE}, SIGMA)
        right = Form._wrap({mono[k + 1:]: ONE}, SIGMA)
        piece = wedge(wedge(left, dg), right)
        total = total + (-piece if k & 1 else piece)
    return total


def exterior_derivative(a: Form) -> Form:
    frame = a.frame
    total: Dict[Monomial, RationalFunction] = {}

    def acc(form: Form):
        for mono, c in form.terms.items():
            s = total.get(mono)
            total[mono] = c if s is None else s + c

    for mono, c in a.terms.items():
        unit = Form._wrap({mono: ONE}, frame)
        acc(wedge(_dscalar(c, frame), unit))
        if frame is SIGMA:
            acc(_d_monomial(mono).scale(c))
        elif frame is not DZ:
            raise ValueError(f"no structure equations for frame {frame.name}")
    return Form._wrap({k: v for k, v in total.items() if v}, frame)


d = exterior_derivative


def del_delbar(a: Form) -> Tuple[Form, Form]:
    """(del a, delbar a) for a homogeneous sigma-frame form.

    Raises BidegreeError for mixed input or if da has a component outside
    (p+1, q) and (p, q+1).
    """
    if a.frame is not SIGMA:
        raise BidegreeError("del/delbar are defined in the sigma frame only")
    bd = a.bidegree()
    if bd is None:
        raise BidegreeError(f"form of mixed bidegree {sorted(a.bidegrees())}")
    p, q = bd
    da = exterior_derivative(a)
    if a.is_zero():
        return da, da
    dl = da.component(p + 1, q)
    db = da.component(p, q + 1)
    if dl + db != da:
        stray = sorted(da.bidegrees() - {(p + 1, q), (p, q + 1)})
        raise BidegreeError(f"d of a ({p},{q})-form has components in {stray}")
    return dl, db


def del_(a: Form) -> Form:
    return _split_mixed(a, 0)


def delbar(a: Form) -> Form:
    return _split_mixed(a, 1)


def _split_mixed(a: Form, which: int) -> Form:
    # convenience for sums of homogeneous pieces: apply per bidegree
    if a.frame is not SIGMA:
        a = convert_frame(a, "sigma")
    total = Form.zero()
    for p, q in sorted(a.bidegrees()):
        total = total + del_delbar(a.component(p, q))[which]
    return total


# ---------------------------------------------------------------------------
# frame changes

class FrameMap:
    """Algebra homomorphism between frames fixed by the images of generators."""

    def __init__(self, source: Frame, target: Frame, images: Sequence[Form]):
        assert len(images) == len(source.generators)
        for img in images:
            if img.frame is not target:
                raise ValueError("generator images must live in the target frame")
        self.source = source
        self.target = target
        self.images = tuple(images)
        self._cache: Dict[Monomial, Form] = {}

    def monomial(self, mono: Monomial) -> Form:
        hit = self._cache.get(mono)
        if hit is None:
            if not mono:
                hit = scalar_form(ONE, self.target)
            else:
                hit = wedge(self.monomial(mono[:-1]), self.images[mono[-1]])
            self._cache[mono] = hit
        return hit

    def __call__(self, a: Form) -> Form:
        if a.frame is not self.source:
            raise ValueError(f"expected a {self.source.name} form, got {a.frame.name}")
        out: Dict[Monomial, RationalFunction] = {}
        for mono, c in a.terms.items():
            for m2, c2 in self.monomial(mono).terms.items():
                v = c * c2
                s = out.get(m2)
                out[m2] = v if s is None else s + v
        return Form._wrap({k: v for k, v in out.items() if v}, self.target)


def _sigma_to_dz_images():
    D = ONE + M * MB
    dz1, dz2, dzb1, dzb2, dm, dmb = (gen(n, DZ) for n in DZ.generators)
    sb1 = (dzb1.scale(MB) - dz2).scale(1 / D)
    sb2 = (dzb2.scale(MB) + dz1).scale(1 / D)
    s1 = conjugate_form(sb1)
    s2 = conjugate_form(sb2)
    return [s1, s2, dm, sb1, sb2, dmb]


def _dz_to_sigma_images(forward):
    """Invert the sigma -> dz substitution as a 6x6 linear system over the field."""
    matrix = [[f.terms.get((j,), ZERO) for j in range(6)] for f in forward]
    inv = linalg.inverse(matrix, ONE, ZERO)
    # sigma_i = sum_j A[i][j] dz_j  =>  dz_j = sum_i inv[j][i] sigma_i
    return [Form({(i,): inv[j][i] for i in range(6)}, SIGMA) for j in range(6)]


_MAPS: Dict[str, FrameMap] = {}


def frame_map(direction: str) -> FrameMap:
    if not _MAPS:
        forward = _sigma_to_dz_images()
        _MAPS["dz"] = FrameMap(SIGMA, DZ, forward)
        _MAPS["sigma"] = FrameMap(DZ, SIGMA, _dz_to_sigma_images(forward))
    return _MAPS[direction]


def convert_frame(a: Form, target: str) -> Form:
    """Re-express ``a`` in the 'sigma' or 'dz' frame (identity if already there)."""
    if target not in ("sigma", "dz"):
        raise ValueError(f"target must be 'sigma' or 'dz', got {target!r}")
    if a.frame.name == target:
        return a
    return frame_map(target)(a)


def d_oracle(a: Form) -> Form:
    """d computed in the closed dz frame: differentiate coefficients only."""
    return convert_frame(exterior_derivative(convert_frame(a, "dz")), "sigma")
