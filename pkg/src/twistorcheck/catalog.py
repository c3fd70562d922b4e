"""Named forms on the twistor space of the flat 4-torus, in the chart
lambda_2 != 0 with fiber coordinate m = lambda_1 / lambda_2.

Objects homogeneous in (lambda, conj(lambda)) are stored after the
substitution lambda_1 -> m, lambda_2 -> 1 (and conjugates), so that e.g.
lambda_1 * Omega_bar_1 becomes m * sb1 and |lambda_1|^2 + |lambda_2|^2
becomes 1 + m*mb.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Tuple

from .exterior import SIGMA, Form, conjugate_form, gen, scalar_form, wedge
from .hodge import HermitianMetric
from .scalars import I, M, MB, ONE

__all__ = [
    "CatalogEntry",
    "lookup",
    "names",
    "entries",
    "paper_metric",
    "omega_bar_identity_pairs",
    "expansion_identities",
    "chart",
]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    value: Form
    bidegree: Tuple[int, int]
    paper_location: str
    expected_properties: Tuple[Tuple[str, bool], ...] = ()
    display: str = ""


class _Chart:
    """lambda-side objects of the chart, already reduced."""

    def __init__(self):
        self.s1, self.s2, self.dm, self.sb1, self.sb2, self.dmb = (gen(n) for n in SIGMA.generators)
        self.D = ONE + M * MB
        self.l1, self.l2 = M, ONE
        self.lb1, self.lb2 = MB, ONE
        # Omega_bar_j reduce to sigma_bar_j; Omega_j to sigma_j
        self.Ob1, self.Ob2 = self.sb1, self.sb2
        self.O1, self.O2 = self.s1, self.s2

    def lO(self, lam, form):
        return form.scale(lam)


@lru_cache(maxsize=None)
def chart() -> _Chart:
    return _Chart()


def _w(*forms: Form) -> Form:
    out = forms[0]
    for f in forms[1:]:
        out = wedge(out, f)
    return out


DELBAR_REP = (("delbar_closed", True), ("delbar_harmonic", True))


def _build() -> Dict[str, CatalogEntry]:
    c = chart()
    s1, s2, dm, sb1, sb2, dmb, D = c.s1, c.s2, c.dm, c.sb1, c.sb2, c.dmb, c.D
    l1Ob1, l1Ob2 = sb1.scale(M), sb2.scale(M)
    l2Ob1, l2Ob2 = sb1, sb2
    out: Dict[str, CatalogEntry] = {}

    def add(name, value, bd, where, props=(), display=""):
        assert value.bidegree() == bd, (name, value.bidegree(), bd)
        out[name] = CatalogEntry(name, value, bd, where, tuple(props), display)

    sigma_where = "holomorphic sigma coframe on the fiber chart"
    add("sigma_1", s1, (1, 0), sigma_where, display="sigma_1")
    add("sigma_2", s2, (1, 0), sigma_where, display="sigma_2")
    add("sigma_bar_1", sb1, (0, 1), sigma_where, display="(mu_bar dz_bar_1 - dz_2)/(1+|mu|^2)")
    add("sigma_bar_2", sb2, (0, 1), sigma_where, display="(mu_bar dz_bar_2 + dz_1)/(1+|mu|^2)")
    add("dmu", dm, (1, 0), sigma_where, display="d mu")
    add("dmu_bar", dmb, (0, 1), sigma_where, display="d mu_bar")

    omega_where = "twisted Omega_bar forms spanning H^1(Z, O)"
    add("Omega_bar_1", c.Ob1, (0, 1), omega_where, display="Omega_bar_1 with lambda_2 = 1")
    add("Omega_bar_2", c.Ob2, (0, 1), omega_where, display="Omega_bar_2 with lambda_2 = 1")
    add("Omega_1", c.O1, (1, 0), omega_where, display="conj(Omega_bar_1)")
    add("Omega_2", c.O2, (1, 0), omega_where, display="conj(Omega_bar_2)")

    ob = {
        0: l1Ob1 + l2Ob2,
        1: (l1Ob1 - l2Ob2).scale(I),
        2: l1Ob2 - l2Ob1,
        3: (l1Ob2 + l2Ob1).scale(I),
    }
    wk_where = "omega_bar_k description of H^1(Z, O)"
    for k in range(4):
        add(f"omega_bar_{k}", ob[k], (0, 1), wk_where, (("delbar_closed", True),), display=f"omega_bar_{k}")
        add(f"omega_{k}", conjugate_form(ob[k]), (1, 0), wk_where, display=f"omega_{k}")

    h01_where = "H^{0,1} representatives lambda_i Omega_bar_j (torus twistor space)"
    for name, value, disp in (
        ("h01_rep_l1o1", l1Ob1, "lambda_1 Omega_bar_1"),
        ("h01_rep_l1o2", l1Ob2, "lambda_1 Omega_bar_2"),
        ("h01_rep_l2o1", l2Ob1, "lambda_2 Omega_bar_1"),
        ("h01_rep_l2o2", l2Ob2, "lambda_2 Omega_bar_2"),
    ):
        add(name, value, (0, 1), h01_where, DELBAR_REP, disp)

    h02_where = "H^{0,2} representatives (torus twistor space)"
    add("h02_rep_l1l1", _w(l1Ob1, l1Ob2), (0, 2), h02_where, DELBAR_REP, "lambda_1 Omega_bar_1 ^ lambda_1 Omega_bar_2")
    add("h02_rep_l2l2", _w(l2Ob1, l2Ob2), (0, 2), h02_where, DELBAR_REP, "lambda_2 Omega_bar_1 ^ lambda_2 Omega_bar_2")
    add("h02_rep_l1l2", _w(l1Ob1, l2Ob2), (0, 2), h02_where, DELBAR_REP, "lambda_1 Omega_bar_1 ^ lambda_2 Omega_bar_2")

    twisted_where = "twisted 2-forms lambda_1^(2-l) lambda_2^l Omega_bar_1 ^ Omega_bar_2 spanning H^2(Z, O)"
    for l in range(3):
        value = _w(c.Ob1, c.Ob2).scale(c.l1 ** (2 - l) * c.l2 ** l)
        add(f"h2_twisted_{l}", value, (0, 2), twisted_where, (("delbar_closed", True),),
            f"lambda_1^{2 - l} lambda_2^{l} Omega_bar_1 ^ Omega_bar_2")

    h11_where = "H^{1,1} representatives (torus twistor space)"
    fs = _w(dm, dmb).scale(1 / D ** 2)
    add("h11_rep_fs", fs, (1, 1), h11_where, DELBAR_REP + (("d_closed", True),),
        "d mu ^ d mu_bar / (1+|mu|^2)^2")
    eta_props = DELBAR_REP + (("d_closed", True), ("bc_harmonic", True))
    add("h11_rep_eta1", _w(c.O1, c.Ob2).scale(D), (1, 1), h11_where, eta_props,
        "(|lambda_1|^2+|lambda_2|^2) Omega_1 ^ Omega_bar_2")
    add("h11_rep_eta2", _w(c.O2, c.Ob1).scale(D), (1, 1), h11_where, eta_props,
        "(|lambda_1|^2+|lambda_2|^2) Omega_2 ^ Omega_bar_1")
    add("h11_rep_eta3", (_w(c.O1, c.Ob1) - _w(c.O2, c.Ob2)).scale(D), (1, 1), h11_where, eta_props,
        "(|lambda_1|^2+|lambda_2|^2) (Omega_1 ^ Omega_bar_1 - Omega_2 ^ Omega_bar_2)")

    h12_where = "H^{1,2} representatives (torus twistor space)"
    h12_props = DELBAR_REP + (("aeppli_harmonic", True),)
    for name, O, lam, disp in (
        ("h12_rep_o1_l1", c.O1, c.l1, "(|lambda|^2) lambda_1 Omega_1 ^ Omega_bar_1 ^ Omega_bar_2"),
        ("h12_rep_o1_l2", c.O1, c.l2, "(|lambda|^2) lambda_2 Omega_1 ^ Omega_bar_1 ^ Omega_bar_2"),
        ("h12_rep_o2_l1", c.O2, c.l1, "(|lambda|^2) lambda_1 Omega_2 ^ Omega_bar_1 ^ Omega_bar_2"),
        ("h12_rep_o2_l2", c.O2, c.l2, "(|lambda|^2) lambda_2 Omega_2 ^ Omega_bar_1 ^ Omega_bar_2"),
    ):
        add(name, _w(O, c.Ob1, c.Ob2).scale(D * lam), (1, 2), h12_where, h12_props, disp)

    add("beta", _w(c.O1, c.Ob1, c.O2, c.Ob2).scale(D ** 2), (2, 2),
        "harmonic (2,2)-form beta, product of two H^{1,1} classes",
        (("delbar_closed", True), ("delbar_harmonic", True)),
        "(|lambda_1|^2+|lambda_2|^2)^2 Omega_1 ^ Omega_bar_1 ^ Omega_2 ^ Omega_bar_2")

    extra_where = "additional del-delbar-closed (1,1)-forms giving Aeppli classes (torus)"
    add("aeppli_extra_1",
        _w(c.O1, c.Ob1).scale(c.lb1 * c.l1) - _w(c.O2, c.Ob2).scale(c.lb2 * c.l2), (1, 1), extra_where,
        (("ddbar_closed", True),),
        "lambda_bar_1 Omega_1 ^ lambda_1 Omega_bar_1 - lambda_bar_2 Omega_2 ^ lambda_2 Omega_bar_2")
    add("aeppli_extra_2",
        _w(c.O1, c.Ob1).scale(c.lb2 * c.l2) - _w(c.O2, c.Ob2).scale(c.lb1 * c.l1), (1, 1), extra_where,
        (("ddbar_closed", True),),
        "lambda_bar_2 Omega_1 ^ lambda_2 Omega_bar_1 - lambda_bar_1 Omega_2 ^ lambda_1 Omega_bar_2")
    return out


@lru_cache(maxsize=None)
def _registry() -> Dict[str, CatalogEntry]:
    return _build()


def names() -> List[str]:
    return list(_registry())


def entries() -> List[CatalogEntry]:
    return list(_registry().values())


def lookup(name: str) -> CatalogEntry:
    reg = _registry()
    try:
        return reg[name]
    except KeyError:
        raise KeyError(f"unknown catalog name {name!r}; registered: {', '.join(reg)}") from None


@lru_cache(maxsize=None)
def paper_metric() -> HermitianMetric:
    """Coframe (omega_0, omega_2, dm / (1 + m mb)) with all squared norms 2."""
    c = chart()
    omega0 = conjugate_form(_registry()["omega_bar_0"].value)
    omega2 = conjugate_form(_registry()["omega_bar_2"].value)
    return HermitianMetric((omega0, omega2, c.dm.scale(1 / c.D)), (2, 2, 2))


def omega_bar_identity_pairs() -> List[Tuple[str, Form, Form]]:
    """For each omega_bar_k: (name, mu/sigma_bar expression, lambda/Omega_bar expression)."""
    c = chart()
    sb1, sb2 = c.sb1, c.sb2
    mu_side = {
        0: sb1.scale(M) + sb2,
        1: (sb1.scale(M) - sb2).scale(I),
        2: sb2.scale(M) - sb1,
        3: (sb1 + sb2.scale(M)).scale(I),
    }
    lO = c.lO
    lam_side = {
        0: lO(c.l1, c.Ob1) + lO(c.l2, c.Ob2),
        1: (lO(c.l1, c.Ob1) - lO(c.l2, c.Ob2)).scale(I),
        2: lO(c.l1, c.Ob2) - lO(c.l2, c.Ob1),
        3: (lO(c.l1, c.Ob2) + lO(c.l2, c.Ob1)).scale(I),
    }
    return [(f"omega_bar_{k}", mu_side[k], lam_side[k]) for k in range(4)]


def expansion_identities(part: str) -> List[Tuple[str, Form, Form]]:
    """The lambda-expanded forms of the H^{1,1} ('c') and H^{1,2} ('d')
    representatives, as (name, representative, term-by-term expansion)."""
    c = chart()
    O1, O2, Ob1, Ob2 = c.O1, c.O2, c.Ob1, c.Ob2
    l1, l2, lb1, lb2 = c.l1, c.l2, c.lb1, c.lb2
    reg = _registry()

    def t(lb, O, *lam_ob):
        # lambda_bar_a Omega ^ lambda_b Omega_bar ^ ...
        out = O.scale(lb)
        for lam, ob in lam_ob:
            out = wedge(out, ob.scale(lam))
        return out

    if part == "c":
        return [
            ("h11_rep_eta1", reg["h11_rep_eta1"].value, t(lb1, O1, (l1, Ob2)) + t(lb2, O1, (l2, Ob2))),
            ("h11_rep_eta2", reg["h11_rep_eta2"].value, t(lb1, O2, (l1, Ob1)) + t(lb2, O2, (l2, Ob1))),
            ("h11_rep_eta3", reg["h11_rep_eta3"].value,
             t(lb1, O1, (l1, Ob1)) + t(lb2, O1, (l2, Ob1)) - t(lb2, O2, (l2, Ob2)) - t(lb1, O2, (l1, Ob2))),
        ]
    if part == "d":
        return [
            ("h12_rep_o1_l1", reg["h12_rep_o1_l1"].value,
             t(lb1, O1, (l1, Ob1), (l1, Ob2)) + t(lb2, O1, (l1, Ob1), (l2, Ob2))),
            ("h12_rep_o1_l2", reg["h12_rep_o1_l2"].value,
             t(lb1, O1, (l1, Ob1), (l2, Ob2)) + t(lb2, O1, (l2, Ob1), (l2, Ob2))),
            ("h12_rep_o2_l1", reg["h12_rep_o2_l1"].value,
             t(lb1, O2, (l1, Ob1), (l1, Ob2)) + t(lb2, O2, (l1, Ob1), (l2, Ob2))),
            ("h12_rep_o2_l2", reg["h12_rep_o2_l2"].value,
             t(lb1, O2, (l1, Ob1), (l2, Ob2)) + t(lb2, O2, (l2, Ob1), (l2, Ob2))),
        ]
    raise ValueError("part must be 'c' or 'd'")
