"""Named verification checks over the catalog, the operators and the
diamond arithmetic.  Every check is deterministic: random inputs come from
a fixed-seed generator.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from . import catalog, diamonds
from .exterior import SIGMA, BidegreeError, Form, del_delbar, d_oracle, exterior_derivative, gen, wedge
from .hodge import COFRAME, antilinear_star, harmonicity, independence_rank, inner_product, linear_star
from .scalars import ONE, GaussianRational, Polynomial, RationalFunction

__all__ = [
    "CheckResult",
    "CHECKS",
    "check_names",
    "run_check",
    "run_all",
    "coverage_audit",
    "random_scalar",
    "random_form",
    "UnknownCheckError",
]

SEED = 20240229
SAMPLE_POINTS = (0, 1, 2)

Witness = Union[Form, str, None]


class UnknownCheckError(KeyError):
    pass


@dataclass
class CheckResult:
    name: str
    title: str
    paper_location: str
    status: str
    witness: Witness = None
    runtime_ms: float = 0.0
    details: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def witness_text(self) -> Optional[str]:
        if self.witness is None:
            return None
        return str(self.witness)


class _Ctx:
    """Collects the sub-claims of one check."""

    def __init__(self):
        self.details: List[str] = []
        self.failures: List[Tuple[str, Witness]] = []

    def claim(self, label: str, ok: bool, witness: Witness = None):
        self.details.append(f"{'ok  ' if ok else 'FAIL'} {label}")
        if not ok:
            self.failures.append((label, witness if witness else f"{label} does not hold"))

    def equal(self, label: str, a, b):
        diff = a - b
        self.claim(label, not diff, diff)

    def zero(self, label: str, a: Form):
        self.claim(label, not a, a)

    def note(self, text: str):
        self.details.append(f"info {text}")


@dataclass(frozen=True)
class _Check:
    name: str
    title: str
    paper_location: str
    run: Callable[[_Ctx], None]
    entries: Tuple[str, ...] = ()
    predicates: Tuple[str, ...] = ()


# ---------------------------------------------------------------------------
# random inputs

_DENOMINATORS = None


def _denominators():
    global _DENOMINATORS
    if _DENOMINATORS is None:
        m = Polynomial({(1, 0): 1})
        mb = Polynomial({(0, 1): 1})
        one = Polynomial({(0, 0): 1})
        D = one + m * mb
        _DENOMINATORS = [one, one, D, D * D, m + Polynomial({(0, 0): 2}), mb * mb + one]
    return _DENOMINATORS


def random_scalar(rng: random.Random, max_degree: int = 2) -> RationalFunction:
    """A small rational function with Gaussian-integer coefficients."""
    terms = {}
    for _ in range(rng.randint(1, 3)):
        i = rng.randint(0, max_degree)
        j = rng.randint(0, max_degree - i)
        terms[(i, j)] = GaussianRational(rng.randint(-3, 3), rng.choice((0, 0, rng.randint(-2, 2))))
    num = Polynomial(terms)
    if num.is_zero():
        num = Polynomial({(0, 0): 1})
    return RationalFunction(num, rng.choice(_denominators()))


def random_form(rng: random.Random, bidegree: Optional[Tuple[int, int]] = None,
                n_terms: Optional[int] = None) -> Form:
    """Random sigma-frame form; homogeneous when ``bidegree`` is given."""
    if bidegree is None:
        k = rng.randint(0, 6)
        monos = list(combinations(range(6), k))
    else:
        p, q = bidegree
        monos = [a + b for a in combinations(range(3), p) for b in combinations(range(3, 6), q)]
    n = n_terms or rng.randint(1, 3)
    terms = {}
    for mono in rng.sample(monos, min(n, len(monos))):
        terms[mono] = random_scalar(rng)
    return Form(terms)


def random_bidegree(rng: random.Random, max_total: int = 6) -> Tuple[int, int]:
    while True:
        p, q = rng.randint(0, 3), rng.randint(0, 3)
        if p + q <= max_total:
            return p, q


# ---------------------------------------------------------------------------
# property evaluation

def evaluate_property(entry: catalog.CatalogEntry, predicate: str, metric=None) -> Tuple[bool, Witness]:
    """(holds, witness) for a catalog predicate name."""
    a = entry.value
    if predicate == "delbar_closed":
        w = del_delbar(a)[1]
        return not w, w
    if predicate == "d_closed":
        w = exterior_derivative(a)
        return not w, w
    if predicate == "ddbar_closed":
        w = del_delbar(del_delbar(a)[1])[0]
        return not w, w
    flavor = {"delbar_harmonic": "delbar", "bc_harmonic": "bc", "aeppli_harmonic": "aeppli"}[predicate]
    r = harmonicity(a, metric or catalog.paper_metric(), flavor)
    return r.holds, r.witness


def _entry_claims(ctx: _Ctx, names: Sequence[str], predicates: Sequence[str]):
    for name in names:
        entry = catalog.lookup(name)
        for pred, expected in entry.expected_properties:
            if pred not in predicates:
                continue
            holds, witness = evaluate_property(entry, pred)
            ctx.claim(f"{name}: {pred} is {holds}, expected {expected}", holds == expected,
                      witness if witness else f"{name}: {pred} is {holds}")


def _rank_claim(ctx: _Ctx, names: Sequence[str], expected: int):
    rank = independence_rank([catalog.lookup(n).value for n in names], SAMPLE_POINTS)
    ctx.claim(f"constant-coefficient rank of {', '.join(names)} at m in {SAMPLE_POINTS} = {expected}",
              rank == expected, f"rank is {rank}")


# ---------------------------------------------------------------------------
# the checks

H01 = ("h01_rep_l1o1", "h01_rep_l1o2", "h01_rep_l2o1", "h01_rep_l2o2")
H02 = ("h02_rep_l1l1", "h02_rep_l2l2", "h02_rep_l1l2")
H11 = ("h11_rep_fs", "h11_rep_eta1", "h11_rep_eta2", "h11_rep_eta3")
H12 = ("h12_rep_o1_l1", "h12_rep_o1_l2", "h12_rep_o2_l1", "h12_rep_o2_l2")
ETAS = H11[1:]
EXTRAS = ("aeppli_extra_1", "aeppli_extra_2")
TWISTED = ("h2_twisted_0", "h2_twisted_1", "h2_twisted_2")
OMEGA_BARS = tuple(f"omega_bar_{k}" for k in range(4))
DBAR = ("delbar_closed", "delbar_harmonic")


def _c1(ctx: _Ctx):
    for name in ("sigma_bar_1", "sigma_bar_2", "sigma_1", "sigma_2"):
        a = catalog.lookup(name).value
        ctx.equal(f"d_oracle({name}) = d({name})", d_oracle(a), exterior_derivative(a))


def _c2(ctx: _Ctx):
    for name, mu_side, lam_side in catalog.omega_bar_identity_pairs():
        ctx.equal(f"{name}: sigma_bar form = lambda Omega_bar form", mu_side, lam_side)
        ctx.equal(f"{name}: catalog value = sigma_bar form", catalog.lookup(name).value, mu_side)
    _entry_claims(ctx, OMEGA_BARS, ("delbar_closed",))


def _c3(ctx: _Ctx):
    _entry_claims(ctx, H01, DBAR)
    _rank_claim(ctx, H01, 4)


def _c4(ctx: _Ctx):
    _entry_claims(ctx, H02 + TWISTED, DBAR)
    _rank_claim(ctx, H02, 3)
    c = catalog.chart()
    sb12 = wedge(c.sb1, c.sb2)
    reps = {catalog.lookup(n).value for n in H02}
    for l, name in enumerate(TWISTED):
        v = catalog.lookup(name).value
        ctx.equal(f"{name} reduces to m^{2 - l} sb1*sb2", v, sb12.scale(c.l1 ** (2 - l)))
        ctx.claim(f"{name} is one of the H^(0,2) representatives", v in reps, v)
    cross = wedge(c.Ob2.scale(c.l1), c.Ob1.scale(c.l2))
    ctx.equal("lambda_1 Omega_bar_2 ^ lambda_2 Omega_bar_1 = -m sb1*sb2", cross, sb12.scale(-c.l1))


def _c5(ctx: _Ctx):
    _entry_claims(ctx, H11, DBAR + ("d_closed",))
    _rank_claim(ctx, H11, 4)
    for name, rep, expansion in catalog.expansion_identities("c"):
        ctx.equal(f"{name} equals its lambda expansion", rep, expansion)
    g = catalog.paper_metric()
    fs = catalog.lookup("h11_rep_fs").value
    harmonic = antilinear_star(catalog.lookup("beta").value, g)
    ctx.note(f"astar(beta) = {harmonic}; its delbar-harmonicity: {harmonicity(harmonic, g, 'delbar').holds}")
    ctx.note(f"astar(h11_rep_fs) = {antilinear_star(fs, g)}")


def _c6(ctx: _Ctx):
    _entry_claims(ctx, H12, DBAR)
    _rank_claim(ctx, H12, 4)
    for name, rep, expansion in catalog.expansion_identities("d"):
        ctx.equal(f"{name} equals its lambda expansion", rep, expansion)


def _c7(ctx: _Ctx):
    g = catalog.paper_metric()
    beta = catalog.lookup("beta").value
    _entry_claims(ctx, ("beta",), DBAR)
    eta1, eta2 = catalog.lookup("h11_rep_eta1").value, catalog.lookup("h11_rep_eta2").value
    ctx.equal("beta = -eta1 ^ eta2", beta, -wedge(eta1, eta2))
    sb = antilinear_star(beta, g)
    fs = catalog.lookup("h11_rep_fs").value
    (mono, f), = fs.terms.items()
    single = set(sb.terms) == {mono}
    ctx.claim("astar(beta) is a scalar multiple of dm*dmb/(1+m*mb)^2", single, sb)
    if single:
        ctx.note(f"astar(beta) = ({sb.terms[mono] / f}) * dm*dmb/(1+m*mb)^2")
    ctx.zero("delbar(astar(beta)) = 0", del_delbar(sb)[1])


def _c8(ctx: _Ctx):
    _entry_claims(ctx, ETAS, ("d_closed", "bc_harmonic"))
    _entry_claims(ctx, EXTRAS, ("ddbar_closed",))
    _entry_claims(ctx, H12, ("aeppli_harmonic",))
    g = catalog.paper_metric()
    for name in EXTRAS:
        r = harmonicity(catalog.lookup(name).value, g, "aeppli")
        ctx.note(f"{name}: aeppli_harmonic = {r.holds} (reported, not required)")


def _c9(ctx: _Ctx):
    for name in SIGMA.generators:
        try:
            del_delbar(gen(name))
            ctx.claim(f"d({name}) has pure type", True)
        except BidegreeError as exc:
            ctx.claim(f"d({name}) has pure type", False, str(exc))
    rng = random.Random(SEED + 9)
    bad = 0
    for n in range(100):
        a = random_form(rng, random_bidegree(rng, 5))
        try:
            del_delbar(a)
        except BidegreeError as exc:
            bad += 1
            ctx.claim(f"random form #{n}: d has pure type", False, f"{a}: {exc}")
    if not bad:
        ctx.claim("100 random (p,q)-forms: d has parts only in (p+1,q) and (p,q+1)", True)


def _c10(ctx: _Ctx):
    t = diamonds.TORUS
    nums = diamonds.CohomologyNumbers(h11_bc=4, h11_a=5, h12_bc=4, h11=4, h12=4)
    hodge = diamonds.diamond(t, "hodge", nums)
    expected = {
        (0, 0): 1, (1, 0): 0, (0, 1): 4, (2, 0): 0, (1, 1): 4, (0, 2): 3,
        (3, 0): 0, (2, 1): 4, (1, 2): 4, (0, 3): 0, (3, 1): 3, (2, 2): 4, (1, 3): 0,
        (3, 2): 4, (2, 3): 0, (3, 3): 1,
    }
    wrong = {pq: hodge.value(*pq) for pq, v in expected.items() if hodge.value(*pq) != v}
    ctx.claim("Hodge diamond of the torus twistor space", not wrong, f"mismatched entries {wrong}")
    fro = diamonds.frolicher_E1_check(t, regular=True)
    ctx.claim("E1 degeneration gives h11 = b0 + b+ = 4 and h12 = b3/2 = 4",
              fro.consistent and fro.hodge_numbers["h11"] == 4 and fro.hodge_numbers["h12"] == 4,
              "\n".join(fro.trace))
    d2 = diamonds.delta(2, t, nums).value
    ctx.claim("Delta^2 = 4 + 5 - 8 = 1 > 0", d2 == 1 and d2 > 0, f"Delta^2 = {d2}")
    ctx.claim("Delta^2 from diamond entries agrees", diamonds.delta_from_diamonds(2, t, nums) == d2,
              f"sum rule gives {diamonds.delta_from_diamonds(2, t, nums)}")
    verdict = diamonds.ddbar_decision(t, nums, "A")
    ctx.claim("torus fails the del-delbar-lemma", not verdict.holds, verdict.summary())


def _c11(ctx: _Ctx):
    r = diamonds.frolicher_E1_check(diamonds.FAKE_PROJECTIVE_PLANE, regular=True)
    ctx.claim("E1 = E_infinity is contradictory for (b1, b+, b-) = (0, 1, 0)", not r.consistent,
              "consistent: " + "; ".join(r.trace))
    for line in r.trace:
        ctx.note(line)


def _c12(ctx: _Ctx):
    g = catalog.paper_metric()
    vol = g.volume()
    monos = [mono for k in range(7) for mono in combinations(range(6), k)]
    basis = {mono: g.from_coframe(Form({mono: ONE}, COFRAME)) for mono in monos}
    stars = {mono: antilinear_star(b, g) for mono, b in basis.items()}
    bad = []
    for a in monos:
        for b in monos:
            if len(a) != len(b):
                continue
            lhs = wedge(basis[a], stars[b])
            rhs = vol.scale(inner_product(basis[a], basis[b], g))
            if lhs != rhs:
                bad.append((a, b, lhs - rhs))
    ctx.claim("a ^ astar(b) = <a, b> vol on all pairs of coframe basis monomials", not bad,
              bad[0][2] if bad else None)
    bad_sq = []
    for mono, b in basis.items():
        k = len(mono)
        if linear_star(linear_star(b, g), g) != b.scale(-1 if k & 1 else 1):
            bad_sq.append(mono)
    ctx.claim("star(star(a)) = (-1)^k a on all coframe basis monomials", not bad_sq,
              f"fails on coframe monomials {bad_sq}")


CHECKS: Dict[str, _Check] = {
    c.name: c
    for c in (
        _Check("C1", "structure-equations-oracle", "structure equations for d sigma_bar_j", _c1),
        _Check("C2", "omega-bar-identities", "two descriptions of omega_bar_k", _c2, OMEGA_BARS, ("delbar_closed",)),
        _Check("C3", "h01-reps", "H^(0,1) representatives of the torus twistor space", _c3, H01, DBAR),
        _Check("C4", "h02-reps", "H^(0,2) representatives and the twisted 2-forms spanning H^2(Z, O)", _c4,
               H02 + TWISTED, DBAR),
        _Check("C5", "h11-reps", "H^(1,1) representatives and their lambda expansions", _c5, H11,
               DBAR + ("d_closed",)),
        _Check("C6", "h12-reps", "H^(1,2) representatives and their lambda expansions", _c6, H12, DBAR),
        _Check("C7", "beta", "the harmonic (2,2)-form beta and its star", _c7, ("beta",), DBAR),
        _Check("C8", "bc-aeppli-reps", "Bott-Chern and Aeppli representatives on the torus twistor space", _c8,
               ETAS + EXTRAS + H12, ("d_closed", "bc_harmonic", "ddbar_closed", "aeppli_harmonic")),
        _Check("C9", "bidegree-integrability", "sigma frame of pure type; d splits as del + delbar", _c9),
        _Check("C10", "diamond-torus", "Hodge diamond of the torus twistor space; Delta^2 > 0", _c10),
        _Check("C11", "fpp-contradiction", "fake projective planes: E1 differs from E_infinity", _c11),
        _Check("C12", "star-axioms", "anti-linear Hodge star of the fixed metric", _c12),
    )
}


def check_names() -> List[str]:
    return sorted(CHECKS, key=lambda n: int(n[1:]))


def _lookup(name: str) -> _Check:
    key = name.upper()
    if key in CHECKS:
        return CHECKS[key]
    for c in CHECKS.values():
        if c.title == name:
            return c
    raise UnknownCheckError(f"unknown check {name!r}; registered: {', '.join(check_names())}")


def run_check(name: str) -> CheckResult:
    check = _lookup(name)
    ctx = _Ctx()
    start = time.perf_counter()
    check.run(ctx)
    elapsed = (time.perf_counter() - start) * 1000.0
    status = "fail" if ctx.failures else "pass"
    witness = ctx.failures[0][1] if ctx.failures else None
    return CheckResult(check.name, check.title, check.paper_location, status, witness, elapsed, ctx.details)


def run_all() -> List[CheckResult]:
    return [run_check(n) for n in check_names()]


def coverage_audit() -> List[Tuple[str, str]]:
    """(entry, predicate) pairs of catalog expectations that no check verifies."""
    missing = []
    for entry in catalog.entries():
        for pred, _ in entry.expected_properties:
            if not any(entry.name in c.entries and pred in c.predicates for c in CHECKS.values()):
                missing.append((entry.name, pred))
    return missing
