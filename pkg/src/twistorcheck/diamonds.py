"""Cohomology-number arithmetic for twistor spaces of compact self-dual
4-manifolds: Betti numbers, Hodge / Bott-Chern / Aeppli diamonds, the
defects Delta^k and the del-delbar-lemma criteria.

Inputs are bare integers.  Nothing here decides whether a manifold with the
given numbers exists; impossible combinations produce flags, not errors.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

__all__ = [
    "TopologicalInput",
    "CohomologyNumbers",
    "Known",
    "Unknown",
    "Diamond",
    "DeltaReport",
    "DdbarVerdict",
    "FrolicherResult",
    "MissingNumberError",
    "betti_Z",
    "diamond",
    "delta",
    "delta_from_diamonds",
    "ddbar_decision",
    "frolicher_E1_check",
    "TORUS",
    "S4",
    "FAKE_PROJECTIVE_PLANE",
    "S1_X_S3",
]

N = 3  # complex dimension of Z


class MissingNumberError(ValueError):
    """A computation needs a cohomology number that was not supplied."""

    def __init__(self, name: str, purpose: str):
        super().__init__(f"{purpose} needs {name}")
        self.name = name


@dataclass(frozen=True)
class TopologicalInput:
    b1: int
    b_plus: int
    b_minus: int

    def __post_init__(self):
        for label in ("b1", "b_plus", "b_minus"):
            if getattr(self, label) < 0:
                raise ValueError(f"{label} must be nonnegative")

    @property
    def b2(self) -> int:
        return self.b_plus + self.b_minus


TORUS = TopologicalInput(4, 3, 3)
S4 = TopologicalInput(0, 0, 0)
FAKE_PROJECTIVE_PLANE = TopologicalInput(0, 1, 0)
S1_X_S3 = TopologicalInput(1, 0, 0)


@dataclass(frozen=True)
class CohomologyNumbers:
    """Candidate values for the undetermined entries.

    h11_bc, h11_a, h12_bc are Bott-Chern / Aeppli numbers; h11 and h12 are
    the Dolbeault numbers used to fill the Hodge diamond.
    """

    h11_bc: Optional[int] = None
    h11_a: Optional[int] = None
    h12_bc: Optional[int] = None
    h11: Optional[int] = None
    h12: Optional[int] = None

    def require(self, name: str, purpose: str) -> int:
        value = getattr(self, name)
        if value is None:
            raise MissingNumberError(name, purpose)
        return value


@dataclass(frozen=True)
class Known:
    value: int


@dataclass(frozen=True)
class Unknown:
    symbol: str


Entry = Union[Known, Unknown]


@dataclass
class Diamond:
    kind: str
    entries: Dict[Tuple[int, int], Entry]
    warnings: List[str] = field(default_factory=list)

    def __getitem__(self, pq: Tuple[int, int]) -> Entry:
        return self.entries[pq]

    def value(self, p: int, q: int) -> Optional[int]:
        e = self.entries[(p, q)]
        return e.value if isinstance(e, Known) else None

    def unknowns(self) -> List[str]:
        return sorted({e.symbol for e in self.entries.values() if isinstance(e, Unknown)})

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "entries": [
                {
                    "p": p,
                    "q": q,
                    "value": e.value if isinstance(e, Known) else None,
                    "symbol": e.symbol if isinstance(e, Unknown) else None,
                }
                for (p, q), e in sorted(self.entries.items())
            ],
            "warnings": list(self.warnings),
        }

    def render(self) -> str:
        """Triangular layout: h^{0,0} on top, h^{3,3} at the bottom, p
        decreasing from left to right within a row."""
        if self.kind == "betti":
            return "  ".join(f"b{k}={self.entries[(k, 0)].value}" for k in range(2 * N + 1))
        cells = {pq: (str(e.value) if isinstance(e, Known) else e.symbol) for pq, e in self.entries.items()}
        width = max(len(c) for c in cells.values()) + 2
        lines = []
        for k in range(2 * N + 1):
            row = [(p, k - p) for p in range(N, -1, -1) if 0 <= k - p <= N]
            indent = " " * ((N + 1 - len(row)) * width // 2 * 1)
            lines.append(indent + "".join(cells[pq].center(width) for pq in row).rstrip())
        return "\n".join(lines)

    def __str__(self):
        return self.render()


def betti_Z(t: TopologicalInput) -> List[int]:
    """b_0..b_6 of the twistor space; the upper half follows by Poincare duality."""
    b0, b1, b2, b3 = 1, t.b1, t.b2 + 1, 2 * t.b1
    return [b0, b1, b2, b3, b2, b1, b0]


def _inequality_warnings(t: TopologicalInput, n: CohomologyNumbers) -> List[str]:
    out = []
    if n.h11_bc is not None and n.h11_a is not None and n.h11_bc + n.h11_a < 2 * (t.b_plus + 1):
        out.append(f"h11_bc + h11_a = {n.h11_bc + n.h11_a} < 2(b+ + 1) = {2 * (t.b_plus + 1)}")
    if n.h12_bc is not None and n.h12_bc < t.b1:
        out.append(f"h12_bc = {n.h12_bc} < b1 = {t.b1}")
    return out


def _hodge(t: TopologicalInput, n: CohomologyNumbers) -> Dict[Tuple[int, int], Entry]:
    h11 = Known(n.h11) if n.h11 is not None else None
    h12 = Known(n.h12) if n.h12 is not None else None
    return {
        (0, 0): Known(1),
        (1, 0): Known(0), (0, 1): Known(t.b1),
        (2, 0): Known(0), (1, 1): h11 or Unknown("h11"), (0, 2): Known(t.b_minus),
        (3, 0): Known(0), (2, 1): h12 or Unknown("h21"), (1, 2): h12 or Unknown("h12"), (0, 3): Known(0),
        (3, 1): Known(t.b_minus), (2, 2): h11 or Unknown("h22"), (1, 3): Known(0),
        (3, 2): Known(t.b1), (2, 3): Known(0),
        (3, 3): Known(1),
    }


def _bott_chern(t: TopologicalInput, n: CohomologyNumbers) -> Dict[Tuple[int, int], Entry]:
    def k_or(value, symbol):
        return Known(value) if value is not None else Unknown(symbol)

    return {
        (0, 0): Known(1),
        (1, 0): Known(0), (0, 1): Known(0),
        (2, 0): Known(0), (1, 1): k_or(n.h11_bc, "h11"), (0, 2): Known(0),
        (3, 0): Known(0), (2, 1): k_or(n.h12_bc, "h21"), (1, 2): k_or(n.h12_bc, "h12"), (0, 3): Known(0),
        # h^{2,2}_BC = h^{1,1}_A by star duality
        (3, 1): Known(t.b_minus), (2, 2): k_or(n.h11_a, "h22"), (1, 3): Known(t.b_minus),
        (3, 2): Known(t.b1), (2, 3): Known(t.b1),
        (3, 3): Known(1),
    }


def _aeppli(t: TopologicalInput, n: CohomologyNumbers) -> Dict[Tuple[int, int], Entry]:
    bc = _bott_chern(t, n)
    out = {}
    for (p, q) in bc:
        e = bc[(N - p, N - q)]
        out[(p, q)] = e if isinstance(e, Known) else Unknown(f"h{p}{q}")
    return out


_KINDS = {"hodge": _hodge, "bott_chern": _bott_chern, "aeppli": _aeppli}
_ALIASES = {"bc": "bott_chern", "a": "aeppli", "dolbeault": "hodge"}


def diamond(t: TopologicalInput, kind: str, numbers: Optional[CohomologyNumbers] = None) -> Diamond:
    kind = _ALIASES.get(kind, kind)
    numbers = numbers or CohomologyNumbers()
    if kind == "betti":
        return Diamond("betti", {(k, 0): Known(b) for k, b in enumerate(betti_Z(t))})
    try:
        build = _KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown diamond kind {kind!r}") from None
    return Diamond(kind, build(t, numbers), _inequality_warnings(t, numbers))


@dataclass(frozen=True)
class DeltaReport:
    k: int
    value: int


def delta(k: int, t: TopologicalInput, numbers: Optional[CohomologyNumbers] = None) -> DeltaReport:
    """Closed forms for Delta^k on a twistor space; k > 3 by Delta^k = Delta^(6-k)."""
    if not 0 <= k <= 2 * N:
        raise ValueError("k must lie in 0..6")
    numbers = numbers or CohomologyNumbers()
    j = min(k, 2 * N - k)
    if j in (0, 1):
        return DeltaReport(k, 0)
    if j == 2:
        h11_bc = numbers.require("h11_bc", f"Delta^{k}")
        h11_a = numbers.require("h11_a", f"Delta^{k}")
        return DeltaReport(k, h11_bc + h11_a - 2 * (t.b_plus + 1))
    h12_bc = numbers.require("h12_bc", f"Delta^{k}")
    return DeltaReport(k, 4 * (h12_bc - t.b1))


def delta_from_diamonds(k: int, t: TopologicalInput, numbers: CohomologyNumbers) -> int:
    """Delta^k summed entry by entry from the BC and Aeppli diamonds."""
    bc = diamond(t, "bott_chern", numbers)
    ae = diamond(t, "aeppli", numbers)
    total = 0
    for p in range(N + 1):
        q = k - p
        if not 0 <= q <= N:
            continue
        for dia in (bc, ae):
            v = dia.value(p, q)
            if v is None:
                raise MissingNumberError(dia.entries[(p, q)].symbol, f"{dia.kind} entry ({p},{q})")
            total += v
    return total - 2 * betti_Z(t)[k]


# ---------------------------------------------------------------------------
# del-delbar-lemma

@dataclass
class DdbarVerdict:
    mode: str
    holds: bool
    conditions: List[Tuple[str, bool]]
    deltas: Dict[int, int] = field(default_factory=dict)
    betti_profile: Optional[List[int]] = None
    bc_diamond: Optional[Diamond] = None
    flags: List[str] = field(default_factory=list)

    def summary(self) -> str:
        if self.holds:
            return "YES"
        failed = [c for c, ok in self.conditions if not ok]
        if 2 in self.deltas and self.deltas[2] != 0:
            return f"NO: Delta^2={self.deltas[2]}"
        if 3 in self.deltas and self.deltas[3] != 0:
            return f"NO: Delta^3={self.deltas[3]}"
        return "NO: " + "; ".join(failed)


def _conditions(mode: str, t: TopologicalInput, n: CohomologyNumbers):
    """[(label, value or None when a number is missing, missing name)]."""
    if mode == "A":
        d2 = None if n.h11_bc is None or n.h11_a is None else n.h11_bc + n.h11_a - 2 * (t.b_plus + 1)
        return [
            ("h11_bc + h11_a = 2(b+ + 1)", None if d2 is None else d2 == 0, "h11_bc" if n.h11_bc is None else "h11_a"),
            ("h12_bc = b1", None if n.h12_bc is None else n.h12_bc == t.b1, "h12_bc"),
        ]
    if mode == "B":
        return [
            ("h10_A = b1 = 0", t.b1 == 0, None),
            ("h11_bc = b+ + 1", None if n.h11_bc is None else n.h11_bc == t.b_plus + 1, "h11_bc"),
            ("h11_a = b+ + 1", None if n.h11_a is None else n.h11_a == t.b_plus + 1, "h11_a"),
            ("h20_A = b- = 0", t.b_minus == 0, None),
        ]
    raise ValueError(f"mode must be 'A' or 'B', got {mode!r}")


def _evaluate_mode(mode, t, n) -> Optional[bool]:
    conds = _conditions(mode, t, n)
    if any(v is False for _, v, _ in conds):
        return False
    if any(v is None for _, v, _ in conds):
        return None
    return True


def ddbar_decision(t: TopologicalInput, numbers: CohomologyNumbers, mode: str = "A") -> DdbarVerdict:
    """Decide the del-delbar-lemma for Z from cohomology numbers.

    Mode A: h11_bc + h11_a = 2(b+ + 1) and h12_bc = b1.
    Mode B: h10_A = 0, h11_bc = h11_a = b+ + 1, h20_A = 0 (with h10_A = b1,
    h20_A = b-).  A verdict is returned as soon as one condition fails; a
    missing number is only an error when the verdict depends on it.
    """
    conds = _conditions(mode, t, numbers)
    failed = [label for label, v, _ in conds if v is False]
    if not failed:
        for label, v, missing in conds:
            if v is None:
                raise MissingNumberError(missing, f"mode {mode} condition '{label}'")
    holds = not failed
    deltas = {}
    for k in (1, 2, 3):
        try:
            deltas[k] = delta(k, t, numbers).value
        except MissingNumberError:
            pass
    verdict = DdbarVerdict(mode, holds, [(label, v is not False) for label, v, _ in conds], deltas)
    verdict.flags.extend(_inequality_warnings(t, numbers))
    other = _evaluate_mode("B" if mode == "A" else "A", t, numbers)
    if other is not None and other != holds:
        verdict.flags.append("non-realizable input: criteria A and B disagree")
    if holds:
        verdict.betti_profile = betti_Z(t)
        b = t.b_plus + 1
        entries = {(p, q): Known(0) for p in range(N + 1) for q in range(N + 1)}
        entries[(0, 0)] = entries[(3, 3)] = Known(1)
        entries[(1, 1)] = entries[(2, 2)] = Known(b)
        verdict.bc_diamond = Diamond("bott_chern", entries)
    return verdict


# ---------------------------------------------------------------------------
# Frolicher degeneration at E_1

@dataclass
class FrolicherResult:
    consistent: bool
    hodge_numbers: Dict[str, int]
    trace: List[str]

    def summary(self) -> str:
        if self.consistent:
            return "Consistent: " + ", ".join(f"{k}={v}" for k, v in self.hodge_numbers.items())
        return "Contradiction: " + " ".join(self.trace[-1:])


def frolicher_E1_check(t: TopologicalInput, regular: bool = False) -> FrolicherResult:
    """Assume E_1 = E_infinity and derive the Hodge numbers of Z.

    With ``regular`` the short exact sequence 0 -> H^2_+ -> H^{1,1} -> C -> 0
    and the kernel of H^{1,1} -> H^{2,1} (dimension b- + 1) are also imposed.
    """
    b = betti_Z(t)
    trace = []
    h01, h02 = t.b1, t.b_minus
    h11 = b[2] - h02
    trace.append(f"b2(Z) = {b[2]} = h20 + h11 + h02 = h11 + {h02}  =>  h11 = {h11}")
    h21 = b[3] // 2
    trace.append(f"b3(Z) = {b[3]} = h30 + h21 + h12 + h03 = 2*h21  =>  h21 = h12 = {h21}")
    numbers = {"h01": h01, "h02": h02, "h11": h11, "h21": h21, "h12": h21, "h22": h11}
    if regular:
        seq = t.b_plus + 1
        trace.append(f"exact sequence 0 -> H2+ -> H11 -> C -> 0  =>  h11 = b+ + 1 = {seq}")
        if seq != h11:
            trace.append(f"h11 = {h11} from Betti numbers, but the exact sequence forces h11 = {seq}")
            return FrolicherResult(False, numbers, trace)
        kernel = t.b_minus + 1
        trace.append(f"ker(H11 -> H21) = C + H2-  has dimension b- + 1 = {kernel}")
        if h21 == 0 and kernel != h11:
            trace.append(f"h21=0 => kernel dim must be {h11}, but equals b-+1={kernel}")
            return FrolicherResult(False, numbers, trace)
        if kernel > h11:
            trace.append(f"kernel dimension {kernel} exceeds h11 = {h11}")
            return FrolicherResult(False, numbers, trace)
        if h11 - kernel > h21:
            trace.append(f"rank of H11 -> H21 is {h11 - kernel}, larger than h21 = {h21}")
            return FrolicherResult(False, numbers, trace)
    return FrolicherResult(True, numbers, trace)
