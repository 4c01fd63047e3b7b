"""Discrepancies, canonical-class ledgers, and exact bound checkers.

The discrepancies a_j of a resolution chain solve the tridiagonal
system

    -b_1 a_1 + a_2           = b_1 - 2
    a_{j-1} - b_j a_j + a_{j+1} = b_j - 2      (1 < j < r)
    a_{r-1} - b_r a_r        = b_r - 2

exactly (the matrix is diagonally dominant, so the forward sweep never
divides by zero).  Orientation: the chain [b_1..b_r] read left to
right is n/q, so a_1 pairs with q and a_r with q' -- the ends satisfy
a_1 = -1 + (q+1)/n and a_r = -1 + (q'+1)/n.

All values are exact rationals; verdicts come with exact slack, never
rounded.  Pure functions over immutable data throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import Chain, evaluate_chain, inverse_mod
from .errors import IncompleteLedger, MissingParameter
from .render import rational_fields


@dataclass(frozen=True)
class Discrepancies:
    """Solution vector a_1..a_r plus the sweep coefficients that built it."""

    a: tuple[Fraction, ...]
    aux_c: tuple[Fraction, ...]
    aux_d: tuple[Fraction, ...]


def discrepancies(chain: Chain) -> Discrepancies:
    """Exact tridiagonal sweep for the discrepancy vector of a strict chain."""
    if not chain or any(b < 2 for b in chain):
        raise ValueError("strict nonempty chain required")
    r = len(chain)
    c: list[Fraction] = []
    d: list[Fraction] = []
    for j, b in enumerate(chain):
        denom = Fraction(-b) - (c[j - 1] if j else Fraction(0))
        if j < r - 1:
            c.append(Fraction(1) / denom)
        d.append((Fraction(b - 2) - (d[j - 1] if j else Fraction(0))) / denom)
    a = [Fraction(0)] * r
    a[r - 1] = d[r - 1]
    for j in range(r - 2, -1, -1):
        a[j] = d[j] - c[j] * a[j + 1]
    return Discrepancies(a=tuple(a), aux_c=tuple(c), aux_d=tuple(d))


def correction_term(n: int, q: int) -> Fraction:
    """(2(n-1) - q - q')/n, the local canonical correction; lies in [0, 2)."""
    qp = inverse_mod(n, q)
    value = Fraction(2 * (n - 1) - q - qp, n)
    assert 0 <= value < 2
    return value


@dataclass(frozen=True)
class VolumeLedger:
    """Exact record tying a chain to the canonical-class bookkeeping.

    kw2 = ks2 + sum(b_j - 2) - m - correction, and kx2 = ks2 - m; lam
    (the pullback degree of the minimal model's canonical class on the
    chain) and chi are caller-supplied when known.
    """

    kw2: Fraction
    ks2: int
    kx2: Fraction
    m: int
    lam: Fraction | None
    correction: Fraction
    chi: int | None = None


def k2_ledger(
    chain: Chain,
    ks2: int,
    m: int,
    lam: Fraction | None = None,
    chi: int | None = None,
) -> VolumeLedger:
    """Fill the ledger for a strict chain with m blow-downs below it."""
    if m < 0:
        raise ValueError("m must be >= 0")
    n, q = evaluate_chain(chain)
    corr = correction_term(n, q)
    weight = sum(b - 2 for b in chain)
    kw2 = Fraction(ks2) + weight - m - corr
    kx2 = kw2 + sum(2 - b for b in chain) + corr
    assert kx2 == ks2 - m
    return VolumeLedger(kw2=kw2, ks2=ks2, kx2=kx2, m=m, lam=lam, correction=corr, chi=chi)


_DELTA_PARAMS = {
    "A": (),
    "B1": ("l",),
    "B2": (),
    "C1": ("k",),
    "C2": ("k", "l"),
    "D1": ("k", "l"),
    "D2": ("l",),
    "D3": (),
}


@dataclass(frozen=True)
class DeltaCase:
    """One exceptional-divisor configuration case with its parameters.

    l counts boxed curves at the left end of the chain, k at the right
    end; each case requires exactly the parameters its formula uses.
    """

    label: str
    l: int | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        if self.label not in _DELTA_PARAMS:
            raise ValueError(f"unknown case label {self.label!r}")
        for name in ("l", "k"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be >= 0")


def delta_from_case(case: DeltaCase) -> int:
    """Number of exceptional divisors meeting the chain exactly once."""
    required = _DELTA_PARAMS[case.label]
    for name in required:
        if getattr(case, name) is None:
            raise MissingParameter(f"case {case.label} needs parameter {name}")
    for name in ("l", "k"):
        if name not in required and getattr(case, name) is not None:
            raise ValueError(f"case {case.label} takes no parameter {name}")
    l, k = case.l, case.k
    return {
        "A": lambda: 0,
        "B1": lambda: l,
        "B2": lambda: 1,
        "C1": lambda: k + 1,
        "C2": lambda: k + l,
        "D1": lambda: l + k,
        "D2": lambda: l + 1,
        "D3": lambda: 2,
    }[case.label]()


@dataclass(frozen=True)
class BoundCheck:
    """One inequality with exact sides; holds=None means not evaluated."""

    name: str
    lhs: Fraction | None
    rhs: Fraction | None
    slack: Fraction | None
    holds: bool | None

    def to_record(self) -> dict:
        rec: dict = {"inequality": self.name}
        for key, value in (("lhs", self.lhs), ("rhs", self.rhs), ("slack", self.slack)):
            rec.update(rational_fields(key, value))
        rec["verdict"] = self.holds
        return rec


@dataclass(frozen=True)
class BoundReport:
    checks: tuple[BoundCheck, ...]

    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks if c.holds is not None)


def _evaluated(name: str, lhs: Fraction, rhs: Fraction) -> BoundCheck:
    return BoundCheck(name=name, lhs=lhs, rhs=rhs, slack=rhs - lhs, holds=lhs <= rhs)


def check_main_bounds(chain: Chain, ledger: VolumeLedger, delta: int) -> BoundReport:
    """The two singularity bounds, plus the chi-gated length refinement.

    (weight-sum)  sum(b_j - 2) <= 2(kw2 - ks2) + 2*correction + delta - lam
    (length)      r <= 13 kw2 - 2 ks2 + 38 - (2+q+q')/n + delta - lam
    (length-chi)  r <= 12 chi - (4/3) kw2 - A - (1 - 1/n)   [chi supplied]
    (noether)     chi <= kw2 + 3                            [chi supplied]

    with A = sum(2 - b_j) + correction.  Checks needing chi are
    reported unevaluated when it is absent; a missing lam is an error
    since both main bounds depend on it.
    """
    if ledger.lam is None:
        raise IncompleteLedger("lambda is required for the main bounds")
    n, q = evaluate_chain(chain)
    qp = inverse_mod(n, q)
    r = len(chain)
    weight = Fraction(sum(b - 2 for b in chain))
    corr = ledger.correction
    lam = ledger.lam
    checks = [
        _evaluated(
            "weight-sum",
            weight,
            2 * (ledger.kw2 - ledger.ks2) + 2 * corr + delta - lam,
        ),
        _evaluated(
            "length",
            Fraction(r),
            13 * ledger.kw2 - 2 * ledger.ks2 + 38 - Fraction(2 + q + qp, n) + delta - lam,
        ),
    ]
    if ledger.chi is not None:
        a_term = -weight + corr
        checks.append(
            _evaluated(
                "length-chi",
                Fraction(r),
                12 * ledger.chi - Fraction(4, 3) * ledger.kw2 - a_term - (1 - Fraction(1, n)),
            )
        )
        checks.append(_evaluated("noether", Fraction(ledger.chi), ledger.kw2 + 3))
    else:
        checks.append(BoundCheck("length-chi", None, None, None, None))
        checks.append(BoundCheck("noether", None, None, None, None))
    return BoundReport(checks=tuple(checks))


def check_genT_delta_bound(chain: Chain, delta: int) -> BoundCheck:
    """2*delta <= sum(a_j - 2) - 2, with exact slack."""
    if not chain or any(b < 2 for b in chain):
        raise ValueError("strict nonempty chain required")
    weight = sum(b - 2 for b in chain)
    return _evaluated("gen-t-delta", Fraction(2 * delta), Fraction(weight - 2))


def bridge_degree(n: int, q: int) -> Fraction:
    """Degree of the canonical class on a (-1)-curve joining the chain ends.

    Exactly n(n - (2+q+q')) / ((n+q)(2n-q') + 1); zero precisely on
    the center-[4] family, positive iff n > 2 + q + q'.
    """
    qp = inverse_mod(n, q)
    return Fraction(n * (n - (2 + q + qp)), (n + q) * (2 * n - qp) + 1)
