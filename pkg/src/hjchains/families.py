"""Generators for volume accumulation sequences and exact limit reports.

Two concrete families are built here, plus the raw formation rule that
drives both.

* The formation rule sends n/q = [b_1..b_s] to N/Q = [b_1+1, b_2..b_s, 2]
  with N = 2q - m + 2n - q', Q = 2q - m, Q' = q + n, where qq' = 1 + mn.
  Its volume increment (2+Q+Q')/N - (2+q+q')/n is positive exactly when
  n > 2 + q + q', i.e. when the end-to-end bridge degree is positive,
  and that sign is preserved along the iteration.

* ``blowup_family`` iterates the rule from a strict seed chain whose
  bridge degree is positive, recording ampleness witnesses per step.

* ``example210_family`` runs the elliptic-cover chains
  [2 x k, 4+k, n0, 4] whose volumes climb to (4 n0^2 - 8 n0 + 2)/(4 n0 - 1).

Sequence terms are exact; kw2 always equals the ledger recomputation
sum(b_j - 2) - m(k) - correction + ks2, and limits are detected by
exact Cauchy differences against a caller tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import (
    Chain,
    CyclicQuotient,
    evaluate_chain,
    expand_fraction,
    format_chain,
    inverse_mod,
)
from .errors import IndexTooSmall, NotAmple, TooFewTerms
from .geometry import bridge_degree, correction_term, discrepancies


@dataclass(frozen=True)
class FormationStep:
    """(N, Q, Q', m) for one application of the formation rule."""

    N: int
    Q: int
    Qp: int
    m: int


def formation_rule(n: int, q: int) -> FormationStep:
    """One left-extension step on the fraction level.

    Requires n > 2.  The output satisfies Q*Q' == 1 (mod N) with both
    residues in (0, N); in debug builds the two displayed chains are
    re-expanded and compared entry by entry.
    """
    if n <= 2:
        raise IndexTooSmall(f"formation rule needs n > 2, got n = {n}")
    qp = inverse_mod(n, q)
    m = (q * qp - 1) // n
    step = FormationStep(N=2 * q - m + 2 * n - qp, Q=2 * q - m, Qp=q + n, m=m)
    assert 0 < step.Q < step.N and 0 < step.Qp < step.N
    assert step.Q * step.Qp % step.N == 1
    if __debug__:
        chain = expand_fraction(n, q)
        grown = (chain[0] + 1,) + chain[1:] + (2,)
        assert evaluate_chain(grown) == (step.N, step.Q)
        mirrored = (2,) + chain[:0:-1] + (chain[0] + 1,)
        assert evaluate_chain(mirrored) == (step.N, step.Qp)
    return step


def k2_step_value(n: int, q: int) -> Fraction:
    """Exact volume increment (2+Q+Q')/N - (2+q+q')/n of one formation step."""
    step = formation_rule(n, q)
    qp = inverse_mod(n, q)
    return Fraction(2 + step.Q + step.Qp, step.N) - Fraction(2 + q + qp, n)


@dataclass(frozen=True)
class FamilyTerm:
    k: int
    chain: Chain
    fraction: CyclicQuotient
    kw2: Fraction
    delta: int
    bridge: Fraction | None = None


@dataclass(frozen=True)
class AccumSequence:
    """Indexed family of (chain, fraction, kw2) terms with m(k) = m0 + k."""

    family: str
    terms: tuple[FamilyTerm, ...]
    ks2: int
    m0: int
    target: Fraction | None = None

    def table_lines(self) -> list[str]:
        """Tab-delimited rows: k, chain, n/q, exact kw2, 12-digit decimal."""
        from .render import decimal_str, rational_str

        lines = ["k\tchain\tn/q\tK^2 (exact)\tK^2 (decimal 12 digits)"]
        for t in self.terms:
            lines.append(
                f"{t.k}\t{format_chain(t.chain)}\t{t.fraction}\t"
                f"{rational_str(t.kw2)}\t{decimal_str(t.kw2)}"
            )
        return lines


def _ledger_kw2(chain: Chain, ks2: int, m: int, corr: Fraction) -> Fraction:
    return Fraction(ks2) + sum(b - 2 for b in chain) - m - corr


def _grown_chain(seed: Chain, k: int) -> Chain:
    return (seed[0] + k,) + seed[1:] + (2,) * k


def formation_family(
    n: int, q: int, kmax: int, ks2: int = 0, m0: int = 0
) -> AccumSequence:
    """Iterate the formation rule from a fraction, no ampleness gate.

    Term k carries the chain [b_1+k, b_2..b_r, 2 x k] and the ledger
    volume with m(k) = m0 + k.  On a zero-bridge seed the volume stays
    constant; on a positive-bridge seed it strictly increases.
    """
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    seed = expand_fraction(n, q)
    terms = []
    cur_n, cur_q = n, q
    kw2 = _ledger_kw2(seed, ks2, m0, correction_term(n, q))
    for k in range(kmax + 1):
        chain = _grown_chain(seed, k)
        assert evaluate_chain(chain) == (cur_n, cur_q)
        frac = CyclicQuotient(cur_n, cur_q)
        corr = correction_term(cur_n, cur_q)
        assert kw2 == _ledger_kw2(chain, ks2, m0 + k, corr)
        terms.append(
            FamilyTerm(
                k=k,
                chain=chain,
                fraction=frac,
                kw2=kw2,
                delta=k,
                bridge=bridge_degree(cur_n, cur_q),
            )
        )
        if k < kmax:
            kw2 += k2_step_value(cur_n, cur_q)
            step = formation_rule(cur_n, cur_q)
            cur_n, cur_q = step.N, step.Q
    return AccumSequence(
        family=f"formation({n}/{q})", terms=tuple(terms), ks2=ks2, m0=m0
    )


def blowup_family(
    seed: Chain,
    kmax: int,
    ks2: int = 0,
    m0: int = 0,
    witnesses: bool = True,
) -> AccumSequence:
    """Left-end blow-up tower over a strict seed chain.

    The seed must have positive bridge degree (NotAmple otherwise);
    term k is [b_1+k, b_2..b_r, 2 x k].  With ``witnesses`` on, each
    step additionally checks bridge positivity, a positive volume
    increment, and the strict discrepancy drop a_j > a_j' at every
    shared index.  The mirrored right-end tower is the same family on
    the reversed seed.
    """
    if not seed or any(b < 2 for b in seed):
        raise ValueError("seed must be a strict nonempty chain")
    n, q = evaluate_chain(seed)
    if bridge_degree(n, q) <= 0:
        raise NotAmple(
            f"seed {format_chain(seed)} = {n}/{q} has bridge degree 0"
        )
    base = formation_family(n, q, kmax, ks2=ks2, m0=m0)
    if __debug__:
        for term in base.terms:
            assert term.bridge is not None and term.bridge > 0
    if witnesses:
        for prev, cur in zip(base.terms, base.terms[1:]):
            assert cur.kw2 > prev.kw2
            before = discrepancies(prev.chain).a
            after = discrepancies(cur.chain).a
            assert all(b > a for b, a in zip(before, after))
    return AccumSequence(
        family=f"blowup({format_chain(seed)})",
        terms=base.terms,
        ks2=ks2,
        m0=m0,
    )


def example210_family(n0: int, kmax: int, m_offset: int = 3) -> AccumSequence:
    """Elliptic-cover accumulation chains [2 x k, 4+k, n0, 4].

    ks2 = 0 and m(k) = k + m_offset; the default offset 3 counts the
    k+1 tower blow-downs plus the two nodal-fiber ones and is the
    unique affine choice under which the volumes climb to
    (4 n0^2 - 8 n0 + 2)/(4 n0 - 1).  Pass m_offset=1 to see the naive
    tower-only count.  delta is k+1 (every tower divisor meets the
    chain once).
    """
    if n0 < 3:
        raise ValueError("n0 must be >= 3")
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    terms = []
    for k in range(kmax + 1):
        chain = (2,) * k + (4 + k, n0, 4)
        n, q = evaluate_chain(chain)
        corr = correction_term(n, q)
        kw2 = _ledger_kw2(chain, 0, k + m_offset, corr)
        terms.append(
            FamilyTerm(
                k=k,
                chain=chain,
                fraction=CyclicQuotient(n, q),
                kw2=kw2,
                delta=k + 1,
            )
        )
    target = Fraction(4 * n0 * n0 - 8 * n0 + 2, 4 * n0 - 1) + (3 - m_offset)
    return AccumSequence(
        family=f"example210(n0={n0})",
        terms=tuple(terms),
        ks2=0,
        m0=m_offset,
        target=target,
    )


@dataclass(frozen=True)
class LimitReport:
    monotone: str
    last_value: Fraction
    last_diffs: tuple[Fraction, ...]
    converged: bool
    target: Fraction | None
    gap: Fraction | None

    def to_record(self) -> dict:
        from .render import rational_fields, rational_str

        return {
            "monotone": self.monotone,
            **rational_fields("last_value", self.last_value),
            "last_diffs": [rational_str(d) for d in self.last_diffs],
            "converged": self.converged,
            **rational_fields("target", self.target),
            **rational_fields("gap", self.gap),
        }


def limit_of(seq: AccumSequence, tol: Fraction) -> LimitReport:
    """Cauchy-style convergence report over the exact volume sequence.

    Convergence means the final three successive differences (or all
    of them, if fewer exist) are below tol in absolute value.  When
    the family has a closed-form target the exact gap to it is
    attached.
    """
    if len(seq.terms) < 2:
        raise TooFewTerms("need at least two terms")
    if tol <= 0:
        raise ValueError("tol must be positive")
    values = [t.kw2 for t in seq.terms]
    diffs = [b - a for a, b in zip(values, values[1:])]
    if all(d > 0 for d in diffs):
        monotone = "increasing"
    elif all(d < 0 for d in diffs):
        monotone = "decreasing"
    elif all(d == 0 for d in diffs):
        monotone = "constant"
    else:
        monotone = "mixed"
    tail = tuple(diffs[-3:])
    converged = all(abs(d) < tol for d in tail)
    gap = abs(values[-1] - seq.target) if seq.target is not None else None
    return LimitReport(
        monotone=monotone,
        last_value=values[-1],
        last_diffs=tail,
        converged=converged,
        target=seq.target,
        gap=gap,
    )


@dataclass(frozen=True)
class StarRecord:
    """One surface's data for the accumulation test on a fixed center."""

    ks2: int
    has_bridge: bool
    u: int
    reduced_chain: Chain


def property_star(records: list[StarRecord]) -> bool:
    """Finite surrogate of the accumulation property on supplied records.

    All ks2 equal, every record carries the end-to-end bridge, all u
    equal, and the reduced chains are pairwise distinct.  This is a
    mechanical predicate on caller data, not a geometric derivation.
    """
    if not records:
        raise ValueError("need at least one record")
    first = records[0]
    if any(r.ks2 != first.ks2 for r in records):
        return False
    if not all(r.has_bridge for r in records):
        return False
    if any(r.u != first.u for r in records):
        return False
    chains = {r.reduced_chain for r in records}
    return len(chains) == len(records)
