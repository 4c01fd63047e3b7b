"""Blow-down simulation on weight chains.

Contracting an entry equal to 1 is the numerical shadow of blowing
down a (-1)-curve: the entry is removed and each neighbour loses 1.
Repeating until no 1 remains either yields a strict chain, the
terminal singleton [0] (the chain contracted to a single 0-curve), or
the empty chain.  A decrement that would leave an entry <= 0 in a
chain of length >= 2 aborts with NegativeWeight; that is exactly how a
non-admissible chain announces itself during contraction.

The leftmost 1 is contracted first by default.  Order independence for
admissible chains is a tested property of the suite, not an assumption
baked into the code, so ``contract_fully`` also accepts an explicit
picker for exercising other orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .chains import Chain, format_chain
from .errors import (
    NegativeWeight,
    NotAContractibleEntry,
    NotAdmissibleForChains,
)


@dataclass(frozen=True)
class ContractionStep:
    index: int
    before: Chain
    after: Chain


@dataclass(frozen=True)
class ContractionTrace:
    """Ordered record of single blow-downs, freshly allocated per call."""

    steps: tuple[ContractionStep, ...]

    def to_text(self) -> str:
        lines = []
        for k, step in enumerate(self.steps, start=1):
            lines.append(
                f"step {k}: contract index {step.index}: "
                f"{format_chain(step.before)} -> {format_chain(step.after)}"
            )
        return "\n".join(lines)

    def to_records(self) -> list[dict]:
        return [
            {"index": s.index, "before": list(s.before), "after": list(s.after)}
            for s in self.steps
        ]


def _contract_in_place(weights: list[int], index: int) -> None:
    """Remove weights[index] (== 1) and decrement its neighbours."""
    if weights[index] != 1:
        raise NotAContractibleEntry(
            f"entry at index {index} is {weights[index]}, not 1"
        )
    del weights[index]
    touched = []
    if index > 0:
        weights[index - 1] -= 1
        touched.append(index - 1)
    if index < len(weights):
        weights[index] -= 1
        touched.append(index)
    if len(weights) >= 2:
        for t in touched:
            if weights[t] <= 0:
                raise NegativeWeight(
                    f"entry {weights[t]} at index {t} after contraction"
                )


def contract_once(chain: Chain, index: int) -> Chain:
    """One blow-down: remove the 1 at ``index``, decrement its neighbours."""
    if not 0 <= index < len(chain):
        raise IndexError(f"index {index} out of range for length {len(chain)}")
    weights = list(chain)
    _contract_in_place(weights, index)
    return tuple(weights)


def contract_fully(
    chain: Chain,
    pick: Callable[[Sequence[int]], int] | None = None,
) -> tuple[Chain, ContractionTrace]:
    """Contract until no entry equals 1.

    ``pick`` selects among the current positions of 1's (default:
    leftmost).  Returns the terminal chain together with the full
    trace; the terminal chain is strict, the singleton [0], or empty.
    """
    weights = list(chain)
    steps = []
    while True:
        ones = [i for i, w in enumerate(weights) if w == 1]
        if not ones:
            break
        i = ones[0] if pick is None else pick(ones)
        before = tuple(weights)
        _contract_in_place(weights, i)
        steps.append(ContractionStep(i, before, tuple(weights)))
    return tuple(weights), ContractionTrace(tuple(steps))


def _contract_no_trace(weights: list[int]) -> list[int]:
    """Leftmost-first contraction without trace bookkeeping (hot path)."""
    while True:
        try:
            i = weights.index(1)
        except ValueError:
            return weights
        _contract_in_place(weights, i)


@dataclass(frozen=True)
class InsertionPattern:
    """A strict base chain with u copies of 1 inserted between u+1 copies."""

    base: Chain
    u: int

    def __post_init__(self) -> None:
        if self.u < 0:
            raise ValueError("u must be >= 0")
        if not self.base or any(b < 2 for b in self.base):
            raise ValueError("base must be a nonempty strict chain")

    def to_chain(self) -> Chain:
        return concat_with_ones(self.base, self.u)


def concat_with_ones(base: Chain, u: int) -> Chain:
    """base, 1, base, 1, ..., 1, base with u inserted 1's.

    Output length is (u+1)*len(base) + u.
    """
    if u < 0:
        raise ValueError("u must be >= 0")
    if not base or any(b < 2 for b in base):
        raise ValueError("base must be a nonempty strict chain")
    out: list[int] = []
    for i in range(u + 1):
        if i:
            out.append(1)
        out.extend(base)
    return tuple(out)


def is_admissible_for_chains(chain: Chain) -> bool:
    """Does the chain stay admissible for any number of inserted 1's?

    Decision procedure: peel T-steps (strip an end equal to 2,
    decrement the opposite end) until both ends are >= 3 or the chain
    is a single entry.  The survivor is a core exactly when the answer
    is yes.  The direct oracle -- contract the u-fold self-insertion
    for u = 0, 1, 2, ... -- agrees with this on every tested chain.
    """
    if not chain or any(b < 2 for b in chain):
        raise ValueError("strict nonempty chain required")
    cur = chain
    while True:
        if len(cur) == 1:
            return cur[0] >= 4
        left2 = cur[0] == 2
        right2 = cur[-1] == 2
        if not left2 and not right2:
            return True
        if left2 and right2:
            return False
        if left2:
            cur = cur[1:-1] + (cur[-1] - 1,)
        else:
            cur = (cur[0] - 1,) + cur[1:-1]


@dataclass(frozen=True)
class SurvivorReport:
    """Which positions of the middle copy outlive full contraction.

    ``positions`` are 0-based indices into the base chain; ``first``
    and ``last`` bound the surviving range.  ``contracted`` is the
    fully contracted triple concatenation.
    """

    positions: tuple[int, ...]
    first: int
    last: int
    contracted: Chain


def surviving_center(chain: Chain) -> SurvivorReport:
    """Contract base-1-base-1-base and report the surviving middle entries.

    Raises NotAdmissibleForChains when contraction underflows or wipes
    out the whole middle copy.
    """
    triple = concat_with_ones(chain, 2)
    r = len(chain)
    middle = range(r + 1, 2 * r + 1)
    weights = list(triple)
    origins = list(range(len(triple)))
    try:
        while True:
            try:
                i = weights.index(1)
            except ValueError:
                break
            del weights[i]
            del origins[i]
            if i > 0:
                weights[i - 1] -= 1
            if i < len(weights):
                weights[i] -= 1
            if len(weights) >= 2 and any(
                weights[t] <= 0 for t in (i - 1, i) if 0 <= t < len(weights)
            ):
                raise NegativeWeight("contraction underflow")
    except NegativeWeight as exc:
        raise NotAdmissibleForChains(
            f"{format_chain(chain)}: {exc}"
        ) from exc
    survivors = tuple(
        o - (r + 1) for o in origins if o in middle
    )
    if not survivors:
        raise NotAdmissibleForChains(
            f"{format_chain(chain)}: middle copy fully contracted"
        )
    return SurvivorReport(
        positions=survivors,
        first=survivors[0],
        last=survivors[-1],
        contracted=tuple(weights),
    )
