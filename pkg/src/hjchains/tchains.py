"""Cores, T-steps, and the arithmetic of chain families they generate.

A core is a strict chain whose ends are both >= 3 (single entries must
be >= 4).  Every chain that stays admissible under self-insertion of
1's arises from a unique core by first forming a reduced insertion
pattern and then applying end extensions

    left  step:  [a_1, ..., a_s]  ->  [2, a_1, ..., a_{s-1}, a_s + 1]
    right step:  [a_1, ..., a_s]  ->  [a_1 + 1, a_2, ..., a_s, 2]

Each step leaves exactly one end equal to 2, which is why the walk
back to the core is deterministic: strip the 2-end and give its
increment back to the opposite end.

The classical chains 1/(d*m^2)(1, d*m*a - 1) are exactly the family of
center [4]; ``recognize_T`` inverts that parametrisation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .chains import Chain, format_chain
from .contraction import (
    _contract_no_trace,
    concat_with_ones,
    is_admissible_for_chains,
)
from .errors import InvalidCenter, MalformedChain, NegativeWeight, NotAdmissible


class Side(enum.Enum):
    LEFT = "L"
    RIGHT = "R"


def _check_strict(chain: Chain) -> None:
    if not chain or any(b < 2 for b in chain):
        raise ValueError(f"strict nonempty chain required, got {chain}")


def is_core(chain: Chain) -> bool:
    """Both ends >= 3 (single entry >= 4); interior entries just >= 2."""
    _check_strict(chain)
    if len(chain) == 1:
        return chain[0] >= 4
    return chain[0] >= 3 and chain[-1] >= 3


def apply_tstep(chain: Chain, side: Side) -> Chain:
    """Extend by one end step; the output has exactly one end equal to 2."""
    _check_strict(chain)
    if side is Side.LEFT:
        return (2,) + chain[:-1] + (chain[-1] + 1,)
    return (chain[0] + 1,) + chain[1:] + (2,)


def undo_tstep(chain: Chain) -> tuple[Chain, Side] | None:
    """Invert apply_tstep when exactly one end equals 2.

    Returns (predecessor, side undone), or None when no predecessor
    exists: both ends >= 3 means the walk has reached its base, both
    ends equal to 2 means the chain is not generated by T-steps at
    all.  Callers distinguish the two by looking at the ends.
    """
    _check_strict(chain)
    if len(chain) < 2:
        raise ValueError("need length >= 2 to undo a step")
    left2 = chain[0] == 2
    right2 = chain[-1] == 2
    if left2 == right2:
        return None
    if left2:
        if chain[-1] - 1 < 2:
            raise MalformedChain(f"{format_chain(chain)}: right end would drop below 2")
        return chain[1:-1] + (chain[-1] - 1,), Side.LEFT
    if chain[0] - 1 < 2:
        raise MalformedChain(f"{format_chain(chain)}: left end would drop below 2")
    return (chain[0] - 1,) + chain[1:-1], Side.RIGHT


def _insertion_reduced(core: Chain, u: int) -> Chain:
    """Closed form of the reduced u-fold insertion of a core.

    u+1 copies of the core, with the last entry of every copy but the
    final one and the first entry of every copy but the first one each
    lowered by 1 (a single entry loses on both counts).
    """
    out: list[int] = []
    for j in range(u + 1):
        seg = list(core)
        if j < u:
            seg[-1] -= 1
        if j > 0:
            seg[0] -= 1
        out.extend(seg)
    return tuple(out)


def reduced_form(base: Chain, u: int) -> Chain:
    """Fully contract the u-fold self-insertion of a strict base chain."""
    _check_strict(base)
    weights = list(concat_with_ones(base, u))
    try:
        return tuple(_contract_no_trace(weights))
    except NegativeWeight as exc:
        raise NotAdmissible(
            f"insertion of {format_chain(base)} with u={u} is not admissible"
        ) from exc


@dataclass(frozen=True)
class Decomposition:
    """Witness that a chain is core + insertions + T-steps.

    Replaying ``reduced_form(core, u)`` and then applying ``steps`` in
    order reproduces the decomposed chain; the core is minimal.
    """

    core: Chain
    u: int
    steps: tuple[Side, ...]

    def word(self) -> str:
        return "".join(s.value for s in self.steps)

    def __str__(self) -> str:
        return f"core={format_chain(self.core)} u={self.u} steps={self.word()}"


def replay_decomposition(d: Decomposition) -> Chain:
    chain = reduced_form(d.core, d.u)
    for side in d.steps:
        chain = apply_tstep(chain, side)
    return chain


def _pattern_split(base: Chain) -> tuple[Chain, int] | None:
    """One un-insertion: the shortest core whose single insertion layer gives base.

    Tries copy counts m (largest first) over the divisors of len(base);
    the candidate core is the first copy with its last entry restored.
    Returns (core, inserted count) or None when base is not an
    insertion pattern of any shorter core.  The block comparison runs
    in place on the base; only a matching candidate is materialised.
    """
    length = len(base)
    first = base[0]
    last = base[-1]
    for m in range(length, 1, -1):
        if length % m:
            continue
        d = length // m
        if d == 1:
            if first >= 3 and last == first and all(
                base[j] == first - 1 for j in range(1, length - 1)
            ):
                return (first + 1,), m - 1
            continue
        if any(base[j * d] != first - 1 for j in range(1, m)):
            continue
        if any(base[j * d - 1] != last - 1 for j in range(1, m)):
            continue
        if any(
            base[j * d + i] != base[i] for j in range(1, m) for i in range(1, d - 1)
        ):
            continue
        return base[: d - 1] + (base[d - 1] + 1,), m - 1
    return None


def _minimal_core_of(base: Chain) -> tuple[Chain, int]:
    """Minimal core and total insertion count for a core-shaped base."""
    core, u = base, 0
    while True:
        hit = _pattern_split(core)
        if hit is None:
            return core, u
        shorter, w = hit
        u = (u + 1) * (w + 1) - 1
        core = shorter


def decompose(chain: Chain) -> Decomposition | None:
    """Unique (minimal core, u, steps) witness, or None.

    Peels T-steps until both ends are >= 3, then factors the base into
    the minimal core with the largest insertion count.  Returns None
    when the walk dead-ends (both ends 2, or a short end entry), i.e.
    when the chain is not admissible for chains.

    The peel works on a (lo, hi, end offsets) window over the input:
    each undo strips one end and charges 1 to the opposite end, so no
    intermediate chain is materialised.
    """
    _check_strict(chain)
    undone: list[Side] = []
    lo, hi = 0, len(chain) - 1
    dl = dr = 0
    while True:
        if lo == hi:
            if chain[lo] - dl - dr >= 4:
                break
            return None
        left = chain[lo] - dl
        right = chain[hi] - dr
        left2 = left == 2
        right2 = right == 2
        if not left2 and not right2:
            break
        if left2 and right2:
            return None
        if left2:
            lo += 1
            dl = 0
            dr += 1
            undone.append(Side.LEFT)
        else:
            hi -= 1
            dr = 0
            dl += 1
            undone.append(Side.RIGHT)
    if lo == hi:
        base: Chain = (chain[lo] - dl - dr,)
    else:
        base = (chain[lo] - dl,) + chain[lo + 1 : hi] + (chain[hi] - dr,)
    core, u = _minimal_core_of(base)
    return Decomposition(core=core, u=u, steps=tuple(reversed(undone)))


_U_CAP = 64


def _undo_orbit(chain: Chain) -> list[Chain]:
    """The chain and all its T-step ancestors, nearest first."""
    orbit = [chain]
    cur = chain
    while len(cur) >= 2:
        nxt = undo_tstep(cur)
        if nxt is None:
            break
        cur = nxt[0]
        orbit.append(cur)
    return orbit


def is_generalized_T(chain: Chain, center: Chain) -> bool:
    """Is the chain in the family generated by the given center?

    Membership holds iff some T-step ancestor of the chain equals a
    reduced insertion form of the center.  The whole ancestor orbit is
    compared, not just its terminal base: reduced forms of a non-core
    center can themselves carry an end equal to 2.  The u search runs
    while the reduced form is no longer than the chain; the safety cap
    (never below the chain length, since at least one entry per copy
    survives reduction) guards against a center whose reduced-form
    lengths failed to grow, which no tested center exhibits.
    """
    _check_strict(chain)
    if not is_admissible_for_chains(center):
        raise InvalidCenter(f"{format_chain(center)} is not admissible for chains")
    orbit = set(_undo_orbit(chain))
    for u in range(max(_U_CAP, len(chain)) + 1):
        rf = reduced_form(center, u)
        if len(rf) > len(chain):
            break
        if rf in orbit:
            return True
    return False


def is_minimal_core(chain: Chain) -> bool:
    """Can the core not be produced from a shorter core by inserting 1's?

    Single entries are minimal (insertion strictly lengthens).  For
    prime length s the only candidate producer is a single entry, whose
    insertion pattern is [e, e-1, ..., e-1, e].  For composite s the
    core is non-minimal exactly when the entries split into u identical
    blocks of length r = s/u, up to the 1-unit transfer at the seams:
    block-initial entries after the first sit at e_1 - 1 and
    block-final entries before the last sit at e_s - 1.
    """
    if not is_core(chain):
        raise ValueError(f"{format_chain(chain)} is not a core")
    s = len(chain)
    if s == 1:
        return True
    if _is_prime(s):
        ladder = (chain[0],) + (chain[0] - 1,) * (s - 2) + (chain[0],)
        return chain != ladder
    for u in range(2, s):
        if s % u:
            continue
        r = s // u
        if (
            all(
                chain[i - 1] == chain[i - 1 + j * r]
                for j in range(1, u)
                for i in range(2, r)
            )
            and all(chain[j * r] + 1 == chain[0] for j in range(1, u))
            and all(chain[j * r - 1] + 1 == chain[-1] for j in range(1, u))
        ):
            return False
    return True


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    f = 2
    while f * f <= k:
        if k % f == 0:
            return False
        f += 1
    return True


def recognize_T(n: int, q: int) -> tuple[int, int, int] | None:
    """Solve n = d*m^2, q = d*m*a - 1 with 0 < a < m and gcd(m, a) = 1.

    Returns (d, m, a) with the largest possible m (so d = 1 whenever a
    square-part representation exists), or None.  d need not be
    square-free: 1/16(1,7) is 1/(4*2^2)(1, 4*2*1 - 1) and admits no
    square-free witness.
    """
    if not 0 < q < n or math.gcd(n, q) != 1:
        raise ValueError(f"({n}, {q}) is not a valid fraction")
    t = q + 1
    for m in range(math.isqrt(n), 1, -1):
        if n % (m * m):
            continue
        d = n // (m * m)
        if t % (d * m):
            continue
        a = t // (d * m)
        if 0 < a < m and math.gcd(m, a) == 1:
            return d, m, a
    return None


def enumerate_generalized_T(center: Chain, max_length: int) -> list[Chain]:
    """All family members of the center with length <= max_length.

    Seeds are the reduced insertion forms that fit; the family is their
    closure under T-steps.  Output is lexicographic and duplicate-free.
    """
    if not is_admissible_for_chains(center):
        raise InvalidCenter(f"{format_chain(center)} is not admissible for chains")
    if max_length < len(center):
        raise ValueError("max_length must be at least the center length")
    seen: set[Chain] = set()
    frontier: list[Chain] = []
    for u in range(max(_U_CAP, max_length) + 1):
        rf = reduced_form(center, u)
        if len(rf) > max_length:
            break
        if rf not in seen:
            seen.add(rf)
            frontier.append(rf)
    while frontier:
        cur = frontier.pop()
        if len(cur) == max_length:
            continue
        for side in (Side.LEFT, Side.RIGHT):
            nxt = apply_tstep(cur, side)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return sorted(seen)


def core_weight(chain: Chain) -> int:
    """Weight excess plus interior length: sum(e - 2) + max(len - 2, 0).

    The interior term keeps every weight class finite (a bare excess
    sum would admit arbitrarily long [3,2,...,2,3] padding for free).
    """
    return sum(e - 2 for e in chain) + max(len(chain) - 2, 0)


def enumerate_cores(max_weight_sum: int) -> list[tuple[Chain, bool]]:
    """All cores of weight <= max_weight_sum, each tagged minimal or not.

    Lexicographic order; empty below weight 2 since a core needs at
    least two units of excess at its ends.
    """
    results: list[tuple[Chain, bool]] = []
    for e in range(4, max_weight_sum + 3):
        results.append(((e,), True))

    def extend(prefix: list[int], weight: int) -> None:
        budget = max_weight_sum - weight
        for e in range(3, budget + 3):
            core = tuple(prefix) + (e,)
            results.append((core, is_minimal_core(core)))
        for e in range(2, budget + 1):
            w = weight + (e - 1)  # interior entries cost their excess plus one
            if w + 1 <= max_weight_sum:
                extend(prefix + [e], w)

    for e1 in range(3, max_weight_sum + 2):
        if (e1 - 2) + 1 <= max_weight_sum:
            extend([e1], e1 - 2)
    return sorted(results)
