"""Exact Hirzebruch-Jung continued fraction arithmetic.

A cyclic quotient singularity 1/n(1,q) is encoded by a coprime pair
(n, q) with 0 < q < n.  Its minimal resolution is a chain of rational
curves whose negated self-intersections [b_1, ..., b_r] are the
Hirzebruch-Jung expansion n/q = b_1 - 1/(b_2 - 1/(... - 1/b_r)).

Chains are plain tuples of ints.  Two forms appear throughout the
package:

* strict form: every entry >= 2 (resolution chains);
* general form: entries >= 1 are allowed (chains mid blow-down).

Convergents use the subtracted recursion

    p_{-1} = 0, p_0 = 1,   p_{i+1} = a_{i+1} * p_i - p_{i-1},
    q_0 = 0,  q_1 = 1,     q_{i+1} = a_{i+1} * q_i - q_{i-1},

matching the minus signs of the continued fraction itself.  Under this
convention "all intermediate p_i stay positive" is a real condition
(with the plus sign it would be vacuous), and the concatenation of a
chain with its reversed dual evaluates to 0 exactly.

Everything in this module is a pure function over immutable values and
is safe to use from any number of threads.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import NotAdmissible

Chain = tuple[int, ...]

_CHAIN_RE = re.compile(r"^\[?\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]?$")


def parse_chain(text: str) -> Chain:
    """Parse ``[b1,b2,...,br]`` (brackets optional, spaces tolerated)."""
    m = _CHAIN_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a chain: {text!r}")
    body = m.group(1)
    if not body:
        return ()
    return tuple(int(part) for part in body.split(","))


def format_chain(chain: Chain) -> str:
    return "[" + ",".join(str(b) for b in chain) + "]"


@dataclass(frozen=True)
class CyclicQuotient:
    """The singularity 1/n(1,q): a coprime pair with 0 < q < n."""

    n: int
    q: int

    def __post_init__(self) -> None:
        if not 0 < self.q < self.n:
            raise ValueError(f"need 0 < q < n, got {self.n}/{self.q}")
        if math.gcd(self.n, self.q) != 1:
            raise ValueError(f"{self.n}/{self.q} is not in lowest terms")

    @property
    def q_prime(self) -> int:
        """The inverse of q mod n, normalised to 0 < q' < n."""
        return pow(self.q, -1, self.n)

    @classmethod
    def parse(cls, text: str) -> "CyclicQuotient":
        n, sep, q = text.strip().partition("/")
        if not sep:
            raise ValueError(f"not a fraction: {text!r}")
        return cls(int(n), int(q))

    def __str__(self) -> str:
        return f"{self.n}/{self.q}"


def _check_fraction(n: int, q: int) -> None:
    if not 0 < q < n:
        raise ValueError(f"need 0 < q < n, got ({n}, {q})")
    if math.gcd(n, q) != 1:
        raise ValueError(f"({n}, {q}) not coprime")


def inverse_mod(n: int, q: int) -> int:
    """q' with q*q' == 1 (mod n) and 0 < q' < n."""
    _check_fraction(n, q)
    return pow(q, -1, n)


def expand_fraction(n: int, q: int) -> Chain:
    """Hirzebruch-Jung expansion of n/q: greedy ceiling algorithm.

    Each step takes b = ceil(n/q) and recurses on q/(b*q - n); the
    result is the unique strict chain evaluating back to n/q.
    """
    _check_fraction(n, q)
    entries = []
    while q > 0:
        b = -(-n // q)
        entries.append(b)
        n, q = q, b * q - n
    return tuple(entries)


@dataclass(frozen=True)
class Convergents:
    """Numerator and denominator continuants of a chain.

    ``p[i]`` holds p_i for i = 0..s (the conventional p_{-1} = 0 is not
    stored); ``q[i]`` holds q_i for i = 0..s with q_0 = 0, q_1 = 1.
    """

    p: tuple[int, ...]
    q: tuple[int, ...]


def convergents(chain: Chain) -> Convergents:
    """Run the subtracted recursion over the whole chain, no positivity check."""
    p = [1]
    q = [0]
    prev_p, cur_p = 0, 1
    prev_q, cur_q = 0, 0
    for i, a in enumerate(chain):
        if a < 1:
            raise ValueError(f"chain entries must be >= 1, got {a}")
        prev_p, cur_p = cur_p, a * cur_p - prev_p
        p.append(cur_p)
        if i == 0:
            prev_q, cur_q = 0, 1
        else:
            prev_q, cur_q = cur_q, a * cur_q - prev_q
        q.append(cur_q)
    return Convergents(tuple(p), tuple(q))


def evaluate_chain(chain: Chain) -> tuple[int, int]:
    """Value of a general chain as a reduced integer pair (p_s, q_s).

    The empty chain evaluates to (1, 0), the identity of concatenation.
    For a strict chain the result is the (n, q) of the singularity.

    Raises NotAdmissible if some intermediate p_i (i <= s-1) is <= 0;
    the final numerator may be 0 (dual concatenations) or negative
    without complaint from this function.
    """
    prev_p, cur_p = 0, 1
    prev_q, cur_q = 0, 0
    last = len(chain) - 1
    for i, a in enumerate(chain):
        if a < 1:
            raise ValueError(f"chain entries must be >= 1, got {a}")
        if cur_p <= 0:
            raise NotAdmissible(
                f"p_{i} = {cur_p} <= 0 before the final index in {format_chain(chain)}"
            )
        prev_p, cur_p = cur_p, a * cur_p - prev_p
        if i == 0:
            prev_q, cur_q = 0, 1
        else:
            prev_q, cur_q = cur_q, a * cur_q - prev_q
    g = math.gcd(cur_p, cur_q)
    if g > 1:
        cur_p //= g
        cur_q //= g
    return cur_p, cur_q


def is_admissible(chain: Chain) -> bool:
    """True when every intermediate convergent numerator stays positive.

    Concretely: p_i > 0 for i = 0..s-1 and p_s >= 0.  A bare adjacent
    pair of 1's is rejected as well; blowing either entry down turns
    the other into a non-curve, which the recursion alone cannot see
    in the single case of the standalone chain [1,1] (every longer
    embedding of the pair already drives some p_i <= 0).
    """
    for a, b in zip(chain, chain[1:]):
        if a == 1 and b == 1:
            return False
    prev_p, cur_p = 0, 1
    for a in chain:
        if a < 1:
            raise ValueError(f"chain entries must be >= 1, got {a}")
        if cur_p <= 0:
            return False
        prev_p, cur_p = cur_p, a * cur_p - prev_p
    return cur_p >= 0


def dual_fraction(n: int, q: int) -> Chain:
    """Expansion of n/(n-q), the chain of the dual singularity.

    Concatenating expand(n, q), a single 1, and the reverse of this
    chain yields an admissible chain that evaluates to 0.
    """
    _check_fraction(n, q)
    return expand_fraction(n, n - q)
