"""Compiled exhaustive sweep for the contraction order-independence criterion.

The stated range (every admissible general chain with length <= 10 and
entries <= 6) holds ~53 million chains, far too many for the pure
Python operations in reasonable time on one core.  This kernel runs
the identical semantics -- subtracted-convergent admissibility, blow
down one entry equal to 1, decrement its neighbours, underflow means
failure -- over the full range in compiled code.  The test module ties
it back to the production implementation by running the production
sweep on a complete smaller box and by spot agreement on samples.

Modes: 0 = leftmost-first, 1 = rightmost-first, 2 = seeded-random
choice among the current 1's.

Violation codes: 1 contraction underflow on an admissible chain,
2 order disagreement, 3 numerator not preserved, 4 denominator law
(q_result == q_orig - left_steps * p) broken.
"""

import numba
import numpy as np


@numba.njit(cache=True)
def _contract(src, length, mode, out, rng):
    """Full contraction of src[:length] into out; returns (len, left_steps, ok)."""
    for i in range(length):
        out[i] = src[i]
    n = length
    left_steps = 0
    while True:
        idx = -1
        if mode == 0:
            for i in range(n):
                if out[i] == 1:
                    idx = i
                    break
        elif mode == 1:
            for i in range(n - 1, -1, -1):
                if out[i] == 1:
                    idx = i
                    break
        else:
            cnt = 0
            for i in range(n):
                if out[i] == 1:
                    cnt += 1
            if cnt > 0:
                rng[0] = rng[0] * np.uint64(6364136223846793005) + np.uint64(
                    1442695040888963407
                )
                k = np.int64((rng[0] >> np.uint64(33)) % np.uint64(cnt))
                seen = 0
                for i in range(n):
                    if out[i] == 1:
                        if seen == k:
                            idx = i
                            break
                        seen += 1
        if idx < 0:
            return n, left_steps, True
        if idx == 0:
            left_steps += 1
        if idx > 0:
            out[idx - 1] -= 1
        if idx < n - 1:
            out[idx + 1] -= 1
        for i in range(idx, n - 1):
            out[i] = out[i + 1]
        n -= 1
        if n >= 2:
            if idx - 1 >= 0 and out[idx - 1] <= 0:
                return n, left_steps, False
            if idx < n and out[idx] <= 0:
                return n, left_steps, False


@numba.njit(cache=True)
def _value(buf, n):
    """(p, q) continuants of a chain with entries >= 2 (or [0], or empty)."""
    if n == 1 and buf[0] == 0:
        return np.int64(0), np.int64(1)
    pp, pc = np.int64(0), np.int64(1)
    qp, qc = np.int64(0), np.int64(0)
    for i in range(n):
        a = buf[i]
        pp, pc = pc, a * pc - pp
        if i == 0:
            qp, qc = np.int64(0), np.int64(1)
        else:
            qp, qc = qc, a * qc - qp
    return pc, qc


@numba.njit(cache=True)
def sweep(maxlen, maxentry, seed):
    """Sweep every admissible chain; returns counters and first violation."""
    chain = np.zeros(maxlen, np.int64)
    p = np.zeros(maxlen + 2, np.int64)  # p[i+1] = p_i, p[0] = p_{-1} = 0
    q = np.zeros(maxlen + 2, np.int64)  # q[i+1] = q_i
    p[1] = 1
    buf0 = np.zeros(maxlen, np.int64)
    buf1 = np.zeros(maxlen, np.int64)
    buf2 = np.zeros(maxlen, np.int64)
    rng = np.zeros(1, np.uint64)
    rng[0] = seed
    admissible = np.int64(0)
    tested = np.int64(0)
    violation = np.int64(0)
    bad_chain = np.zeros(maxlen, np.int64)
    bad_len = np.int64(0)

    d = 0
    chain[0] = 0
    while d >= 0:
        chain[d] += 1
        if chain[d] > maxentry:
            d -= 1
            continue
        a = chain[d]
        p[d + 2] = a * p[d + 1] - p[d]
        if d == 0:
            q[2] = 1
        else:
            q[d + 2] = a * q[d + 1] - q[d]
        plast = p[d + 2]
        # the prefix is extendable/admissible by construction: p_i > 0 for i <= d
        if plast >= 0 and not (d == 1 and chain[0] == 1 and chain[1] == 1):
            admissible += 1
            has_one = False
            for i in range(d + 1):
                if chain[i] == 1:
                    has_one = True
                    break
            if has_one and violation == 0:
                tested += 1
                n0, ls0, ok0 = _contract(chain, d + 1, 0, buf0, rng)
                n1, ls1, ok1 = _contract(chain, d + 1, 1, buf1, rng)
                n2, ls2, ok2 = _contract(chain, d + 1, 2, buf2, rng)
                code = 0
                if not (ok0 and ok1 and ok2):
                    code = 1
                elif n0 != n1 or n0 != n2:
                    code = 2
                else:
                    for i in range(n0):
                        if buf0[i] != buf1[i] or buf0[i] != buf2[i]:
                            code = 2
                            break
                if code == 0 and plast > 0:
                    pr, qr = _value(buf0, n0)
                    if pr != plast:
                        code = 3
                    else:
                        qorig = q[d + 2]
                        if (
                            qr != qorig - ls0 * plast
                            or qr != qorig - ls1 * plast
                            or qr != qorig - ls2 * plast
                        ):
                            code = 4
                if code != 0:
                    violation = code
                    bad_len = d + 1
                    for i in range(d + 1):
                        bad_chain[i] = chain[i]
        if d + 1 < maxlen and plast > 0:
            d += 1
            chain[d] = 0
    return admissible, tested, violation, bad_chain, bad_len
