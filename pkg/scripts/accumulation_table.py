#!/usr/bin/env python3
"""Print an exact accumulation table for the elliptic-cover chain family.

For the chains [2 x k, 4+k, n0, 4] the volume ledger climbs toward
(4 n0^2 - 8 n0 + 2)/(4 n0 - 1).  The table shows the exact terms, the
successive differences, and the remaining gap; --naive-m adds the
column obtained from the tower-only blow-down count for comparison.
"""

import argparse

from hjchains import example210_family, limit_of
from hjchains.chains import format_chain
from hjchains.cli import _parse_rational
from hjchains.render import decimal_str, rational_str


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n0", type=int, default=3)
    parser.add_argument("--kmax", type=int, default=40)
    parser.add_argument("--tol", default="1e-9")
    parser.add_argument(
        "--naive-m",
        action="store_true",
        help="also show the ledger under m(k) = k + 1",
    )
    args = parser.parse_args()

    seq = example210_family(args.n0, args.kmax)
    naive = example210_family(args.n0, args.kmax, m_offset=1) if args.naive_m else None

    header = "k\tchain\tn/q\tK^2 (exact)\tK^2 (decimal 12 digits)"
    if naive:
        header += "\tK^2 naive-m"
    print(header)
    for i, term in enumerate(seq.terms):
        row = (
            f"{term.k}\t{format_chain(term.chain)}\t{term.fraction}\t"
            f"{rational_str(term.kw2)}\t{decimal_str(term.kw2)}"
        )
        if naive:
            row += f"\t{rational_str(naive.terms[i].kw2)}"
        print(row)

    report = limit_of(seq, _parse_rational(args.tol))
    print(f"monotone: {report.monotone}")
    print(f"limit: {rational_str(seq.target)} = {decimal_str(seq.target)}")
    print(f"gap at k={args.kmax}: {decimal_str(report.gap)}")
    print(f"last difference: {decimal_str(report.last_diffs[-1])}")
    print(f"converged at tol {args.tol}: {report.converged}")


if __name__ == "__main__":
    main()
