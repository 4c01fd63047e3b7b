#!/usr/bin/env python3
"""Census of cores and of one center's T-chain family.

Lists every core up to a weight bound with its minimality tag, then
enumerates the family of a chosen center by length, printing each
member with its decomposition witness and singularity data.
"""

import argparse

from hjchains import (
    core_weight,
    decompose,
    enumerate_cores,
    enumerate_generalized_T,
    evaluate_chain,
    inverse_mod,
    recognize_T,
)
from hjchains.chains import format_chain, parse_chain


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-weight", type=int, default=4)
    parser.add_argument("--center", default="[4]")
    parser.add_argument("--max-length", type=int, default=5)
    args = parser.parse_args()

    print(f"cores with weight <= {args.max_weight}:")
    for core, minimal in enumerate_cores(args.max_weight):
        tag = "minimal" if minimal else "non-minimal"
        print(f"  {format_chain(core)}  weight={core_weight(core)}  {tag}")

    center = parse_chain(args.center)
    members = enumerate_generalized_T(center, args.max_length)
    print(f"family of center {format_chain(center)} up to length {args.max_length}:"
          f" {len(members)} members")
    for chain in members:
        n, q = evaluate_chain(chain)
        dec = decompose(chain)
        extra = ""
        hit = recognize_T(n, q)
        if hit:
            d, m, a = hit
            extra = f"  = 1/({d}*{m}^2)(1, {d}*{m}*{a}-1)"
        print(
            f"  {format_chain(chain)}  {n}/{q}  q'={inverse_mod(n, q)}  {dec}{extra}"
        )


if __name__ == "__main__":
    main()
