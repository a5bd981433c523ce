#!/usr/bin/env python
"""Look at the case the positivity argument leaves open, 3 | n+1, i.e. d(9n+8).

Prints the smallest values of d(9n+8) from the mod-36 generating function, the
negative coefficients of the bracketed mod-12 expression, and whether the
1/(1 - q^12) multiple stays non-negative.
"""

import argparse

from maorank import verify as V


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=1200)
    args = ap.parse_args()
    N = args.order

    gf = V.mao_gf_rhs(N)
    open_case = [(j, int(gf[j])) for j in range(8, N + 1, 9)]
    worst = sorted(open_case, key=lambda t: t[1])[:10]
    print(f"d(9n+8), 9n+8 <= {N}: min {worst[0][1]} at {worst[0][0]}")
    print("  ten smallest:", ", ".join(f"d({j})={v}" for j, v in worst))
    print("  all positive:", all(v > 0 for _, v in open_case))

    M = (N - 2) // 3
    neg = V.negative_coefficient_scan(M)
    print(f"negative bracket coefficients to q^{M}: {len(neg.witnesses)}")
    print("  first few:", neg.witnesses[:15])
    print("  all multiples of 3:", all(e % 3 == 0 for e in neg.witnesses))

    nn = V.nonnegativity_scan(M)
    print(f"1/(1-q^12) multiple non-negative to q^{M}: {nn.status.value}",
          nn.witnesses or "")


if __name__ == "__main__":
    main()
