"""Print dim C(m, n) for TL and FC with m + n <= max, and the Frobenius check."""

from __future__ import annotations

import argparse

from fusscatalan.diagrams import FC, TL
from fusscatalan.enumeration import dimension


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=8, help="largest m + n")
    args = ap.parse_args()
    print("total\tTL\tFC\tFC depends on total only")
    for total in range(args.max + 1):
        tl = {dimension(TL, m, total - m) for m in range(total + 1)}
        fc = {dimension(FC, m, total - m) for m in range(total + 1)}
        print(f"{total}\t{min(tl)}\t{min(fc)}\t{len(fc) == 1 and len(tl) == 1}")


if __name__ == "__main__":
    main()
