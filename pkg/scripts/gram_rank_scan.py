"""Scan the rank and positivity of the FC Gram form along beta = omega = x."""

from __future__ import annotations

import argparse

import numpy as np

from fusscatalan.diagrams import FC
from fusscatalan.enumeration import dimension
from fusscatalan.trace import gram_matrix, spectrum


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--total", type=int, default=3, help="m + n of the signature (0, total)")
    ap.add_argument("--lo", type=float, default=1.0)
    ap.add_argument("--hi", type=float, default=2.5)
    ap.add_argument("--steps", type=int, default=16)
    ap.add_argument("--tol", type=float, default=1e-9)
    args = ap.parse_args()
    dim = dimension(FC, 0, args.total)
    print(f"FC(0,{args.total}), dim {dim}")
    print("x\trank\tmin eig\tpsd")
    for x in np.linspace(args.lo, args.hi, args.steps):
        ev = spectrum(gram_matrix(FC, 0, args.total, x, x))
        rank = int(np.sum(np.abs(ev) > args.tol))
        print(f"{x:.4f}\t{rank}\t{ev.min():.4g}\t{ev.min() >= -args.tol}")
    for x in (np.sqrt(2), np.sqrt(3), 2.0):
        ev = spectrum(gram_matrix(FC, 0, args.total, x, x))
        print(f"x = {x:.6f}: rank {int(np.sum(np.abs(ev) > args.tol))} of {dim}")


if __name__ == "__main__":
    main()
