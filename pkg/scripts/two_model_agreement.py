"""Compare the operator model on B ⊂ B ⊗ W (product canonical traces) with the
diagram model: Gram matrices, span rank and Gram rank per signature."""

from __future__ import annotations

import argparse
import time

import numpy as np

from fusscatalan.diagrams import FC
from fusscatalan.enumeration import dimension
from fusscatalan.opmodel import CertifiedModel, product_inclusion, span_rank
from fusscatalan.trace import gram_matrix


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--b-blocks", type=int, nargs="+", default=[1, 1])
    ap.add_argument("--w-blocks", type=int, nargs="+", default=[1, 1])
    ap.add_argument("--max-total", type=int, default=4)
    args = ap.parse_args()
    cm = CertifiedModel.certify(*product_inclusion(args.b_blocks, args.w_blocks))
    print(f"beta^2 = {cm.report.beta2:.12g}, omega^2 = {cm.report.omega2:.12g}, dim D = {cm.model.d}")
    print("m\tn\tdim\tspan\tgram rank\tmax |G_op - G_diag|\tseconds")
    for total in range(args.max_total + 1):
        for m in range(total + 1):
            n = total - m
            t0 = time.perf_counter()
            G, rows = cm.gram(m, n)
            Gd = gram_matrix(FC, m, n, cm.beta0, cm.omega0)
            grank = np.linalg.matrix_rank(Gd, tol=1e-8 * max(1.0, np.abs(Gd).max()))
            print(f"{m}\t{n}\t{dimension(FC, m, n)}\t{span_rank(rows)}\t{grank}\t"
                  f"{np.abs(G - Gd).max():.3e}\t{time.perf_counter() - t0:.2f}")


if __name__ == "__main__":
    main()
