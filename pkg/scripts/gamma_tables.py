"""Print gamma tables, the mod-2 comparison with standard products, and the Todd check xi_k = 1."""
import argparse
from dataclasses import dataclass

from torbord.gamma import gamma_vector, gamma_via_partition_formula, MAX_M_FORMULA, product_chern
from torbord.symfun import apply, format_partition, matrix_A, partitions, todd_coefficients, transpose


@dataclass
class TableConfig:
    m_min: int = 2
    m_max: int = 7
    cross_check: bool = True


def table(cfg: TableConfig):
    for m in range(cfg.m_min, cfg.m_max + 1):
        print(f"m = {m}")
        At = transpose(matrix_A(m))
        tau = todd_coefficients(m - 1)
        for I in partitions(m - 1):
            g = gamma_vector(m, I)
            if cfg.cross_check and m <= MAX_M_FORMULA:
                assert gamma_via_partition_formula(m, I) == g
            assert apply(At, g) == g
            prod = [product_chern(m, j, I) for j in range(m)]
            diff = [j for j in range(m) if g[j] != prod[j]]
            note = f"  (product structure differs at j={diff})" if diff else ""
            print(f"  {format_partition(I):>14}  {list(g)}{note}")
        xi = [sum(t * gamma_vector(m, I)[k] for I, t in tau.items()) for k in range(m)]
        print(f"  xi = {[str(x) for x in xi]}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-min", type=int, default=2)
    ap.add_argument("--m-max", type=int, default=7)
    ap.add_argument("--no-cross-check", action="store_true")
    args = ap.parse_args()
    table(TableConfig(args.m_min, args.m_max, not args.no_cross_check))


if __name__ == "__main__":
    main()
