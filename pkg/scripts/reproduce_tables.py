"""Print the counting tables: Hilbert and Molien series, free generators, monoid generators.

    python scripts/reproduce_tables.py --max-d 6 --terms 8
"""

import argparse
from dataclasses import dataclass

from cyclinv.commutative import minimal_monoid_generators
from cyclinv.group_actions import cyclic_group
from cyclinv.invariant_core import (
    commutative_molien_series,
    cyclic_hilbert_series,
    free_generator_counts_from_hilbert,
    free_generators_up_to_degree,
    noncommutative_molien_series,
)


@dataclass(frozen=True)
class TableConfig:
    min_d: int = 2
    max_d: int = 5
    terms: int = 8


def row(label, values):
    return f"  {label:<22}" + " ".join(f"{str(v):>6}" for v in values)


def main(cfg: TableConfig) -> None:
    for d in range(cfg.min_d, cfg.max_d + 1):
        h = cyclic_hilbert_series(d)
        nc = noncommutative_molien_series(cyclic_group(d))
        comm = commutative_molien_series(cyclic_group(d))
        z = free_generators_up_to_degree(d, cfg.terms - 1)
        print(f"d = {d}")
        print(row("degree", range(cfg.terms)))
        print(row("H(t) formula", h.coefficients(cfg.terms)))
        print(row("nc Molien", nc.coefficients(cfg.terms)))
        print(row("free generators", ["-"] + [len(z[n]) for n in range(1, cfg.terms)]))
        print(row("1 - 1/H", ["-"] + free_generator_counts_from_hilbert(h, cfg.terms - 1)))
        print(row("commutative Molien", comm.coefficients(cfg.terms)))
        gens = minimal_monoid_generators(d)
        print(f"  commutative generators ({len(gens)}): " + ", ".join(map(str, gens)))
        print()


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--min-d", type=int, default=2)
    p.add_argument("--max-d", type=int, default=5)
    p.add_argument("--terms", type=int, default=8)
    a = p.parse_args()
    main(TableConfig(a.min_d, a.max_d, a.terms))
