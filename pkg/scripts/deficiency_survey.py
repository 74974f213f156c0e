"""Compare S-generator deficiencies across different generating sets.

For each d, the deficiency per degree (minimal number of new S-generators
needed as a Sym_n-module) is computed for the monoid set U, for U with
redundant products added, and for d = 3 also for the x-basis cyclic sums.
Equal rows are evidence that the numbers do not depend on the chosen set.

    python scripts/deficiency_survey.py --max-d 4 --max-degree 4
"""

import argparse
from dataclasses import dataclass

from cyclinv.config import CapExceeded, Caps
from cyclinv.s_algebra import SGeneratorSet, cyclic_s_generators, deficiency_reports, x_basis_s_generators_d3


@dataclass(frozen=True)
class SurveyConfig:
    min_d: int = 3
    max_d: int = 4
    max_degree: int = 4


def padded(gens: SGeneratorSet, max_degree: int) -> SGeneratorSet:
    """U plus every pairwise product of total degree <= max_degree (all redundant)."""
    extra = []
    for a in gens.generators:
        for b in gens.generators:
            if a.degree() + b.degree() <= max_degree:
                extra.append(a * b)
    return SGeneratorSet(gens.generators + tuple(extra))


def survey(cfg: SurveyConfig, caps: Caps) -> None:
    for d in range(cfg.min_d, cfg.max_d + 1):
        sets = {"U": cyclic_s_generators(d)}
        sets["U + products"] = padded(sets["U"], cfg.max_degree)
        if d == 3:
            sets["v1, v2, v31, v32"] = x_basis_s_generators_d3()
        print(f"d = {d}, degrees 1..{cfg.max_degree}")
        for name, gens in sets.items():
            try:
                reports = deficiency_reports(d, gens, cfg.max_degree, caps)
            except CapExceeded as exc:
                print(f"  {name:<18} skipped ({exc})")
                continue
            needed = " ".join(str(r.generators_needed) for r in reports)
            codim = " ".join(str(r.codimension) for r in reports)
            full = all(r.component_rank == r.invariant_dim for r in reports)
            print(f"  {name:<18} needed: {needed:<12} codim: {codim:<12} full rank: {full}")
        print()


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--min-d", type=int, default=3)
    p.add_argument("--max-d", type=int, default=4)
    p.add_argument("--max-degree", type=int, default=4)
    a = p.parse_args()
    survey(SurveyConfig(a.min_d, a.max_d, a.max_degree), Caps.from_env())
