"""Sample bipartite regular graphs and check the expansion condition.

The upper-bound argument needs a bipartite d-regular graph in which
every pair of s-subsets across the bipartition is joined by an edge.
This script measures the simplicity probability of the pairing model,
then checks expansion on a sampled graph at the optimizer's constants.
"""

import math

from pathramsey import (ExpansionSpec, check_expansion, count_zero_pairs,
                        expected_simplicity, is_simple, optimize_constants,
                        project_support, sample_pairing, sample_simple,
                        subset_size_for)

# simplicity frequency matches exp(-(d-1)^2/2)
for degree in (2, 3):
    hits = sum(is_simple(sample_pairing(200, degree, seed=s))
               for s in range(2000))
    print(f"degree {degree}: simple fraction {hits / 2000:.4f}, "
          f"predicted {expected_simplicity(degree):.4f}")

# a small simple sample and its exact zero-pair count
g, attempts = sample_simple(30, 2, seed=1)
print(f"\nsimple 2-regular bipartite sample on 30+30 vertices "
      f"({attempts} attempt(s))")
for s in (2, 3, 4):
    z = count_zero_pairs(g, s)
    total = math.comb(30, s) ** 2
    print(f"  s={s}: {z} zero-edge subset pairs out of {total}")

# expansion at the constants the optimizer picked, scaled to n=16
res = optimize_constants(3)
n = 16
side = round(res.c_star * n)
degree = math.ceil(res.d_star)
s = subset_size_for(3, res.c_star, n)
print(f"\noptimizer constants scaled to n={n}: side {side}, "
      f"degree {degree}, subset size {s}")
support = project_support(sample_pairing(side, degree, seed=0))
verdict = check_expansion(support, ExpansionSpec(
    s=s, mode="sampled", sample_count=10 ** 5, seed=0))
print(f"sampled expansion check on the pairing support: "
      f"{'no violating pair' if verdict.passed else 'VIOLATION'} "
      f"in {verdict.pairs_checked} samples")
