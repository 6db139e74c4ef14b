#!/usr/bin/env python3
"""Monte-Carlo validation of the genericity statements on desk-scale fields.

Part 1: robustness of the GV-attainment dimension -- random codes with the
prescribed dimension k almost always reach the target minimum distance.

Part 2: random systematic codes are almost always MSRD once the extension
degree clears the predicted threshold; the empirical frequency is compared
with the theoretical lower bound.

Everything is seeded: rerunning prints identical numbers.

Run:  python3 demos/random_code_experiments.py
"""

from sumrank import (
    CodeParams,
    gv_attainment_dimension,
    gv_attainment_epsilon_max,
    is_msrd,
    min_distance_bruteforce,
    monte_carlo,
    msrd_prob_lb_A,
)

print("== GV attainment ==")
params = CodeParams(q=2, m=6, eta=2, ell=2)
d = 2
eps = gv_attainment_epsilon_max(params, d)
att = gv_attainment_dimension(params, d, eps)
print(f"params q={params.q} m={params.m} eta={params.eta} ell={params.ell}, "
      f"target d={d}: epsilon_max={eps:.4f} -> k={att.k}")
res = monte_carlo(params, att.k, 300, 1, lambda c: min_distance_bruteforce(c) >= d)
print(f"fraction of random [n={params.n}, k={att.k}] codes with distance >= {d}: "
      f"{res.estimate:.4f} over {res.trials} trials (seed {res.seed})")

print("\n== MSRD genericity ==")
q, eta, ell, k = 2, 2, 2, 2
for m in (6, 8, 10, 12):
    p = CodeParams(q=q, m=m, eta=eta, ell=ell)
    lb = msrd_prob_lb_A(q, m, eta, ell, k)
    res = monte_carlo(p, k, 300, 7, is_msrd)
    print(f"m={m:>2}: theoretical lower bound {max(lb.raw_lower, 0):.4f} "
          f"(raw {lb.raw_lower:+.4f}), empirical {res.estimate:.4f}")
print("\n(empirical frequencies always sit above the positive bounds; the raw")
print(" bound goes negative for small m, where it carries no information)")
