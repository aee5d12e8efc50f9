"""Monte-Carlo check of the per-cell load cap behind the parallel algorithm.

Dropping k target addresses into a random equipartition of [N] into d
cells, the probability that some cell receives more than t of them is at
most d * C(k, t) * d**(-t).  The check samples the exact load distribution
and compares the empirical exceedance with that union bound.
"""
from parsearch import run_maxload_check

print(f"{'k':>4} {'d':>4} {'t':>4} {'empirical':>10} {'bound':>10} {'3*se':>8}")
for k, d, t in ((8, 4, 4), (8, 4, 3), (16, 8, 6), (32, 8, 8), (16, 16, 20)):
    rec = run_maxload_check(k=k, d=d, t=t, trials=10 ** 5, seed=99)
    print(f"{k:>4} {d:>4} {t:>4} {rec['empirical_exceedance']:>10.4f} "
          f"{rec['union_bound']:>10.4f} {3 * rec['standard_error']:>8.4f}"
          f"   {'ok' if rec['within_bound'] else 'EXCEEDED'}")
