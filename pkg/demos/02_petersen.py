"""
Every certificate on the Petersen graph
=======================================

Each certificate is computed from the spectrum alone, then compared with
the exact invariant found by search. Petersen is a good stress case: it is
3-regular, far from complete, and famously not Hamiltonian.
"""

from lapcert import compute_invariants, evaluate_all, generate_family, parse_family, summarize
from lapcert.harness import verdict

g = generate_family(parse_family("petersen"))
s = summarize(g)
inv = compute_invariants(g)
print(f"d={s.d}  sigma_1={s.sigma1:.4f}  sigma_max={s.sigma_max:.4f}  theta={s.theta:.4f}")
print(f"kappa={inv.kappa} kappa'={inv.kappa_prime} alpha={inv.alpha} chi={inv.chi} "
      f"hamiltonian={inv.hamiltonian} gamma={inv.gamma} beta={inv.beta} xi={inv.xi} pi={inv.pi}")
print()

for c in evaluate_all(g):
    v, ratio = verdict(c, inv)
    value = "-" if c.value is None else (c.value if isinstance(c.value, bool) else round(c.value, 4))
    truth = getattr(inv, c.target) if c.target else ""
    tight = "" if ratio is None else f"ratio {ratio:.3f}"
    print(f"{c.id.value:24s} {str(value):>8s} vs {str(truth):>6s}  {v:12s} {tight}")

# alpha_ub_sigma is exact here: 10 * (5 - 3) / 5 = 4
