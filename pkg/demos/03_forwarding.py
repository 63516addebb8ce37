"""
Forwarding indices of paths
===========================

On a path every pair has exactly one route, so the forwarding indices are
forced: xi(P_n) = 2 floor(n/2) (ceil(n/2) - 1) and pi(P_n) = 2 floor(n/2) ceil(n/2).
The exact search reproduces them, and the spectral lower bounds fall
further behind as n grows.
"""

from lapcert import family_closed_forms, forwarding_exact, generate_family, parse_family, summarize
from lapcert.certificates import pi_lb, xi_lb

print(f"{'n':>2s} {'xi':>4s} {'closed':>6s} {'xi_lb':>7s} {'pi':>4s} {'closed':>6s} {'pi_lb':>7s}")
for n in range(3, 8):
    g = generate_family(parse_family(f"path:{n}"))
    s = summarize(g)
    r = forwarding_exact(g)
    cf = family_closed_forms(parse_family(f"path:{n}"))
    xl = xi_lb(g, s)
    xl = f"{xl.value:7.3f}" if xl.applicable else "      -"
    print(f"{n:2d} {r.xi:4d} {cf['xi']:6d} {xl} {r.pi:4d} {cf['pi']:6d} {pi_lb(g, s).value:7.3f}")

# a witness routing comes back with every answer
g = generate_family(parse_family("cycle:4"))
r = forwarding_exact(g)
print()
print("C4: xi =", r.xi, "pi =", r.pi)
for pair, path in sorted(r.xi_routing.paths.items()):
    print(" ", pair, path)
print("vertex loads:", r.xi_routing.vertex_load())
