"""Analytic invariant values for families where they are known."""

from __future__ import annotations

from ..errors import DomainError
from ..families import FamilySpec


def family_closed_forms(spec: FamilySpec) -> dict[str, int | bool]:
    """Known exact invariants of a family member, keyed like ExactInvariants fields."""
    f, p = spec.family, spec.params
    if f == "path":
        n = int(p[0])
        if n < 2:
            raise DomainError("path closed forms need n >= 2")
        lo, hi = n // 2, -(-n // 2)
        return {
            "xi": 2 * lo * (hi - 1),
            "pi": 2 * lo * hi,
            "kappa": 1,
            "kappa_prime": 1,
            "chi": 2,
            "alpha": hi,
            "hamiltonian": False,
        }
    if f == "cycle":
        n = int(p[0])
        return {
            "kappa": 2,
            "kappa_prime": 2,
            "chi": 2 if n % 2 == 0 else 3,
            "alpha": n // 2,
            "hamiltonian": True,
        }
    if f == "complete":
        n = int(p[0])
        if n < 2:
            raise DomainError("complete-graph closed forms need n >= 2")
        return {
            "xi": 0,
            "pi": 2,
            "kappa": n - 1,
            "kappa_prime": n - 1,
            "chi": n,
            "alpha": 1,
            "hamiltonian": n >= 3,
        }
    if f == "complete_multipartite":
        sizes = [int(x) for x in p]
        n, big = sum(sizes), max(sizes)
        if len(sizes) < 2:
            raise DomainError("complete multipartite closed forms need at least two parts")
        return {
            "kappa": n - big,
            "kappa_prime": n - big,
            "chi": len(sizes),
            "alpha": big,
            "hamiltonian": n >= 3 and 2 * big <= n,
        }
    if f == "hypercube":
        k = int(p[0])
        if k < 1:
            raise DomainError("hypercube closed forms need dimension >= 1")
        return {
            "kappa": k,
            "kappa_prime": k,
            "chi": 2,
            "alpha": 1 << (k - 1),
            "hamiltonian": k >= 2,
        }
    if f == "petersen":
        return {"kappa": 3, "kappa_prime": 3, "chi": 3, "alpha": 4, "hamiltonian": False}
    raise DomainError(f"no closed forms for family {f!r}")
