"""Exact combinatorial invariants used as ground truth for the certificates.

None of this code touches eigenvalues; agreement with the spectral bounds is
therefore independent evidence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graph import Graph, is_connected
from .closed_forms import family_closed_forms
from .coloring import chi_exact
from .connectivity import kappa_exact, kappa_prime_exact
from .expansion import SUBSET_CAP, beta_exact, gamma_exact
from .forwarding import FORWARDING_CAP, ForwardingResult, Routing, forwarding_exact
from .hamiltonian import EXACT_CAP, HamiltonianResult, hamiltonian_exact
from .independence import alpha_exact

__all__ = [
    "ExactInvariants",
    "ForwardingResult",
    "HamiltonianResult",
    "OracleCaps",
    "Routing",
    "alpha_exact",
    "beta_exact",
    "chi_exact",
    "compute_invariants",
    "family_closed_forms",
    "forwarding_exact",
    "gamma_exact",
    "hamiltonian_exact",
    "kappa_exact",
    "kappa_prime_exact",
]


@dataclass(frozen=True)
class OracleCaps:
    """Largest order each oracle is run on. ``forwarding`` bounds the exact search."""

    alpha: int = 64
    chi: int = 32
    hamiltonian: int = EXACT_CAP
    hamiltonian_nodes: int = 2_000_000
    subsets: int = SUBSET_CAP
    forwarding: int = FORWARDING_CAP
    forwarding_heuristic: int = 40
    forwarding_nodes: int = 50_000

    @classmethod
    def parse(cls, text: str) -> OracleCaps:
        """Parse ``alpha=64,chi=32,...``."""
        if not text:
            return cls()
        kwargs = {}
        for item in text.split(","):
            key, _, val = item.partition("=")
            key = key.strip()
            if key not in cls.__dataclass_fields__:
                raise ValueError(f"unknown oracle cap {key!r}")
            kwargs[key] = int(val)
        return cls(**kwargs)


@dataclass(frozen=True)
class ExactInvariants:
    """Oracle values; a field is None when skipped, with the reason in ``skipped``.

    ``xi`` and ``pi`` are upper bounds when ``xi_exact``/``pi_exact`` is False.
    ``gamma`` is ``inf`` when no subset has a nonempty far side.
    """

    kappa: int | None = None
    kappa_prime: int | None = None
    alpha: int | None = None
    chi: int | None = None
    hamiltonian: bool | None = None
    gamma: float | None = None
    beta: float | None = None
    xi: int | None = None
    pi: int | None = None
    xi_exact: bool = False
    pi_exact: bool = False
    hamilton_cycle: tuple[int, ...] | None = None
    skipped: dict[str, str] = field(default_factory=dict, hash=False)

    def record(self) -> dict:
        return {
            "kappa": self.kappa,
            "kappa_prime": self.kappa_prime,
            "alpha": self.alpha,
            "chi": self.chi,
            "hamiltonian": self.hamiltonian,
            "gamma": self.gamma,
            "beta": self.beta,
            "xi": self.xi,
            "xi_exact": self.xi_exact,
            "pi": self.pi,
            "pi_exact": self.pi_exact,
            "skipped": dict(sorted(self.skipped.items())),
        }


def compute_invariants(g: Graph, caps: OracleCaps | None = None, *, forwarding: bool = True) -> ExactInvariants:
    caps = caps or OracleCaps()
    n = g.n
    skipped: dict[str, str] = {}
    values: dict = {}

    values["kappa"] = kappa_exact(g)
    values["kappa_prime"] = kappa_prime_exact(g)
    if n <= caps.alpha:
        values["alpha"] = alpha_exact(g)
    else:
        skipped["alpha"] = f"n > {caps.alpha}"
    if n <= caps.chi:
        values["chi"] = chi_exact(g)
    else:
        skipped["chi"] = f"n > {caps.chi}"

    ham = hamiltonian_exact(g, cap=caps.hamiltonian, max_nodes=caps.hamiltonian_nodes)
    values["hamiltonian"] = ham.hamiltonian
    values["hamilton_cycle"] = ham.cycle
    if ham.hamiltonian is None:
        skipped["hamiltonian"] = "undecided: search budget or exact cap exceeded"

    if n <= caps.subsets:
        values["gamma"] = gamma_exact(g, caps.subsets)
        if n >= 2:
            values["beta"] = beta_exact(g, caps.subsets)
    else:
        skipped["gamma"] = skipped["beta"] = f"n > {caps.subsets}"

    connected = is_connected(g)
    if not forwarding:
        skipped["xi"] = skipped["pi"] = "not requested"
    elif not connected or n < 2:
        values["xi"] = values["pi"] = None
        skipped["xi"] = skipped["pi"] = "graph disconnected" if n >= 2 else "n < 2"
    elif n <= caps.forwarding_heuristic:
        fw = forwarding_exact(g, cap=caps.forwarding, node_budget=caps.forwarding_nodes)
        values.update(xi=fw.xi, pi=fw.pi, xi_exact=fw.xi_exact, pi_exact=fw.pi_exact)
    else:
        skipped["xi"] = skipped["pi"] = f"n > {caps.forwarding_heuristic}"
    return ExactInvariants(skipped=skipped, **values)
