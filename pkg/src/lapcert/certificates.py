"""Eigenvalue bounds on graph invariants, evaluated as explicit certificates.

Every function takes a graph and its :class:`SpectralSummary` and returns a
:class:`Certificate`: the preconditions that were checked, whether they all
held, and the bound (or boolean verdict) the inequality yields. A
certificate is a claim to be tested against the exact oracles; nothing
here consults them.

Inequalities are evaluated with an additive slack of 1e-9 to absorb
eigensolver error. Lower bounds that come out nonpositive are clamped to 0
and marked ``vacuous``; the unclamped number stays in ``details["raw"]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

import numpy as np

from .graph import Graph, VertexSet, edges_within, is_connected, subset_stats
from .spectral import SLACK, SpectralSummary, summarize

# square of the constant 2 + 2*sqrt(3) in the vertex-connectivity bound
C_SQUARED = 16.0 + 8.0 * math.sqrt(3.0)


class CertId(str, Enum):
    DISCREPANCY = "discrepancy_bound_check"
    PAIR_DEVIATION = "pair_deviation_check"
    KAPPA_SPECTRAL = "kappa_lb_spectral"
    KAPPA_FIEDLER = "kappa_lb_fiedler"
    KAPPA_REGULAR = "kappa_lb_regular"
    EDGE_CONN = "edge_conn_equality"
    ALPHA_THETA = "alpha_ub_theta"
    ALPHA_SIGMA = "alpha_ub_sigma"
    HAM_THETA = "hamiltonian_cert_theta"
    HAM_SIGMA = "hamiltonian_cert_sigma"
    CHROMATIC = "chromatic_lb"
    GAMMA = "gamma_lb"
    XI = "xi_lb"
    BETA = "beta_ub"
    PI = "pi_lb"


class Kind(str, Enum):
    LOWER = "lower_bound"
    UPPER = "upper_bound"
    EQUALITY = "equality_claim"
    SUFFICIENT = "sufficient_condition"
    CHECK = "inequality_check"


# invariant each certificate speaks about (ExactInvariants field name)
TARGET = {
    CertId.KAPPA_SPECTRAL: "kappa",
    CertId.KAPPA_FIEDLER: "kappa",
    CertId.KAPPA_REGULAR: "kappa",
    CertId.EDGE_CONN: "kappa_prime",
    CertId.ALPHA_THETA: "alpha",
    CertId.ALPHA_SIGMA: "alpha",
    CertId.HAM_THETA: "hamiltonian",
    CertId.HAM_SIGMA: "hamiltonian",
    CertId.CHROMATIC: "chi",
    CertId.GAMMA: "gamma",
    CertId.XI: "xi",
    CertId.BETA: "beta",
    CertId.PI: "pi",
}

ANCHOR = {
    CertId.DISCREPANCY: "|e(X,Y) - d|X||Y|/n + d|X&Y| - vol(X&Y)| <= theta/n sqrt(|X|(n-|X|)|Y|(n-|Y|))",
    CertId.PAIR_DEVIATION: "|2e(U) - d|U|(|U|-1)/n| <= 2 theta/n |U| (n - |U|/2)",
    CertId.KAPPA_SPECTRAL: "delta <= n/2 => kappa >= delta - (2+2sqrt3)^2 theta^2/delta",
    CertId.KAPPA_FIEDLER: "G not complete => kappa >= sigma_1",
    CertId.KAPPA_REGULAR: "d-regular, d <= n/2 => kappa >= d - 36 lambda^2/d",
    CertId.EDGE_CONN: "2 <= sigma_1 <= sigma_max <= 2d-2 => kappa' = delta",
    CertId.ALPHA_THETA: "alpha <= (2n theta + d)/(d + theta)",
    CertId.ALPHA_SIGMA: "alpha <= n (sigma_max - delta)/sigma_max",
    CertId.HAM_THETA: "delta - (2+2sqrt3)^2 theta^2/delta >= (2n theta + d)/(d + theta) => Hamiltonian",
    CertId.HAM_SIGMA: "sigma_1 >= n (sigma_max - delta)/sigma_max => Hamiltonian",
    CertId.CHROMATIC: "chi >= sigma_max/(sigma_max - delta)",
    CertId.GAMMA: "gamma >= (d^2 - theta^2)/(n theta^2)",
    CertId.XI: "sigma_1 <= 1/2 => xi >= sqrt((1 - 2 sigma_1)/sigma_1)",
    CertId.BETA: "beta <= (d + theta)/n",
    CertId.PI: "pi >= 2n/(d + theta)",
}


@dataclass(frozen=True)
class Certificate:
    id: CertId
    kind: Kind
    applicable: bool
    preconditions: tuple[tuple[str, bool], ...]
    value: float | bool | None
    anchor: str
    vacuous: bool = False
    details: dict = field(default_factory=dict, hash=False, compare=False)

    @property
    def target(self) -> str | None:
        return TARGET.get(self.id)

    def record(self) -> dict:
        """Flat, JSON-friendly form with a fixed key order."""
        return {
            "id": self.id.value,
            "kind": self.kind.value,
            "applicable": self.applicable,
            "value": self.value,
            "vacuous": self.vacuous,
            "preconditions": [[name, ok] for name, ok in self.preconditions],
            "anchor": self.anchor,
            "details": dict(self.details),
        }


def _cert(cid: CertId, kind: Kind, conds: Iterable[tuple[str, bool]], compute) -> Certificate:
    """Evaluate ``compute()`` only when every precondition holds.

    ``compute`` returns ``(value, details)``; for lower bounds the value is
    clamped at 0 and the certificate marked vacuous when it was nonpositive.
    """
    conds = tuple((name, bool(ok)) for name, ok in conds)
    applicable = all(ok for _, ok in conds)
    if not applicable:
        return Certificate(cid, kind, False, conds, None, ANCHOR[cid])
    value, details = compute()
    vacuous = False
    if kind is Kind.LOWER and value <= 0:
        details = {**details, "raw": value}
        value, vacuous = 0.0, True
    return Certificate(cid, kind, True, conds, value, ANCHOR[cid], vacuous, details)


def discrepancy_bound_check(g: Graph, s: SpectralSummary, X, Y) -> Certificate:
    xs, ys = g.vertex_set(X), g.vertex_set(Y)
    n, d, theta = s.n, s.d, s.theta
    st = subset_stats(g, xs, ys)
    a, b = len(xs), len(ys)
    lhs = abs(st.e_xy - d / n * a * b + d * st.size_xy - st.vol_xy)
    rhs = theta / n * math.sqrt(a * (n - a) * b * (n - b))
    return _cert(CertId.DISCREPANCY, Kind.CHECK, (), lambda: (lhs <= rhs + SLACK, {"lhs": lhs, "rhs": rhs}))


def pair_deviation_check(g: Graph, s: SpectralSummary, U) -> Certificate:
    us = g.vertex_set(U)
    n, d, theta = s.n, s.d, s.theta
    k = len(us)
    lhs = abs(2 * edges_within(g, us) - d * k * (k - 1) / n)
    rhs = 2 * theta / n * k * (n - k / 2)
    return _cert(CertId.PAIR_DEVIATION, Kind.CHECK, (), lambda: (lhs <= rhs + SLACK, {"lhs": lhs, "rhs": rhs}))


def kappa_lb_spectral(g: Graph, s: SpectralSummary) -> Certificate:
    conds = [
        ("connected", is_connected(g)),
        ("delta >= 1", s.delta >= 1),
        ("delta <= n/2", s.delta <= s.n / 2),
    ]
    return _cert(
        CertId.KAPPA_SPECTRAL,
        Kind.LOWER,
        conds,
        lambda: (s.delta - C_SQUARED * s.theta**2 / s.delta, {}),
    )


def kappa_lb_fiedler(g: Graph, s: SpectralSummary) -> Certificate:
    conds = [("connected", is_connected(g)), ("not complete", not g.is_complete())]
    return _cert(CertId.KAPPA_FIEDLER, Kind.LOWER, conds, lambda: (s.sigma1, {}))


def kappa_lb_regular(g: Graph, s: SpectralSummary) -> Certificate:
    # for a d-regular graph the adjacency eigenvalues are d - sigma_i, so the
    # second largest absolute adjacency eigenvalue equals theta
    conds = [
        ("regular", g.is_regular()),
        ("connected", is_connected(g)),
        ("d >= 1", s.d >= 1),
        ("d <= n/2", s.d <= s.n / 2),
    ]
    return _cert(
        CertId.KAPPA_REGULAR,
        Kind.LOWER,
        conds,
        lambda: (s.d - 36.0 * s.theta**2 / s.d, {"lambda": s.theta}),
    )


def edge_conn_equality(g: Graph, s: SpectralSummary) -> Certificate:
    conds = [
        ("sigma_1 >= 2", s.sigma1 >= 2 - SLACK),
        ("sigma_max <= 2d - 2", s.sigma_max <= 2 * s.d - 2 + SLACK),
    ]
    return _cert(CertId.EDGE_CONN, Kind.EQUALITY, conds, lambda: (s.delta, {}))


def alpha_ub_theta(g: Graph, s: SpectralSummary) -> Certificate:
    n, d, theta = s.n, s.d, s.theta
    return _cert(
        CertId.ALPHA_THETA,
        Kind.UPPER,
        [("d + theta > 0", d + theta > 0)],
        lambda: ((2 * n * theta + d) / (d + theta), {}),
    )


def alpha_ub_sigma(g: Graph, s: SpectralSummary) -> Certificate:
    return _cert(
        CertId.ALPHA_SIGMA,
        Kind.UPPER,
        [("sigma_max > 0", s.sigma_max > SLACK)],
        lambda: (s.n * (s.sigma_max - s.delta) / s.sigma_max, {}),
    )


def hamiltonian_cert_theta(g: Graph, s: SpectralSummary) -> Certificate:
    """Fires when the connectivity bound reaches the independence bound.

    The ``delta <= n/2`` hypothesis of the connectivity bound is reported in
    ``details`` but does not gate the verdict.
    """
    n, d, theta, delta = s.n, s.d, s.theta, s.delta
    conds = [("connected", is_connected(g)), ("n >= 3", n >= 3)]

    def compute():
        lhs = delta - C_SQUARED * theta**2 / delta
        rhs = (2 * n * theta + d) / (d + theta)
        return lhs >= rhs - SLACK, {"lhs": lhs, "rhs": rhs, "delta_le_half_n": delta <= n / 2}

    return _cert(CertId.HAM_THETA, Kind.SUFFICIENT, conds, compute)


def hamiltonian_cert_sigma(g: Graph, s: SpectralSummary) -> Certificate:
    conds = [("connected", is_connected(g)), ("n >= 3", s.n >= 3)]

    def compute():
        rhs = s.n * (s.sigma_max - s.delta) / s.sigma_max
        return s.sigma1 >= rhs - SLACK, {"lhs": s.sigma1, "rhs": rhs}

    return _cert(CertId.HAM_SIGMA, Kind.SUFFICIENT, conds, compute)


def chromatic_lb(g: Graph, s: SpectralSummary) -> Certificate:
    def compute():
        value = s.sigma_max / (s.sigma_max - s.delta)
        return value, {"integer": math.ceil(value - SLACK)}

    return _cert(CertId.CHROMATIC, Kind.LOWER, [("has an edge", g.m >= 1)], compute)


def gamma_lb(g: Graph, s: SpectralSummary) -> Certificate:
    n, d, theta = s.n, s.d, s.theta
    return _cert(
        CertId.GAMMA,
        Kind.LOWER,
        [("theta > 0", theta > 0)],
        lambda: ((d * d - theta * theta) / (n * theta * theta), {}),
    )


def xi_lb(g: Graph, s: SpectralSummary) -> Certificate:
    conds = [
        ("connected", is_connected(g) and s.n >= 2),
        ("sigma_1 <= 1/2", s.sigma1 <= 0.5 + SLACK),
    ]
    return _cert(
        CertId.XI,
        Kind.LOWER,
        conds,
        lambda: (math.sqrt(max(0.0, 1 - 2 * s.sigma1) / s.sigma1), {}),
    )


def beta_ub(g: Graph, s: SpectralSummary) -> Certificate:
    return _cert(CertId.BETA, Kind.UPPER, [("n >= 2", s.n >= 2)], lambda: ((s.d + s.theta) / s.n, {}))


def pi_lb(g: Graph, s: SpectralSummary) -> Certificate:
    conds = [("connected", is_connected(g)), ("n >= 2", s.n >= 2)]
    return _cert(CertId.PI, Kind.LOWER, conds, lambda: (2 * s.n / (s.d + s.theta), {}))


SCALAR_CERTIFICATES = (
    kappa_lb_spectral,
    kappa_lb_fiedler,
    kappa_lb_regular,
    edge_conn_equality,
    alpha_ub_theta,
    alpha_ub_sigma,
    hamiltonian_cert_theta,
    hamiltonian_cert_sigma,
    chromatic_lb,
    gamma_lb,
    xi_lb,
    beta_ub,
    pi_lb,
)


def random_subsets(n: int, count: int, rng: np.random.Generator) -> list[VertexSet]:
    """Subsets with a per-sample inclusion probability, so sizes span 0..n."""
    out = []
    for _ in range(count):
        p = rng.random()
        bits = rng.random(n) < p
        out.append(VertexSet.of(n, np.flatnonzero(bits).tolist()))
    return out


def _aggregate(cid: CertId, checks: list[tuple[Certificate, tuple]]) -> Certificate:
    failures = [(c, sets) for c, sets in checks if not c.value]
    worst = max((c.details["lhs"] - c.details["rhs"] for c, _ in checks), default=0.0)
    details = {"checked": len(checks), "violations": len(failures), "worst_margin": worst}
    if failures:
        c, sets = failures[0]
        details["counterexample"] = [sorted(x) for x in sets]
        details["counterexample_lhs"] = c.details["lhs"]
        details["counterexample_rhs"] = c.details["rhs"]
    return Certificate(cid, Kind.CHECK, True, (), not failures, ANCHOR[cid], False, details)


def subset_checks(g: Graph, s: SpectralSummary, samples: int = 200, seed: int = 0) -> list[Certificate]:
    """Both unconditional inequalities over ``samples`` seeded random subsets each.

    Returns one aggregated certificate per inequality; ``value`` is True when
    every sampled instance held.
    """
    rng = np.random.default_rng(seed)
    xs = random_subsets(g.n, samples, rng)
    ys = random_subsets(g.n, samples, rng)
    disc = [(discrepancy_bound_check(g, s, x, y), (x, y)) for x, y in zip(xs, ys)]
    pair = [(pair_deviation_check(g, s, u), (u,)) for u in xs]
    return [_aggregate(CertId.DISCREPANCY, disc), _aggregate(CertId.PAIR_DEVIATION, pair)]


def evaluate_all(
    g: Graph,
    summary: SpectralSummary | None = None,
    *,
    samples: int = 200,
    seed: int = 0,
) -> list[Certificate]:
    """Every certificate for ``g``: the two sampled subset checks, then the 13 scalar bounds."""
    s = summary if summary is not None else summarize(g)
    return subset_checks(g, s, samples, seed) + [f(g, s) for f in SCALAR_CERTIFICATES]
