from __future__ import annotations

import itertools

import networkx as nx
import pytest

from conftest import fam
from lapcert.errors import DomainError
from lapcert.families import enumerate_graphs, parse_family
from lapcert.graph import Graph, boundary_sets
from lapcert.oracles import (
    OracleCaps,
    alpha_exact,
    beta_exact,
    chi_exact,
    compute_invariants,
    family_closed_forms,
    forwarding_exact,
    gamma_exact,
    hamiltonian_exact,
    kappa_exact,
    kappa_prime_exact,
)
from lapcert.oracles.coloring import dsatur_coloring, is_k_colorable
from lapcert.oracles.forwarding import simple_paths
from lapcert.oracles.hamiltonian import is_hamilton_cycle, rotation_extension


def nxg(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def random_graphs(ns, ps=(0.3, 0.5, 0.8), seeds=range(8)):
    return [fam(f"gnp:{n},{p},{s}") for n in ns for p in ps for s in seeds]


# ---- independent brute-force references ------------------------------------


def brute_alpha(g):
    for k in range(g.n, 0, -1):
        for c in itertools.combinations(range(g.n), k):
            if not any(g.has_edge(a, b) for a, b in itertools.combinations(c, 2)):
                return k
    return 0


def brute_chi(g):
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n):
            if all(col[u] != col[v] for u, v in g.edges):
                return k
    return g.n


def brute_hamiltonian(g):
    if g.n < 3:
        return False
    for rest in itertools.permutations(range(1, g.n)):
        cyc = (0,) + rest
        if all(g.has_edge(cyc[i], cyc[(i + 1) % g.n]) for i in range(g.n)):
            return True
    return False


def brute_gamma_beta(g):
    n = g.n
    gamma, beta = float("inf"), float("inf")
    for k in range(1, n):
        for x in itertools.combinations(range(n), k):
            nb, plus = boundary_sets(g, x)
            if len(plus):
                gamma = min(gamma, len(nb) / (k * len(plus)))
            cut = sum(1 for u in x for v in range(n) if v not in x and g.has_edge(u, v))
            beta = min(beta, cut / (k * (n - k)))
    return gamma, beta


def brute_forwarding(g):
    pairs = list(itertools.permutations(range(g.n), 2))
    options = [simple_paths(g, u, v)[0] for u, v in pairs]
    xi = pi = None
    for choice in itertools.product(*options):
        vload = [0] * g.n
        eload: dict = {}
        for p in choice:
            for v in p[1:-1]:
                vload[v] += 1
            for a, b in zip(p, p[1:]):
                e = (min(a, b), max(a, b))
                eload[e] = eload.get(e, 0) + 1
        x, y = max(vload), max(eload.values())
        xi = x if xi is None else min(xi, x)
        pi = y if pi is None else min(pi, y)
    return xi, pi


# ---- connectivity -------------------------------------------------------------


def test_connectivity_examples():
    assert kappa_exact(fam("petersen")) == 3
    assert kappa_exact(fam("path:4")) == 1
    assert kappa_exact(fam("complete:4")) == 3
    assert kappa_prime_exact(fam("cycle:5")) == 2
    assert kappa_prime_exact(fam("path:4")) == 1
    assert kappa_prime_exact(fam("complete:4")) == 3
    two = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert kappa_exact(two) == kappa_prime_exact(two) == 0


def test_connectivity_matches_networkx(small_corpus):
    for g in small_corpus + random_graphs([8, 11]) + [fam("hypercube:4"), fam("paley:13")]:
        h = nxg(g)
        assert kappa_exact(g) == nx.node_connectivity(h)
        assert kappa_prime_exact(g) == nx.edge_connectivity(h)


# ---- independence and colouring ----------------------------------------------


def test_alpha_chi_examples():
    assert alpha_exact(fam("cycle:5")) == 2
    assert alpha_exact(fam("petersen")) == 4
    assert alpha_exact(fam("complete_multipartite:3,3")) == 3
    assert chi_exact(fam("cycle:5")) == 3
    assert chi_exact(fam("petersen")) == 3
    assert chi_exact(fam("complete:4")) == 4
    assert alpha_exact(Graph.from_edges(0, [])) == 0


def test_alpha_chi_match_brute_force(small_corpus):
    for g in small_corpus:
        assert alpha_exact(g) == brute_alpha(g)
        assert chi_exact(g) == brute_chi(g)
    for g in random_graphs([8], seeds=range(4)):
        assert alpha_exact(g) == brute_alpha(g)
        assert chi_exact(g) == brute_chi(g)


def test_alpha_matches_networkx_on_larger_graphs():
    for g in random_graphs([16, 22], seeds=range(3)) + [fam("paley:29"), fam("hypercube:5")]:
        assert alpha_exact(g) == max(len(c) for c in nx.find_cliques(nxg(g.complement())))


def test_colorings_are_proper():
    for g in random_graphs([12, 16], seeds=range(3)) + [fam("paley:29"), fam("petersen")]:
        col = dsatur_coloring(g)
        assert all(col[u] != col[v] for u, v in g.edges)
        k = chi_exact(g)
        witness = is_k_colorable(g, k)
        assert witness is not None and all(witness[u] != witness[v] for u, v in g.edges)
        assert is_k_colorable(g, k - 1) is None


# ---- hamiltonicity -------------------------------------------------------------


def test_hamiltonian_examples():
    assert hamiltonian_exact(fam("petersen")).hamiltonian is False
    res = hamiltonian_exact(fam("cycle:7"))
    assert res.hamiltonian and is_hamilton_cycle(fam("cycle:7"), res.cycle)
    g = fam("paley:101")
    res = hamiltonian_exact(g)
    assert res.hamiltonian is True and is_hamilton_cycle(g, res.cycle)


def test_hamiltonian_matches_permutation_check(small_corpus):
    graphs = small_corpus + random_graphs([7, 8], seeds=range(4))
    for g in graphs:
        res = hamiltonian_exact(g)
        assert res.exact
        assert res.hamiltonian == brute_hamiltonian(g)
        if res.hamiltonian:
            assert is_hamilton_cycle(g, res.cycle)


def test_rotation_extension_on_dense_graphs():
    for text in ["gnp:60,0.3,1", "random_regular:50,10,2", "hypercube:6"]:
        g = fam(text)
        cyc = rotation_extension(g, seed=0)
        assert cyc is not None and is_hamilton_cycle(g, cyc)


def test_hamiltonian_beyond_cap_reports_unknown():
    # two 21-cycles sharing vertex 0: minimum degree 2 but a cut vertex
    edges = [(i, i + 1) for i in range(20)] + [(20, 0)]
    edges += [(0, 21)] + [(i, i + 1) for i in range(21, 40)] + [(40, 0)]
    g = Graph.from_edges(41, edges)
    res = hamiltonian_exact(g, cap=32)
    assert res.hamiltonian is None and not res.exact
    assert hamiltonian_exact(g, cap=41).hamiltonian is False
    assert hamiltonian_exact(fam("path:40")).hamiltonian is False


# ---- expansion ------------------------------------------------------------------


def test_expansion_examples():
    assert gamma_exact(fam("complete:5")) == float("inf")
    assert gamma_exact(fam("petersen")) == pytest.approx(0.5)
    assert gamma_exact(fam("path:4")) == pytest.approx(0.5)
    assert beta_exact(fam("complete:4")) == pytest.approx(1)
    assert beta_exact(fam("cycle:4")) == pytest.approx(0.5)
    assert beta_exact(fam("path:4")) == pytest.approx(0.25)
    assert beta_exact(fam("petersen")) == pytest.approx(0.2)
    with pytest.raises(DomainError):
        gamma_exact(fam("path:23"))


def test_expansion_matches_brute_force(small_corpus):
    for g in small_corpus[::3] + random_graphs([7], seeds=range(2)):
        gamma, beta = brute_gamma_beta(g)
        assert gamma_exact(g) == pytest.approx(gamma)
        assert beta_exact(g) == pytest.approx(beta)


# ---- forwarding -------------------------------------------------------------------


def test_forwarding_examples():
    r = forwarding_exact(fam("path:5"))
    assert (r.xi, r.pi, r.xi_exact, r.pi_exact) == (8, 12, True, True)
    r = forwarding_exact(fam("complete:4"))
    assert (r.xi, r.pi) == (0, 2)
    # antipodal pairs of C4 can share their detours: xi is 1, not 2
    r = forwarding_exact(fam("cycle:4"))
    assert (r.xi, r.pi) == (1, 4)
    with pytest.raises(DomainError):
        forwarding_exact(Graph.from_edges(4, [(0, 1), (2, 3)]))


def routing_space(g):
    size = 1
    for u, v in itertools.permutations(range(g.n), 2):
        size *= len(simple_paths(g, u, v)[0])
    return size


def test_forwarding_matches_exhaustive_routing():
    graphs = [g for n in (2, 3, 4, 5) for g in enumerate_graphs(n)]
    graphs = [g for g in graphs if routing_space(g) <= 50_000]
    assert len(graphs) >= 8
    for g in graphs:
        r = forwarding_exact(g)
        assert (r.xi, r.pi) == brute_forwarding(g)


def test_forwarding_witnesses(small_corpus):
    for g in small_corpus:
        r = forwarding_exact(g)
        assert r.xi_exact and r.pi_exact
        for routing in (r.xi_routing, r.pi_routing):
            routing.check(g)
            assert len(routing.paths) == g.n * (g.n - 1)
            total = sum(len(p) - 1 for p in routing.paths.values())
            assert sum(routing.edge_load().values()) == total
        assert r.xi_routing.max_vertex_load() == r.xi
        assert r.pi_routing.max_edge_load() == r.pi


def test_forwarding_search_fallback_agrees(small_corpus):
    # a one-node budget sends every nontrivial decision to the MILP fallback
    for g in small_corpus[-40:]:
        a = forwarding_exact(g)
        b = forwarding_exact(g, node_budget=1)
        assert (a.xi, a.pi) == (b.xi, b.pi) and b.xi_exact and b.pi_exact


def test_forwarding_beyond_cap_is_an_upper_bound():
    g = fam("path:9")
    r = forwarding_exact(g, cap=7)
    assert not r.xi_exact and not r.pi_exact
    assert r.xi >= 2 * 4 * 4 and r.pi >= 2 * 4 * 5
    r.xi_routing.check(g)


def test_path_forwarding_closed_forms():
    for n in range(2, 8):
        r = forwarding_exact(fam(f"path:{n}"))
        cf = family_closed_forms(parse_family(f"path:{n}"))
        assert (r.xi, r.pi) == (cf["xi"], cf["pi"])


# ---- cross checks -------------------------------------------------------------------


def test_closed_forms_match_oracles():
    texts = [f"path:{n}" for n in range(2, 11)] + [f"cycle:{n}" for n in range(3, 11)]
    texts += [f"complete:{n}" for n in range(2, 11)] + ["hypercube:2", "hypercube:3", "petersen"]
    texts += ["complete_multipartite:2,2,2", "complete_multipartite:1,3", "complete_multipartite:3,3,4"]
    for text in texts:
        g = fam(text)
        cf = family_closed_forms(parse_family(text))
        inv = compute_invariants(g, forwarding=g.n <= 7)
        for key, value in cf.items():
            if key in ("xi", "pi") and g.n > 7:
                continue
            assert getattr(inv, key) == value, (text, key)
    with pytest.raises(DomainError):
        family_closed_forms(parse_family("paley:13"))


def test_invariant_relations(small_corpus):
    for g in small_corpus + random_graphs([7, 8], seeds=range(3)):
        inv = compute_invariants(g, forwarding=g.n <= 6)
        delta = min(g.degrees)
        assert inv.kappa <= inv.kappa_prime <= delta
        assert inv.alpha * inv.chi >= g.n
        assert inv.chi <= max(g.degrees) + 1
        if inv.pi is not None:
            assert inv.pi * inv.beta >= 2 - 1e-9


def test_caps_are_recorded():
    caps = OracleCaps.parse("alpha=5,chi=5,subsets=5,forwarding_heuristic=5")
    inv = compute_invariants(fam("petersen"), caps)
    assert inv.alpha is None and inv.chi is None and inv.gamma is None and inv.xi is None
    assert set(inv.skipped) >= {"alpha", "chi", "gamma", "beta", "xi", "pi"}
    with pytest.raises(ValueError):
        OracleCaps.parse("bogus=1")
