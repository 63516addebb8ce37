"""Laplacian construction, a cyclic Jacobi eigensolver and spectral summaries."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, EigenSolverError
from .families import FamilySpec
from .graph import Graph

DEFAULT_TOL = 1e-12
SLACK = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in ascending order.

    ``tol`` is the absolute tolerance the solver converged to, i.e. the
    relative tolerance scaled by the Frobenius norm of the input.
    """

    values: tuple[float, ...]
    tol: float

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> float:
        return self.values[i]

    def as_array(self) -> np.ndarray:
        return np.array(self.values)

    def zero_multiplicity(self) -> int:
        """Eigenvalues below ``sqrt(tol)``; equals the component count for a Laplacian."""
        cut = math.sqrt(self.tol) if self.tol > 0 else 1e-8
        return sum(1 for v in self.values if abs(v) < cut)


@dataclass(frozen=True)
class SpectralSummary:
    n: int
    d: float
    delta: int
    Delta: int
    sigma1: float
    sigma_max: float
    theta: float


def laplacian(g: Graph) -> np.ndarray:
    L = np.zeros((g.n, g.n))
    for u, v in g.edges:
        L[u, v] = L[v, u] = -1.0
    L[np.diag_indices(g.n)] = g.degrees
    return L


def eigenvalues_symmetric(m: np.ndarray, tol: float = DEFAULT_TOL, max_sweeps: int = 60) -> Spectrum:
    """All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``tol * ||m||_F``.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    norm = float(np.linalg.norm(a))
    scale = max(norm, 1.0)
    if n and float(np.max(np.abs(a - a.T))) > tol * scale:
        raise DomainError("matrix is not symmetric")
    a = (a + a.T) / 2
    target = tol * norm
    off_mask = ~np.eye(n, dtype=bool)

    def off_norm() -> float:
        return float(np.sqrt(np.sum(a[off_mask] ** 2)))

    off = off_norm()
    sweeps = 0
    while off > target:
        if sweeps == max_sweeps:
            raise EigenSolverError(f"Jacobi did not converge in {max_sweeps} sweeps", off)
        # rotations below this size cannot keep the off-norm above target
        skip = target / max(n, 1)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                rp = a[p].copy()
                rq = a[q].copy()
                a[p] = c * rp - s * rq
                a[q] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
        sweeps += 1
        off = off_norm()
    return Spectrum(tuple(sorted(np.diag(a).tolist())), tol * scale)


def laplacian_spectrum(g: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    return eigenvalues_symmetric(laplacian(g), tol)


def spectral_summary(g: Graph, s: Spectrum) -> SpectralSummary:
    """Scalars consumed by the certificates.

    ``theta`` is the largest ``|d - sigma_i|`` over ``i >= 1``. For a single
    vertex there is no ``sigma_1``; it is reported as 0.
    """
    if g.n == 0:
        raise DomainError("spectral summary of the empty graph is undefined")
    if len(s) != g.n:
        raise DomainError(f"spectrum has {len(s)} values for a graph of order {g.n}")
    d = g.volume / g.n
    rest = s.values[1:]
    return SpectralSummary(
        n=g.n,
        d=d,
        delta=min(g.degrees),
        Delta=max(g.degrees),
        sigma1=s.values[1] if g.n > 1 else 0.0,
        sigma_max=s.values[-1],
        theta=max((abs(d - x) for x in rest), default=0.0),
    )


def summarize(g: Graph, tol: float = DEFAULT_TOL) -> SpectralSummary:
    return spectral_summary(g, laplacian_spectrum(g, tol))


def closed_form_spectrum(spec: FamilySpec) -> Spectrum:
    """Analytic Laplacian spectra for paths, cycles, complete and equal-part multipartite graphs."""
    f, p = spec.family, spec.params
    if f == "path":
        n = int(p[0])
        vals = [4.0 * math.sin(k * math.pi / (2 * n)) ** 2 for k in range(n)]
    elif f == "cycle":
        n = int(p[0])
        vals = [2.0 - 2.0 * math.cos(2 * math.pi * k / n) for k in range(n)]
    elif f == "complete":
        n = int(p[0])
        vals = [0.0] + [float(n)] * (n - 1)
    elif f == "complete_multipartite":
        sizes = [int(x) for x in p]
        if not sizes or len(set(sizes)) != 1:
            raise DomainError("closed form needs equal part sizes")
        r, s = len(sizes), sizes[0]
        vals = [0.0] + [float(r * s - s)] * (r * (s - 1)) + [float(r * s)] * (r - 1)
    else:
        raise DomainError(f"no closed-form spectrum for family {f!r}")
    return Spectrum(tuple(sorted(vals)), 0.0)
