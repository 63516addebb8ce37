"""
Laplacian spectra of small graphs
=================================

The eigensolver is a plain cyclic Jacobi iteration. Here it is checked
against analytic spectra and the scalar summary the certificates use is
printed for a few graphs.
"""

import numpy as np

from lapcert import closed_form_spectrum, generate_family, laplacian_spectrum, parse_family, summarize

# paths, cycles and complete graphs have closed-form spectra
for text in ["path:10", "cycle:12", "complete:6", "complete_multipartite:3,3,3"]:
    spec = parse_family(text)
    got = laplacian_spectrum(generate_family(spec)).as_array()
    want = closed_form_spectrum(spec).as_array()
    print(f"{text:30s} max error {np.max(np.abs(got - want)):.1e}")

# sigma_1 of a path shrinks like (pi/n)^2
for n in (4, 8, 16, 32, 64):
    s = summarize(generate_family(parse_family(f"path:{n}")))
    print(f"P{n:<3d} sigma_1 = {s.sigma1:.6f}   4 sin^2(pi/2n) = {4 * np.sin(np.pi / (2 * n)) ** 2:.6f}")

# theta measures how far the nontrivial eigenvalues stray from the average degree
print()
print(f"{'graph':12s} {'d':>6s} {'delta':>5s} {'sigma_1':>8s} {'sigma_max':>9s} {'theta':>7s}")
for text in ["petersen", "cycle:5", "paley:13", "hypercube:4", "gnp:20,0.3,1"]:
    s = summarize(generate_family(parse_family(text)))
    print(f"{text:12s} {s.d:6.3f} {s.delta:5d} {s.sigma1:8.4f} {s.sigma_max:9.4f} {s.theta:7.4f}")
