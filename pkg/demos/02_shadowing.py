"""
Lognormal shadowing
===================

Shadowing multiplies the mean received power by ``10**(xi/10)``.  Compare a
histogram of shadowed powers with the closed-form density.
"""
import numpy as np

from poisson_sinr import ShadowingParams, pathloss_gain, sample_shadowing, shadowing_pdf

r, K, P, eta, sigma = 300.0, 1e-3, 1.0, 3.5, 6.0
mean_power = P * pathloss_gain(r, K, eta)
params = ShadowingParams.from_link(r, K, P, eta, sigma)
print(f"mean received power {mean_power:.3e} W ({params.mean_dB:.1f} dB)")

rng = np.random.default_rng(1)
s = mean_power * sample_shadowing(sigma, rng, size=200_000)
edges = np.geomspace(s.min(), s.max(), 40)
hist, _ = np.histogram(s, bins=edges, density=True)
centres = np.sqrt(edges[1:] * edges[:-1])
for c, h, f in list(zip(centres, hist, shadowing_pdf(centres, params)))[12:28:3]:
    print(f"s={c:.3e}  histogram {h:.4e}  pdf {f:.4e}")
