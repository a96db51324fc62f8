"""
Poisson layouts on a torus
==========================

Draw a few base-station layouts and check the two facts the simulator
relies on: the count is Poisson with mean 50 and the mean distance to the
nearest neighbour equals the half inter-site distance ``Rc``.
"""
import numpy as np

from poisson_sinr import NetworkConfig, sample_layout, torus_distances

config = NetworkConfig(half_isd_Rc=500.0)
print(f"density {config.rho_bs:.3e} BS/m^2, torus side {config.side:.0f} m")

rng = np.random.default_rng(0)
layouts = [sample_layout(config, rng) for _ in range(2000)]
counts = np.array([layout.count for layout in layouts])
print(f"BS count: mean {counts.mean():.2f}, variance {counts.var():.2f}")

nn = []
for layout in layouts:
    d = torus_distances(layout.positions, layout.positions, layout.side)
    np.fill_diagonal(d, np.inf)
    nn.append(d.min(axis=1))
print(f"mean nearest-neighbour distance {np.concatenate(nn).mean():.1f} m (Rc = 500 m)")
