"""
Corrected fluid CDF against the Poisson network
===============================================

Quantiles of the Poisson no-shadowing SINR next to the plain and the
corrected fluid-model quantiles, for users uniform on the fluid cell.
"""
import numpy as np

from poisson_sinr import (FluidCdf, FluidParams, NetworkConfig, cdf_horizontal_shift_dB,
                          empirical_cdf, run_campaign)

grid = np.array([0.05, 0.25, 0.5, 0.75, 0.95])
for eta in (2.8, 3.0, 3.6, 3.8):
    config = NetworkConfig(half_isd_Rc=500.0, eta=eta, n_runs=200, seed=6)
    poisson = empirical_cdf(run_campaign(config))
    params = FluidParams.from_config(config)
    plain, corrected = FluidCdf(params), FluidCdf(params, modified=True)
    gap = cdf_horizontal_shift_dB(poisson, corrected).max_shift_dB
    print(f"eta={eta}: Poisson {np.round(poisson.quantile(grid), 2)}")
    print(f"{'':8}fluid   {np.round(plain.quantile(grid), 2)}")
    print(f"{'':8}fitted  {np.round(corrected.quantile(grid), 2)}  (max gap {gap:.2f} dB)")
