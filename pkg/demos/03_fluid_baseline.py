"""
Fluid-model baseline
====================

SINR versus distance, the analytic SINR CDF of a user uniform on the cell,
and the cell-edge and cell-average spectral efficiencies.
"""
import numpy as np

from poisson_sinr import (FluidParams, NetworkConfig, cell_average_throughput,
                          cell_edge_throughput, fluid_cdf, fluid_sinr)

for eta in (2.6, 3.0, 3.5, 4.0):
    params = FluidParams.from_config(NetworkConfig(half_isd_Rc=500.0, eta=eta))
    r = np.array([50.0, 250.0, 500.0])
    sinr_dB = 10 * np.log10(fluid_sinr(r, params))
    print(f"eta={eta}: SINR at r=50/250/500 m = {np.round(sinr_dB, 2)} dB, "
          f"edge {cell_edge_throughput(params):.3f} b/s/Hz, "
          f"average {cell_average_throughput(params):.3f} b/s/Hz, "
          f"P(SINR <= 0 dB) = {fluid_cdf(0.0, params):.3f} "
          f"(corrected: {fluid_cdf(0.0, params, modified=True):.3f})")
