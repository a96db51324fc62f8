"""Downlink SINR of Poisson cellular networks under pathloss and shadowing.

Monte Carlo SINR distributions on a toroidal Poisson network, with the
fluid-network model as a closed-form baseline.
"""
from .errors import CampaignError, EmptyNetworkError, NumericalError, ParameterError
from .fluid import (FluidCdf, FluidParams, cell_average_throughput, cell_edge_throughput,
                    fluid_cdf, fluid_quantile_dB, fluid_sinr, invert_fluid_sinr,
                    modified_fluid_sinr_dB)
from .montecarlo import (EmpiricalCdf, ShiftReport, SignalDecomposition, SinrSampleSet,
                         cdf_horizontal_shift_dB, decompose_signals, empirical_cdf,
                         outage_probability, run_campaign)
from .network import (BsLayout, NetworkConfig, derive_density, sample_layout,
                      torus_distance, torus_distances)
from .propagation import ShadowingParams, pathloss_gain, sample_shadowing, shadowing_pdf
from .sinr import (RxPowerVector, associate_best_server, associate_nearest, compute_sinr,
                   received_powers, spectral_efficiency)

__version__ = "0.1.0"
