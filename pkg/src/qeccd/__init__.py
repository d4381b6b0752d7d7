"""Stabilizer-code process tomography of two-qubit amplitude damping."""
from .channel import ChannelParams, coefficients, collective_rates, spatial_F, spatial_G
from .pauli import BASIS_LABELS, PauliString, commutes, error_basis, mul
from .tomography import ProcessMatrix, direct_chi, qpt_chi, reconstruct, run_schedule

__version__ = "0.1.0"
