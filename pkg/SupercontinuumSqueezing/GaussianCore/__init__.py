from .symplectic import (SymplecticMatrix, omega, is_symplectic, identity, compose,
                         two_mode_squeezer, single_mode_squeezer, beam_splitter,
                         phase_shift)
from .gaussian_state import (GaussianState, PhononRegister, is_physical,
                             symplectic_eigenvalues, make_vacuum_state, thermal_state,
                             apply_symplectic, amplitude_quadrature_covariance)
