from .modal_decomposition import (ModalDecomposition, ModeShapes, diagonalize,
                                  canonicalize, squeezing_levels_db, count_squeezed_modes,
                                  marginal_modes, eigenmode_spectral_amplitude,
                                  transform_basis, fano_factors, spectral_noise_db)
