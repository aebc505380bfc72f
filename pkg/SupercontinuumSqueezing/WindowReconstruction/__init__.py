from .windows import (SpectralWindow, WindowScan, ShotNoiseLevels, PhotonCovariance,
                      QuadratureCovariance, enumerate_windows)
from .reconstruction import (predict_window_variance, predict_window_scan,
                             build_design_matrix, reconstruct_covariance,
                             inclusion_exclusion_reconstruct, reconstruction_residual,
                             normalize_covariance, denormalize_covariance, project_psd,
                             noise_power_to_variance)
