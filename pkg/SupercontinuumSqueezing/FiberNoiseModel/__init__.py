from .fiber_channel import (FiberParams, FiberChannel, KerrInteraction, RamanInteraction,
                            Dispersion, build_fiber_channel, raman_channel,
                            raman_amplifier_channel, initial_state, propagate,
                            fiber_ground_truth)
from .measurement_noise import (MeasurementNoiseParams, round_significant,
                                simulate_window_scan, simulate_shot_noise_levels,
                                monte_carlo_reconstruction, monte_carlo_summary)
from .config import read_fiber_config
