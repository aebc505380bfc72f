# -*- coding: utf-8 -*-
"""
Synthetic knife-edge measurements of a known covariance matrix.

Noise is added to the window variances, the quantity the spectrum analyser
actually records, and each reading is rounded to the number of significant
digits the instrument resolves.
"""
import numbers

import numpy as np
from dask import compute, delayed
from tqdm.auto import tqdm

from ..errors import InputError
from ..WindowReconstruction.reconstruction import (predict_window_scan, reconstruct_covariance,
                                                   normalize_covariance,
                                                   denormalize_covariance)
from ..WindowReconstruction.windows import ShotNoiseLevels, WindowScan


class MeasurementNoiseParams(object):
    """detector imperfections

    Parameters
    ----------
    electronic_snr_db : float
        signal to electronic noise ratio of the homodyne system
    cmrr_db : float
        common-mode rejection of the balanced detector
    significant_digits : int
        digits kept of every recorded variance
    rng_seed : int
        seed of the noise stream
    """

    def __init__(self, electronic_snr_db=41.0, cmrr_db=20.0, significant_digits=3,
                 rng_seed=0):
        if not electronic_snr_db > 0:
            raise InputError('electronic_snr_db must be positive, got {0}'.format(
                electronic_snr_db))
        if not cmrr_db > 0:
            raise InputError('cmrr_db must be positive, got {0}'.format(cmrr_db))
        if not isinstance(significant_digits, numbers.Integral) or significant_digits < 1:
            raise InputError('significant_digits must be an integer >= 1, got {0!r}'.format(
                significant_digits))
        if not isinstance(rng_seed, numbers.Integral) or rng_seed < 0:
            raise InputError('rng_seed must be a non-negative integer, got {0!r}'.format(
                rng_seed))
        self.electronic_snr_db = float(electronic_snr_db)
        self.cmrr_db = float(cmrr_db)
        self.significant_digits = int(significant_digits)
        self.rng_seed = int(rng_seed)

    @property
    def relative_noise(self):
        """noise standard deviation as a fraction of the signal"""
        return 10 ** (-self.electronic_snr_db / 10)

    @property
    def common_mode_leak(self):
        return 10 ** (-self.cmrr_db / 10)

    def __repr__(self):
        return ('MeasurementNoiseParams(electronic_snr_db={0}, cmrr_db={1}, '
                'significant_digits={2}, rng_seed={3})').format(
                    self.electronic_snr_db, self.cmrr_db, self.significant_digits,
                    self.rng_seed)


def round_significant(values, digits):
    """round every value to the given number of significant digits"""
    values = np.asarray(values, dtype=float)
    flat = [float('{0:.{1}g}'.format(v, digits)) for v in values.reshape(-1)]
    return np.array(flat).reshape(values.shape)


def _noisy_scan(clean, noise, rng):
    sigma = clean.variances * noise.relative_noise
    noisy = clean.variances + sigma * rng.standard_normal(len(clean))
    noisy = round_significant(np.maximum(noisy, 0.0), noise.significant_digits)
    return WindowScan(clean.n_bins, clean.windows, noisy)


def _clean_scan(trueC, shot):
    return predict_window_scan(denormalize_covariance(trueC, shot))


def simulate_window_scan(trueC, shot, noise, rng=None):
    """noisy scan of all contiguous windows

    Parameters
    ----------
    trueC : QuadratureCovariance
        ground-truth normalized covariance
    shot : ShotNoiseLevels or array_like
        |A_m|^2 per bin
    noise : MeasurementNoiseParams
    rng : numpy.random.Generator, optional
        noise stream; seeded from ``noise.rng_seed`` if omitted

    Returns
    -------
    WindowScan
        variance of every window plus zero-mean Gaussian noise with standard
        deviation variance * 10^(-snr/10), rounded to significant digits
    """
    if rng is None:
        rng = np.random.default_rng(noise.rng_seed)
    return _noisy_scan(_clean_scan(trueC, shot), noise, rng)


def simulate_shot_noise_levels(trueC, shot, noise):
    """shot-noise calibration seen through a detector of finite CMRR

    A fraction 10^(-cmrr/10) of the excess photon-number noise of each bin
    leaks into the balanced reading.
    """
    shot = ShotNoiseLevels.coerce(shot)
    photon_diag = np.diag(denormalize_covariance(trueC, shot).entries)
    measured = shot.levels + noise.common_mode_leak * (photon_diag - shot.levels)
    return ShotNoiseLevels(round_significant(measured, noise.significant_digits))


def _single_run(clean, shot, noise, seed_sequence):
    scan = _noisy_scan(clean, noise, np.random.default_rng(seed_sequence))
    return normalize_covariance(reconstruct_covariance(scan), shot).entries


def monte_carlo_reconstruction(trueC, shot, noise, runs, parallel=False, verbose=False):
    """reconstruct C from many independent noisy scans

    Run k draws its noise from ``SeedSequence(noise.rng_seed).spawn(runs)[k]``
    so results do not depend on scheduling.

    Parameters
    ----------
    trueC : QuadratureCovariance
    shot : ShotNoiseLevels or array_like
    noise : MeasurementNoiseParams
    runs : int
        number of scans
    parallel : bool
        evaluate runs with the dask threaded scheduler
    verbose : bool
        show a progress bar for serial runs

    Returns
    -------
    np.array(float)
        (runs, N, N) stack of reconstructed normalized covariances
    """
    if not isinstance(runs, numbers.Integral) or runs < 1:
        raise InputError('runs must be a positive integer, got {0!r}'.format(runs))
    shot = ShotNoiseLevels.coerce(shot)
    clean = _clean_scan(trueC, shot)
    seeds = np.random.SeedSequence(noise.rng_seed).spawn(runs)
    if parallel:
        values = [delayed(_single_run)(clean, shot, noise, s) for s in seeds]
        results = compute(*values, scheduler='threads')
    else:
        results = [_single_run(clean, shot, noise, s)
                   for s in tqdm(seeds, disable=not verbose)]
    return np.array(results)


def monte_carlo_summary(stack):
    """mean and standard error of the mean of a stack of matrices"""
    stack = np.asarray(stack, dtype=float)
    if stack.ndim != 3 or len(stack) < 2:
        raise InputError('need a (runs >= 2, N, N) stack, got shape {0}'.format(stack.shape))
    return stack.mean(axis=0), stack.std(axis=0, ddof=1) / np.sqrt(len(stack))
