# -*- coding: utf-8 -*-
"""
Photon-number covariance from knife-edge window variances.

The variance of window T is the sum of <n_m, n_m'> over m, m' in T, so the
N(N+1)/2 upper-triangle entries follow from a linear system with one row per
window.  The complete contiguous set of windows makes that system square and
invertible; we still solve it by least squares so that redundant or weighted
scans go through the same path.
"""
import warnings
from functools import lru_cache

import numpy as np
import scipy.linalg

try:
    import numba
    from .window_functions_numba import design_matrix_kernel, inclusion_exclusion_kernel
except ImportError:
    from .window_functions import design_matrix_kernel, inclusion_exclusion_kernel

from ..errors import InputError, RankDeficientError
from .windows import (SpectralWindow, WindowScan, ShotNoiseLevels, PhotonCovariance,
                      QuadratureCovariance, enumerate_windows)

# null-space components above this mark an unknown as unconstrained
NULL_SPACE_TOL = 1e-9


def n_unknowns(n_bins):
    return n_bins * (n_bins + 1) // 2


def pack_upper(matrix):
    """upper-triangle entries of a square matrix, row-major"""
    matrix = np.asarray(matrix, dtype=float)
    return matrix[np.triu_indices(matrix.shape[0])]


def unpack_upper(values, n_bins):
    """symmetric matrix from row-major upper-triangle entries"""
    out = np.zeros((n_bins, n_bins))
    rows, cols = np.triu_indices(n_bins)
    out[rows, cols] = values
    out[cols, rows] = values
    return out


def _entries(cov):
    return cov.entries if hasattr(cov, 'entries') else np.asarray(cov, dtype=float)


def predict_window_variance(cov, window):
    """photon-number variance of one window

    Parameters
    ----------
    cov : PhotonCovariance or array_like
        N x N photon-number covariance
    window : SpectralWindow or (k, l)
        window inside bins 1..N

    Returns
    -------
    float
        sum of cov[m, m'] over m, m' in the window (off-diagonals counted twice)
    """
    entries = _entries(cov)
    window = SpectralWindow(*window)
    window.check(entries.shape[0])
    block = window.bins()
    return float(entries[block, block].sum())


def predict_window_scan(cov, windows=None, sigmas=None):
    """noiseless scan of cov over the given windows (all contiguous by default)"""
    entries = _entries(cov)
    n_bins = entries.shape[0]
    if windows is None:
        windows = enumerate_windows(n_bins)
    windows = tuple(SpectralWindow(*w) for w in windows)
    design = build_design_matrix(windows, n_bins)
    return WindowScan(n_bins, windows, design @ pack_upper(entries), sigmas)


def build_design_matrix(windows, n_bins):
    """one row per window over the upper-triangle unknowns (row-major)

    Parameters
    ----------
    windows : sequence of SpectralWindow or (k, l)
        windows inside bins 1..n_bins
    n_bins : int
        number of bins N

    Returns
    -------
    np.array(float)
        (len(windows), N(N+1)/2) coefficient matrix
    """
    windows = tuple(SpectralWindow(*w) for w in windows)
    for w in windows:
        w.check(n_bins)
    return _design_matrix(windows, int(n_bins)).copy()


@lru_cache(maxsize=32)
def _design_matrix(windows, n_bins):
    ks = np.array([w.k for w in windows], dtype=np.int64)
    ls = np.array([w.l for w in windows], dtype=np.int64)
    design = design_matrix_kernel(ks, ls, n_bins)
    design.setflags(write=False)
    return design


def _unconstrained_entries(design, n_bins):
    null = scipy.linalg.null_space(design)
    loose = np.flatnonzero(np.max(np.abs(null), axis=1) > NULL_SPACE_TOL) \
        if null.size else np.array([], dtype=int)
    rows, cols = np.triu_indices(n_bins)
    return [(int(rows[u]) + 1, int(cols[u]) + 1) for u in loose]


def reconstruct_covariance(scan):
    """least-squares photon-number covariance of a window scan

    Records carrying an uncertainty sigma are weighted by 1/sigma^2.

    Parameters
    ----------
    scan : WindowScan
        windows must determine every entry

    Returns
    -------
    PhotonCovariance

    Raises
    ------
    RankDeficientError
        naming the entries the windows leave unconstrained
    """
    n_bins = scan.n_bins
    design = _design_matrix(scan.windows, n_bins)
    target = scan.variances
    if scan.sigmas is not None:
        weights = 1.0 / scan.sigmas
        design = design * weights[:, None]
        target = target * weights
    if len(scan) < n_unknowns(n_bins):
        raise RankDeficientError(_unconstrained_entries(design, n_bins))
    solution, _, rank, _ = scipy.linalg.lstsq(design, target, lapack_driver='gelsd')
    if rank < n_unknowns(n_bins):
        raise RankDeficientError(_unconstrained_entries(design, n_bins))
    return PhotonCovariance(unpack_upper(solution, n_bins))


def inclusion_exclusion_reconstruct(scan):
    """closed-form covariance from a complete scan

    <n_i, n_j> = [W(i,j) - W(i+1,j) - W(i,j-1) + W(i+1,j-1)] / 2 for i < j and
    <n_i, n_i> = W(i,i), with W(a,b) the variance of window a..b.
    """
    missing = scan.missing_windows()
    if missing:
        raise InputError('scan is incomplete: {0} of {1} contiguous windows missing, '
                         'first (k={2}, l={3})'.format(len(missing), n_unknowns(scan.n_bins),
                                                      missing[0].k, missing[0].l))
    return PhotonCovariance(inclusion_exclusion_kernel(scan.variance_table(), scan.n_bins))


def reconstruction_residual(scan, cov):
    """RMS difference between measured and predicted window variances"""
    design = _design_matrix(scan.windows, scan.n_bins)
    predicted = design @ pack_upper(_entries(cov))
    return float(np.sqrt(np.mean((scan.variances - predicted) ** 2)))


def _check_shot(shot, n_bins):
    shot = ShotNoiseLevels.coerce(shot)
    if shot.n_bins != n_bins:
        raise InputError('{0} shot-noise levels for {1} bins'.format(shot.n_bins, n_bins))
    return shot


def normalize_covariance(photon_cov, shot):
    """C_mm' = <n_m, n_m'> / (|A_m| |A_m'|)

    Parameters
    ----------
    photon_cov : PhotonCovariance
    shot : ShotNoiseLevels or array_like
        |A_m|^2 per bin, strictly positive

    Returns
    -------
    QuadratureCovariance
    """
    entries = _entries(photon_cov)
    amps = _check_shot(shot, entries.shape[0]).amplitudes
    return QuadratureCovariance(entries / np.outer(amps, amps))


def denormalize_covariance(cov, shot):
    """inverse of normalize_covariance"""
    entries = _entries(cov)
    amps = _check_shot(shot, entries.shape[0]).amplitudes
    return PhotonCovariance(entries * np.outer(amps, amps))


def project_psd(cov):
    """clip negative eigenvalues of C at zero

    Returns
    -------
    QuadratureCovariance
        nearest positive semidefinite matrix in Frobenius norm
    float
        clipped mass, the sum of |negative eigenvalues|
    """
    vals, vecs = scipy.linalg.eigh(_entries(cov))
    clipped = float(-vals[vals < 0].sum())
    if clipped > 0:
        warnings.warn('PSD projection clipped eigenvalue mass {0:.3g}'.format(clipped),
                      RuntimeWarning)
    projected = (vecs * np.clip(vals, 0, None)) @ vecs.T
    return QuadratureCovariance((projected + projected.T) / 2), clipped


def noise_power_to_variance(power_dbm, shot_power_dbm, shot_level):
    """photon-number variance from spectrum-analyser noise powers

    The shot-noise reading of the same optical power corresponds to a variance
    equal to the mean photon number, so the measured power relative to it
    scales the shot level.

    Parameters
    ----------
    power_dbm : float or array_like
        measured photon-number noise power
    shot_power_dbm : float or array_like
        shot-noise power for the same optical power
    shot_level : float or array_like
        shot-noise level in photon-number units

    Returns
    -------
    float or np.array(float)
    """
    ratio = 10 ** ((np.asarray(power_dbm, dtype=float)
                    - np.asarray(shot_power_dbm, dtype=float)) / 10)
    return ratio * np.asarray(shot_level, dtype=float)
