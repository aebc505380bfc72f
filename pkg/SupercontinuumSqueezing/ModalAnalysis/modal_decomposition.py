# -*- coding: utf-8 -*-
"""
Modal analysis of the normalized covariance matrix.

C = U^T V U with V ascending.  Rows of U are the eigenmodes (x' = U x), each
uncorrelated with the others; an eigenvalue below 1 is a mode squeezed below
the shot-noise limit.
"""
import warnings
from collections import namedtuple

import numpy as np
import scipy.linalg

from ..errors import InputError, NumericalError
from ..WindowReconstruction.windows import QuadratureCovariance, ShotNoiseLevels

SYMMETRY_TOL = 1e-9
ORTHOGONALITY_TOL = 1e-9
# eigenvalues closer than this are treated as one degenerate cluster
DEGENERACY_TOL = 1e-9
# |coefficient| below this is not significant when ordering degenerate modes
SIGNIFICANT_COEF = 1e-8
# |level| below this many dB is statistically marginal
MARGINAL_BAND_DB = 0.05
# eigenvalues within this of 1 are at the shot-noise limit (0 dB exactly)
SHOT_NOISE_TOL = 1e-10

ModeShapes = namedtuple('ModeShapes', ['raw', 'normalized'])


def _levels_db(V):
    V = np.asarray(V, dtype=float)
    levels = np.full(V.shape, -np.inf)
    positive = V > 0
    levels[positive] = 10 * np.log10(V[positive])
    levels[np.abs(V - 1) < SHOT_NOISE_TOL] = 0.0
    if not np.all(positive):
        modes = ', '.join(str(m + 1) for m in np.flatnonzero(~positive))
        warnings.warn('non-positive eigenvalues at modes {0} reported as -inf dB'.format(
            modes), RuntimeWarning)
    return levels


class ModalDecomposition(object):
    """eigenmodes of a covariance matrix

    Parameters
    ----------
    U : array_like
        N x N orthogonal matrix, rows are eigenmodes
    V : array_like
        ascending eigenvalues
    shot : ShotNoiseLevels, optional
        |A_m|^2 weighting the mode shapes; uniform if omitted
    mode_shapes : ModeShapes, optional
        stored profiles of a reloaded report; computed from U and shot if omitted
    squeezing_db : array_like, optional
        stored levels of a reloaded report; computed from V if omitted
    """

    def __init__(self, U, V, shot=None, mode_shapes=None, squeezing_db=None):
        U = np.array(U, dtype=float)
        V = np.array(V, dtype=float).reshape(-1)
        if U.ndim != 2 or U.shape != (len(V), len(V)):
            raise InputError('U must be {0} x {0}, got shape {1}'.format(len(V), U.shape))
        if np.any(np.diff(V) < 0):
            raise InputError('eigenvalues must be ascending')
        U.setflags(write=False)
        V.setflags(write=False)
        self.U = U
        self.V = V
        if squeezing_db is None:
            squeezing_db = _levels_db(V)
        self.squeezing_db = np.array(squeezing_db, dtype=float).reshape(-1)
        if len(self.squeezing_db) != len(V):
            raise InputError('{0} squeezing levels for {1} modes'.format(
                len(self.squeezing_db), len(V)))
        self.squeezing_db.setflags(write=False)
        self.shot = None if shot is None else ShotNoiseLevels.coerce(shot)
        if mode_shapes is None:
            mode_shapes = eigenmode_spectral_amplitude(
                self, self.shot if self.shot is not None else np.ones(len(V)))
        self.mode_shapes = ModeShapes(*mode_shapes)

    @property
    def n_bins(self):
        return len(self.V)

    def reconstruct(self):
        """U^T V U"""
        return self.U.T @ (self.V[:, None] * self.U)

    def __repr__(self):
        return 'ModalDecomposition(n_bins={0}, v_min={1:.5g}, v_max={2:.5g})'.format(
            self.n_bins, self.V[0], self.V[-1])


def _sign_canonical(U):
    """largest-magnitude coefficient of each row positive, ties to the lowest bin"""
    U = np.array(U, dtype=float)
    for row in U:
        mags = np.abs(row)
        lead = np.flatnonzero(mags >= mags.max() - 1e-12)[0]
        if row[lead] < 0:
            row *= -1
    return U


def _first_significant(row):
    return int(np.flatnonzero(np.abs(row) > SIGNIFICANT_COEF)[0])


def _canonical_subspace(rows):
    """basis of a degenerate eigenspace that depends only on the subspace

    Unit vectors e_1, e_2, ... are projected onto the subspace and
    orthonormalized in order until the subspace is spanned.
    """
    k, n = rows.shape
    projector = rows.T @ rows
    basis = []
    for e in range(n):
        v = projector[:, e].copy()
        for b in basis:
            v -= (b @ v) * b
        norm = np.linalg.norm(v)
        if norm > 1e-6:
            basis.append(v / norm)
        if len(basis) == k:
            break
    return np.array(sorted(basis, key=_first_significant))


def _canonical_order(V, U):
    U = np.array(U, dtype=float)
    start = 0
    while start < len(V):
        stop = start + 1
        while stop < len(V) and V[stop] - V[stop - 1] < DEGENERACY_TOL:
            stop += 1
        if stop - start > 1:
            U[start:stop] = _canonical_subspace(U[start:stop])
        start = stop
    return _sign_canonical(U)


def canonicalize(decomp):
    """same decomposition with canonical signs and degenerate ordering"""
    return ModalDecomposition(_canonical_order(decomp.V, decomp.U), decomp.V, decomp.shot,
                              squeezing_db=decomp.squeezing_db)


def _mode_shapes(U, levels):
    raw = U * np.sqrt(levels)[None, :]
    norms = np.linalg.norm(raw, axis=1)
    return ModeShapes(raw, raw / norms[:, None])


def _entries(cov):
    return cov.entries if hasattr(cov, 'entries') else np.asarray(cov, dtype=float)


def diagonalize(C, shot=None):
    """orthogonal diagonalization C = U^T V U

    Parameters
    ----------
    C : QuadratureCovariance or array_like
        symmetric within 1e-9
    shot : ShotNoiseLevels or array_like, optional
        per-bin |A_m|^2 used to weight the mode shapes

    Returns
    -------
    ModalDecomposition
        ascending eigenvalues, canonical signs
    """
    entries = _entries(C)
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        raise InputError('covariance must be square, got shape {0}'.format(entries.shape))
    asymmetry = np.max(np.abs(entries - entries.T))
    if asymmetry > SYMMETRY_TOL:
        raise InputError('covariance is not symmetric (max asymmetry {0:.3g})'.format(
            asymmetry))
    try:
        V, vecs = scipy.linalg.eigh((entries + entries.T) / 2)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise NumericalError('symmetric eigensolve failed: {0}'.format(exc))
    U = _canonical_order(V, vecs.T)
    return ModalDecomposition(U, V, shot)


def squeezing_levels_db(decomp):
    """10 log10(v_m); negative values are below shot noise"""
    return _levels_db(decomp.V)


def count_squeezed_modes(decomp, threshold_db=0.0):
    return int(np.sum(decomp.squeezing_db < threshold_db))


def marginal_modes(decomp, band_db=MARGINAL_BAND_DB):
    """0-based indices of modes within band_db of the shot-noise limit"""
    return np.flatnonzero(np.abs(decomp.squeezing_db) < band_db)


def eigenmode_spectral_amplitude(decomp, amplitudes):
    """eigenmode profiles weighted by the mean-field amplitude of each bin

    Parameters
    ----------
    decomp : ModalDecomposition
    amplitudes : ShotNoiseLevels or array_like
        |A_j|^2 per bin

    Returns
    -------
    ModeShapes
        ``raw[m, j] = U[m, j] * |A_j|`` and the rows of ``raw`` scaled to unit norm
    """
    shot = ShotNoiseLevels.coerce(amplitudes)
    if shot.n_bins != decomp.n_bins:
        raise InputError('{0} amplitudes for {1} bins'.format(shot.n_bins, decomp.n_bins))
    return _mode_shapes(decomp.U, shot.levels)


def transform_basis(C, U):
    """U C U^T; diagonal when U comes from diagonalize(C)"""
    entries = _entries(C)
    U = np.asarray(U, dtype=float)
    if U.shape != entries.shape:
        raise InputError('U has shape {0}, C has shape {1}'.format(U.shape, entries.shape))
    if np.max(np.abs(U @ U.T - np.eye(len(U)))) > ORTHOGONALITY_TOL:
        raise InputError('basis matrix is not orthogonal')
    out = U @ entries @ U.T
    return QuadratureCovariance((out + out.T) / 2)


def fano_factors(C):
    """diagonal of C: per-bin photon-number variance over the mean"""
    return np.diag(_entries(C)).copy()


def spectral_noise_db(C):
    """per-bin noise level relative to shot noise in dB"""
    return _levels_db(fano_factors(C))
