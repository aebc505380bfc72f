# -*- coding: utf-8 -*-
"""
Gaussian states of the N-bin field.

The mean vector holds the classical amplitude A_m of each bin and the
covariance matrix holds the fluctuations of the perturbation a_m around it.
Vacuum variance is 1 per quadrature, quadratures are interleaved
(x_1, p_1, ..., x_N, p_N).
"""
import numpy as np

from ..errors import InputError
from ..WindowReconstruction.windows import QuadratureCovariance, ShotNoiseLevels
from .symplectic import SymplecticMatrix, omega, _check_n_modes

# eigenvalues of cov + i Omega allowed below zero
PHYSICALITY_TOL = 1e-9
SYMMETRY_TOL = 1e-12
# |A_m| below which the photon-number linearization is undefined
AMPLITUDE_FLOOR = 1e-6


class GaussianState(object):
    """mean vector and covariance matrix of an N-mode Gaussian state

    Parameters
    ----------
    mean : array_like
        length 2N mean quadrature vector
    cov : array_like
        2N x 2N symmetric covariance matrix
    validate : bool
        reject covariances violating the uncertainty relation
    """

    def __init__(self, mean, cov, validate=True):
        mean = np.array(mean, dtype=float).reshape(-1)
        cov = np.array(cov, dtype=float)
        if cov.ndim != 2 or cov.shape[0] != cov.shape[1] or cov.shape[0] % 2 \
                or cov.shape[0] == 0:
            raise InputError('covariance must be 2N x 2N, got shape {0}'.format(cov.shape))
        if len(mean) != cov.shape[0]:
            raise InputError('mean has length {0}, expected {1}'.format(
                len(mean), cov.shape[0]))
        if not (np.all(np.isfinite(mean)) and np.all(np.isfinite(cov))):
            raise InputError('state entries must be finite')
        scale = max(1.0, np.max(np.abs(cov)))
        if np.max(np.abs(cov - cov.T)) > SYMMETRY_TOL * scale:
            raise InputError('covariance matrix is not symmetric')
        cov = (cov + cov.T) / 2
        mean.setflags(write=False)
        cov.setflags(write=False)
        self.mean = mean
        self.cov = cov
        self.n_modes = cov.shape[0] // 2
        if validate and not is_physical(self):
            raise InputError('covariance matrix violates the uncertainty relation')

    def mode_block(self, i):
        """2 x 2 covariance block of mode i"""
        return self.cov[2 * i:2 * i + 2, 2 * i:2 * i + 2]

    def x_sector(self):
        """N x N covariance of the x quadratures"""
        return self.cov[0::2, 0::2]

    def amplitudes(self):
        """|A_m| of every mode"""
        return np.hypot(self.mean[0::2], self.mean[1::2])

    def shot_noise_levels(self):
        """|A_m|^2 as measured by a balanced detector"""
        return ShotNoiseLevels(self.amplitudes() ** 2)

    def __repr__(self):
        return 'GaussianState(n_modes={0})'.format(self.n_modes)


class PhononRegister(object):
    """thermal occupations of the phonon modes the optical field couples to

    Phonons are environment modes: they are never propagated, only traced out
    after each Raman interaction, so the register holds occupations alone.
    """

    def __init__(self, occupancy=()):
        occupancy = np.array(occupancy, dtype=float).reshape(-1)
        if not np.all(np.isfinite(occupancy)) or np.any(occupancy < 0):
            raise InputError('phonon occupations must be finite and non-negative')
        occupancy.setflags(write=False)
        self.occupancy = occupancy

    def __len__(self):
        return len(self.occupancy)

    def thermal_variance(self, k):
        """quadrature variance 2 n_bar + 1 of phonon mode k"""
        return 2 * self.occupancy[k] + 1

    def __repr__(self):
        return 'PhononRegister(n_phonons={0})'.format(len(self))


def is_physical(state, tol=PHYSICALITY_TOL):
    """cov + i Omega is positive semidefinite within tol"""
    herm = state.cov + 1j * omega(state.n_modes)
    return np.linalg.eigvalsh(herm).min() >= -tol


def symplectic_eigenvalues(state):
    """symplectic eigenvalues nu_k (all >= 1 for a physical state), ascending"""
    eigs = np.abs(np.linalg.eigvals(1j * omega(state.n_modes) @ state.cov))
    return np.sort(eigs)[::2]


def make_vacuum_state(n_modes, mean=None):
    """coherent state: identity covariance displaced by mean

    Parameters
    ----------
    n_modes : int
        number of modes N >= 1
    mean : array_like, optional
        length 2N mean vector, zeros if omitted

    Returns
    -------
    GaussianState
    """
    _check_n_modes(n_modes)
    if mean is None:
        mean = np.zeros(2 * n_modes)
    mean = np.asarray(mean, dtype=float).reshape(-1)
    if len(mean) != 2 * n_modes:
        raise InputError('mean has length {0}, expected 2 * {1}'.format(len(mean), n_modes))
    return GaussianState(mean, np.eye(2 * n_modes), validate=False)


def thermal_state(n_bars, mean=None):
    """mode m gets variance 2 n_bar_m + 1 in both quadratures"""
    n_bars = np.asarray(n_bars, dtype=float).reshape(-1)
    if len(n_bars) == 0 or np.any(n_bars < 0):
        raise InputError('thermal occupations must be non-negative')
    n_modes = len(n_bars)
    if mean is None:
        mean = np.zeros(2 * n_modes)
    return GaussianState(mean, np.diag(np.repeat(2 * n_bars + 1, 2)))


def apply_symplectic(state, S):
    """mean -> S mean, cov -> S cov S^T"""
    if not isinstance(S, SymplecticMatrix):
        S = SymplecticMatrix(S)
    if S.n_modes != state.n_modes:
        raise InputError('{0}-mode transformation applied to a {1}-mode state'.format(
            S.n_modes, state.n_modes))
    cov = S.entries @ state.cov @ S.entries.T
    return GaussianState(S.entries @ state.mean, (cov + cov.T) / 2, validate=False)


def _alignment(state):
    """block diagonal rotation taking each mean onto the +x axis"""
    amps = state.amplitudes()
    for m, amp in enumerate(amps):
        if amp < AMPLITUDE_FLOOR:
            raise InputError('mode {0} (bin {1}) has mean amplitude {2:.3g} below {3:g}; '
                             'photon-number linearization undefined'.format(
                                 m, m + 1, amp, AMPLITUDE_FLOOR))
    phases = np.arctan2(state.mean[1::2], state.mean[0::2])
    R = np.zeros((2 * state.n_modes, 2 * state.n_modes))
    for m, phi in enumerate(phases):
        c, s = np.cos(phi), np.sin(phi)
        R[2 * m:2 * m + 2, 2 * m:2 * m + 2] = [[c, s], [-s, c]]
    return R


def amplitude_quadrature_covariance(state):
    """N x N covariance of the quadratures in phase with each mean field

    Parameters
    ----------
    state : GaussianState
        every mode must carry a mean amplitude above AMPLITUDE_FLOOR

    Returns
    -------
    QuadratureCovariance
        identity for a coherent state
    """
    R = _alignment(state)
    rotated = R @ state.cov @ R.T
    return QuadratureCovariance.symmetrized(rotated[0::2, 0::2])[0]
