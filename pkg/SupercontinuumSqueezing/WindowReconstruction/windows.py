# -*- coding: utf-8 -*-
"""
Data types of the knife-edge measurement: spectral windows, window scans,
shot-noise levels and the two covariance matrices.

Bins are 1-based (m = 1..N) in windows, files and messages; arrays are
0-based internally.
"""
import numbers
import warnings
from collections import namedtuple

import numpy as np

from ..errors import InputError

# absolute symmetry tolerance, scaled by max(1, |M|max)
SYMMETRY_TOL = 1e-12


class SpectralWindow(namedtuple('SpectralWindow', ['k', 'l'])):
    """contiguous bins k, k+1, ..., k+l (1-based)"""
    __slots__ = ()

    @property
    def last(self):
        return self.k + self.l

    @property
    def width(self):
        return self.l + 1

    def bins(self):
        """0-based slice of the bins inside the window"""
        return slice(self.k - 1, self.k + self.l)

    def check(self, n_bins):
        if not isinstance(self.k, numbers.Integral) or not isinstance(self.l, numbers.Integral):
            raise InputError('window bounds must be integers, got {0}'.format(tuple(self)))
        if self.k < 1 or self.l < 0 or self.k + self.l > n_bins:
            raise InputError('window (k={0}, l={1}) outside bins 1..{2}'.format(
                self.k, self.l, n_bins))


def enumerate_windows(n_bins):
    """every contiguous window over n_bins bins, ordered by k then l

    Parameters
    ----------
    n_bins : int
        number of spectral bins N

    Returns
    -------
    list of SpectralWindow
        N(N+1)/2 windows
    """
    _check_n_bins(n_bins)
    return [SpectralWindow(k, l) for k in range(1, n_bins + 1)
            for l in range(n_bins - k + 1)]


def _check_n_bins(n_bins):
    if not isinstance(n_bins, numbers.Integral) or n_bins < 1:
        raise InputError('n_bins must be a positive integer, got {0!r}'.format(n_bins))


class WindowScan(object):
    """set of window variances in photon-number units

    Parameters
    ----------
    n_bins : int
        number of spectral bins N
    windows : sequence of SpectralWindow or (k, l)
        measured windows, no duplicates
    variances : array_like
        finite, non-negative variance of each window
    sigmas : array_like, optional
        per-record measurement uncertainty (all records or none)
    """

    def __init__(self, n_bins, windows, variances, sigmas=None):
        _check_n_bins(n_bins)
        windows = tuple(SpectralWindow(*w) for w in windows)
        variances = np.array(variances, dtype=float).reshape(-1)
        if len(windows) == 0:
            raise InputError('window scan has no records')
        if len(windows) != len(variances):
            raise InputError('{0} windows but {1} variances'.format(
                len(windows), len(variances)))
        seen = set()
        for w in windows:
            w.check(n_bins)
            if w in seen:
                raise InputError('duplicate window (k={0}, l={1})'.format(w.k, w.l))
            seen.add(w)
        if not np.all(np.isfinite(variances)):
            raise InputError('window variances must be finite')
        if np.any(variances < 0):
            bad = windows[int(np.argmax(variances < 0))]
            raise InputError('negative variance for window (k={0}, l={1})'.format(
                bad.k, bad.l))
        if sigmas is not None:
            sigmas = np.array(sigmas, dtype=float).reshape(-1)
            if len(sigmas) != len(windows):
                raise InputError('{0} windows but {1} uncertainties'.format(
                    len(windows), len(sigmas)))
            if not np.all(np.isfinite(sigmas)) or np.any(sigmas <= 0):
                raise InputError('uncertainties must be finite and positive')
            sigmas.setflags(write=False)
        variances.setflags(write=False)
        self.n_bins = int(n_bins)
        self.windows = windows
        self.variances = variances
        self.sigmas = sigmas

    @classmethod
    def from_records(cls, n_bins, records):
        """build from (window, variance) or (window, variance, sigma) tuples"""
        records = list(records)
        windows = [r[0] for r in records]
        variances = [r[1] for r in records]
        sigmas = None
        if records and all(len(r) > 2 and r[2] is not None for r in records):
            sigmas = [r[2] for r in records]
        return cls(n_bins, windows, variances, sigmas)

    @property
    def records(self):
        sigmas = self.sigmas if self.sigmas is not None else [None] * len(self)
        return list(zip(self.windows, self.variances.tolist(), list(sigmas)))

    def __len__(self):
        return len(self.windows)

    def missing_windows(self):
        present = set(self.windows)
        return [w for w in enumerate_windows(self.n_bins) if w not in present]

    def is_complete(self):
        return not self.missing_windows()

    def variance_table(self):
        """(N+2) x (N+2) table W[a, b] of window a..b (1-based), zero where a > b"""
        table = np.zeros((self.n_bins + 2, self.n_bins + 2))
        for w, v in zip(self.windows, self.variances):
            table[w.k, w.last] = v
        return table

    def __add__(self, other):
        if not isinstance(other, WindowScan):
            return NotImplemented
        if self.n_bins != other.n_bins or self.windows != other.windows:
            raise InputError('scans must share bins and window order to be added')
        return WindowScan(self.n_bins, self.windows, self.variances + other.variances)

    def __repr__(self):
        return 'WindowScan(n_bins={0}, records={1})'.format(self.n_bins, len(self))


class ShotNoiseLevels(object):
    """per-bin shot-noise level |A_m|^2"""

    def __init__(self, levels):
        levels = np.array(levels, dtype=float).reshape(-1)
        if len(levels) == 0:
            raise InputError('no shot-noise levels given')
        for m, level in enumerate(levels, start=1):
            if not np.isfinite(level) or level <= 0:
                raise InputError('shot-noise level of bin {0} must be positive, got {1}'.format(
                    m, level))
        levels.setflags(write=False)
        self.levels = levels

    @classmethod
    def coerce(cls, value):
        return value if isinstance(value, cls) else cls(value)

    @property
    def n_bins(self):
        return len(self.levels)

    @property
    def amplitudes(self):
        """mean-field amplitudes |A_m|"""
        return np.sqrt(self.levels)

    def __repr__(self):
        return 'ShotNoiseLevels(n_bins={0})'.format(self.n_bins)


class _SymmetricMatrix(object):
    """symmetric N x N matrix, symmetrized on construction"""

    def __init__(self, entries):
        entries = np.array(entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or entries.shape[0] == 0:
            raise InputError('{0} must be a square matrix, got shape {1}'.format(
                type(self).__name__, entries.shape))
        if not np.all(np.isfinite(entries)):
            raise InputError('{0} entries must be finite'.format(type(self).__name__))
        scale = max(1.0, np.max(np.abs(entries)))
        asymmetry = np.max(np.abs(entries - entries.T))
        if asymmetry > SYMMETRY_TOL * scale:
            raise InputError('{0} is not symmetric (max asymmetry {1:.3g})'.format(
                type(self).__name__, asymmetry))
        entries = (entries + entries.T) / 2
        entries.setflags(write=False)
        self.entries = entries

    @classmethod
    def symmetrized(cls, entries):
        """build from a nearly symmetric matrix

        Returns
        -------
        matrix : instance of cls
            built from (M + M^T) / 2
        asymmetry : float
            max |M - M^T| of the input
        """
        entries = np.array(entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise InputError('matrix must be square, got shape {0}'.format(entries.shape))
        asymmetry = float(np.max(np.abs(entries - entries.T))) if entries.size else 0.0
        return cls((entries + entries.T) / 2), asymmetry

    @property
    def n_bins(self):
        return self.entries.shape[0]

    def __repr__(self):
        return '{0}(n_bins={1})'.format(type(self).__name__, self.n_bins)


class PhotonCovariance(_SymmetricMatrix):
    """<n_m, n_m'> in photon-number units"""


class QuadratureCovariance(_SymmetricMatrix):
    """shot-noise normalized amplitude-quadrature covariance C (vacuum = identity)"""

    def __init__(self, entries):
        super().__init__(entries)
        diag = np.diag(self.entries)
        if np.any(diag <= 0):
            bins = ', '.join(str(m + 1) for m in np.flatnonzero(diag <= 0))
            warnings.warn('non-positive diagonal of C at bins ' + bins, RuntimeWarning)
