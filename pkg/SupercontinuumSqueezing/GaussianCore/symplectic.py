# -*- coding: utf-8 -*-
"""
Symplectic matrices for the discretized N-bin field.

All matrices use the interleaved quadrature ordering (x_1, p_1, ..., x_N, p_N)
and the convention in which the vacuum variance of every quadrature is 1.
Mode indices are 0-based here; files and reports use 1-based bins.
"""
import numbers

import numpy as np

from ..errors import InputError

# element-wise tolerance on S Omega S^T - Omega
SYMPLECTIC_TOL = 1e-10


def omega(n_modes):
    """2N x 2N symplectic form

    Parameters
    ----------
    n_modes : int
        number of modes

    Returns
    -------
    np.array(float)
        block diagonal of [[0, 1], [-1, 0]]
    """
    return np.kron(np.eye(n_modes), np.array([[0., 1.], [-1., 0.]]))


def symplectic_residual(entries):
    """largest element of |S Omega S^T - Omega|"""
    entries = np.asarray(entries, dtype=float)
    om = omega(entries.shape[0] // 2)
    return np.max(np.abs(entries @ om @ entries.T - om))


def is_symplectic(S, tol=SYMPLECTIC_TOL):
    entries = S.entries if isinstance(S, SymplecticMatrix) else np.asarray(S, dtype=float)
    return symplectic_residual(entries) < tol


class SymplecticMatrix(object):
    """real 2N x 2N matrix preserving the symplectic form

    Parameters
    ----------
    entries : array_like
        the 2N x 2N matrix
    check : bool
        verify S Omega S^T = Omega on construction.  The tolerance grows with
        the squared norm of S so that strongly squeezing products are not
        rejected for round-off.
    """

    def __init__(self, entries, check=True):
        entries = np.array(entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1] \
                or entries.shape[0] % 2 or entries.shape[0] == 0:
            raise InputError('symplectic matrix must be 2N x 2N, got shape {0}'.format(
                entries.shape))
        if check:
            scale = max(1.0, np.max(np.abs(entries))) ** 2
            if symplectic_residual(entries) > SYMPLECTIC_TOL * scale:
                raise InputError('matrix does not preserve the symplectic form')
        entries.setflags(write=False)
        self.entries = entries
        self.n_modes = entries.shape[0] // 2

    def __matmul__(self, other):
        return compose(self, other)

    def inverse(self):
        """S^-1 = -Omega S^T Omega"""
        om = omega(self.n_modes)
        return SymplecticMatrix(-om @ self.entries.T @ om, check=False)

    def is_orthogonal(self, tol=SYMPLECTIC_TOL):
        eye = np.eye(2 * self.n_modes)
        return np.max(np.abs(self.entries @ self.entries.T - eye)) < tol

    def __repr__(self):
        return 'SymplecticMatrix(n_modes={0})'.format(self.n_modes)


def identity(n_modes):
    _check_n_modes(n_modes)
    return SymplecticMatrix(np.eye(2 * n_modes), check=False)


def compose(second, first):
    """symplectic matrix of ``first`` followed by ``second`` (second @ first)"""
    if second.n_modes != first.n_modes:
        raise InputError('cannot compose {0}-mode and {1}-mode transformations'.format(
            second.n_modes, first.n_modes))
    return SymplecticMatrix(second.entries @ first.entries, check=False)


def _check_n_modes(n_modes):
    if not isinstance(n_modes, numbers.Integral) or n_modes < 1:
        raise InputError('n_modes must be a positive integer, got {0!r}'.format(n_modes))


def _check_mode(i, n_modes):
    if not isinstance(i, numbers.Integral) or not 0 <= i < n_modes:
        raise InputError('mode index {0!r} out of range for {1} modes'.format(i, n_modes))


def _check_pair(i, j, n_modes, degenerate):
    _check_n_modes(n_modes)
    _check_mode(i, n_modes)
    _check_mode(j, n_modes)
    if i == j:
        raise InputError('modes must differ (i = j = {0}); use {1} for the '
                         'degenerate case'.format(i, degenerate))


def _place(S, rows, block):
    """write a 2 x 2 block on the given pair of quadrature indices"""
    a, b = rows
    S[a, a], S[a, b] = block[0]
    S[b, a], S[b, b] = block[1]


def two_mode_squeezer(r, i, j, n_modes):
    """two-mode squeezing between modes i and j

    Parameters
    ----------
    r : float
        squeezing parameter; r = 0 gives the identity
    i, j : int
        distinct 0-based mode indices
    n_modes : int
        total number of modes

    Returns
    -------
    SymplecticMatrix
        x-block [[cosh r, sinh r], [sinh r, cosh r]] and
        p-block [[cosh r, -sinh r], [-sinh r, cosh r]] on the pair
    """
    _check_pair(i, j, n_modes, 'single_mode_squeezer')
    c, s = np.cosh(r), np.sinh(r)
    S = np.eye(2 * n_modes)
    _place(S, (2 * i, 2 * j), [[c, s], [s, c]])
    _place(S, (2 * i + 1, 2 * j + 1), [[c, -s], [-s, c]])
    return SymplecticMatrix(S, check=False)


def single_mode_squeezer(r, i, n_modes):
    """x scaled by e^r and p by e^-r on mode i"""
    _check_n_modes(n_modes)
    _check_mode(i, n_modes)
    S = np.eye(2 * n_modes)
    S[2 * i, 2 * i] = np.exp(r)
    S[2 * i + 1, 2 * i + 1] = np.exp(-r)
    return SymplecticMatrix(S, check=False)


def _rotation(angle):
    c, s = np.cos(angle), np.sin(angle)
    return [[c, -s], [s, c]]


def beam_splitter(theta, i, j, n_modes):
    """mixing of modes i and j: the same rotation on the x and p pairs"""
    _check_pair(i, j, n_modes, 'phase_shift')
    S = np.eye(2 * n_modes)
    _place(S, (2 * i, 2 * j), _rotation(theta))
    _place(S, (2 * i + 1, 2 * j + 1), _rotation(theta))
    return SymplecticMatrix(S, check=False)


def phase_shift(phi, i, n_modes):
    """rotation of mode i's (x, p) by phi"""
    _check_n_modes(n_modes)
    _check_mode(i, n_modes)
    S = np.eye(2 * n_modes)
    _place(S, (2 * i, 2 * i + 1), _rotation(phi))
    return SymplecticMatrix(S, check=False)
