# -*- coding: utf-8 -*-
"""
Phenomenological Gaussian model of quantum noise in supercontinuum generation.

The fiber is cut into n_steps segments.  In every segment the Kerr two-mode
squeezing interactions act first, then the Kerr mixing interactions, then the
Raman couplings to the phonon bath.  Interaction strengths are per segment and
are free parameters; they are not derived from a pump power.
"""
import numbers
from collections import namedtuple

import numpy as np

from ..errors import InputError, NumericalError
from ..GaussianCore.gaussian_state import (GaussianState, PhononRegister, is_physical,
                                           make_vacuum_state, apply_symplectic,
                                           amplitude_quadrature_covariance)
from ..GaussianCore.symplectic import (two_mode_squeezer, single_mode_squeezer,
                                       beam_splitter, phase_shift, identity, compose)

DEFAULT_AMPLITUDE = 100.0
# dispersion of the highly nonlinear fiber in ps^2/km, ps^3/km, ps^4/km
DEFAULT_DISPERSION = (0.0, 0.0638, -2.895e-5)

KerrInteraction = namedtuple('KerrInteraction', ['i', 'j', 'strength'])
RamanInteraction = namedtuple('RamanInteraction', ['mode', 'coupling', 'n_bar'])
Dispersion = namedtuple('Dispersion', ['beta2', 'beta3', 'beta4'])


def _check_index(i, n_bins, what):
    if not isinstance(i, numbers.Integral) or not 0 <= i < n_bins:
        raise InputError('{0} index {1!r} out of range for {2} bins'.format(what, i, n_bins))


class FiberParams(object):
    """interaction content of the fiber model

    Mode indices are 0-based; configuration files use 1-based bins.

    Parameters
    ----------
    n_bins : int
        number of spectral bins N
    kerr_tms_strengths : list of (i, j, r)
        two-mode squeezing per segment; i == j gives single-mode squeezing
    kerr_mix_angles : list of (i, j, theta)
        mixing angle per segment; i == j gives a phase shift
    raman_couplings : list of (mode, eta, n_bar)
        loss to a thermal phonon bath, 0 <= eta <= 1
    raman_gains : list of (mode, gain, n_bar)
        Raman amplification with phonon emission, gain >= 1
    n_steps : int
        number of fiber segments
    dispersion : (beta2, beta3, beta4)
        carried for bookkeeping only
    amplitudes : array_like, optional
        input mean-field amplitude |A_m| per bin
    phases : array_like, optional
        input mean-field phase per bin
    """

    def __init__(self, n_bins, kerr_tms_strengths=(), kerr_mix_angles=(),
                 raman_couplings=(), raman_gains=(), n_steps=1,
                 dispersion=DEFAULT_DISPERSION, amplitudes=None, phases=None):
        if not isinstance(n_bins, numbers.Integral) or n_bins < 1:
            raise InputError('n_bins must be a positive integer, got {0!r}'.format(n_bins))
        if not isinstance(n_steps, numbers.Integral) or n_steps < 1:
            raise InputError('n_steps must be a positive integer, got {0!r}'.format(n_steps))
        self.n_bins = int(n_bins)
        self.n_steps = int(n_steps)
        self.kerr_tms_strengths = [self._kerr(k, 'two-mode squeezing')
                                   for k in kerr_tms_strengths]
        self.kerr_mix_angles = [self._kerr(k, 'mixing') for k in kerr_mix_angles]
        self.raman_couplings = [self._raman(c, 'Raman loss') for c in raman_couplings]
        self.raman_gains = [self._raman(g, 'Raman gain') for g in raman_gains]
        for c in self.raman_couplings:
            if not 0 <= c.coupling <= 1:
                raise InputError('Raman coupling eta={0} of mode {1} outside [0, 1]'.format(
                    c.coupling, c.mode))
        for g in self.raman_gains:
            if g.coupling < 1:
                raise InputError('Raman gain {0} of mode {1} below 1'.format(
                    g.coupling, g.mode))
        self.dispersion = Dispersion(*(float(b) for b in dispersion))
        self.amplitudes = self._per_bin(amplitudes, DEFAULT_AMPLITUDE, 'amplitudes')
        self.phases = self._per_bin(phases, 0.0, 'phases')
        if np.any(self.amplitudes <= 0):
            raise InputError('mean-field amplitudes must be positive')

    def _kerr(self, entry, what):
        i, j, strength = entry
        _check_index(i, self.n_bins, what)
        _check_index(j, self.n_bins, what)
        return KerrInteraction(int(i), int(j), float(strength))

    def _raman(self, entry, what):
        mode, coupling, n_bar = entry
        _check_index(mode, self.n_bins, what)
        if n_bar < 0:
            raise InputError('phonon occupation {0} of mode {1} is negative'.format(n_bar, mode))
        return RamanInteraction(int(mode), float(coupling), float(n_bar))

    def _per_bin(self, values, default, what):
        if values is None:
            return np.full(self.n_bins, default)
        values = np.array(values, dtype=float).reshape(-1)
        if len(values) == 1:
            values = np.repeat(values, self.n_bins)
        if len(values) != self.n_bins or not np.all(np.isfinite(values)):
            raise InputError('{0} needs 1 or {1} finite values, got {2}'.format(
                what, self.n_bins, len(values)))
        return values

    @property
    def n_interactions(self):
        return (len(self.kerr_tms_strengths) + len(self.kerr_mix_angles)
                + len(self.raman_couplings) + len(self.raman_gains))

    def __repr__(self):
        return 'FiberParams(n_bins={0}, n_steps={1}, interactions={2})'.format(
            self.n_bins, self.n_steps, self.n_interactions)


class SymplecticStep(namedtuple('SymplecticStep', ['label', 'modes', 'matrix'])):
    """unitary Kerr interaction"""
    __slots__ = ()

    def apply(self, state, phonons):
        return apply_symplectic(state, self.matrix)


class RamanStep(namedtuple('RamanStep', ['label', 'mode', 'coupling', 'phonon'])):
    """coupling of one optical mode to phonon ``phonon`` of the register"""
    __slots__ = ()

    def apply(self, state, phonons):
        n_bar = phonons.occupancy[self.phonon]
        if self.label == 'raman_gain':
            return raman_amplifier_channel(state, self.mode, self.coupling, n_bar)
        return raman_channel(state, self.mode, self.coupling, n_bar)


class FiberChannel(object):
    """ordered Gaussian operations and the phonon register they draw from"""

    def __init__(self, n_modes, operations, phonons=None):
        self.n_modes = n_modes
        self.operations = tuple(operations)
        self.phonons = phonons if phonons is not None else PhononRegister()

    def __len__(self):
        return len(self.operations)

    def __iter__(self):
        return iter(self.operations)

    @property
    def is_unitary(self):
        return all(isinstance(op, SymplecticStep) for op in self.operations)

    def symplectic(self):
        """product of all operations of a unitary channel"""
        if not self.is_unitary:
            raise InputError('channel contains Raman couplings and has no symplectic matrix')
        total = identity(self.n_modes)
        for op in self.operations:
            total = compose(op.matrix, total)
        return total

    def __repr__(self):
        return 'FiberChannel(n_modes={0}, operations={1})'.format(self.n_modes, len(self))


def build_fiber_channel(params):
    """expand the fiber parameters into an ordered channel

    Parameters
    ----------
    params : FiberParams

    Returns
    -------
    FiberChannel
        per segment: Kerr squeezing, Kerr mixing, Raman loss, Raman gain
    """
    n = params.n_bins
    raman = params.raman_couplings + params.raman_gains
    phonons = PhononRegister([c.n_bar for c in raman])
    operations = []
    for _ in range(params.n_steps):
        for i, j, r in params.kerr_tms_strengths:
            S = single_mode_squeezer(r, i, n) if i == j else two_mode_squeezer(r, i, j, n)
            operations.append(SymplecticStep('kerr_tms', (i, j), S))
        for i, j, theta in params.kerr_mix_angles:
            S = phase_shift(theta, i, n) if i == j else beam_splitter(theta, i, j, n)
            operations.append(SymplecticStep('kerr_mix', (i, j), S))
        for k, c in enumerate(raman):
            label = 'raman_loss' if k < len(params.raman_couplings) else 'raman_gain'
            operations.append(RamanStep(label, c.mode, c.coupling, k))
    return FiberChannel(n, operations, phonons)


def _scale_mode(state, mode, factor):
    """mean and cross-covariances of mode scaled by factor, block by factor^2"""
    K = np.ones(2 * state.n_modes)
    K[2 * mode:2 * mode + 2] = factor
    return K * state.mean, np.outer(K, K) * state.cov


def _add_to_block(cov, mode, variance):
    cov = cov.copy()
    cov[2 * mode, 2 * mode] += variance
    cov[2 * mode + 1, 2 * mode + 1] += variance
    return cov


def raman_channel(state, mode, eta, n_bar):
    """loss of mode into a thermal phonon bath

    The mode passes a beam splitter of transmission 1 - eta whose other port
    holds a phonon with occupation n_bar; the phonon is then traced out.

    Parameters
    ----------
    state : GaussianState
    mode : int
        0-based optical mode
    eta : float
        coupling in [0, 1]; 1 replaces the mode by the thermal phonon state
    n_bar : float
        phonon occupation, >= 0

    Returns
    -------
    GaussianState
        block -> (1 - eta) block + eta (2 n_bar + 1) I, cross terms and mean
        scaled by sqrt(1 - eta)
    """
    _check_index(mode, state.n_modes, 'Raman mode')
    if not 0 <= eta <= 1:
        raise InputError('Raman coupling eta={0} outside [0, 1]'.format(eta))
    if n_bar < 0:
        raise InputError('phonon occupation must be non-negative, got {0}'.format(n_bar))
    mean, cov = _scale_mode(state, mode, np.sqrt(1 - eta))
    return GaussianState(mean, _add_to_block(cov, mode, eta * (2 * n_bar + 1)),
                         validate=False)


def raman_amplifier_channel(state, mode, gain, n_bar):
    """Raman amplification of mode with phonon emission, phonon traced out

    block -> G block + (G - 1)(2 n_bar + 1) I, cross terms and mean scaled by sqrt(G)
    """
    _check_index(mode, state.n_modes, 'Raman mode')
    if gain < 1:
        raise InputError('Raman gain must be at least 1, got {0}'.format(gain))
    if n_bar < 0:
        raise InputError('phonon occupation must be non-negative, got {0}'.format(n_bar))
    mean, cov = _scale_mode(state, mode, np.sqrt(gain))
    return GaussianState(mean, _add_to_block(cov, mode, (gain - 1) * (2 * n_bar + 1)),
                         validate=False)


def initial_state(params):
    """coherent input pulse with the configured amplitudes and phases"""
    mean = np.empty(2 * params.n_bins)
    mean[0::2] = params.amplitudes * np.cos(params.phases)
    mean[1::2] = params.amplitudes * np.sin(params.phases)
    return make_vacuum_state(params.n_bins, mean)


def propagate(state, channel, params=None):
    """apply every operation of the channel in order

    Raises
    ------
    NumericalError
        if the output violates the uncertainty relation
    """
    if channel.n_modes != state.n_modes:
        raise InputError('{0}-mode channel applied to a {1}-mode state'.format(
            channel.n_modes, state.n_modes))
    if params is not None and params.n_bins != state.n_modes:
        raise InputError('parameters describe {0} bins, state has {1} modes'.format(
            params.n_bins, state.n_modes))
    for op in channel:
        state = op.apply(state, channel.phonons)
    if not is_physical(state):
        raise NumericalError('propagated state violates the uncertainty relation')
    return state


def fiber_ground_truth(params):
    """output covariance C and shot-noise levels of the configured fiber

    Returns
    -------
    QuadratureCovariance
        amplitude-quadrature covariance of the output pulse
    ShotNoiseLevels
        |A_m|^2 of the output pulse
    """
    state = propagate(initial_state(params), build_fiber_channel(params), params)
    return amplitude_quadrature_covariance(state), state.shot_noise_levels()
