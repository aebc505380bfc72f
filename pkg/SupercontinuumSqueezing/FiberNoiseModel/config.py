# -*- coding: utf-8 -*-
"""
INI configuration of the forward model.

Example::

    [Fiber Parameters]
    n_bins = 4
    n_steps = 1
    amplitudes = 100

    [Kerr Two Mode Squeezing]
    1, 2 = 0.3

    [Raman Loss]
    3 = 0.1, 0.5

    [Measurement Noise]
    electronic_snr_db = 41
    rng_seed = 7

Bins are 1-based in the file.
"""
import configparser

from ..console import status
from ..errors import InputError
from .fiber_channel import FiberParams, DEFAULT_DISPERSION
from .measurement_noise import MeasurementNoiseParams

FIBER = 'Fiber Parameters'
KERR_TMS = 'Kerr Two Mode Squeezing'
KERR_MIX = 'Kerr Mixing'
RAMAN_LOSS = 'Raman Loss'
RAMAN_GAIN = 'Raman Gain'
NOISE = 'Measurement Noise'


def _floats(text, where):
    try:
        return [float(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise InputError('{0}: expected comma separated numbers, got {1!r}'.format(where, text))


def _bins(key, count, section):
    where = '[{0}] {1}'.format(section, key)
    try:
        bins = [int(v) for v in key.split(',')]
    except ValueError:
        raise InputError('{0}: bin indices must be integers'.format(where))
    if len(bins) != count:
        raise InputError('{0}: expected {1} bin index(es)'.format(where, count))
    return [b - 1 for b in bins], where


def _pair_section(config, section):
    entries = []
    if section in config:
        for key, value in config[section].items():
            (i, j), where = _bins(key, 2, section)
            values = _floats(value, where)
            if len(values) != 1:
                raise InputError('{0}: expected one strength'.format(where))
            entries.append((i, j, values[0]))
    return entries


def _raman_section(config, section):
    entries = []
    if section in config:
        for key, value in config[section].items():
            (mode,), where = _bins(key, 1, section)
            values = _floats(value, where)
            if len(values) != 2:
                raise InputError('{0}: expected "coupling, n_bar"'.format(where))
            entries.append((mode, values[0], values[1]))
    return entries


def _get(section, key, convert, default):
    try:
        return convert(section, key, fallback=default)
    except ValueError:
        raise InputError('[{0}] {1}: cannot read {2!r}'.format(
            section.name, key, section.get(key)))


def read_fiber_config(path, verbose=False):
    """read forward-model and detector parameters

    Parameters
    ----------
    path : str
        INI file
    verbose : bool
        print every parameter as it is set

    Returns
    -------
    FiberParams
    MeasurementNoiseParams
    """
    config = configparser.ConfigParser()
    try:
        found = config.read(path)
    except configparser.Error as exc:
        raise InputError('cannot parse config {0}: {1}'.format(path, exc))
    if not found:
        raise InputError('cannot read config file {0}'.format(path))
    if FIBER not in config:
        raise InputError('config {0} has no [{1}] section'.format(path, FIBER))
    fiber = config[FIBER]
    if 'n_bins' not in fiber:
        raise InputError('[{0}] n_bins is required'.format(FIBER))

    def getint(section, key, fallback):
        return section.getint(key, fallback=fallback)

    def getfloat(section, key, fallback):
        return section.getfloat(key, fallback=fallback)

    amplitudes = _floats(fiber['amplitudes'], '[{0}] amplitudes'.format(FIBER)) \
        if 'amplitudes' in fiber else None
    phases = _floats(fiber['phases'], '[{0}] phases'.format(FIBER)) \
        if 'phases' in fiber else None
    dispersion = [_get(fiber, key, getfloat, default)
                  for key, default in zip(('beta2', 'beta3', 'beta4'), DEFAULT_DISPERSION)]
    params = FiberParams(_get(fiber, 'n_bins', getint, None),
                         kerr_tms_strengths=_pair_section(config, KERR_TMS),
                         kerr_mix_angles=_pair_section(config, KERR_MIX),
                         raman_couplings=_raman_section(config, RAMAN_LOSS),
                         raman_gains=_raman_section(config, RAMAN_GAIN),
                         n_steps=_get(fiber, 'n_steps', getint, 1),
                         dispersion=dispersion,
                         amplitudes=amplitudes,
                         phases=phases)

    noise = MeasurementNoiseParams()
    if NOISE in config:
        section = config[NOISE]
        noise = MeasurementNoiseParams(
            electronic_snr_db=_get(section, 'electronic_snr_db', getfloat, 41.0),
            cmrr_db=_get(section, 'cmrr_db', getfloat, 20.0),
            significant_digits=_get(section, 'significant_digits', getint, 3),
            rng_seed=_get(section, 'rng_seed', getint, 0))

    status('Parameter Settings:', verbose=verbose)
    for section in config.sections():
        for key, value in config[section].items():
            status('  {0:<20} set to {1}'.format(key, value), verbose=verbose)
    return params, noise
