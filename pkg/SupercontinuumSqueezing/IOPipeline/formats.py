# -*- coding: utf-8 -*-
"""
CSV and JSON formats.

    window scan   header ``k,l,variance`` or ``k,l,variance,sigma`` (1-based k)
    shot noise    header ``bin,level``
    covariance    N rows of N comma separated values, no header

Every float is written with :func:`format_float` so output files are stable
across platforms.  Synthetic files start with a ``# seed=N`` comment naming the noise seed.
"""
import csv
import hashlib
import json
import math
import os

import numpy as np

from ..console import status
from ..errors import InputError
from ..WindowReconstruction.windows import (SpectralWindow, WindowScan, ShotNoiseLevels,
                                            PhotonCovariance, QuadratureCovariance)

FLOAT_FORMAT = '{0:.6g}'
SCAN_HEADER = ['k', 'l', 'variance']
SHOT_HEADER = ['bin', 'level']
SEED_COMMENT = '# seed='


def format_float(value):
    """shortest text of value at 6 significant digits"""
    return FLOAT_FORMAT.format(float(value))


def rounded(value):
    """value as written to file; None for non-finite floats"""
    value = float(value)
    if not math.isfinite(value):
        return None
    return float(format_float(value))


def rounded_list(values):
    """nested lists of rounded floats for JSON output"""
    values = np.asarray(values, dtype=float)
    if values.ndim == 0:
        return rounded(values)
    return [rounded_list(v) for v in values]


def file_digest(path):
    """SHA-256 hex digest of a file"""
    h = hashlib.sha256()
    try:
        with open(path, 'rb') as f:
            for block in iter(lambda: f.read(65536), b''):
                h.update(block)
    except OSError as exc:
        raise InputError('cannot read {0}: {1}'.format(path, exc.strerror))
    return h.hexdigest()


def _rows(path):
    """(line number, fields) of every non-blank, non-comment line"""
    try:
        with open(path, newline='') as f:
            lines = f.read().splitlines()
    except OSError as exc:
        raise InputError('cannot read {0}: {1}'.format(path, exc.strerror))
    for lineno, fields in enumerate(csv.reader(lines), start=1):
        fields = [v.strip() for v in fields]
        if not any(fields) or fields[0].startswith('#'):
            continue
        yield lineno, fields


def _number(text, convert, path, lineno, what):
    try:
        return convert(text)
    except ValueError:
        raise InputError('{0}, line {1}: {2} {3!r} is not a number'.format(
            path, lineno, what, text))


def write_lines(path, lines):
    try:
        with open(path, 'w', newline='') as f:
            f.write('\n'.join(lines) + '\n')
    except OSError as exc:
        raise InputError('cannot write {0}: {1}'.format(path, exc.strerror))


def parse_window_scan(path, n_bins=None):
    """read a window scan

    Parameters
    ----------
    path : str
        CSV file with header ``k,l,variance[,sigma]``
    n_bins : int, optional
        number of bins; inferred as the largest k + l if omitted

    Returns
    -------
    WindowScan

    Raises
    ------
    InputError
        malformed rows and out-of-range or duplicate windows, with the line number
    """
    rows = _rows(path)
    try:
        lineno, header = next(rows)
    except StopIteration:
        raise InputError('{0}: no records'.format(path))
    header = [h.lower() for h in header]
    if header not in (SCAN_HEADER, SCAN_HEADER + ['sigma']):
        raise InputError('{0}, line {1}: expected header k,l,variance[,sigma], got {2}'.format(
            path, lineno, ','.join(header)))
    with_sigma = len(header) == 4
    windows, variances, sigmas, seen = [], [], [], {}
    for lineno, fields in rows:
        if len(fields) != len(header):
            raise InputError('{0}, line {1}: expected {2} fields, got {3}'.format(
                path, lineno, len(header), len(fields)))
        window = SpectralWindow(_number(fields[0], int, path, lineno, 'k'),
                                _number(fields[1], int, path, lineno, 'l'))
        variance = _number(fields[2], float, path, lineno, 'variance')
        if n_bins is not None:
            try:
                window.check(n_bins)
            except InputError as exc:
                raise InputError('{0}, line {1}: {2}'.format(path, lineno, exc))
        elif window.k < 1 or window.l < 0:
            raise InputError('{0}, line {1}: invalid window (k={2}, l={3})'.format(
                path, lineno, window.k, window.l))
        if window in seen:
            raise InputError('{0}, line {1}: duplicate window (k={2}, l={3}), first on '
                             'line {4}'.format(path, lineno, window.k, window.l, seen[window]))
        if not math.isfinite(variance) or variance < 0:
            raise InputError('{0}, line {1}: variance must be finite and non-negative'.format(
                path, lineno))
        seen[window] = lineno
        windows.append(window)
        variances.append(variance)
        if with_sigma:
            sigma = _number(fields[3], float, path, lineno, 'sigma')
            if not math.isfinite(sigma) or sigma <= 0:
                raise InputError('{0}, line {1}: sigma must be finite and positive'.format(
                    path, lineno))
            sigmas.append(sigma)
    if not windows:
        raise InputError('{0}: no records'.format(path))
    if n_bins is None:
        n_bins = max(w.last for w in windows)
    return WindowScan(n_bins, windows, variances, sigmas if with_sigma else None)


def _seed_comment(seed):
    return [] if seed is None else ['{0}{1:d}'.format(SEED_COMMENT, seed)]


def read_seed(path):
    """noise seed recorded in a synthetic scan, covariance CSV or ``cov.json``

    Returns None for measured data.
    """
    if path.lower().endswith('.json'):
        document = load_json(path)
        seed = document.get('seed') if isinstance(document, dict) else None
        return None if seed is None else int(seed)
    try:
        with open(path, newline='') as f:
            lines = f.read().splitlines()
    except OSError as exc:
        raise InputError('cannot read {0}: {1}'.format(path, exc.strerror))
    for lineno, line in enumerate(lines, start=1):
        if line.startswith(SEED_COMMENT):
            return _number(line[len(SEED_COMMENT):].strip(), int, path, lineno, 'seed')
    return None


def write_window_scan(scan, path, seed=None):
    header = SCAN_HEADER + (['sigma'] if scan.sigmas is not None else [])
    lines = _seed_comment(seed) + [','.join(header)]
    for w, variance, sigma in scan.records:
        fields = [str(w.k), str(w.l), format_float(variance)]
        if sigma is not None:
            fields.append(format_float(sigma))
        lines.append(','.join(fields))
    write_lines(path, lines)


def parse_shot_noise(path):
    """read ``bin,level`` rows; bins 1..N each exactly once"""
    rows = _rows(path)
    try:
        lineno, header = next(rows)
    except StopIteration:
        raise InputError('{0}: no records'.format(path))
    if [h.lower() for h in header] != SHOT_HEADER:
        raise InputError('{0}, line {1}: expected header bin,level'.format(path, lineno))
    levels = {}
    for lineno, fields in rows:
        if len(fields) != 2:
            raise InputError('{0}, line {1}: expected 2 fields, got {2}'.format(
                path, lineno, len(fields)))
        m = _number(fields[0], int, path, lineno, 'bin')
        if m in levels:
            raise InputError('{0}, line {1}: duplicate bin {2}'.format(path, lineno, m))
        levels[m] = _number(fields[1], float, path, lineno, 'level')
    if not levels:
        raise InputError('{0}: no records'.format(path))
    if sorted(levels) != list(range(1, len(levels) + 1)):
        raise InputError('{0}: bins must be 1..{1} each exactly once'.format(
            path, len(levels)))
    return ShotNoiseLevels([levels[m] for m in range(1, len(levels) + 1)])


def write_shot_noise(shot, path):
    shot = ShotNoiseLevels.coerce(shot)
    lines = [','.join(SHOT_HEADER)]
    lines += ['{0},{1}'.format(m, format_float(v)) for m, v in enumerate(shot.levels, start=1)]
    write_lines(path, lines)


def read_matrix_csv(path):
    """square matrix of floats from a header-less CSV file"""
    rows = [[_number(v, float, path, lineno, 'entry') for v in fields]
            for lineno, fields in _rows(path)]
    if not rows:
        raise InputError('{0}: no records'.format(path))
    if any(len(r) != len(rows) for r in rows):
        raise InputError('{0}: matrix is not square ({1} rows, row lengths {2})'.format(
            path, len(rows), sorted(set(len(r) for r in rows))))
    return np.array(rows)


def parse_covariance_fixture(path, verbose=False):
    """normalized covariance from a CSV matrix, symmetrized as (M + M^T) / 2"""
    C, asymmetry = QuadratureCovariance.symmetrized(read_matrix_csv(path))
    status('{0}: {1} bins, max asymmetry {2:.3g}'.format(
        os.path.basename(path), C.n_bins, asymmetry), verbose=verbose)
    return C


def write_covariance_csv(matrix, path, seed=None):
    entries = matrix.entries if hasattr(matrix, 'entries') else np.asarray(matrix)
    write_lines(path, _seed_comment(seed) +
                [','.join(format_float(v) for v in row) for row in entries])


def dump_json(document, path):
    """deterministic JSON: sorted keys, two-space indent, trailing newline"""
    text = json.dumps(document, sort_keys=True, indent=2, allow_nan=False)
    write_lines(path, [text])


def load_json(path):
    try:
        with open(path) as f:
            return json.load(f)
    except OSError as exc:
        raise InputError('cannot read {0}: {1}'.format(path, exc.strerror))
    except ValueError as exc:
        raise InputError('{0} is not valid JSON: {1}'.format(path, exc))


def write_covariance_json(path, photon_cov, cov, shot, residual, inputs,
                          clipped_mass=None, version=None, seed=None):
    """output of the reconstruct command"""
    document = {
        'n_bins': cov.n_bins,
        'photon_covariance': rounded_list(photon_cov.entries),
        'covariance': rounded_list(cov.entries),
        'shot_noise': rounded_list(ShotNoiseLevels.coerce(shot).levels),
        'residual_rms': rounded(residual),
        'inputs': dict(inputs),
        'version': version,
    }
    if clipped_mass is not None:
        document['psd_clipped_mass'] = rounded(clipped_mass)
    if seed is not None:
        document['seed'] = int(seed)
    dump_json(document, path)


def read_covariance(path):
    """covariance from a ``reconstruct`` JSON file or a bare CSV matrix

    Returns
    -------
    QuadratureCovariance
    ShotNoiseLevels or None
        embedded levels of a JSON file
    PhotonCovariance or None
        embedded photon-number covariance of a JSON file
    """
    if not path.lower().endswith('.json'):
        return parse_covariance_fixture(path), None, None
    document = load_json(path)
    try:
        C = QuadratureCovariance.symmetrized(document['covariance'])[0]
        shot = document.get('shot_noise')
        photon = document.get('photon_covariance')
    except (KeyError, TypeError, AttributeError):
        raise InputError('{0} has no "covariance" matrix'.format(path))
    return (C, ShotNoiseLevels(shot) if shot is not None else None,
            PhotonCovariance.symmetrized(photon)[0] if photon is not None else None)
