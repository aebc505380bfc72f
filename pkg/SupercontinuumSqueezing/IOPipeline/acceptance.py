# -*- coding: utf-8 -*-
"""
Checks of the analysis against the published 5 mW and 15 mW matrices.
"""
import time as time_mod
from collections import namedtuple

import numpy as np

from ..ModalAnalysis.modal_decomposition import (diagonalize, count_squeezed_modes,
                                                 marginal_modes)
from .fixtures import load_fixture, verify_fixture_checksums

EIGENVALUE_TOL = 2e-3
LEVEL_TOL_DB = 0.02
MAX_RUNTIME = 1.0

CheckResult = namedtuple('CheckResult', ['name', 'passed', 'detail'])


def _eigenvalue_check(name):
    fixture = load_fixture(name)
    ts = time_mod.time()
    decomp = diagonalize(fixture.covariance)
    elapsed = time_mod.time() - ts
    error = np.max(np.abs(decomp.V - fixture.eigenvalues))
    passed = bool(error < EIGENVALUE_TOL and elapsed < MAX_RUNTIME)
    detail = 'max |v - v_printed| = {0:.2e} (< {1:g}), {2:.3f} s'.format(
        error, EIGENVALUE_TOL, elapsed)
    return CheckResult('{0} eigenvalues'.format(name), passed, detail), decomp


def run_fixture_checks():
    """run every fixture check

    Returns
    -------
    list of CheckResult
        name, pass flag and a one-line detail per check
    """
    results = []
    mismatched = verify_fixture_checksums()
    results.append(CheckResult('fixture checksums', not mismatched,
                               'all files match' if not mismatched
                               else 'mismatch: ' + ', '.join(mismatched)))

    decomps = {}
    for name in ('5mW', '15mW'):
        result, decomps[name] = _eigenvalue_check(name)
        results.append(result)

    count_5 = count_squeezed_modes(decomps['5mW'])
    count_15 = count_squeezed_modes(decomps['15mW'])
    sixth_marginal = 5 in marginal_modes(decomps['5mW'])
    results.append(CheckResult(
        'squeezed-mode counts', count_15 == 1 and count_5 >= 5 and sixth_marginal,
        '15mW: {0} (expect 1), 5mW: {1} (expect >= 5), 5mW mode 6 marginal: {2}'.format(
            count_15, count_5, sixth_marginal)))

    details, passed = [], True
    for name in ('5mW', '15mW'):
        expected = 10 * np.log10(load_fixture(name).eigenvalues[0])
        level = decomps[name].squeezing_db[0]
        passed = passed and abs(level - expected) < LEVEL_TOL_DB
        details.append('{0}: {1:.3f} dB (expect {2:.3f})'.format(name, level, expected))
    results.append(CheckResult('minimum squeezing levels', bool(passed), ', '.join(details)))
    return results
