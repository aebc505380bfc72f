# -*- coding: utf-8 -*-
"""
Measured covariance matrices at 5 mW and 15 mW pump power, with their printed
eigenvalues and eigenvector matrices, stored exactly as published.

The printed eigenvector matrix holds one eigenvector per COLUMN; transpose it
before comparing with :attr:`ModalDecomposition.U`, whose rows are modes.
"""
import os
from collections import namedtuple

import numpy as np

from ..errors import InputError
from .formats import file_digest, parse_covariance_fixture, read_matrix_csv

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')
CHECKSUM_FILE = 'checksums.sha256'
FIXTURES = ('5mW', '15mW')

Fixture = namedtuple('Fixture', ['covariance', 'eigenvalues', 'unitary'])


def fixture_path(kind, name):
    """path of covariance / eigenvalues / unitary file of fixture name"""
    if name not in FIXTURES:
        raise InputError('unknown fixture {0!r}, choose from {1}'.format(
            name, ', '.join(FIXTURES)))
    return os.path.join(DATA_DIR, '{0}_{1}.csv'.format(kind, name))


def load_fixture(name):
    """printed matrices of one pump power

    Parameters
    ----------
    name : str
        '5mW' or '15mW'

    Returns
    -------
    Fixture
        covariance (QuadratureCovariance), eigenvalues (ascending vector taken
        from the printed diagonal matrix) and unitary (as printed)
    """
    C = parse_covariance_fixture(fixture_path('covariance', name))
    V = np.diag(read_matrix_csv(fixture_path('eigenvalues', name))).copy()
    U = read_matrix_csv(fixture_path('unitary', name))
    return Fixture(C, V, U)


def read_checksums(path=None):
    path = path or os.path.join(DATA_DIR, CHECKSUM_FILE)
    checksums = {}
    try:
        with open(path) as f:
            for line in f:
                if line.strip():
                    digest, filename = line.split()
                    checksums[filename.lstrip('*')] = digest
    except OSError as exc:
        raise InputError('cannot read {0}: {1}'.format(path, exc.strerror))
    return checksums


def verify_fixture_checksums(data_dir=DATA_DIR):
    """compare every fixture file with its committed SHA-256

    Returns
    -------
    list of str
        files whose digest differs or that are missing; empty when all match
    """
    mismatched = []
    for filename, digest in sorted(read_checksums(
            os.path.join(data_dir, CHECKSUM_FILE)).items()):
        path = os.path.join(data_dir, filename)
        if not os.path.exists(path) or file_digest(path) != digest:
            mismatched.append(filename)
    return mismatched
