# -*- coding: utf-8 -*-
import os
import sys

import matplotlib
matplotlib.use('Agg')
import pytest

ROOT = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, ROOT)

from SupercontinuumSqueezing.IOPipeline.fixtures import load_fixture  # noqa: E402


@pytest.fixture(scope='session')
def fixture_5mw():
    return load_fixture('5mW')


@pytest.fixture(scope='session')
def fixture_15mw():
    return load_fixture('15mW')


@pytest.fixture(scope='session')
def config_dir():
    return os.path.join(ROOT, 'configs')
