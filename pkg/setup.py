#!/usr/bin/env python
# -*- coding: utf-8 -*-
from setuptools import setup, find_packages

config = {
    'name': 'SupercontinuumSqueezing',
    'author': 'zachglassman',
    'author_email': 'zach.glassman@gmail.com',
    'url': '',
    'description': 'Spectral photon-number correlations and squeezing in supercontinuum pulses',
    'long_description': open('README.md', 'r').read(),
    'license': 'MIT',
    'version': '0.1.0',
    'install_requires': [
        'numpy',
        'scipy',
        'matplotlib',
        'seaborn',
        'tqdm',
        'colorama',
        'dask',
    ],
    'extras_require': {
        'jit': ['numba'],
        'test': ['pytest'],
    },
    'classifiers': [
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Development Status :: 3 - Alpha",
    ],
    'packages': find_packages(exclude=['tests']),
    'package_data': {'SupercontinuumSqueezing.IOPipeline': ['data/*.csv',
                                                            'data/*.sha256']},
    'entry_points': {
        'console_scripts': ['scq = SupercontinuumSqueezing.IOPipeline.runner:main'],
    },
}

if __name__ == '__main__':
    setup(**config)
