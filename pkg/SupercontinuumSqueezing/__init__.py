# -*- coding: utf-8 -*-
"""
Reconstruction and modal analysis of spectral photon-number correlations in
supercontinuum pulses, with a Gaussian forward model for synthetic data.
"""
__version__ = '0.1.0'
