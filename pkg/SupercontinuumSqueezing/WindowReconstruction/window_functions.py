# -*- coding: utf-8 -*-
"""
numpy kernels for the window equations.  ``window_functions_numba`` holds
jitted versions with the same signatures.
"""
import numpy as np


def design_matrix_kernel(ks, ls, n_bins):
    """coefficients of the upper-triangle unknowns in each window equation

    Parameters
    ----------
    ks : np.array(int)
        first bin of each window (1-based)
    ls : np.array(int)
        extra width of each window
    n_bins : int
        number of bins

    Returns
    -------
    np.array(float)
        (windows, N(N+1)/2) matrix: 1 for c_mm inside the window, 2 for
        c_mm' (m < m') with both bins inside
    """
    rows, cols = np.triu_indices(n_bins)
    lo = np.asarray(ks, dtype=np.int64)[:, None] - 1
    hi = lo + np.asarray(ls, dtype=np.int64)[:, None]
    inside = (rows[None, :] >= lo) & (cols[None, :] <= hi)
    return inside * np.where(rows == cols, 1.0, 2.0)[None, :]


def inclusion_exclusion_kernel(table, n_bins):
    """covariance entries from a complete table of window variances

    Parameters
    ----------
    table : np.array(float)
        (N+2) x (N+2) table, table[a, b] is the variance of window a..b
        (1-based) and zero for a > b
    n_bins : int
        number of bins

    Returns
    -------
    np.array(float)
        N x N symmetric matrix
    """
    cov = np.zeros((n_bins, n_bins))
    m = np.arange(1, n_bins + 1)
    cov[m - 1, m - 1] = table[m, m]
    i, j = np.triu_indices(n_bins, k=1)
    i, j = i + 1, j + 1
    off = (table[i, j] - table[i + 1, j] - table[i, j - 1] + table[i + 1, j - 1]) / 2
    cov[i - 1, j - 1] = off
    cov[j - 1, i - 1] = off
    return cov
