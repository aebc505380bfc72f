import numpy as np
import numba


@numba.njit
def design_matrix_kernel(ks, ls, n_bins):
    """jitted loop version of window_functions.design_matrix_kernel"""
    n_unknowns = n_bins * (n_bins + 1) // 2
    out = np.zeros((len(ks), n_unknowns))
    for w in range(len(ks)):
        lo = ks[w] - 1
        hi = lo + ls[w]
        col = 0
        for i in range(n_bins):
            for j in range(i, n_bins):
                if i >= lo and j <= hi:
                    if i == j:
                        out[w, col] = 1.0
                    else:
                        out[w, col] = 2.0
                col += 1
    return out


@numba.njit
def inclusion_exclusion_kernel(table, n_bins):
    """jitted loop version of window_functions.inclusion_exclusion_kernel"""
    cov = np.zeros((n_bins, n_bins))
    for i in range(1, n_bins + 1):
        cov[i - 1, i - 1] = table[i, i]
        for j in range(i + 1, n_bins + 1):
            val = (table[i, j] - table[i + 1, j] - table[i, j - 1] + table[i + 1, j - 1]) / 2
            cov[i - 1, j - 1] = val
            cov[j - 1, i - 1] = val
    return cov
