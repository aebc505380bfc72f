# -*- coding: utf-8 -*-
"""
Figures of an analysis report: covariance heatmap, squeezing bar chart and
eigenmode spectral shapes.  Every SVG is written next to a CSV of the data it
shows.
"""
import os

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import numpy as np
import seaborn as sns

from ..errors import InputError
from .formats import format_float, write_lines, write_covariance_csv

# fixed ids and no timestamp make repeated SVG output byte-identical
SVG_RC = {'svg.hashsalt': 'supercontinuum-squeezing', 'svg.fonttype': 'path'}
SVG_METADATA = {'Date': None}


def _save(fig, path):
    try:
        fig.savefig(path, format='svg', metadata=SVG_METADATA)
    except OSError as exc:
        raise InputError('cannot write {0}: {1}'.format(path, exc.strerror))
    finally:
        plt.close(fig)


def shown_modes(n_bins):
    """1-based modes drawn in the shape plot: 1, 2 and N"""
    return sorted({1, min(2, n_bins), n_bins})


def plot_covariance(report, outdir):
    """heatmap of C - I: diagonal excess over shot noise, off-diagonal correlations"""
    C = report.covariance.entries
    excess = C - np.eye(len(C))
    labels = [str(m) for m in range(1, len(C) + 1)]
    fig, ax = plt.subplots(figsize=(6.4, 5.4))
    limit = max(np.max(np.abs(excess)), 1e-12)
    sns.heatmap(excess, center=0, vmin=-limit, vmax=limit, cmap='RdBu_r', square=True,
                ax=ax, xticklabels=labels, yticklabels=labels,
                cbar_kws={'label': 'C - I (diagonal: excess over shot noise 1)'})
    ax.set_xlabel("bin m'")
    ax.set_ylabel('bin m')
    ax.set_title('normalized photon-number covariance')
    _save(fig, os.path.join(outdir, 'covariance.svg'))
    write_covariance_csv(C, os.path.join(outdir, 'covariance.csv'))


def plot_squeezing(report, outdir):
    """bar chart of 10 log10(v_m) with the shot-noise line at 0 dB"""
    d = report.decomposition
    modes = np.arange(1, d.n_bins + 1)
    levels = np.where(np.isfinite(d.squeezing_db), d.squeezing_db, np.nan)
    colors = ['C0' if level < report.threshold_db else 'C7' for level in levels]
    fig, ax = plt.subplots()
    ax.bar(modes, levels, color=colors)
    ax.axhline(0, color='k', linewidth=1, linestyle='--', label='shot noise')
    ax.set_xticks(modes)
    ax.set_xlabel('eigenmode m')
    ax.set_ylabel('noise level (dB)')
    ax.legend()
    _save(fig, os.path.join(outdir, 'squeezing.svg'))
    lines = ['mode,eigenvalue,squeezing_db']
    lines += ['{0},{1},{2}'.format(m, format_float(v), format_float(level))
              for m, v, level in zip(modes, d.V, d.squeezing_db)]
    write_lines(os.path.join(outdir, 'squeezing.csv'), lines)


def plot_mode_shapes(report, outdir):
    """amplitude-weighted spectral profile of eigenmodes 1, 2 and N"""
    shapes = report.decomposition.mode_shapes.normalized
    modes = shown_modes(report.n_bins)
    bins = np.arange(1, report.n_bins + 1)
    fig, ax = plt.subplots()
    for m in modes:
        ax.plot(bins, shapes[m - 1], marker='o', label='m = {0}'.format(m))
    ax.axhline(0, color='k', linewidth=0.5)
    ax.set_xticks(bins)
    ax.set_xlabel('bin')
    ax.set_ylabel('spectral amplitude (normalized)')
    ax.legend()
    _save(fig, os.path.join(outdir, 'mode_shapes.svg'))
    lines = [','.join(['bin'] + ['mode_{0}'.format(m) for m in modes])]
    lines += [','.join([str(b)] + [format_float(shapes[m - 1][b - 1]) for m in modes])
              for b in bins]
    write_lines(os.path.join(outdir, 'mode_shapes.csv'), lines)


def emit_plots(report, outdir):
    """write heatmap, bar chart and mode shapes (SVG + CSV) into outdir"""
    try:
        os.makedirs(outdir, exist_ok=True)
    except OSError as exc:
        raise InputError('cannot create {0}: {1}'.format(outdir, exc.strerror))
    with plt.rc_context(SVG_RC):
        plot_covariance(report, outdir)
        plot_squeezing(report, outdir)
        plot_mode_shapes(report, outdir)
