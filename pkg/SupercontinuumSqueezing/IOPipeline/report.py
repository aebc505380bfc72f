# -*- coding: utf-8 -*-
"""
Analysis report: the covariance matrices, their modal decomposition and the
squeezing table, serialized as deterministic JSON or plain text.
"""
import numpy as np

from .. import __version__
from ..errors import InputError
from ..ModalAnalysis.modal_decomposition import (ModalDecomposition, ModeShapes, diagonalize,
                                                 count_squeezed_modes, marginal_modes,
                                                 MARGINAL_BAND_DB)
from ..WindowReconstruction.reconstruction import denormalize_covariance
from ..WindowReconstruction.windows import (ShotNoiseLevels, PhotonCovariance,
                                            QuadratureCovariance)
from .formats import (format_float, rounded, rounded_list, dump_json, load_json,
                      write_lines)

TOOL_NAME = 'SupercontinuumSqueezing'
REPORT_FORMATS = ('text', 'json')


class AnalysisReport(object):
    """everything the analyze command produces

    Parameters
    ----------
    covariance : QuadratureCovariance
    decomposition : ModalDecomposition
    photon_covariance : PhotonCovariance, optional
    shot : ShotNoiseLevels, optional
    inputs : dict, optional
        input file name -> SHA-256 digest
    seed : int, optional
        seed of a synthetic input
    threshold_db : float
        squeezing threshold
    band_db : float
        half width of the marginal band around 0 dB
    version : str
        version of the tool that built the report
    """

    def __init__(self, covariance, decomposition, photon_covariance=None, shot=None,
                 inputs=None, seed=None, threshold_db=0.0, band_db=MARGINAL_BAND_DB,
                 version=__version__):
        if decomposition.n_bins != covariance.n_bins:
            raise InputError('decomposition has {0} modes, covariance {1} bins'.format(
                decomposition.n_bins, covariance.n_bins))
        self.covariance = covariance
        self.decomposition = decomposition
        self.photon_covariance = photon_covariance
        self.shot = shot
        self.inputs = dict(inputs or {})
        self.seed = seed
        self.threshold_db = float(threshold_db)
        self.band_db = float(band_db)
        self.version = version

    @property
    def n_bins(self):
        return self.covariance.n_bins

    @property
    def squeezed_modes(self):
        return count_squeezed_modes(self.decomposition, self.threshold_db)

    @property
    def marginal(self):
        """1-based modes within the marginal band"""
        return [int(m) + 1 for m in marginal_modes(self.decomposition, self.band_db)]

    def to_dict(self):
        d = self.decomposition
        return {
            'n_bins': self.n_bins,
            'inputs': self.inputs,
            'provenance': {'tool': TOOL_NAME, 'version': self.version, 'seed': self.seed},
            'shot_noise': None if self.shot is None else rounded_list(self.shot.levels),
            'photon_covariance': None if self.photon_covariance is None
            else rounded_list(self.photon_covariance.entries),
            'covariance': rounded_list(self.covariance.entries),
            'eigenvalues': rounded_list(d.V),
            'eigenvectors': rounded_list(d.U),
            'squeezing_db': rounded_list(d.squeezing_db),
            'mode_shapes': rounded_list(d.mode_shapes.raw),
            'mode_shapes_normalized': rounded_list(d.mode_shapes.normalized),
            'threshold_db': rounded(self.threshold_db),
            'marginal_band_db': rounded(self.band_db),
            'squeezed_modes': self.squeezed_modes,
            'marginal_modes': self.marginal,
        }

    def to_text(self):
        d = self.decomposition
        lines = ['Supercontinuum photon-number squeezing analysis',
                 '{0} {1}'.format(TOOL_NAME, self.version)]
        for name, digest in sorted(self.inputs.items()):
            lines.append('input {0} sha256 {1}'.format(name, digest))
        if self.seed is not None:
            lines.append('seed {0}'.format(self.seed))
        lines += ['bins: {0}'.format(self.n_bins),
                  'squeezed modes (< {0} dB): {1}'.format(format_float(self.threshold_db),
                                                         self.squeezed_modes),
                  'marginal modes (|level| < {0} dB): {1}'.format(
                      format_float(self.band_db),
                      ', '.join(str(m) for m in self.marginal) or 'none'),
                  '',
                  '{0:>4}  {1:>12}  {2:>12}  {3}'.format('mode', 'eigenvalue', 'level_dB',
                                                         'flag')]
        marginal = set(self.marginal)
        for m, (v, level) in enumerate(zip(d.V, d.squeezing_db), start=1):
            flags = []
            if level < self.threshold_db:
                flags.append('squeezed')
            if m in marginal:
                flags.append('marginal')
            lines.append('{0:>4}  {1:>12}  {2:>12}  {3}'.format(
                m, format_float(v), format_float(level), ','.join(flags)).rstrip())
        return lines

    def __repr__(self):
        return 'AnalysisReport(n_bins={0}, squeezed_modes={1})'.format(
            self.n_bins, self.squeezed_modes)


def build_report(C, shot=None, photon_cov=None, inputs=None, seed=None, threshold_db=0.0):
    """diagonalize C and collect the results

    The photon-number covariance is rebuilt from C when only the shot-noise
    levels are known.
    """
    if shot is not None:
        shot = ShotNoiseLevels.coerce(shot)
        if photon_cov is None:
            photon_cov = denormalize_covariance(C, shot)
    return AnalysisReport(C, diagonalize(C, shot), photon_cov, shot, inputs, seed,
                          threshold_db)


def emit_report(report, fmt, path):
    """write the report as ``'text'`` or ``'json'``

    Output depends only on the report, so equal reports give byte-identical files.
    """
    if fmt not in REPORT_FORMATS:
        raise InputError('unknown report format {0!r}, choose text or json'.format(fmt))
    if fmt == 'json':
        dump_json(report.to_dict(), path)
    else:
        write_lines(path, report.to_text())


def _levels(values):
    return [-np.inf if v is None else v for v in values]


def load_report(path):
    """AnalysisReport from a JSON report"""
    doc = load_json(path)
    try:
        C = QuadratureCovariance.symmetrized(doc['covariance'])[0]
        shot = None if doc['shot_noise'] is None else ShotNoiseLevels(doc['shot_noise'])
        photon = None if doc['photon_covariance'] is None \
            else PhotonCovariance.symmetrized(doc['photon_covariance'])[0]
        shapes = ModeShapes(np.array(doc['mode_shapes'], dtype=float),
                            np.array(doc['mode_shapes_normalized'], dtype=float))
        decomp = ModalDecomposition(doc['eigenvectors'], doc['eigenvalues'], shot,
                                    mode_shapes=shapes,
                                    squeezing_db=_levels(doc['squeezing_db']))
        provenance = doc['provenance']
        return AnalysisReport(C, decomp, photon, shot, doc['inputs'], provenance['seed'],
                              doc['threshold_db'], doc['marginal_band_db'],
                              provenance['version'])
    except (KeyError, TypeError) as exc:
        raise InputError('{0} is not an analysis report: missing {1}'.format(path, exc))
