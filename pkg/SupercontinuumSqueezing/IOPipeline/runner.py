# -*- coding: utf-8 -*-
"""
Command line interface.

    scq reconstruct --scan scan.csv --shot shot.csv --out cov.json [--psd]
    scq analyze --cov cov.json --out report.json [--shot shot.csv] [--plots dir]
    scq simulate --config fiber.ini --out scan.csv [--truth truth.csv] [--seed N]
    scq verify-fixtures

Exit codes: 0 success, 1 input error, 2 numerical failure.  Diagnostics go to
standard error.  SCQ_SEED, when set, overrides --seed.
"""
import argparse
import os
import sys

import numpy as np

from .. import __version__
from ..console import status, error, stage, color_text
from ..errors import InputError, NumericalError
from ..FiberNoiseModel.config import read_fiber_config
from ..FiberNoiseModel.fiber_channel import fiber_ground_truth
from ..FiberNoiseModel.measurement_noise import (MeasurementNoiseParams, simulate_window_scan,
                                                 simulate_shot_noise_levels)
from ..WindowReconstruction.reconstruction import (reconstruct_covariance,
                                                   normalize_covariance, project_psd,
                                                   reconstruction_residual)
from .acceptance import run_fixture_checks
from .formats import (parse_window_scan, parse_shot_noise, read_covariance, file_digest,
                      write_window_scan, write_shot_noise, write_covariance_csv,
                      write_covariance_json, read_seed)
from .plotting import emit_plots
from .report import build_report, emit_report

SEED_VARIABLE = 'SCQ_SEED'


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser reporting usage errors as InputError"""

    def error(self, message):
        raise InputError(message)


def _read(flag, path, reader, *args):
    """run reader on path, naming the flag in any input error"""
    try:
        return reader(path, *args)
    except InputError as exc:
        raise InputError('{0}: {1}'.format(flag, exc))


def _resolve_seed(seed):
    text = os.environ.get(SEED_VARIABLE)
    if text is None or not text.strip():
        return seed
    try:
        return int(text)
    except ValueError:
        raise InputError('{0}={1!r} is not an integer'.format(SEED_VARIABLE, text))


def run_reconstruct(args):
    shot = _read('--shot', args.shot, parse_shot_noise)
    scan = _read('--scan', args.scan, parse_window_scan, shot.n_bins)
    with stage('reconstruction of {0} bins from {1} windows'.format(scan.n_bins, len(scan)),
               verbose=args.verbose):
        photon = reconstruct_covariance(scan)
        C = normalize_covariance(photon, shot)
        clipped = None
        if args.psd:
            C, clipped = project_psd(C)
        residual = reconstruction_residual(scan, photon)
    status('RMS window residual {0:.3g}'.format(residual), verbose=args.verbose)
    inputs = {'scan': file_digest(args.scan), 'shot': file_digest(args.shot)}
    write_covariance_json(args.out, photon, C, shot, residual, inputs, clipped, __version__,
                          seed=_read('--scan', args.scan, read_seed))
    return 0


def run_analyze(args):
    C, shot, photon = _read('--cov', args.cov, read_covariance)
    inputs = {'cov': file_digest(args.cov)}
    if args.shot is not None:
        shot = _read('--shot', args.shot, parse_shot_noise)
        photon = None
        inputs['shot'] = file_digest(args.shot)
    with stage('modal analysis of {0} bins'.format(C.n_bins), verbose=args.verbose):
        report = build_report(C, shot, photon, inputs, _read('--cov', args.cov, read_seed),
                              threshold_db=args.threshold)
    fmt = args.format or ('json' if args.out.lower().endswith('.json') else 'text')
    emit_report(report, fmt, args.out)
    if args.plots:
        with stage('plotting', verbose=args.verbose):
            emit_plots(report, args.plots)
    status('{0} of {1} modes below {2:g} dB'.format(report.squeezed_modes, report.n_bins,
                                                    args.threshold), verbose=args.verbose)
    return 0


def run_simulate(args):
    params, noise = _read('--config', args.config, read_fiber_config, args.verbose)
    seed = _resolve_seed(args.seed)
    if seed is not None:
        noise = MeasurementNoiseParams(noise.electronic_snr_db, noise.cmrr_db,
                                       noise.significant_digits, seed)
    with stage('forward model ({0} bins, {1} steps)'.format(params.n_bins, params.n_steps),
               verbose=args.verbose):
        C, shot = fiber_ground_truth(params)
        scan = simulate_window_scan(C, shot, noise)
    write_window_scan(scan, args.out, noise.rng_seed)
    if args.truth:
        write_covariance_csv(C, args.truth, noise.rng_seed)
    if args.shot_out:
        write_shot_noise(simulate_shot_noise_levels(C, shot, noise), args.shot_out)
    return 0


def run_verify_fixtures(args):
    results = run_fixture_checks()
    for result in results:
        label = color_text('PASS', 'GREEN') if result.passed else color_text('FAIL', 'RED')
        print('{0} {1}: {2}'.format(label, result.name, result.detail))
    if all(r.passed for r in results):
        return 0
    return 1 if not results[0].passed else 2


def build_parser():
    parser = ArgumentParser(prog='scq', description=__doc__.split('\n\n')[0].strip())
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='print stages and timing to standard error')
    parser.add_argument('--version', action='version', version=__version__)
    sub = parser.add_subparsers(dest='command', metavar='command')

    p = sub.add_parser('reconstruct', help='covariance matrix from a window scan')
    p.add_argument('--scan', required=True, help='window scan CSV (k,l,variance[,sigma])')
    p.add_argument('--shot', required=True, help='shot-noise CSV (bin,level)')
    p.add_argument('--out', required=True, help='output JSON')
    p.add_argument('--psd', action='store_true',
                   help='clip negative eigenvalues of the normalized matrix')
    p.set_defaults(run=run_reconstruct)

    p = sub.add_parser('analyze', help='modal decomposition, report and plots')
    p.add_argument('--cov', required=True, help='covariance JSON from reconstruct or CSV')
    p.add_argument('--shot', help='shot-noise CSV; overrides levels embedded in JSON')
    p.add_argument('--out', required=True, help='report file (.json or text)')
    p.add_argument('--format', choices=['text', 'json'],
                   help='report format (default: from the --out extension)')
    p.add_argument('--plots', help='directory for SVG figures and their CSV data')
    p.add_argument('--threshold', type=float, default=0.0,
                   help='squeezing threshold in dB (default 0)')
    p.set_defaults(run=run_analyze)

    p = sub.add_parser('simulate', help='synthetic window scan from the fiber model')
    p.add_argument('--config', required=True, help='fiber model INI file')
    p.add_argument('--out', required=True, help='window scan CSV')
    p.add_argument('--truth', help='ground-truth covariance CSV')
    p.add_argument('--shot-out', dest='shot_out',
                   help='shot-noise CSV as calibrated through the finite CMRR')
    p.add_argument('--seed', type=int, help='noise seed (default: config rng_seed)')
    p.set_defaults(run=run_simulate)

    p = sub.add_parser('verify-fixtures', help='check the published 5 mW and 15 mW matrices')
    p.set_defaults(run=run_verify_fixtures)
    return parser


def cli_main(argv=None):
    """run one command and return its exit code"""
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise InputError('no command given, choose reconstruct, analyze, simulate '
                             'or verify-fixtures')
        return args.run(args)
    except InputError as exc:
        error('input error: {0}'.format(exc))
        return 1
    except (NumericalError, np.linalg.LinAlgError) as exc:
        error('numerical failure: {0}'.format(exc))
        return 2


def main():
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == '__main__':
    main()
