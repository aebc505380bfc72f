import csv
import os
import shutil

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from SupercontinuumSqueezing.errors import InputError
from SupercontinuumSqueezing.FiberNoiseModel import read_fiber_config, fiber_ground_truth
from SupercontinuumSqueezing.IOPipeline import (parse_window_scan, write_window_scan,
                                                parse_shot_noise, write_shot_noise,
                                                read_matrix_csv, parse_covariance_fixture,
                                                write_covariance_json, read_covariance, read_seed,
                                                write_covariance_csv, format_float, DATA_DIR,
                                                verify_fixture_checksums, build_report,
                                                emit_report, load_report, emit_plots,
                                                shown_modes)
from SupercontinuumSqueezing.WindowReconstruction import (QuadratureCovariance, WindowScan,
                                                          ShotNoiseLevels,
                                                          predict_window_scan,
                                                          denormalize_covariance)


def write(path, text):
    path.write_text(text)
    return str(path)


def read_csv(path):
    with open(path, newline='') as f:
        return list(csv.reader(f))


class test_window_scan_files(object):

    def test_parse(self, tmp_path):
        path = write(tmp_path / 'scan.csv', 'k,l,variance\n# comment\n1,0,1\n\n1,1,4\n2,0,2\n')
        scan = parse_window_scan(path)
        assert scan.n_bins == 2
        assert len(scan) == 3
        assert scan.sigmas is None

    def test_sigma_column(self, tmp_path):
        path = write(tmp_path / 'scan.csv', 'k,l,variance,sigma\n1,0,1,0.1\n')
        assert_allclose(parse_window_scan(path).sigmas, [0.1])

    def test_round_trip(self, tmp_path, fixture_5mw):
        shot = np.full(19, 1e4)
        scan = predict_window_scan(denormalize_covariance(fixture_5mw.covariance, shot))
        path = str(tmp_path / 'scan.csv')
        write_window_scan(scan, path)
        back = parse_window_scan(path, 19)
        assert len(back) == 190
        assert list(back.windows) == list(scan.windows)
        assert_allclose(back.variances, scan.variances, rtol=1e-5)

    def test_empty(self, tmp_path):
        with pytest.raises(InputError, match='no records'):
            parse_window_scan(write(tmp_path / 'empty.csv', ''))
        with pytest.raises(InputError, match='no records'):
            parse_window_scan(write(tmp_path / 'header.csv', 'k,l,variance\n'))

    def test_window_outside_bins(self, tmp_path):
        path = write(tmp_path / 'scan.csv', 'k,l,variance\n1,0,1\n2,1,1\n')
        with pytest.raises(InputError, match='line 3'):
            parse_window_scan(path, 2)

    def test_duplicate_window(self, tmp_path):
        path = write(tmp_path / 'scan.csv', 'k,l,variance\n1,0,1\n2,0,1\n1,0,2\n')
        with pytest.raises(InputError,
                           match=r'line 4: duplicate window \(k=1, l=0\), first on line 2'):
            parse_window_scan(path)

    def test_malformed_rows(self, tmp_path):
        with pytest.raises(InputError, match='not a number'):
            parse_window_scan(write(tmp_path / 'a.csv', 'k,l,variance\n1,x,1\n'))
        with pytest.raises(InputError, match='expected 3 fields'):
            parse_window_scan(write(tmp_path / 'b.csv', 'k,l,variance\n1,0\n'))
        with pytest.raises(InputError, match='expected header'):
            parse_window_scan(write(tmp_path / 'c.csv', 'a,b,c\n1,0,1\n'))
        with pytest.raises(InputError, match='non-negative'):
            parse_window_scan(write(tmp_path / 'd.csv', 'k,l,variance\n1,0,-1\n'))

    @pytest.mark.parametrize('sigma', ['0', '-0.1', 'nan', 'inf'])
    def test_bad_sigma_names_line(self, tmp_path, sigma):
        path = write(tmp_path / 'scan.csv',
                     'k,l,variance,sigma\n1,0,1,0.1\n1,1,4,{0}\n2,0,2,0.1\n'.format(sigma))
        with pytest.raises(InputError, match='line 3: sigma must be finite and positive'):
            parse_window_scan(path)

    def test_seed_comment(self, tmp_path):
        scan = WindowScan.from_records(2, [((1, 0), 1.0), ((1, 1), 4.0), ((2, 0), 2.0)])
        path = str(tmp_path / 'scan.csv')
        write_window_scan(scan, path, seed=41)
        assert read_csv(path)[0] == ['# seed=41']
        assert read_seed(path) == 41
        assert_allclose(parse_window_scan(path).variances, [1.0, 4.0, 2.0])
        write_window_scan(scan, path)
        assert read_seed(path) is None

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError, match='cannot read'):
            parse_window_scan(str(tmp_path / 'missing.csv'))


class test_shot_noise_files(object):

    def test_round_trip(self, tmp_path):
        path = str(tmp_path / 'shot.csv')
        write_shot_noise([1e4, 2.5e4, 3.125], path)
        assert_allclose(parse_shot_noise(path).levels, [1e4, 2.5e4, 3.125])
        assert read_csv(path)[0] == ['bin', 'level']

    def test_errors(self, tmp_path):
        with pytest.raises(InputError, match='1..2'):
            parse_shot_noise(write(tmp_path / 'a.csv', 'bin,level\n1,1\n3,1\n'))
        with pytest.raises(InputError, match='duplicate bin 1'):
            parse_shot_noise(write(tmp_path / 'b.csv', 'bin,level\n1,1\n1,2\n'))
        with pytest.raises(InputError, match='bin 2'):
            parse_shot_noise(write(tmp_path / 'c.csv', 'bin,level\n1,1\n2,0\n'))
        with pytest.raises(InputError, match='header'):
            parse_shot_noise(write(tmp_path / 'd.csv', 'm,level\n1,1\n'))


class test_covariance_files(object):

    def test_fixture_values(self, fixture_5mw, fixture_15mw):
        C = fixture_5mw.covariance.entries
        assert C.shape == (19, 19)
        assert C[0, 0] == 1.2481
        assert_allclose(C[0, 1], -0.022258)
        assert fixture_15mw.covariance.entries[17, 17] == 14.354
        assert fixture_15mw.unitary.shape == (19, 19)
        assert np.all(np.diff(fixture_5mw.eigenvalues) >= 0)

    def test_identity(self, tmp_path):
        C = parse_covariance_fixture(write(tmp_path / 'eye.csv', '1,0\n0,1\n'))
        assert_array_equal(C.entries, np.eye(2))

    def test_symmetrized(self, tmp_path):
        C = parse_covariance_fixture(write(tmp_path / 'm.csv', '1,0.2\n0.1,1\n'))
        assert_allclose(C.entries, [[1, 0.15], [0.15, 1]])

    def test_not_square(self, tmp_path):
        with pytest.raises(InputError, match='not square'):
            read_matrix_csv(write(tmp_path / 'm.csv', '1,0,0\n0,1,0\n'))

    def test_reconstruct_json(self, tmp_path, fixture_15mw):
        shot = ShotNoiseLevels(np.linspace(1e3, 2e3, 19))
        photon = denormalize_covariance(fixture_15mw.covariance, shot)
        path = str(tmp_path / 'cov.json')
        write_covariance_json(path, photon, fixture_15mw.covariance, shot, 0.0,
                              {'scan': 'abc'}, version='0.1.0')
        C, levels, back = read_covariance(path)
        assert_allclose(C.entries, fixture_15mw.covariance.entries, rtol=1e-5)
        assert_allclose(levels.levels, shot.levels, rtol=1e-5)
        assert_allclose(back.entries, photon.entries, rtol=1e-5)

    def test_json_without_covariance(self, tmp_path):
        with pytest.raises(InputError, match='covariance'):
            read_covariance(write(tmp_path / 'x.json', '{"n_bins": 2}'))
        with pytest.raises(InputError, match='not valid JSON'):
            read_covariance(write(tmp_path / 'y.json', '{'))

    def test_format_float(self):
        assert format_float(0.0) == '0'
        assert format_float(1.0 / 3) == '0.333333'
        assert format_float(123456789.0) == '1.23457e+08'


class test_fixture_checksums(object):

    def test_committed_files_match(self):
        assert verify_fixture_checksums() == []

    def test_tampered_file_detected(self, tmp_path):
        data = str(tmp_path / 'data')
        shutil.copytree(DATA_DIR, data)
        with open(os.path.join(data, 'covariance_5mW.csv'), 'a') as f:
            f.write('\n')
        os.remove(os.path.join(data, 'unitary_15mW.csv'))
        assert verify_fixture_checksums(data) == ['covariance_5mW.csv', 'unitary_15mW.csv']


class test_report(object):

    def test_15mw_table(self, fixture_15mw):
        report = build_report(fixture_15mw.covariance)
        assert report.squeezed_modes == 1
        assert report.marginal == []
        rows = report.to_text()[-19:]
        assert rows[0].split()[0] == '1'
        assert rows[0].endswith('squeezed')
        assert not rows[1].endswith('squeezed')

    def test_5mw_marginal(self, fixture_5mw):
        report = build_report(fixture_5mw.covariance)
        assert report.squeezed_modes == 6
        assert report.marginal == [6]
        assert report.to_text()[-19:][5].endswith('squeezed,marginal')

    def test_model_truth_counts_only_real_squeezing(self, tmp_path, config_dir):
        params, _ = read_fiber_config(os.path.join(config_dir, 'illustrative.ini'))
        C, shot = fiber_ground_truth(params)
        path = str(tmp_path / 'truth.csv')
        write_covariance_csv(C, path)
        report = build_report(parse_covariance_fixture(path), shot)
        V = report.decomposition.V
        assert report.squeezed_modes == np.sum(V < 1 - 1e-9)
        for v, level in zip(V, report.decomposition.squeezing_db):
            if abs(v - 1) < 1e-12:
                assert level == 0.0

    def test_identity(self):
        report = build_report(QuadratureCovariance(np.eye(4)))
        assert report.squeezed_modes == 0
        assert report.to_dict()['squeezing_db'] == [0.0] * 4

    def test_photon_covariance_from_shot(self, fixture_5mw):
        shot = np.full(19, 4.0)
        report = build_report(fixture_5mw.covariance, shot)
        assert_allclose(report.photon_covariance.entries, 4 * fixture_5mw.covariance.entries)
        assert_allclose(report.decomposition.mode_shapes.raw, 2 * report.decomposition.U)

    def test_json_deterministic(self, tmp_path, fixture_5mw):
        report = build_report(fixture_5mw.covariance, np.full(19, 1e4),
                              inputs={'cov': 'digest'}, seed=7)
        first, second = str(tmp_path / 'a.json'), str(tmp_path / 'b.json')
        emit_report(report, 'json', first)
        emit_report(build_report(fixture_5mw.covariance, np.full(19, 1e4),
                                 inputs={'cov': 'digest'}, seed=7), 'json', second)
        with open(first, 'rb') as a, open(second, 'rb') as b:
            assert a.read() == b.read()

    def test_reload_is_lossless(self, tmp_path, fixture_5mw):
        report = build_report(fixture_5mw.covariance, np.linspace(1e3, 3e3, 19),
                              inputs={'cov': 'digest'}, seed=3)
        first, second = str(tmp_path / 'a.json'), str(tmp_path / 'b.json')
        emit_report(report, 'json', first)
        reloaded = load_report(first)
        assert reloaded.seed == 3
        assert reloaded.marginal == [6]
        emit_report(reloaded, 'json', second)
        with open(first, 'rb') as a, open(second, 'rb') as b:
            assert a.read() == b.read()

    def test_unknown_format(self, tmp_path, fixture_5mw):
        with pytest.raises(InputError):
            emit_report(build_report(fixture_5mw.covariance), 'xml', str(tmp_path / 'r'))

    def test_load_rejects_other_json(self, tmp_path):
        with pytest.raises(InputError, match='not an analysis report'):
            load_report(write(tmp_path / 'x.json', '{"covariance": [[1.0]]}'))


class test_plots(object):
    files = ['covariance.svg', 'covariance.csv', 'squeezing.svg', 'squeezing.csv',
             'mode_shapes.svg', 'mode_shapes.csv']

    def levels(self, outdir):
        return np.array([float(row[2]) for row in read_csv(os.path.join(outdir,
                                                                        'squeezing.csv'))[1:]])

    def test_shown_modes(self):
        assert shown_modes(1) == [1]
        assert shown_modes(2) == [1, 2]
        assert shown_modes(19) == [1, 2, 19]

    def test_files_and_data(self, tmp_path, fixture_5mw):
        outdir = str(tmp_path / 'plots')
        emit_plots(build_report(fixture_5mw.covariance), outdir)
        for name in self.files:
            assert os.path.getsize(os.path.join(outdir, name)) > 0
        assert np.sum(self.levels(outdir) < 0) >= 5
        shapes = read_csv(os.path.join(outdir, 'mode_shapes.csv'))
        assert shapes[0] == ['bin', 'mode_1', 'mode_2', 'mode_19']
        assert len(shapes) == 20
        assert_allclose(read_matrix_csv(os.path.join(outdir, 'covariance.csv')),
                        fixture_5mw.covariance.entries, rtol=1e-5)

    def test_svg_deterministic(self, tmp_path, fixture_15mw):
        report = build_report(fixture_15mw.covariance)
        emit_plots(report, str(tmp_path / 'a'))
        emit_plots(report, str(tmp_path / 'b'))
        for name in self.files:
            with open(str(tmp_path / 'a' / name), 'rb') as a, \
                    open(str(tmp_path / 'b' / name), 'rb') as b:
                assert a.read() == b.read()

    def test_identity_bars_at_zero(self, tmp_path):
        outdir = str(tmp_path / 'plots')
        emit_plots(build_report(QuadratureCovariance(np.eye(3))), outdir)
        assert_array_equal(self.levels(outdir), 0.0)

    def test_two_mode_squeezer_bars(self, tmp_path, config_dir):
        params, _ = read_fiber_config(os.path.join(config_dir, 'tms_only.ini'))
        C, shot = fiber_ground_truth(params)
        outdir = str(tmp_path / 'plots')
        emit_plots(build_report(C, shot), outdir)
        levels = self.levels(outdir)
        assert np.sum(levels < 0) == 1
        assert np.sum(levels > 0) == 1
        assert np.sum(levels == 0) == 2
        assert_allclose(levels[0], 10 * np.log10(np.exp(-0.6)), atol=1e-4)
