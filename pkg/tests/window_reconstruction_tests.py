import time

import numpy as np
import pytest
from numpy.testing import assert_allclose

from SupercontinuumSqueezing.errors import InputError, NumericalError, RankDeficientError
from SupercontinuumSqueezing.WindowReconstruction import (SpectralWindow, WindowScan,
                                                          ShotNoiseLevels, PhotonCovariance,
                                                          QuadratureCovariance,
                                                          enumerate_windows,
                                                          predict_window_variance,
                                                          predict_window_scan,
                                                          build_design_matrix,
                                                          reconstruct_covariance,
                                                          inclusion_exclusion_reconstruct,
                                                          reconstruction_residual,
                                                          normalize_covariance,
                                                          denormalize_covariance,
                                                          project_psd,
                                                          noise_power_to_variance)


def random_symmetric(rng, n_bins):
    """positive definite, so every window variance is positive"""
    a = rng.normal(size=(n_bins, n_bins))
    return a @ a.T / n_bins + 0.1 * np.eye(n_bins)


class test_windows(object):

    def test_enumeration(self):
        assert enumerate_windows(1) == [SpectralWindow(1, 0)]
        assert enumerate_windows(2) == [(1, 0), (1, 1), (2, 0)]
        assert len(enumerate_windows(19)) == 190
        for n in range(1, 26):
            assert len(enumerate_windows(n)) == n * (n + 1) // 2

    def test_enumeration_rejects_zero(self):
        with pytest.raises(InputError):
            enumerate_windows(0)

    def test_window_bounds(self):
        with pytest.raises(InputError, match='outside'):
            SpectralWindow(18, 2).check(19)
        with pytest.raises(InputError):
            SpectralWindow(0, 0).check(19)

    def test_scan_validation(self):
        with pytest.raises(InputError, match='no records'):
            WindowScan(2, [], [])
        with pytest.raises(InputError, match=r'duplicate window \(k=1, l=0\)'):
            WindowScan(2, [(1, 0), (1, 0)], [1.0, 1.0])
        with pytest.raises(InputError):
            WindowScan(2, [(1, 0)], [-1.0])
        with pytest.raises(InputError):
            WindowScan(2, [(1, 0)], [np.nan])

    def test_shot_noise_levels_name_bin(self):
        with pytest.raises(InputError, match='bin 2'):
            ShotNoiseLevels([1.0, 0.0, 2.0])

    def test_from_records(self):
        scan = WindowScan(2, [(1, 0), (1, 1), (2, 0)], [1.0, 4.0, 2.0], [0.1, 0.2, 0.3])
        back = WindowScan.from_records(2, scan.records)
        assert list(back.windows) == list(scan.windows)
        assert_allclose(back.sigmas, [0.1, 0.2, 0.3])
        plain = WindowScan.from_records(2, [((1, 0), 1.0, None), ((2, 0), 2.0)])
        assert plain.sigmas is None
        assert_allclose(plain.variances, [1.0, 2.0])

    def test_missing_windows(self):
        scan = WindowScan(2, [(1, 0), (2, 0)], [1.0, 1.0])
        assert scan.missing_windows() == [(1, 1)]
        assert not scan.is_complete()


class test_forward_model(object):

    def test_two_bin_examples(self):
        cov = [[1, 0.5], [0.5, 2]]
        assert predict_window_variance(cov, (1, 0)) == 1
        assert predict_window_variance(cov, (2, 0)) == 2
        assert predict_window_variance(cov, (1, 1)) == 4

    def test_identity_three_bins(self):
        assert predict_window_variance(np.eye(3), (1, 2)) == 3

    def test_out_of_range(self):
        with pytest.raises(InputError):
            predict_window_variance(np.eye(3), (2, 2))

    def test_hand_expansion(self):
        assert predict_window_variance([[2, 1], [1, 3]], (1, 1)) == 7

    def test_full_window_is_total_sum(self, fixture_5mw):
        shot = np.linspace(1e3, 3e3, 19)
        photon = denormalize_covariance(fixture_5mw.covariance, shot)
        assert_allclose(predict_window_variance(photon, (1, 18)), photon.entries.sum())

    def test_design_matrix_full_rank(self):
        design = build_design_matrix(enumerate_windows(19), 19)
        assert design.shape == (190, 190)
        assert np.linalg.matrix_rank(design) == 190
        assert_allclose(build_design_matrix([SpectralWindow(1, 0)], 1), [[1.0]])

    def test_design_matrix_read_only_cache_not_leaked(self):
        design = build_design_matrix(enumerate_windows(3), 3)
        design[0, 0] = 99
        assert build_design_matrix(enumerate_windows(3), 3)[0, 0] == 1


class test_reconstruction(object):

    def test_two_bin_example(self):
        scan = WindowScan(2, [(1, 0), (1, 1), (2, 0)], [1, 4, 2])
        assert_allclose(reconstruct_covariance(scan).entries, [[1, 0.5], [0.5, 2]])

    def test_hand_example(self):
        scan = WindowScan(2, [(1, 0), (2, 0), (1, 1)], [2, 3, 7])
        expected = [[2, 1], [1, 3]]
        assert_allclose(reconstruct_covariance(scan).entries, expected)
        assert_allclose(inclusion_exclusion_reconstruct(scan).entries, expected)

    def test_vacuum_scan(self):
        shot = np.array([4.0, 9.0, 1.0])
        windows = enumerate_windows(3)
        variances = [shot[w.k - 1:w.last].sum() for w in windows]
        recon = reconstruct_covariance(WindowScan(3, windows, variances))
        assert_allclose(recon.entries, np.diag(shot), atol=1e-12)

    def test_diagonal_truth_has_no_correlations(self):
        truth = np.diag([1.0, 2.0, 3.0, 4.0])
        recon = inclusion_exclusion_reconstruct(predict_window_scan(truth)).entries
        assert_allclose(recon - np.diag(np.diag(recon)), 0.0, atol=1e-12)

    def test_linearity(self):
        rng = np.random.default_rng(5)
        a, b = random_symmetric(rng, 6), random_symmetric(rng, 6)
        combined = reconstruct_covariance(predict_window_scan(a) + predict_window_scan(b))
        assert_allclose(combined.entries, a + b, atol=1e-10)

    def test_single_bin(self):
        scan = WindowScan(1, [(1, 0)], [7.0])
        assert_allclose(reconstruct_covariance(scan).entries, [[7.0]])

    def test_identity_round_trip(self):
        scan = predict_window_scan(np.eye(19))
        assert_allclose(reconstruct_covariance(scan).entries, np.eye(19), atol=1e-10)

    def test_random_round_trips(self):
        rng = np.random.default_rng(11)
        ts = time.time()
        for _ in range(100):
            n_bins = int(rng.integers(2, 20))
            truth = random_symmetric(rng, n_bins)
            recon = reconstruct_covariance(predict_window_scan(truth))
            assert np.max(np.abs(recon.entries - truth)) < 1e-9
        assert time.time() - ts < 10

    def test_matches_inclusion_exclusion(self):
        rng = np.random.default_rng(3)
        checked = 0
        for n_bins in range(1, 20):
            scan = predict_window_scan(random_symmetric(rng, n_bins))
            assert_allclose(reconstruct_covariance(scan).entries,
                            inclusion_exclusion_reconstruct(scan).entries,
                            rtol=0, atol=1e-10)
            checked += 1
        assert checked == 19

    def test_random_truths_give_valid_scans(self):
        for seed in range(20):
            rng = np.random.default_rng(seed)
            for n_bins in (1, 2, 3, 7, 19):
                scan = predict_window_scan(random_symmetric(rng, n_bins))
                assert scan.variances.min() > 0

    def test_window_order_irrelevant(self):
        rng = np.random.default_rng(8)
        truth = random_symmetric(rng, 5)
        scan = predict_window_scan(truth)
        order = rng.permutation(len(scan))
        shuffled = WindowScan(5, [scan.windows[i] for i in order], scan.variances[order])
        assert_allclose(reconstruct_covariance(shuffled).entries, truth, atol=1e-9)

    def test_weighted_scan(self):
        truth = random_symmetric(np.random.default_rng(1), 4)
        scan = predict_window_scan(truth, sigmas=np.linspace(0.1, 1.0, 10))
        assert_allclose(reconstruct_covariance(scan).entries, truth, atol=1e-9)

    def test_redundant_scan_is_linear(self):
        truth = random_symmetric(np.random.default_rng(2), 3)
        scan = predict_window_scan(truth)
        doubled = scan + scan
        assert_allclose(reconstruct_covariance(doubled).entries, 2 * truth, atol=1e-9)

    def test_rank_deficient_names_entries(self):
        windows = [w for w in enumerate_windows(3) if w != (1, 1)]
        scan = predict_window_scan(np.eye(3), windows)
        with pytest.raises(RankDeficientError) as info:
            reconstruct_covariance(scan)
        assert (1, 2) in info.value.unconstrained
        assert isinstance(info.value, NumericalError)

    def test_only_diagonal_windows(self):
        scan = WindowScan(3, [(1, 0), (2, 0), (3, 0)], [1.0, 1.0, 1.0])
        with pytest.raises(RankDeficientError) as info:
            reconstruct_covariance(scan)
        assert set(info.value.unconstrained) == {(1, 2), (1, 3), (2, 3)}

    def test_inclusion_exclusion_needs_complete_scan(self):
        scan = WindowScan(2, [(1, 0), (2, 0)], [1.0, 1.0])
        with pytest.raises(InputError, match='incomplete'):
            inclusion_exclusion_reconstruct(scan)

    def test_residual(self):
        truth = random_symmetric(np.random.default_rng(4), 4)
        scan = predict_window_scan(truth)
        assert reconstruction_residual(scan, truth) < 1e-12
        # every window of width w is off by 0.1 w
        assert_allclose(reconstruction_residual(scan, truth + 0.1 * np.eye(4)),
                        0.1 * np.sqrt(5.0))


class test_normalization(object):

    def test_examples(self):
        photon = PhotonCovariance([[100.0]])
        assert_allclose(normalize_covariance(photon, [100.0]).entries, [[1.0]])
        photon = PhotonCovariance([[4.0, 2.0], [2.0, 9.0]])
        C = normalize_covariance(photon, [4.0, 9.0])
        assert_allclose(C.entries, [[1.0, 1 / 3], [1 / 3, 1.0]])
        C = normalize_covariance(PhotonCovariance([[4.0, 2.0], [2.0, 1.0]]), [4.0, 1.0])
        assert_allclose(C.entries[0, 1], 1.0)

    def test_round_trip(self):
        photon = PhotonCovariance(random_symmetric(np.random.default_rng(6), 5))
        shot = ShotNoiseLevels(np.linspace(10, 50, 5))
        back = denormalize_covariance(normalize_covariance(photon, shot), shot)
        assert_allclose(back.entries, photon.entries, rtol=1e-12)

    def test_shot_dimension_mismatch(self):
        with pytest.raises(InputError):
            normalize_covariance(PhotonCovariance(np.eye(2)), [1.0, 1.0, 1.0])

    def test_non_positive_shot(self):
        with pytest.raises(InputError, match='bin 1'):
            normalize_covariance(PhotonCovariance(np.eye(2)), [0.0, 1.0])

    def test_negative_diagonal_warns(self):
        with pytest.warns(RuntimeWarning, match='bins 2'):
            QuadratureCovariance([[1.0, 0.0], [0.0, -0.1]])


class test_preprocessing(object):

    def test_project_psd(self):
        with pytest.warns(RuntimeWarning):
            C, clipped = project_psd([[1.0, 2.0], [2.0, 1.0]])
        assert_allclose(clipped, 1.0)
        assert np.linalg.eigvalsh(C.entries).min() > -1e-12
        C, clipped = project_psd(np.eye(3))
        assert clipped == 0
        assert_allclose(C.entries, np.eye(3))

    def test_noise_power_to_variance(self):
        assert_allclose(noise_power_to_variance(-60.0, -60.0, 250.0), 250.0)
        assert_allclose(noise_power_to_variance(-57.0, -60.0, 1.0), 10 ** 0.3)
        assert_allclose(noise_power_to_variance([-70.0, -60.0], -60.0, [2.0, 2.0]),
                        [0.2, 2.0])
