from .formats import (format_float, file_digest, parse_window_scan, write_window_scan,
                      parse_shot_noise, write_shot_noise, read_matrix_csv,
                      parse_covariance_fixture, write_covariance_csv, read_covariance,
                      write_covariance_json, read_seed)
from .fixtures import DATA_DIR, FIXTURES, load_fixture, verify_fixture_checksums
from .report import AnalysisReport, build_report, emit_report, load_report
from .plotting import emit_plots, shown_modes
from .acceptance import run_fixture_checks
from .runner import cli_main
