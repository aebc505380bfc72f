# -*- coding: utf-8 -*-
"""
Squeezing Runner - unified command line interface to the reconstruction,
modal analysis and forward model.  It should be the primary way to interact
with the package when it is not installed.

    python SqueezingRunner.py reconstruct --scan scan.csv --shot shot.csv --out cov.json
    python SqueezingRunner.py analyze --cov cov.json --out report.json --plots figs
    python SqueezingRunner.py simulate --config configs/illustrative.ini --out scan.csv
    python SqueezingRunner.py verify-fixtures

Add -v before the command for stage timing.
"""
import sys

from SupercontinuumSqueezing.IOPipeline.runner import cli_main

if __name__ == '__main__':
    sys.exit(cli_main(sys.argv[1:]))
