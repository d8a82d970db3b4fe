#!/usr/bin/env python3
"""Run the full verification battery and write reports + index.

Equivalent to `hardyframes report-all`; kept as a script so the battery
can be launched without installing the console entry point.

Usage:
    python scripts/run_battery.py [--out-dir reports] [--config-dir DIR]
"""

import argparse
import sys

from hardyframes.cli import cmd_report_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="reports")
    parser.add_argument("--config-dir", default=None)
    args = parser.parse_args()
    return cmd_report_all(args.config_dir, args.out_dir)


if __name__ == "__main__":
    sys.exit(main())
