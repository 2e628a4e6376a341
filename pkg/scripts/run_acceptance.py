#!/usr/bin/env python3
"""Run the acceptance module verbosely: one line per criterion."""

import subprocess
import sys

if __name__ == "__main__":
    sys.exit(subprocess.call([
        sys.executable, "-m", "pytest", "-v", "-s", "tests/test_acceptance.py",
    ]))
