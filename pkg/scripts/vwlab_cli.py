#!/usr/bin/env python3
"""Runs the vwlab command line without installing the entry point

    python scripts/vwlab_cli.py verify-paper --part lie --field "GF(5)"
"""

import sys

from vwlab.cli import main

if __name__ == "__main__":
    sys.exit(main())
