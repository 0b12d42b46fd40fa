#!/usr/bin/env python3
"""
Run tetrachrome from a checkout with one command.
Works on Windows, macOS, and Linux.

    python run.py solve graph.col
    python run.py --help
"""
import sys

from tetrachrome.cli import main

if __name__ == "__main__":
    sys.exit(main())
