#!/usr/bin/env python3
"""Startup for the tqmzv command line"""
import sys

from tqmzv.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
