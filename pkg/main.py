#!/usr/bin/env python3
"""
Main script to run the mdst command line
"""

from mdst_engine.adapters.cli import main

if __name__ == "__main__":
    main()
