#!/usr/bin/env python3
"""
Optomechanical transparency spectra and light drag from the command line.

    python omit_drag.py spectrum --beta-ideal --out data/output/spectrum.csv
    python omit_drag.py figure fig2 --out data/output/fig2.csv
"""

from src.cli.main import main

if __name__ == "__main__":
    raise SystemExit(main())
