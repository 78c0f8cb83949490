#!/usr/bin/env python3
"""
ricci-sig CLI entry point.

Usage:
    python ricci_sig.py catalog
    python ricci_sig.py ricci --algebra A3_9+A1 --metric identity
    python ricci_sig.py search --algebra A3_8+A1 --budget 5000 --seed 1
    python ricci_sig.py verify identities --seed 7
    python ricci_sig.py verify table3 --seed 1 --output csv --out-file table3.csv
"""

import sys
from pathlib import Path

# Add src to path
src_path = Path(__file__).parent / "src"
sys.path.insert(0, str(src_path))

from ricci_signature.cli.main import cli

if __name__ == '__main__':
    cli()
