#!/usr/bin/env python3
"""
Startup script for the kspde experiment lab.
"""

if __name__ == "__main__":
    import sys

    from kspde.harness.cli import main

    sys.exit(main())
