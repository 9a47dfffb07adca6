"""Entry point for Moving Planes."""

import sys

from moving_planes.cli.app import main

if __name__ == "__main__":
    sys.exit(main())
