# ----------------------------------------------------------
# Domination Lab
# File: domlab/__main__.py
# ----------------------------------------------------------
# Description:
# Enables `python -m domlab <subcommand> ...`.
# ----------------------------------------------------------

import sys

from domlab.cli import main

if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
