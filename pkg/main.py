# ----------------------------------------------------------
# Domination Lab (Main Entry Point)
# File: main.py
# ----------------------------------------------------------
# Description:
# Main entry point for the domination lab command line.
# It dispatches to one of the subcommands:
#   • build    → gadgets and graph families as graph6 or DOT
#   • analyze  → cubicity, bridges, connectivity, cyclic cuts, Hamiltonicity
#   • solve    → exact or certified domination numbers
#   • verify   → the claim registry, with JSON/CSV reports
#   • scan     → a graph6 corpus checked against a domination bound
#
# Acts as the glue connecting the lab modules:
#   domlab/cli.py            → argument parsing and colored output
#   domlab/families.py       → graph constructions
#   domlab/domination.py     → solvers
#   domlab/certification.py  → compositional certificates
#   domlab/claims.py         → claim registry
#   domlab/verifier.py       → verification controller and observers
#
# Equivalent to `python -m domlab`.
# ----------------------------------------------------------

import sys

from domlab.cli import main


# ----------------------------------------------------------
# Main Application Entry Point
# ----------------------------------------------------------
if __name__ == "__main__":
    sys.exit(main())
