#!/usr/bin/env python3
"""Regenerate the two reference Betti tables (exterior and symmetric square
of the standard representation) together with their stable sequences and
recurrences, in the layout used throughout the docs."""

import sys

from betticount.cli import main


def run(argv):
    print("$ betticount " + " ".join(argv))
    code = main(argv)
    print()
    return code


if __name__ == "__main__":
    rc = 0
    for rep in ("V11", "V2"):
        rc |= run(["conf-betti", "--rep", rep, "--max-i", "13", "--max-n", "14", "--stable"])
    rc |= run(["conf-betti", "--rep", "X1-1", "--max-i", "8", "--max-n", "10", "--stable"])
    rc |= run(["tori-betti", "--rep", "X1", "--max-i", "6", "--max-n", "8", "--stable"])
    sys.exit(rc)
