#!/usr/bin/env python3
"""Run the complete cross-validation sweep: configuration-space counts
against Betti tables (with brute-force polynomial enumeration) and torus
counts against torus Betti tables.  Exits nonzero if any row fails."""

import sys
import time

from betticount.cli import main


def run(argv):
    print("$ betticount " + " ".join(argv))
    start = time.monotonic()
    code = main(argv)
    print(f"[{time.monotonic() - start:.1f}s]\n")
    return code


if __name__ == "__main__":
    rc = 0
    rc |= run([
        "verify", "--side", "conf", "--q", "3,5,7", "--max-n", "6",
        "--rep", "1,V1,V11,V2", "--bruteforce",
    ])
    rc |= run([
        "verify", "--side", "tori", "--q", "2,3,5", "--max-n", "6",
        "--rep", "1,V1,V11,V2",
    ])
    sys.exit(rc)
