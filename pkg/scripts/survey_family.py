#!/usr/bin/env python3
"""Survey the modular loop family: predictions versus brute force.

For every admissible (n, m) up to --max-n, print the classification flags,
the translation cycle class, and whether every closed-form prediction agrees
with an exhaustive scan of the table.

Usage: python scripts/survey_family.py [--max-n 45]
"""

import argparse

from loupe import (
    LnParams,
    build_ln,
    count_ln,
    enumerate_ln_params,
    ln_predicted_flags,
    predicted_cycle_class,
)
from loupe.identities import Law, check_law
from loupe.representation import cycle_class, right_regular_representation


def survey(max_n: int) -> int:
    mismatches = 0
    print(f"{'n':>3} {'m':>3} {'order':>5}  flags (C/R/L/W)  cycle class")
    for n in range(5, max_n + 1, 2):
        ms = enumerate_ln_params(n)
        assert len(ms) == count_ln(n)
        for m in ms:
            L = build_ln(n, m)
            params = LnParams(n, m)
            flags = ln_predicted_flags(params)
            observed = (
                check_law(L, Law.COMMUTATIVE).holds,
                check_law(L, Law.RIGHT_ALTERNATIVE).holds,
                check_law(L, Law.LEFT_ALTERNATIVE).holds,
                check_law(L, Law.WIP).holds,
            )
            predicted = (
                flags.commutative,
                flags.right_alternative,
                flags.left_alternative,
                flags.wip,
            )
            klass = predicted_cycle_class(params)
            uniform = all(
                cycle_class(p) == klass
                for p in right_regular_representation(L)[1:]
            )
            ok = predicted == observed and uniform
            if not ok:
                mismatches += 1
            marks = "".join("CRLW"[i] if predicted[i] else "-" for i in range(4))
            print(
                f"{n:>3} {m:>3} {L.size:>5}  {marks:>15}  {klass}"
                + ("" if ok else "   <-- MISMATCH")
            )
    print(f"\nmismatches: {mismatches}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=45)
    raise SystemExit(survey(parser.parse_args().max_n))
