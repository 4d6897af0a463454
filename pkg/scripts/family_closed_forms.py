#!/usr/bin/env python3
"""Print the closed-form polynomials of both families and their gaps."""

import sys

from bouquets.families import FamilyKind, closed_form, family_rotation
from bouquets.polynomial import gap_exponents, partial_dual_euler_polynomial

BRUTE_LIMIT = 5

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 10
for kind in "BC":
    for n in range(1, n_max + 1):
        fam = FamilyKind(kind, n)
        poly = closed_form(fam)
        line = f"{fam.name:>5}  gaps={gap_exponents(poly)}  {poly}"
        if n <= BRUTE_LIMIT:
            ok = poly == partial_dual_euler_polynomial(family_rotation(fam))
            line += "  [brute force agrees]" if ok else "  [BRUTE FORCE MISMATCH]"
        print(line)
