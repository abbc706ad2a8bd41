#!/usr/bin/env python3
"""Smooth degree-d hypersurfaces in projective r-space carrying a bigger
family of lines through some point than dimension counting expects.

Three regimes: for small degree the dominant locus is hypersurfaces with a
point where the second fundamental form vanishes; for d >= r it is simply
hypersurfaces containing a line; and in the critical degree d = r - 1 the
winner flips from the former to 2-plane-containing hypersurfaces as r passes
5, where both components are maximal simultaneously.
"""

from excodim.applications import lines_verdict, prop2r1_report

SHORT = {"EckardtPoint": "eckardt", "ContainsPlane": "plane", "ContainsLine": "line"}

print("=" * 72)
print("dominant components (rows r, columns d)")
print("=" * 72)
cols = list(range(3, 11))
print(f"{'r':>3} | " + " ".join(f"{d:>13}" for d in cols))
for r in range(2, 10):
    cells = []
    for d in cols:
        verdict = lines_verdict(r, d)
        cells.append("+".join(sorted(SHORT[c] for c in verdict.maximal_components)))
    print(f"{r:>3} | " + " ".join(f"{c:>13}" for c in cells))

print("\nthe critical degree d = r - 1 in detail:")
for r in range(4, 9):
    verdict = lines_verdict(r, r - 1)
    names = " and ".join(sorted(SHORT[c] for c in verdict.maximal_components))
    print(f"  r={r}: {names:<18} upstairs gap {verdict.universal_gap}, "
          f"downstairs gap {verdict.universal_gap - 2}")

print("\nthe tuple computation feeding the critical degree "
      "(degrees 2..r+1, one point fixed):")
for r in (3, 4, 5, 6):
    rep = prop2r1_report(r)
    print(f"  r={r}: line component codim {rep['max_codim']}, "
          f"runner-up {rep['second_codim']}, gap {rep['gap']}")
