#!/usr/bin/env python3
"""Among degree-l hypersurfaces with a positive-dimensional singular locus,
when is "singular along a line" the unique dominant component?

Plane curves always behave.  In higher dimension the question reduces, over a
field of characteristic 2, to tuples of fudge factors containing a common
curve, and the reduction succeeds exactly when every printed margin is
positive: l odd needs l >= 5, l even needs l >= 8, so l >= 7 or l = 5 covers
every ambient dimension at once.
"""

from excodim.applications import (
    char2_threshold_report,
    rnc_stratum_codim_lower,
    singular_line_codim,
)

print("=" * 72)
print("dominance of the singular-along-a-line component")
print("=" * 72)
print(f"\n{'l':>3} | " + " ".join(f"r={r}" for r in range(2, 9)))
for ell in range(3, 21):
    cells = []
    for r in range(2, 9):
        cells.append("yes" if char2_threshold_report(r, ell).holds else " - ")
    print(f"{ell:>3} | " + " ".join(cells))

print("\nthe degree-6 failure, margin by margin (r >= 3):")
for r in (3, 4, 5):
    rep = char2_threshold_report(r, 6)
    margins = ", ".join(f"{name} = {value}" for name, value in rep.margins)
    print(f"  r={r}: {margins} -> holds? {rep.holds}")

print("\ncodimension of the line component itself (l*r - 2r + 3):")
print(f"{'r':>3} " + " ".join(f"l={ell:>2}" for ell in (3, 5, 7, 9)))
for r in (2, 3, 4, 5):
    row = " ".join(f"{singular_line_codim(r, ell):>4}" for ell in (3, 5, 7, 9))
    print(f"{r:>3} {row}")

print("\nrational normal curves of higher degree always lose to the line:")
r, ell = 4, 5
for i in range(1, r + 1):
    print(f"  degree-{i} curve stratum: codim >= {rnc_stratum_codim_lower(i, r, ell)}"
          + ("  (exact, the line)" if i == 1 else ""))
