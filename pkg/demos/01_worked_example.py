#!/usr/bin/env python3
"""Walk through the running example: four forms of degrees (3,4,5,6) in
projective 4-space whose common vanishing locus contains a curve.

The locus is stratified by the dimension b of the span of that curve.  Each
stratum bound comes from restricting to a b-plane, taking the forms one at a
time, and charging the minimal condition count for the next form to contain
the current intersection; the chain of candidate sums below is exactly that
recursion unrolled.
"""

from excodim.strata import analyze_spans, worked_example

w = worked_example()

print("=" * 72)
print(f"degrees {list(w.degrees)} in projective {w.r}-space, excess {w.a}")
print("=" * 72)

print(f"\nlines (span 1): exact codimension {w.line_codim}")
print("  4+5+6+7 conditions for a fixed line, minus 6 for the choice of line")

for stage in w.stages:
    print(f"\ncurves spanning a {stage.b}-plane:")
    for indices, value in stage.candidates:
        print(f"  pick forms {list(indices)} -> {value} conditions")
    print(f"  chain minimum {stage.chain_min}, minus the {stage.b}-plane moduli "
          f"-> bound {stage.bound}")

print("\nsummary (codimension per span dimension):")
for b, value in sorted(w.summary.items()):
    marker = "exact" if b == 1 else ">="
    print(f"  span {b}: {marker} {value}")

print(f"\ncodimension of the whole locus: exactly {w.codim}")
print(f"second-largest component has codimension >= {w.second_largest_lower_bound}")
print(f"verdict: {w.verdict} (the line stratum is the unique maximal component)")

# the same numbers through the general analyzer
report = analyze_spans(4, 1, (3, 4, 5, 6))
assert int(report.base_codim) == w.codim
assert int(report.gap) == w.second_largest_lower_bound - w.codim
print(f"\nanalyzer agrees: base {report.base_codim}, gap {report.gap}")
