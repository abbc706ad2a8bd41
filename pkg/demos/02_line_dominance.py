#!/usr/bin/env python3
"""When do tuples of hypersurfaces through a common line dominate every other
excess-intersection stratum?

Not always: two counterexample shapes below.  But inside the slope cone
(d_i <= d_1 + C(d_1,2)(i-1), all degrees at least 2, k = r forms) the line
stratum always wins, with an explicit gap to the runner-up.
"""

from excodim.combinatorics import binomial
from excodim.strata import (
    analyze_spans,
    cone_sequences,
    h_gap,
    kcl_cone_min,
    nr_hypothesis,
    slope_gap,
)

print("=" * 72)
print("counterexamples outside the cone")
print("=" * 72)

# (2, 2, 100) in projective 3-space: containing a common line costs 103,
# but making the second quadric equal the first costs only 9
report = analyze_spans(3, 1, (2, 2, 100))
print(f"degrees (2,2,100): in cone? {nr_hypothesis((2, 2, 100))}, "
      f"line stratum codim {report.base_codim}")

print("\n" + "=" * 72)
print("inside the cone the line stratum wins with a guaranteed gap")
print("=" * 72)

for r in (3, 4, 5):
    for d1 in (2, 3):
        worst = None
        for ds in cone_sequences(d1, r, max_count=100):
            rep = analyze_spans(r, 1, ds)
            gap = int(rep.gap)
            if worst is None or gap < worst[0]:
                worst = (gap, ds)
        print(f"r=k={r}, d1={d1}: worst observed gap {worst[0]} on {list(worst[1])}, "
              f"guaranteed {slope_gap(r, r, d1)}")

print("\nequal-degree gap values (k = r):")
print(f"{'r':>3} {'d':>3} {'gap at b=2':>11} {'gap at b=r':>11}")
for r in (3, 4, 5, 6):
    for d in (2, 3, 4):
        ds = (d,) * r
        print(f"{r:>3} {d:>3} {int(h_gap(r, 1, 2, ds)):>11} {int(h_gap(r, 1, r, ds)):>11}")

print("\nbrute-force check that constant degrees minimize the gap over the cone:")
for r, d in [(4, 2), (5, 2), (4, 3)]:
    seq, value = kcl_cone_min(r, 1, 2, d, r, 60_000)
    print(f"  r={r}, d={d}: minimizer {list(seq)}, gap {value} "
          f"(slope of the cone boundary: {binomial(d, 2)})")
