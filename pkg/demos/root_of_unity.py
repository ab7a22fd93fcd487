"""Simple dimensions of Temperley-Lieb and Motzkin monoids at roots of unity.

The fusion rules for tilting modules give the dimensions directly; the Gram
ranks of the monoids themselves confirm the small cases.
"""
from diagmon.diagrams import EvaluationMap, Flavor
from diagmon.monoid import build_diagram_monoid, simple_dimensions
from diagmon.nonss import (DELTA_TO_L, b_sum, fusion_table, motzkin_scaling_report, simple_dims_mo,
                           simple_dims_tl, tilting_dims)

# Multiplicities of tilting summands in V^(x)n for TL at l = 3.
print("TL, l = 3")
for n, row in enumerate(fusion_table("TL", 3, 8)):
    print(f"  n={n}: " + " ".join(f"T({k})x{c}" for k, c in row.items()))
print("  dim T(k):", tilting_dims(3, 9))

# Loops set to 1 correspond to l = 3, loops set to 0 to l = 2.
for delta, l in DELTA_TO_L["TL"].items():
    a = EvaluationMap.classical() if delta else EvaluationMap.zero()
    ranks = simple_dimensions(build_diagram_monoid(Flavor.TEMPERLEY_LIEB, 5, a))
    print(f"  TL(5) loops={delta}: Gram ranks {ranks}, fusion {simple_dims_tl(5, l)}")

# Motzkin: singleton paths stay at 1, loops at delta.
print("\nMotzkin")
for delta, l in DELTA_TO_L["Mo"].items():
    a = EvaluationMap.from_values(1, delta)
    ranks = dict(sorted(simple_dimensions(build_diagram_monoid(Flavor.MOTZKIN, 3, a)).items()))
    print(f"  Mo(3) loops={delta}: Gram ranks {ranks}, fusion (l={l}) {simple_dims_mo(3, l)}")

# How fast does the total simple dimension grow?
print("\nTotal simple dimension relative to 2^n (TL) and 3^n (Mo)")
for n in (64, 128, 256):
    print(f"  n={n}: TL l=3 {b_sum('TL', n, 3) / 2 ** n:.4e}   Mo l=3 {b_sum('Mo', n, 3) / 3 ** n:.4e}")
rep = motzkin_scaling_report(3, [128, 160, 192, 224, 256])
print(f"  Mo drift exponent against n^-3/2 3^n: {rep['drift_exponent']:.3f}")
