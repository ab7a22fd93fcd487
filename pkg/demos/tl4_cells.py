"""Walk through the cell structure of the Temperley-Lieb monoid on four strands."""
from diagmon.diagrams import EvaluationMap, Flavor
from diagmon.monoid import GENERIC, build_diagram_monoid, gram, green, repgap, simple_dimensions

TL = Flavor.TEMPERLEY_LIEB

# Build the 14-element monoid with loops evaluating to 1.
m = build_diagram_monoid(TL, 4)
g = green(m)
print(f"TL(4): {m.size} elements, {len(g.j_classes)} J-classes, D = J: {g.d_equals_j}")

# Each J-class is indexed by its number of through strands.
for j, cls in enumerate(g.j_classes):
    k = m.strands(cls[0])
    gm = gram(m, g, j)
    print(f"\nk = {k}: {len(cls)} elements")
    print("  symbolic Gram matrix:")
    for row in gm.display():
        print("   ", "  ".join(f"{x:>5}" for x in row))

# Ranks of the Gram matrices are the simple dimensions.
print("\nsimple dimensions")
print("  loops = 1  :", simple_dimensions(m, g=g))
print("  generic    :", simple_dimensions(m, GENERIC, g))
mz = build_diagram_monoid(TL, 4, EvaluationMap.zero())
print("  loops = 0  :", simple_dimensions(mz))

# The smallest nontrivial simple module.
print("\nrepgap at loops = 1:", repgap(m, g=g))
print("repgap at loops = 0:", repgap(mz))
