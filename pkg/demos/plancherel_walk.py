"""Tensor walks: weight concentration for planar monoids and the McKay walk on S(t)."""
from diagmon.diagrams import Flavor
from diagmon.walks import exact_distribution, gaussian_profile_check, plancherel_walk, tail_mass

# The exact law of the highest weight of a random path in V^(x)n.
for flavor in (Flavor.TEMPERLEY_LIEB, Flavor.MOTZKIN, Flavor.PLANAR_PARTITION, Flavor.PLANAR_ROOK):
    d = exact_distribution(flavor, 1024)
    rep = gaussian_profile_check(d)
    print(f"{flavor.value:>16}: tail beyond 4 sqrt(n) = {float(tail_mass(d, 4)):.2e}, "
          f"Gaussian slope ratio {rep['slope_ratio']:.4f}")

# Start at the trivial representation of S(6) and tensor with the permutation module.
tv = plancherel_walk(6, 40)
print("\nTV distance to Plancherel on S(6)")
for step in (0, 1, 2, 5, 10, 20, 40):
    print(f"  step {step:>2}: {float(tv[step]):.3e}")
