"""Frozen reference values.

Each value was fixed before the code it checks was run: either taken from the
published worked examples or derived by hand (derivation noted inline).
"""
from fractions import Fraction

# monoid orders, n = 0, 1, 2, ...
ORDERS = {
    "tl": [1, 1, 2, 5, 14, 42, 132],
    "motzkin": [1, 2, 9, 51, 323],
    "brauer": [1, 1, 3, 15, 105, 945],
    "partition": [1, 2, 15, 203],
    "planar-rook": [1, 2, 6, 20, 70, 252],
    "rook": [1, 2, 7, 34, 209],
    "rook-brauer": [1, 2, 10, 76, 764],
    "planar-partition": [1, 2, 14, 132],
    "symmetric": [1, 1, 2, 6, 24],
}

# TL(4) worked example
TL4_SIMPLE = {
    "classical": {4: 1, 2: 3, 0: 1},
    "zero": {4: 1, 2: 2},
    "generic": {4: 1, 2: 3, 0: 2},
}
TL4_GRAM_SYMBOLIC = {
    0: [["a1^2", "a1"], ["a1", "a1^2"]],
    2: [["a1", "1", "0"], ["1", "a1", "1"], ["0", "1", "a1"]],
    4: [["1"]],
}
TL4_GRAM_AT_ONE = {0: [[1, 1], [1, 1]], 2: [[1, 1, 0], [1, 1, 1], [0, 1, 1]], 4: [[1]]}
TL4_GRAM_AT_ZERO = {0: [[0, 0], [0, 0]], 2: [[0, 1, 0], [1, 0, 1], [0, 1, 0]], 4: [[1]]}
TL4_REPGAP = {"classical": 3, "zero": 2}

# cell dimensions (half-diagram counts), hand counted
CELL_DIMS = {
    ("tl", 4): {0: 2, 2: 3, 4: 1},
    ("tl", 5): {1: 5, 3: 4, 5: 1},
    ("motzkin", 3): {0: 4, 1: 5, 2: 3, 3: 1},     # Motzkin paths of length 3 ending at height k
    ("planar-rook", 3): {0: 1, 1: 3, 2: 3, 3: 1},
    ("planar-partition", 2): {0: 2, 1: 3, 2: 1},  # = TL(4) at 2k
    ("brauer", 3): {1: 3, 3: 1},                  # unlabeled half counts
}

# merge-diagram counts for n = 3, k = 0..3
MERGE_COUNT_N3 = [5, 10, 12, 4]

# root-of-unity data
TL_FUSION = {(4, 3): {0: 1, 2: 3, 4: 1}, (4, 2): {2: 2, 4: 1}, (0, 5): {0: 1}}
# dim T(k) at l = 3: T(3) = D(3)+D(1), T(4) = D(4)+D(0), T(5) = D(5), ...
TILTING_DIMS_L3 = [1, 2, 3, 6, 6, 6, 12, 12, 9, 18]
# Mo(n) simple dims: l = 2 <-> loops evaluate to 1, l = 3 <-> loops evaluate to 0
MO_SIMPLE = {
    (3, 2): {0: 1, 1: 5, 2: 3, 3: 1},
    (3, 3): {0: 4, 1: 4, 2: 3, 3: 1},
}

# partition-cell simplicity for even n; True means the cell module stays simple
PARTITION_SIMPLE = {
    (1, "row"): {0: False, 1: True, 2: False, 3: True, 4: True, 10: True},
    (1, "column"): {0: False, 1: True, 5: True},
    (0, "row"): {0: False, 1: False, 2: True, 7: True},
    (0, "column"): {0: False, 1: False, 4: False, 9: False},
}

# symmetric group characters: classes listed as partitions
CHAR_S3_21_AT_3 = -1
CHAR_S4_22 = {(1, 1, 1, 1): 2, (2, 1, 1): 0, (2, 2): 2, (3, 1): -1, (4,): 0}

# walks
TL2_DISTRIBUTION = {0: Fraction(1, 4), 2: Fraction(3, 4)}
# TV to Plancherel from the trivial rep of S(5): 1 - 1/120, then 103/120 (hand computed)
PLANCHEREL_TV_T5 = [Fraction(119, 120), Fraction(103, 120)]

# planar rook, a0 = 0, n = 2: a = {B1,T2},{B2},{T1} acting on the span of {a, a^2}
PRO_GENERATOR_ACTION = [[0, 0], [1, 0]]

# twisting: TL(2) with M = saturating(2), q = 1; diagram 0 is the cap-cup, 1 is the identity
TL2_TWISTED_IDEMPOTENTS = {(0, 1), (2, 0), (2, 1)}
