"""Highest-weight distributions, Gaussian concentration, and the S(t) Plancherel walk."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

import numpy as np

from .diagrams import Flavor
from .dims import PartitionLabel, admissible_k, cell_dim, cell_dim_row, partitions, syt_count

__all__ = [
    "DegenerateWindow", "SizeMismatch", "WeightDistribution", "WEIGHTS", "drift_and_variance",
    "exact_distribution", "tail_mass", "gaussian_profile_check", "typical_window_ratio",
    "mn_character", "CharacterTable", "character_table", "WalkState", "plancherel",
    "point_mass", "mckay_step", "tv_distance", "plancherel_walk", "pushforward_identity",
    "concentrate_rows",
]


class DegenerateWindow(ValueError):
    pass


class SizeMismatch(ValueError):
    pass


# weights of V in SL2 units (a torus weight for the rook case)
WEIGHTS: dict[Flavor, tuple[int, ...]] = {
    Flavor.TEMPERLEY_LIEB: (1, -1),
    Flavor.MOTZKIN: (1, 0, -1),
    Flavor.PLANAR_PARTITION: (2, 0, 0, -2),
    Flavor.PLANAR_ROOK: (0, 1),
}

_SL2 = (Flavor.TEMPERLEY_LIEB, Flavor.MOTZKIN, Flavor.PLANAR_PARTITION)


def drift_and_variance(flavor: Flavor) -> tuple[Fraction, Fraction]:
    w = WEIGHTS[flavor]
    mu = Fraction(sum(w), len(w))
    return mu, Fraction(sum(x * x for x in w), len(w)) - mu * mu


def _label_to_weight(flavor: Flavor, k: int) -> int:
    return 2 * k if flavor is Flavor.PLANAR_PARTITION else k


def _dim_t(flavor: Flavor, k: int) -> int:
    return 1 if flavor is Flavor.PLANAR_ROOK else _label_to_weight(flavor, k) + 1


@dataclass
class WeightDistribution:
    flavor: Flavor
    n: int
    probs: dict[int, Fraction]

    def total(self) -> Fraction:
        return sum(self.probs.values(), Fraction(0))

    def as_float(self) -> dict[int, float]:
        return {k: float(p) for k, p in self.probs.items()}


def _masses(flavor: Flavor, n: int, cell=None) -> dict[int, int]:
    if cell is None:
        row = cell_dim_row(flavor, n)
        cell = row.__getitem__
    return {k: cell(k) * _dim_t(flavor, k) for k in admissible_k(flavor, n)}


def exact_distribution(flavor: Flavor, n: int) -> WeightDistribution:
    if flavor not in WEIGHTS:
        raise ValueError(f"no rank-1 distribution for {flavor.value}")
    den = len(WEIGHTS[flavor]) ** n
    return WeightDistribution(flavor, n, {k: Fraction(m, den) for k, m in _masses(flavor, n).items()})


def _center(d: WeightDistribution) -> Fraction:
    mu, _ = drift_and_variance(d.flavor)
    return mu * d.n if d.flavor is Flavor.PLANAR_ROOK else Fraction(0)


def tail_mass(d: WeightDistribution, C: float) -> Fraction:
    """Mass of labels with |k - n mu| >= C sqrt(n)."""
    c = _center(d)
    lim = Fraction(C) ** 2 * d.n
    return sum((p for k, p in d.probs.items() if (k - c) ** 2 >= lim), Fraction(0))


def gaussian_profile_check(d: WeightDistribution, window: float = 3.0) -> dict:
    """Fit log-mass decay against the Gaussian exponent over |k - n mu| <= window sqrt(n).

    For SL2 rows the (K+1)^2 prefactor from dim T and the cell dimension is
    divided out first.  ``slope_ratio`` is 1 for a perfect match.
    """
    mu, var = drift_and_variance(d.flavor)
    c = float(_center(d))
    ks = [k for k, p in d.probs.items() if p and abs(k - c) <= window * math.sqrt(d.n)]
    if len(ks) < 3:
        raise DegenerateWindow(f"only {len(ks)} labels in the window")
    xs, ys = [], []
    for k in ks:
        p = d.probs[k]
        y = math.log(p.numerator) - math.log(p.denominator)
        if d.flavor in _SL2:
            K = _label_to_weight(d.flavor, k)
            y -= 2 * math.log(K + 1)
            x = -(K * K) / (2 * d.n * float(var))
        else:
            x = -((k - c) ** 2) / (2 * d.n * float(var))
        xs.append(x)
        ys.append(y)
    xs_a, ys_a = np.array(xs), np.array(ys)
    slope = float(np.polyfit(xs_a - xs_a[0], ys_a - ys_a[0], 1)[0])
    return {"flavor": d.flavor.value, "n": d.n, "window": window, "points": len(ks),
            "mu": str(mu), "sigma2": str(var), "slope_ratio": slope}


def typical_window_ratio(flavor: Flavor, n: int, C: float, l: int | None = None) -> Fraction:
    """Share of the total simple dimension carried by labels with |k - n mu| <= C sqrt(n).

    ``l=None`` uses cell dimensions; an integer l uses root-of-unity dimensions.
    """
    if l is None:
        dims = cell_dim_row(flavor, n)
    else:
        from .nonss import fusion_table
        fam = {Flavor.TEMPERLEY_LIEB: "TL", Flavor.MOTZKIN: "Mo"}[flavor]
        dims = dict(fusion_table(fam, l, n)[n])
    mu, _ = drift_and_variance(flavor)
    c = mu * n if flavor is Flavor.PLANAR_ROOK else 0
    lim = Fraction(C) ** 2 * n
    inside = sum(v for k, v in dims.items() if (k - c) ** 2 <= lim)
    return Fraction(inside, sum(dims.values()))


def concentrate_rows(d: WeightDistribution) -> list[dict]:
    _, var = drift_and_variance(d.flavor)
    c = float(_center(d))
    rows = []
    for k in sorted(d.probs):
        if d.flavor in _SL2:
            K = _label_to_weight(d.flavor, k)
            g = (K + 1) ** 2 * math.exp(-K * K / (2 * d.n * float(var)))
        else:
            g = math.exp(-((k - c) ** 2) / (2 * d.n * float(var)))
        rows.append({"k": k, "prob": float(d.probs[k]), "gaussian_pred": g})
    norm = sum(r["gaussian_pred"] for r in rows)
    for r in rows:
        r["gaussian_pred"] /= norm
    return rows


# ------------------------------------------------------------ symmetric group characters


def _beta(parts: tuple[int, ...], length: int) -> tuple[int, ...]:
    p = parts + (0,) * (length - len(parts))
    return tuple(p[i] + length - 1 - i for i in range(length))


def _from_beta(beta: list[int]) -> tuple[int, ...]:
    b = sorted(beta, reverse=True)
    L = len(b)
    return tuple(x for x in (b[i] - (L - 1 - i) for i in range(L)) if x)


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    beta = _beta(lam, len(lam))
    bs = set(beta)
    total = 0
    for b in beta:
        if b - r >= 0 and b - r not in bs:
            sign = (-1) ** sum(1 for x in beta if b - r < x < b)
            new = [x for x in beta if x != b] + [b - r]
            total += sign * _mn(_from_beta(new), rest)
    return total


def mn_character(lam: PartitionLabel, mu: PartitionLabel) -> int:
    """chi_lam at the class of cycle type mu (border-strip recursion)."""
    if lam.size != mu.size:
        raise SizeMismatch(f"{lam} and {mu} have different sizes")
    return _mn(lam.parts, mu.parts)


def _centralizer(mu: PartitionLabel) -> int:
    counts: dict[int, int] = {}
    for p in mu.parts:
        counts[p] = counts.get(p, 0) + 1
    return prod(p ** c * factorial(c) for p, c in counts.items())


@dataclass
class CharacterTable:
    t: int
    rows: list[PartitionLabel]
    cols: list[PartitionLabel]
    values: list[list[int]]
    class_sizes: list[int]

    def dim(self, i: int) -> int:
        return self.values[i][self.cols.index(PartitionLabel((1,) * self.t))]

    def column_orthogonal(self) -> bool:
        f = factorial(self.t)
        for a in range(len(self.cols)):
            for b in range(len(self.cols)):
                s = sum(self.values[i][a] * self.values[i][b] for i in range(len(self.rows)))
                want = f // self.class_sizes[a] if a == b else 0
                if s != want:
                    return False
        return True


@lru_cache(maxsize=None)
def character_table(t: int) -> CharacterTable:
    ps = list(partitions(t))
    vals = [[mn_character(l, m) for m in ps] for l in ps]
    return CharacterTable(t, ps, ps, vals, [factorial(t) // _centralizer(m) for m in ps])


@dataclass
class WalkState:
    t: int
    dist: dict[PartitionLabel, Fraction]

    def total(self) -> Fraction:
        return sum(self.dist.values(), Fraction(0))


def plancherel(t: int) -> WalkState:
    f = factorial(t)
    return WalkState(t, {lam: Fraction(syt_count(lam) ** 2, f) for lam in partitions(t)})


def point_mass(lam: PartitionLabel) -> WalkState:
    return WalkState(lam.size, {p: Fraction(int(p == lam)) for p in partitions(lam.size)})


@lru_cache(maxsize=None)
def _transition(t: int) -> tuple[tuple[Fraction, ...], ...]:
    tab = character_table(t)
    f = factorial(t)
    fixed = [sum(1 for p in m.parts if p == 1) for m in tab.cols]
    dims = [syt_count(l) for l in tab.rows]
    R = len(tab.rows)
    out = []
    for s in range(R):
        row = []
        for u in range(R):
            mult = sum(tab.class_sizes[c] * fixed[c] * tab.values[s][c] * tab.values[u][c]
                       for c in range(len(tab.cols)))
            assert mult % f == 0
            row.append(Fraction(mult // f * dims[u], t * dims[s]))
        out.append(tuple(row))
    return tuple(out)


def mckay_step(w: WalkState, table: CharacterTable | None = None) -> WalkState:
    """One step of tensoring with the permutation module, reweighted by dimension."""
    tab = table or character_table(w.t)
    P = _transition(tab.t)
    new = {lam: Fraction(0) for lam in tab.rows}
    for s, sig in enumerate(tab.rows):
        p = w.dist.get(sig, 0)
        if p:
            for u, tau in enumerate(tab.rows):
                if P[s][u]:
                    new[tau] += P[s][u] * p
    return WalkState(w.t, new)


def tv_distance(a: WalkState, b: WalkState) -> Fraction:
    keys = set(a.dist) | set(b.dist)
    return sum((abs(a.dist.get(k, 0) - b.dist.get(k, 0)) for k in keys), Fraction(0)) / 2


def plancherel_walk(t: int, steps: int, start: PartitionLabel | None = None) -> list[Fraction]:
    """TV distance to Plancherel after 0..steps steps from ``start`` (default trivial)."""
    w = point_mass(start or PartitionLabel.row(t))
    target = plancherel(t)
    tvs = [tv_distance(w, target)]
    for _ in range(steps):
        w = mckay_step(w)
        tvs.append(tv_distance(w, target))
    return tvs


# ------------------------------------------------------------ pushforward


def _hw_multiplicities(flavor: Flavor, n: int) -> dict[int, int]:
    """Highest-weight multiplicities of V^n computed from the weight multiset alone."""
    w = WEIGHTS[flavor]
    lo = min(w)
    coeff = [0] * ((max(w) - lo) * n + 1)
    coeff[0] = 1
    span = 0
    for _ in range(n):
        nxt = [0] * len(coeff)
        for i in range(span + 1):
            if coeff[i]:
                for x in w:
                    nxt[i + x - lo] += coeff[i]
        coeff = nxt
        span += max(w) - lo
    shift = lo * n
    char = {i + shift: c for i, c in enumerate(coeff) if c}
    if flavor is Flavor.PLANAR_ROOK:
        return char
    return {K: char[K] - char.get(K + 2, 0) for K in char if K >= 0 and char[K] - char.get(K + 2, 0)}


def pushforward_identity(flavor: Flavor, n: int, corrupt: dict[int, int] | None = None) -> dict:
    """Compare the diagram-side masses with highest-weight masses of V^n.

    ``corrupt`` overrides cell dimensions (a negative control).
    """
    cell = None
    if corrupt:
        cell = lambda k: corrupt.get(k, cell_dim(flavor, n, k))
    den = len(WEIGHTS[flavor]) ** n
    diag = {k: Fraction(m, den) for k, m in _masses(flavor, n, cell).items() if m}
    hw = _hw_multiplicities(flavor, n)
    hw_mass = {}
    for K, mult in hw.items():
        dim = 1 if flavor is Flavor.PLANAR_ROOK else K + 1
        hw_mass[K] = Fraction(mult * dim, den)
    pushed = {_label_to_weight(flavor, k): p for k, p in diag.items()}
    bad = sorted(set(pushed) ^ set(hw_mass)) + sorted(K for K in set(pushed) & set(hw_mass)
                                                      if pushed[K] != hw_mass[K])
    return {"flavor": flavor.value, "n": n, "equal": not bad, "mismatched_weights": bad}
