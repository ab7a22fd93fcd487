"""Root-of-unity simple dimensions for Temperley-Lieb and Motzkin via tilting fusion."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .diagrams import Diagram, EvaluationMap, Flavor
from .dims import cell_dim
from .monoid import build_diagram_monoid

__all__ = [
    "InvalidOrder", "FusionRuleSet", "TiltingMultiplicityVector", "fusion_step",
    "fusion_table", "simple_dims_tl", "simple_dims_mo", "tilting_dims", "b_sum",
    "tl_l2_recurrence", "tl_l3_recurrence", "mo_recurrence", "asymptotic_ratio",
    "tl_bounds_report", "motzkin_scaling_report", "planar_rook_zero_indecomposable",
    "DELTA_TO_L",
]


class InvalidOrder(ValueError):
    pass


# delta <-> l per family, fixed by matching Gram ranks of TL_delta(n) and Mo_{1,delta}(n)
DELTA_TO_L = {"TL": {1: 3, 0: 2}, "Mo": {1: 2, 0: 3}}


@dataclass(frozen=True)
class FusionRuleSet:
    l: int
    family: str  # "TL" or "Mo"

    def __post_init__(self):
        if self.l < 2:
            raise InvalidOrder("l must be at least 2")
        if self.family not in ("TL", "Mo"):
            raise ValueError(self.family)

    @property
    def dim_v(self) -> int:
        return 2 if self.family == "TL" else 3

    def decompose(self, m: int) -> dict[int, int]:
        """Multiplicities of T(k) in T(m) (x) V."""
        l = self.l
        if l == 2:
            terms = [m + 1] if m % 2 else [m - 3, m - 1, m - 1, m + 1]
        else:
            r = m % l
            if r == l - 1:
                terms = [m + 1]
            elif r == 0:
                terms = [m - 1, m - 1, m + 1]
            elif r == l - 2:
                terms = [m + 1 - 2 * l, m - 1, m + 1]
            else:
                terms = [m - 1, m + 1]
        if self.family == "Mo":
            terms.append(m)
        out: dict[int, int] = {}
        for t in terms:
            if t >= 0:
                out[t] = out.get(t, 0) + 1
        return out


@dataclass
class TiltingMultiplicityVector:
    n: int
    mults: dict[int, int] = field(default_factory=lambda: {0: 1})

    def total(self) -> int:
        return sum(self.mults.values())


def fusion_step(v: TiltingMultiplicityVector, rules: FusionRuleSet) -> TiltingMultiplicityVector:
    out: dict[int, int] = {}
    for m, c in v.mults.items():
        for k, e in rules.decompose(m).items():
            out[k] = out.get(k, 0) + c * e
    return TiltingMultiplicityVector(v.n + 1, {k: c for k, c in sorted(out.items()) if c})


_ROWS: dict[tuple[str, int], list[dict[int, int]]] = {}


def _fusion_rows(family: str, l: int, n: int) -> list[dict[int, int]]:
    rules = FusionRuleSet(l, family)
    rows = _ROWS.setdefault((family, l), [{0: 1}])
    while len(rows) <= n:
        v = fusion_step(TiltingMultiplicityVector(len(rows) - 1, rows[-1]), rules)
        rows.append(v.mults)
    return rows


def fusion_table(family: str, l: int, n: int) -> list[dict[int, int]]:
    """Tilting multiplicities of V^(x)m for m = 0..n."""
    return [dict(r) for r in _fusion_rows(family, l, n)[: n + 1]]


def tilting_dims(l: int, upto: int, family: str = "TL") -> list[int]:
    """dim T(k) for k <= upto, bootstrapped from the fusion rules."""
    rules = FusionRuleSet(l, family)
    dims = [1]
    for m in range(upto):
        dec = rules.decompose(m)
        if dec.get(m + 1) != 1:
            raise AssertionError("T(m+1) must occur once in T(m) (x) V")
        rest = sum(e * dims[k] for k, e in dec.items() if k != m + 1)
        dims.append(dims[m] * rules.dim_v - rest)
    return dims


def simple_dims_tl(n: int, l: int) -> dict[int, int]:
    return dict(_fusion_rows("TL", l, n)[n])


def simple_dims_mo(n: int, l: int) -> dict[int, int]:
    return dict(_fusion_rows("Mo", l, n)[n])


def b_sum(family: str, n: int, l: int) -> int:
    return sum(_fusion_rows(family, l, n)[n].values())


# ------------------------------------------------------------ closed recurrences


def _a(flavor: Flavor, n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    if flavor is Flavor.TEMPERLEY_LIEB and (n - k) % 2:
        return 0
    return cell_dim(flavor, n, k)


def tl_l2_recurrence(n: int) -> dict[int, int]:
    tl = Flavor.TEMPERLEY_LIEB
    out = {}
    for k in range(n + 1):
        v = _a(tl, n - 1, k - 1) if k % 2 == 0 else _a(tl, n, k)
        if v:
            out[k] = v
    return out


def tl_l3_recurrence(n: int, variant: str = "fusion") -> dict[int, int]:
    """``variant="stated"`` uses b[n-1,k] in the k = 0 mod 3 case, ``"fusion"`` uses b[n-1,k+1]."""
    tl = Flavor.TEMPERLEY_LIEB
    prev: dict[int, int] = {0: 1}
    for m in range(1, n + 1):
        cur = {}
        for k in range(m + 1):
            if k % 3 == 0:
                v = prev.get(k - 1, 0) + (prev.get(k, 0) if variant == "stated" else prev.get(k + 1, 0))
            elif k % 3 == 1:
                v = prev.get(k - 1, 0)
            else:
                v = _a(tl, m, k)
            if v:
                cur[k] = v
        prev = cur
    return prev


def mo_recurrence(n: int, l: int) -> dict[int, int]:
    mo = Flavor.MOTZKIN
    prev: dict[int, int] = {0: 1}
    for m in range(1, n + 1):
        cur = {}
        for k in range(m + 1):
            if l == 2:
                v = _a(mo, m, k) if k % 2 else prev.get(k - 1, 0) + prev.get(k, 0)
            elif k % l == l - 1:
                v = _a(mo, m, k)
            elif k % l == l - 2:
                v = prev.get(k - 1, 0) + prev.get(k, 0)
            else:
                v = prev.get(k - 1, 0) + prev.get(k, 0) + prev.get(k + 1, 0)
            if v:
                cur[k] = v
        prev = cur
    return prev


# ------------------------------------------------------------ asymptotics


def _ratio(num: int, den_pow2: int, factor: float) -> float:
    return (num / 2 ** den_pow2) / factor


def asymptotic_ratio(family: str, n: int, l: int) -> dict:
    """b_{n,l} against the stated envelope for TL at l = 2 or 3."""
    if family != "TL" or l not in (2, 3):
        raise ValueError("envelopes are stated for TL with l = 2 or 3")
    b = b_sum("TL", n, l)
    const = (3 + (-1) ** (n + 1)) / 4 if l == 2 else 2 / 3
    env = const * math.sqrt(2 / math.pi) / math.sqrt(n)
    r = _ratio(b, n, env)
    return {"family": family, "n": n, "l": l, "ratio": r, "bounds_ok": abs(r - 1) <= 0.05}


def tl_bounds_report(n: int, l: int) -> dict:
    """Position of b_{n,l} relative to the uniform two-sided envelope."""
    b = b_sum("TL", n, l)
    upper = math.sqrt(6 / ((l * l - 1) * math.pi)) / math.sqrt(n)
    x = b / 2 ** n
    return {"n": n, "l": l, "ratio": x / upper, "lower": 0.5, "upper": 1.0,
            "bounds_ok": 0.5 * upper <= x <= upper}


def motzkin_scaling_report(l: int, ns: list[int]) -> dict:
    """b_{n,l} / (n^{-3/2} 3^n) along ``ns`` and the fitted drift exponent."""
    ratios = []
    for n in ns:
        b = b_sum("Mo", n, l)
        ratios.append((b / 3 ** n) * n ** 1.5)
    slope = float(np.polyfit(np.log(ns), np.log(ratios), 1)[0])
    return {"l": l, "n": list(ns), "ratio": ratios, "drift_exponent": slope}


# ------------------------------------------------------------ planar rook, a0 = 0


def planar_rook_zero_indecomposable(n: int = 2, seed: int = 0) -> dict:
    """The cyclic module spanned by x*a over pRo(n) with a0 = 0.

    ``a`` sends B1 to T2, everything else a singleton.  Returns the basis,
    the action matrices, the commutant dimension and a locality verdict.
    """
    import sympy

    if n < 2:
        raise ValueError("needs n >= 2")
    F = Flavor.PLANAR_ROOK
    m = build_diagram_monoid(F, n, EvaluationMap.zero())
    blocks = [["B1", "T2"], ["B2"], ["T1"]] + [[f"B{i}"] for i in range(3, n + 1)] + [[f"T{i}"] for i in range(3, n + 1)]
    a = m.index(Diagram.from_blocks(n, blocks, F))
    basis = sorted(set(m.table[:, a].tolist()) - {m.zero})
    pos = {x: i for i, x in enumerate(basis)}
    d = len(basis)
    actions = {}
    for x in range(m.size):
        if x == m.zero:
            continue
        mat = [[0] * d for _ in range(d)]
        for j, v in enumerate(basis):
            w = int(m.table[x, v])
            if w != m.zero:
                mat[pos[w]][j] = 1
        actions[x] = mat
    # commutant: X with X A = A X for every action matrix A
    unknowns = sympy.symbols(f"x0:{d * d}")
    X = sympy.Matrix(d, d, unknowns)
    eqs = []
    for mat in {tuple(map(tuple, v)) for v in actions.values()}:
        A = sympy.Matrix(mat)
        eqs.extend(list(X * A - A * X))
    sol = sympy.linear_eq_to_matrix(eqs, unknowns)[0]
    null = sol.nullspace()
    comm = [sympy.Matrix(d, d, list(v)) for v in null]
    rng = np.random.default_rng(seed)
    generic = sum((int(c) * B for c, B in zip(rng.integers(1, 1000, size=len(comm)), comm)),
                  sympy.zeros(d, d))
    eig = generic.eigenvals()
    local = len(eig) == 1
    a_img = Diagram.from_blocks(n, blocks, F)
    return {
        "n": n,
        "basis": [m.labels[x] for x in basis],
        "generator": a_img,
        "generator_action": actions[a],
        "square_is_basis": int(m.table[a, a]) in pos,
        "action": {m.labels[x]: mat for x, mat in actions.items()},
        "commutant_dim": len(comm),
        "local": local,
        "indecomposable": local,
    }
