"""Twistings of finite monoids and the products they define."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .diagrams import EvaluationMap, Flavor
from .linalg import rank_rational
from .monoid import FiniteMonoid, GreenStructure, build_diagram_monoid, green

__all__ = [
    "CommutativeMonoid", "Twisting", "NotTight", "HypothesisFailed", "NotATwisting",
    "canonical_twisting", "is_tight", "twisted_product", "zero_twisted", "EggGrid",
    "egg_grid", "dclass_equivalent", "verify_green_product", "verify_idempotent_formula",
    "verify_main_theorem", "twisted_simple_dims", "idempotents",
]


class NotTight(ValueError):
    pass


class HypothesisFailed(ValueError):
    pass


class NotATwisting(ValueError):
    pass


# ------------------------------------------------------------ commutative monoids


@dataclass(eq=False)
class CommutativeMonoid:
    add: np.ndarray
    neutral: int = 0
    name: str = ""

    def __post_init__(self):
        a = self.add = np.asarray(self.add, dtype=np.int32)
        k = a.shape[0]
        if not np.array_equal(a, a.T):
            raise ValueError("not commutative")
        if not (a[self.neutral] == np.arange(k)).all():
            raise ValueError("neutral element fails")
        if not all(np.array_equal(a[a[x]], a[x][a]) for x in range(k)):
            raise ValueError("not associative")

    @property
    def size(self) -> int:
        return int(self.add.shape[0])

    @classmethod
    def saturating(cls, m: int) -> "CommutativeMonoid":
        """{0, ..., m} with addition capped at m."""
        x = np.arange(m + 1)
        return cls(np.minimum(x[:, None] + x[None, :], m), 0, f"saturating({m})")

    @classmethod
    def cyclic(cls, m: int) -> "CommutativeMonoid":
        x = np.arange(m)
        return cls((x[:, None] + x[None, :]) % m, 0, f"cyclic({m})")

    @classmethod
    def semilattice(cls, table: Sequence[Sequence[int]], neutral: int = 0) -> "CommutativeMonoid":
        t = np.asarray(table)
        if not all(t[x, x] == x for x in range(t.shape[0])):
            raise ValueError("semilattice operations are idempotent")
        return cls(t, neutral, "semilattice")

    def times(self, q: int, k: int) -> int:
        """``k`` copies of ``q`` added to the neutral element."""
        acc = self.neutral
        for _ in range(k):
            nxt = int(self.add[acc, q])
            if nxt == acc:
                break  # further additions are absorbed
            acc = nxt
        return acc

    def as_monoid(self) -> FiniteMonoid:
        return FiniteMonoid(self.add.copy(), self.neutral)

    def idempotents(self) -> set[int]:
        return {x for x in range(self.size) if self.add[x, x] == x}

    @property
    def d_trivial(self) -> bool:
        g = green(self.as_monoid())
        return all(len(c) == 1 for c in g.j_classes)


# ------------------------------------------------------------ twistings


@dataclass(eq=False)
class Twisting:
    base: FiniteMonoid
    phi: np.ndarray
    note: str = ""
    mixed_pairs: int = 0  # products whose floats mix zero and nonzero parameters

    def cocycle_violation(self, samples: int | None = None, seed: int = 0):
        """First triple breaking the cocycle identity, or None."""
        t, p = self.base.table, self.phi
        n = self.base.size
        if samples is None and n <= 200:
            for a in range(n):
                lhs = p[a][:, None] + p[t[a]]
                rhs = p[a][t] + p
                bad = np.argwhere(lhs != rhs)
                if len(bad):
                    return (a, int(bad[0][0]), int(bad[0][1]))
            return None
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, samples or 20000))
        bad = np.flatnonzero(p[a, b] + p[t[a, b], c] != p[a, t[b, c]] + p[b, c])
        return None if not len(bad) else (int(a[bad[0]]), int(b[bad[0]]), int(c[bad[0]]))

    def is_cocycle(self) -> bool:
        return self.cocycle_violation() is None


def canonical_twisting(flavor: Flavor, n: int, a: EvaluationMap | None = None,
                       budget: int | None = None) -> Twisting:
    """Count floating components, or 0 when one of them has a zero parameter.

    The base is always the classical monoid.
    """
    a = EvaluationMap.classical() if a is None else a
    s = build_diagram_monoid(flavor, n, EvaluationMap.classical(), budget)
    kinds = s.float_kinds
    values = np.zeros(len(kinds), dtype=np.int64)
    mixed = np.zeros(len(kinds), dtype=bool)
    for k, fl in enumerate(kinds):
        vals = {a(g) for g, _ in fl}
        values[k] = 0 if 0 in vals else sum(c for _, c in fl)
        mixed[k] = vals == {0, 1}
    phi = values[s.float_ids]
    return Twisting(s, phi, f"canonical {flavor.value} n={n} {a.describe()}",
                    int(mixed[s.float_ids].sum()))


def is_tight(t: Twisting) -> tuple[bool, tuple | None]:
    """Tightness with a witness ``(side, a, b)`` on failure."""
    tab, phi = t.base.table, t.phi
    n = t.base.size
    for b in range(n):
        zero_hits = np.unique(tab[:, b][phi[:, b] == 0])
        miss = ~np.isin(tab[:, b], zero_hits)
        if miss.any():
            return False, ("left", int(np.flatnonzero(miss)[0]), b)
    for a in range(n):
        zero_hits = np.unique(tab[a][phi[a] == 0])
        miss = ~np.isin(tab[a], zero_hits)
        if miss.any():
            return False, ("right", a, int(np.flatnonzero(miss)[0]))
    return True, None


def twisted_product(m: CommutativeMonoid, t: Twisting, q: int) -> FiniteMonoid:
    """``M x_phi^q S`` with element ``(j, a)`` stored at id ``j * |S| + a``."""
    s = t.base
    N, K = s.size, m.size
    maxphi = int(t.phi.max(initial=0))
    qk = np.array([m.times(q, k) for k in range(maxphi + 1)], dtype=np.int64)
    shift = qk[t.phi]                                   # N x N, element of M
    j = np.arange(K)
    jk = m.add[j[:, None], j[None, :]]                  # K x K
    # (j,a)(k,b) -> (jk + shift(a,b), ab)
    first = m.add[jk[:, None, :, None], shift[None, :, None, :]]   # K,N,K,N
    second = np.broadcast_to(s.table[None, :, None, :], first.shape)
    table = (first * N + second).reshape(K * N, K * N).astype(np.int32)
    out = FiniteMonoid(table, m.neutral * N + s.identity)
    out.pairs = [(jj, aa) for jj in range(K) for aa in range(N)]
    out.twist = (m, t, q)
    return out


def zero_twisted(t: Twisting) -> FiniteMonoid:
    s = t.base
    N = s.size
    table = np.full((N + 1, N + 1), N, dtype=np.int32)
    table[:N, :N] = np.where(t.phi == 0, s.table, N)
    labels = (list(s.labels) + [None]) if s.labels is not None else None
    out = FiniteMonoid(table, s.identity, N, labels, flavor=s.flavor, n=s.n)
    out.had_zero = s.zero is not None
    return out


def idempotents(m: FiniteMonoid) -> set[int]:
    d = np.diagonal(m.table)
    return set(np.flatnonzero(d == np.arange(m.size)).tolist())


# ------------------------------------------------------------ D-class comparison


@dataclass(frozen=True)
class EggGrid:
    marks: tuple[tuple[int, ...], ...]   # 1 where the H-class holds an idempotent
    h_size: int

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.marks), len(self.marks[0]) if self.marks else 0

    def permuted(self, rows: Sequence[int], cols: Sequence[int]) -> "EggGrid":
        return EggGrid(tuple(tuple(self.marks[r][c] for c in cols) for r in rows), self.h_size)


def egg_grid(m: FiniteMonoid, g: GreenStructure, j: int) -> EggGrid:
    box = g.eggbox[j]
    diag = np.diagonal(m.table)
    marks = [[0] * len(box["cols"]) for _ in box["rows"]]
    h = 0
    for (r, c), ids in box["cells"].items():
        h = len(ids)
        marks[r][c] = int(any(diag[x] == x for x in ids))
    return EggGrid(tuple(map(tuple, marks)), h)


def _col_signatures(A, rows, cols_n):
    return sorted(tuple(A[r][c] for r in rows) for c in range(cols_n))


def dclass_equivalent(d1: EggGrid, d2: EggGrid) -> bool:
    """Same shape and H-size, and equal 0/1 marks up to row and column permutations."""
    if d1.shape != d2.shape or d1.h_size != d2.h_size:
        return False
    A, B = d1.marks, d2.marks
    nr, nc = d1.shape
    if sorted(map(sum, A)) != sorted(map(sum, B)):
        return False
    if _col_signatures(A, range(nr), nc) != _col_signatures(B, range(nr), nc):
        return False
    order = sorted(range(nr), key=lambda r: -sum(A[r]))
    used = [False] * nr
    mapped_a: list[int] = []
    mapped_b: list[int] = []

    def rec(k: int) -> bool:
        if k == nr:
            return True
        r = order[k]
        for s in range(nr):
            if used[s] or sum(B[s]) != sum(A[r]):
                continue
            mapped_a.append(r)
            mapped_b.append(s)
            if _col_signatures(A, mapped_a, nc) == _col_signatures(B, mapped_b, nc):
                used[s] = True
                if rec(k + 1):
                    return True
                used[s] = False
            mapped_a.pop()
            mapped_b.pop()
        return False

    return rec(0)


def gram_indicator_rank(grid: EggGrid) -> int:
    return rank_rational(grid.marks)


# ------------------------------------------------------------ verifiers


def _parts(tm: FiniteMonoid):
    if not hasattr(tm, "twist"):
        raise TypeError("expected a monoid built by twisted_product")
    return tm.twist


def _require_tight(t: Twisting) -> None:
    ok, witness = is_tight(t)
    if not ok:
        raise NotTight(f"twisting is loose at {witness}")


def verify_green_product(tm: FiniteMonoid) -> dict:
    """Check that every Green's class of ``tm`` is the product of component classes."""
    m, t, q = _parts(tm)
    _require_tight(t)
    gt, gm, gs = green(tm), green(m.as_monoid()), green(t.base)
    N = t.base.size
    violations = []
    for name, attr in (("R", "r_of"), ("L", "l_of"), ("J", "j_of")):
        ct, cm, cs = getattr(gt, attr), getattr(gm, attr), getattr(gs, attr)
        for x in range(tm.size):
            j, a = divmod(x, N)
            same_t = ct == ct[x]
            ys = np.arange(tm.size)
            same_prod = (cm[ys // N] == cm[j]) & (cs[ys % N] == cs[a])
            if not np.array_equal(same_t, same_prod):
                violations.append({"relation": name, "element": [int(j), int(a)]})
    for x in range(tm.size):
        j, a = divmod(x, N)
        ht = set(gt.h_class(x))
        hp = {jj * N + aa for jj in gm.h_class(j) for aa in gs.h_class(a)}
        if ht != hp:
            violations.append({"relation": "H", "element": [int(j), int(a)]})
    return {"theorem": "tight-green-classes", "instances": tm.size, "violations": violations}


def verify_idempotent_formula(tm: FiniteMonoid) -> dict:
    m, t, q = _parts(tm)
    _require_tight(t)
    if not m.d_trivial:
        raise HypothesisFailed(f"{m.name or 'M'} is not D-trivial")
    N = t.base.size
    got = {divmod(x, N) for x in idempotents(tm)}
    em, es = m.idempotents(), idempotents(t.base)
    want = {(i, e) for i in em for e in es if m.add[i, m.times(q, int(t.phi[e, e]))] == i}
    return {"theorem": "idempotents-of-twisted-product", "instances": len(got),
            "violations": sorted(got ^ want)}


def verify_main_theorem(tm: FiniteMonoid) -> dict:
    """Every idempotent-bearing D-class of T matches S or the 0-twist, exclusively
    when some idempotent of the S-class has positive twist."""
    m, t, q = _parts(tm)
    _require_tight(t)
    if not m.d_trivial:
        raise HypothesisFailed(f"{m.name or 'M'} is not D-trivial")
    s = t.base
    N = s.size
    t0 = zero_twisted(t)
    gt, gs, g0 = green(tm), green(s), green(t0)
    es = idempotents(s)
    et = idempotents(tm)
    instances, violations = [], []
    for jt, cls in enumerate(gt.j_classes):
        if not et.intersection(cls):
            continue
        j, a = divmod(cls[0], N)
        js = gs.j_index(a)
        e_s = [e for e in gs.j_classes[js] if e in es]
        pos = [e for e in e_s if t.phi[e, e] > 0]
        holds = lambda e: m.add[j, m.times(q, int(t.phi[e, e]))] == j
        cond = not any(holds(e) for e in pos) or all(holds(f) for f in pos)
        if not cond:
            raise HypothesisFailed(f"exists-implies-for-all fails on class of {(j, a)}")
        sufficient = m.add[j, q] in m.idempotents()
        grid_t = _grid_on(tm, gt, jt, lambda x: x % N, gs, js)
        grid_s = egg_grid(s, gs, js)
        grid_0 = egg_grid(t0, g0, g0.j_index(a))
        like_s = dclass_equivalent(grid_t, grid_s)
        like_0 = dclass_equivalent(grid_t, grid_0)
        exclusive = like_s != like_0
        rec = {"class": [int(j), int(a)], "matches_S": like_s, "matches_T0": like_0,
               "positive_twist_idempotent": bool(pos), "sufficient_criterion": bool(sufficient)}
        instances.append(rec)
        if not (like_s or like_0) or exclusive != bool(pos):
            violations.append(rec)
    return {"theorem": "dclasses-untwisted-or-zero-twisted", "instances": instances,
            "violations": violations}


def _grid_on(tm, gt, jt, proj, gs, js) -> EggGrid:
    """Egg-box of a T-class laid out along the rows/cols of the S-class it projects to."""
    box = gs.eggbox[js]
    rpos = {r: i for i, r in enumerate(box["rows"])}
    cpos = {c: i for i, c in enumerate(box["cols"])}
    diag = np.diagonal(tm.table)
    marks = [[0] * len(box["cols"]) for _ in box["rows"]]
    sizes = {}
    for x in gt.j_classes[jt]:
        a = proj(x)
        r, c = rpos[int(gs.r_of[a])], cpos[int(gs.l_of[a])]
        sizes[(r, c)] = sizes.get((r, c), 0) + 1
        if diag[x] == x:
            marks[r][c] = 1
    return EggGrid(tuple(map(tuple, marks)), next(iter(sizes.values())))


def twisted_simple_dims(tm: FiniteMonoid) -> dict:
    """Simple dimensions of T per idempotent-bearing class, with the S and T0 values."""
    m, t, q = _parts(tm)
    _require_tight(t)
    if not m.d_trivial:
        raise HypothesisFailed(f"{m.name or 'M'} is not D-trivial")
    s = t.base
    N = s.size
    t0 = zero_twisted(t)
    gt, gs, g0 = green(tm), green(s), green(t0)
    if not (gt.h_trivial() and gs.h_trivial()):
        raise HypothesisFailed("H-classes must be trivial")
    rows, violations = [], []
    for jt, cls in enumerate(gt.j_classes):
        r = gram_indicator_rank(egg_grid(tm, gt, jt))
        if not r:
            continue
        j, a = divmod(cls[0], N)
        rs = gram_indicator_rank(egg_grid(s, gs, gs.j_index(a)))
        r0 = gram_indicator_rank(egg_grid(t0, g0, g0.j_index(a)))
        rec = {"class": [int(j), int(a)], "apex": s.strands(a), "dim": r, "dim_S": rs, "dim_T0": r0}
        rows.append(rec)
        if r not in (rs, r0):
            violations.append(rec)
    return {"theorem": "twisted-simple-dimensions", "instances": rows, "violations": violations}
