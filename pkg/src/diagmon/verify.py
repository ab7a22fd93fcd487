"""Named verification suites, one per acceptance criterion.

Each suite returns ``{"suite", "ok", "seconds", "checks": [{"name", "ok", "detail"}]}``.
Reference values below are the published data the library is checked against.
"""
from __future__ import annotations

import math
import time
from collections import Counter
from fractions import Fraction
from typing import Callable

import numpy as np

from .diagrams import (Diagram, EvaluationMap, Flavor, compose, enumerate_diagrams, involute)
from .dims import (PartitionLabel, Verdict, admissible_k, bell, catalan, cell_dim, double_factorial,
                   labels_for, monoid_order, motzkin_number, partition_cell_is_simple, syt_count,
                   telephone)
from .monoid import (GENERIC, SYMBOLIC, apexes, build_diagram_monoid, dclass_rank_permutation_invariance,
                     expected_apexes, gram, green, rank, simple_dimensions)

F = Flavor
ALL_FLAVORS = list(Flavor)
PLANAR = [F.TEMPERLEY_LIEB, F.MOTZKIN, F.PLANAR_PARTITION, F.PLANAR_ROOK]

ARCHETYPES = {
    "classical": EvaluationMap.classical(),
    "zero": EvaluationMap.zero(),
    "a0=0": EvaluationMap.from_values(0, 1),
}

TL4_DIMS = {"classical": {4: 1, 2: 3, 0: 1}, "zero": {4: 1, 2: 2}, "generic": {4: 1, 2: 3, 0: 2}}
TL4_GRAMS = {
    "classical": {0: [[1, 1], [1, 1]], 2: [[1, 1, 0], [1, 1, 1], [0, 1, 1]], 4: [[1]]},
    "zero": {0: [[0, 0], [0, 0]], 2: [[0, 1, 0], [1, 0, 1], [0, 1, 0]], 4: [[1]], None: [[0]]},
    "generic": {0: [["a1^2", "a1"], ["a1", "a1^2"]], 2: [["a1", "1", "0"], ["1", "a1", "1"], ["0", "1", "a1"]],
                4: [["1"]]},
}

# (flavor, max n) for the enumeration criterion
ORDER_RANGE = [(F.TEMPERLEY_LIEB, 6), (F.MOTZKIN, 4), (F.BRAUER, 5), (F.PARTITION, 3),
               (F.PLANAR_ROOK, 5), (F.ROOK, 4), (F.ROOK_BRAUER, 4), (F.PLANAR_PARTITION, 3)]
CLOSED_ORDER: dict[Flavor, Callable[[int], int]] = {
    F.TEMPERLEY_LIEB: catalan,
    F.MOTZKIN: lambda n: motzkin_number(2 * n),
    F.BRAUER: lambda n: double_factorial(2 * n - 1),
    F.PARTITION: lambda n: bell(2 * n),
    F.PLANAR_ROOK: lambda n: math.comb(2 * n, n),
    F.ROOK: lambda n: sum(math.comb(n, k) ** 2 * math.factorial(k) for k in range(n + 1)),
    F.ROOK_BRAUER: lambda n: telephone(2 * n),
    F.PLANAR_PARTITION: lambda n: catalan(2 * n),
}

# canonical twisting table as stated: flavor -> (max n, {archetype: tight?})
TIGHT_TABLE = {
    F.TEMPERLEY_LIEB: (4, None), F.BRAUER: (3, None), F.PARTITION: (2, None), F.PLANAR_PARTITION: (2, None),
    F.MOTZKIN: (2, {"classical": True, "zero": False, "a0=0": False}), F.ROOK_BRAUER: (2, {"classical": True, "zero": False, "a0=0": False}),
    F.ROOK: (2, {"classical": True, "zero": False, "a0=0": False}), F.PLANAR_ROOK: (2, {"classical": True, "zero": False, "a0=0": False}),
}

# stated simplicity table: (delta, shape) -> set of k with strictly smaller simple
PARTITION_TABLE = {
    (1, "row"): {0, 2}, (1, "column"): {0},
    (0, "row"): {0, 1}, (0, "column"): set(range(0, 11)),
}

# genera of closed components each flavor can produce
GENUS_SETS = {
    F.TEMPERLEY_LIEB: {1}, F.BRAUER: {1}, F.MOTZKIN: {0, 1}, F.ROOK_BRAUER: {0, 1},
    F.ROOK: {0}, F.PLANAR_ROOK: {0}, F.SYMMETRIC: set(),
}


class _Suite:
    def __init__(self, name: str):
        self.name = name
        self.checks: list[dict] = []
        self.t0 = time.perf_counter()

    def check(self, name: str, ok: bool, detail=None) -> bool:
        self.checks.append({"name": name, "ok": bool(ok), "detail": detail})
        return bool(ok)

    def report(self) -> dict:
        return {"suite": self.name, "ok": all(c["ok"] for c in self.checks),
                "seconds": round(time.perf_counter() - self.t0, 3), "checks": self.checks}


def _grams_by_apex(m, g, how: str) -> dict:
    out = {}
    for j, cls in enumerate(g.j_classes):
        gm = gram(m, g, j)
        key = m.strands(cls[0])
        out[key] = gm.display() if how == "generic" else [[int(x) for x in r] for r in gm.specialize()]
    return out


def suite_tl4(seed: int = 0) -> dict:
    s = _Suite("tl4")
    mc = build_diagram_monoid(F.TEMPERLEY_LIEB, 4, ARCHETYPES["classical"])
    mz = build_diagram_monoid(F.TEMPERLEY_LIEB, 4, ARCHETYPES["zero"])
    gc, gz = green(mc), green(mz)
    got = {"classical": simple_dimensions(mc, g=gc), "zero": simple_dimensions(mz, g=gz),
           "generic": simple_dimensions(mc, GENERIC, gc, seed)}
    for key, want in TL4_DIMS.items():
        s.check(f"simple dims {key}", got[key] == want, {"got": got[key], "want": want})
    sym = simple_dimensions(mc, SYMBOLIC, gc)
    s.check("simple dims symbolic", sym == TL4_DIMS["generic"], sym)
    grams = {"classical": _grams_by_apex(mc, gc, "classical"), "zero": _grams_by_apex(mz, gz, "zero"),
             "generic": _grams_by_apex(mc, gc, "generic")}
    for key, want in TL4_GRAMS.items():
        s.check(f"gram matrices {key}", grams[key] == want, {str(k): v for k, v in grams[key].items()})
    r = s.report()
    s.check("under one second", r["seconds"] < 1.0, r["seconds"])
    return s.report()


def suite_enumeration(seed: int = 0) -> dict:
    s = _Suite("enumeration")
    for fl, top in ORDER_RANGE:
        got = [len(enumerate_diagrams(fl, n)) for n in range(top + 1)]
        want = [CLOSED_ORDER[fl](n) for n in range(top + 1)]
        s.check(f"{fl.value} n<={top}", got == want and got == [monoid_order(fl, n) for n in range(top + 1)],
                {"got": got, "want": want})
    r = s.report()
    s.check("under 30 seconds", r["seconds"] < 30, r["seconds"])
    return s.report()


def brute_cell_dims(flavor: Flavor, n: int) -> dict:
    """(k, lambda) -> (#top halves with k through blocks) * syt(lambda), by enumeration."""
    halves: dict[int, set] = {}
    for d in enumerate_diagrams(flavor, n):
        halves.setdefault(d.through_strands(), set()).add(d.half("top"))
    out = {}
    for k, lam in labels_for(flavor, n):
        h = len(halves.get(k, ()))
        out[(k, None if lam is None else str(lam))] = h * (1 if lam is None else syt_count(lam))
    return out


def suite_cell_dims(seed: int = 0) -> dict:
    s = _Suite("cell-dims")
    for fl in ALL_FLAVORS:
        top = 3 if fl is F.PARTITION else 4
        for n in range(top + 1):
            brute = brute_cell_dims(fl, n)
            formula = {(k, None if lam is None else str(lam)): cell_dim(fl, n, k, lam) for k, lam in labels_for(fl, n)}
            sq = sum(v * v for v in formula.values())
            s.check(f"{fl.value} n={n}", brute == formula and sq == monoid_order(fl, n),
                    {"sum_of_squares": sq, "order": monoid_order(fl, n)} if brute == formula else
                    {"brute": {str(k): v for k, v in brute.items()}, "formula": {str(k): v for k, v in formula.items()}})
    return s.report()


def suite_generic_ranks(seed: int = 0) -> dict:
    s = _Suite("generic-ranks")
    for fl in PLANAR:
        for n in range(1, 5):
            m = build_diagram_monoid(fl, n)
            got = simple_dimensions(m, GENERIC, seed=seed)
            want = {k: cell_dim(fl, n, k) for k in admissible_k(fl, n)}
            s.check(f"generic ranks {fl.value}({n})", got == want, {"got": got, "want": want})
    for fl in ALL_FLAVORS:
        for n in range(1, 5):
            for name, a in ARCHETYPES.items():
                m = build_diagram_monoid(fl, n, a)
                got = apexes(m)
                want = expected_apexes(fl, n, a)
                s.check(f"apexes {fl.value}({n}) {name}", got == want,
                        {"got": sorted(got), "want": sorted(want)})
    return s.report()


def suite_twisting(seed: int = 0) -> dict:
    from .twist import (CommutativeMonoid, NotTight, canonical_twisting, is_tight, twisted_product,
                        twisted_simple_dims, verify_green_product, verify_idempotent_formula,
                        verify_main_theorem)
    s = _Suite("twisting")
    for fl, (top, table) in TIGHT_TABLE.items():
        for n in (range(1, top + 1) if table is None else [top]):
            for name in ("classical", "zero", "a0=0"):
                want = True if table is None else table.get(name)
                if want is None:
                    continue
                t = canonical_twisting(fl, n, ARCHETYPES[name])
                if not t.is_cocycle():
                    s.check(f"tightness {fl.value}({n}) {name}", True, "not a twisting here; not applicable")
                    continue
                ok, wit = is_tight(t)
                s.check(f"tightness {fl.value}({n}) {name}", ok == want,
                        {"tight": ok, "expected": want, "witness": wit})
    M = CommutativeMonoid.saturating(5)
    for fl, n in ((F.TEMPERLEY_LIEB, 3), (F.MOTZKIN, 2)):
        for name in ("classical", "zero"):
            t = canonical_twisting(fl, n, ARCHETYPES[name])
            tm = twisted_product(M, t, 1)
            label = f"{fl.value}({n}) {name}"
            try:
                reps = [verify_green_product(tm), verify_idempotent_formula(tm), verify_main_theorem(tm),
                        twisted_simple_dims(tm)]
            except NotTight as e:
                if fl is F.TEMPERLEY_LIEB or name == "classical":
                    s.check(f"twisted-product lemmas {label}", False, f"refused: {e}")
                continue
            for rep in reps:
                s.check(f"{rep['theorem']} {label}", not rep["violations"],
                        {"violations": rep["violations"][:5]})
    r = s.report()
    s.check("under two minutes", r["seconds"] < 120, r["seconds"])
    return s.report()


def suite_nonss_tl(seed: int = 0) -> dict:
    from .nonss import (asymptotic_ratio, fusion_table, simple_dims_tl, tilting_dims, tl_bounds_report,
                        tl_l2_recurrence)
    s = _Suite("nonss-tl")
    s.check("l=3 n=4", simple_dims_tl(4, 3) == TL4_DIMS["classical"], simple_dims_tl(4, 3))
    s.check("l=2 n=4", simple_dims_tl(4, 2) == TL4_DIMS["zero"], simple_dims_tl(4, 2))
    s.check("l=2 closed recurrence n<=14", all(tl_l2_recurrence(n) == simple_dims_tl(n, 2) for n in range(1, 15)))
    for l in (2, 3, 5):
        d = tilting_dims(l, 20)
        rows = fusion_table("TL", l, 20)
        s.check(f"conservation l={l} n<=20",
                all(sum(b * d[k] for k, b in rows[n].items()) == 2 ** n for n in range(21)))
    r = asymptotic_ratio("TL", 512, 2)
    s.check("l=2 envelope n=512", abs(r["ratio"] - 1) <= 0.05, r)
    for l in (3, 5):
        reps = [tl_bounds_report(n, l) for n in range(128, 513)]
        bad = [x for x in reps if not x["bounds_ok"]]
        s.check(f"general-l bracket l={l} 128<=n<=512", not bad,
                {"failures": len(bad), "ratio_range": [min(x["ratio"] for x in reps), max(x["ratio"] for x in reps)],
                 "allowed": [0.5, 1.0]})
    r = s.report()
    s.check("under one minute", r["seconds"] < 60, r["seconds"])
    return s.report()


def suite_nonss_mo(seed: int = 0) -> dict:
    from .nonss import DELTA_TO_L, mo_recurrence, motzkin_scaling_report, simple_dims_mo
    s = _Suite("nonss-mo")
    for l in (2, 3, 5):
        s.check(f"recurrences l={l} n<=12", all(mo_recurrence(n, l) == simple_dims_mo(n, l) for n in range(1, 13)))
    for delta, l in sorted(DELTA_TO_L["Mo"].items()):
        for n in range(1, 4):
            m = build_diagram_monoid(F.MOTZKIN, n, EvaluationMap.from_values(1, delta))
            got = simple_dimensions(m)
            s.check(f"Mo_(1,{delta})({n}) vs l={l}", got == simple_dims_mo(n, l),
                    {"gram": got, "fusion": simple_dims_mo(n, l)})
    rep = motzkin_scaling_report(3, list(range(128, 257, 16)))
    s.check("bracket n^-3/2 3^n, 128<=n<=256 (|drift exponent| <= 0.1)", abs(rep["drift_exponent"]) <= 0.1,
            {"drift_exponent": rep["drift_exponent"], "ratio_ends": [rep["ratio"][0], rep["ratio"][-1]]})
    return s.report()


def suite_partition_predicate(seed: int = 0) -> dict:
    s = _Suite("partition-predicate")
    for (delta, shape), smaller in PARTITION_TABLE.items():
        for n in (10, 12):
            got = []
            for k in range(0, 11):
                lam = PartitionLabel.row(k) if shape == "row" else PartitionLabel.column(k)
                v = partition_cell_is_simple(n, k, lam, delta)
                got.append(v)
            want = [Verdict.EVENTUALLY_NOT_SIMPLE if k in smaller else Verdict.SIMPLE for k in range(11)]
            s.check(f"delta={delta} {shape} n={n}", got == want,
                    [v.value for v in got])
    return s.report()


def suite_concentration(seed: int = 0) -> dict:
    from .walks import exact_distribution, gaussian_profile_check, tail_mass, typical_window_ratio
    s = _Suite("concentration")
    d = exact_distribution(F.TEMPERLEY_LIEB, 4096)
    s.check("normalization", d.total() == 1)
    tm = tail_mass(d, 6)
    s.check("TL tail mass n=4096 C=6", tm < Fraction(1, 10 ** 6), float(tm))
    for fl in PLANAR:
        dd = d if fl is F.TEMPERLEY_LIEB else exact_distribution(fl, 4096)
        rep = gaussian_profile_check(dd, 3.0)
        s.check(f"gaussian slope {fl.value}", abs(rep["slope_ratio"] - 1) <= 0.02, rep)
    w = typical_window_ratio(F.TEMPERLEY_LIEB, 2048, 6)
    s.check("typical window share n=2048 C=6", w >= 1 - Fraction(1, 1000), float(w))
    r = s.report()
    s.check("under two minutes", r["seconds"] < 120, r["seconds"])
    return s.report()


def suite_plancherel(seed: int = 0) -> dict:
    from .walks import mckay_step, plancherel, plancherel_walk
    s = _Suite("plancherel")
    s.check("stationary t=5", mckay_step(plancherel(5)).dist == plancherel(5).dist)
    tv = plancherel_walk(5, 200)
    s.check("TV < 1e-8 by step 200", tv[-1] < Fraction(1, 10 ** 8), float(tv[-1]))
    s.check("TV strictly decreasing", all(a > b for a, b in zip(tv, tv[1:])))
    r = s.report()
    s.check("under 30 seconds", r["seconds"] < 30, r["seconds"])
    return s.report()


def _float_counter(m, i, j) -> Counter:
    return Counter({g: c for g, c in m.floats(i, j)})


def suite_properties(seed: int = 0) -> dict:
    from .nonss import planar_rook_zero_indecomposable
    s = _Suite("properties")
    for fl in (F.TEMPERLEY_LIEB, F.MOTZKIN, F.ROOK):
        for n in range(1, 4):
            m = build_diagram_monoid(fl, n)
            raw = m.raw
            N = m.size
            left = raw[raw, :]          # (ab)c as [a, b, c]
            right = raw[:, raw]         # a(bc) as [a, b, c]
            ok = np.array_equal(left, right)
            kinds = [Counter({g: c for g, c in fl_}) for fl_ in m.float_kinds]
            fid = m.float_ids
            if ok:
                for a in range(N):
                    for b in range(N):
                        ab = int(raw[a, b])
                        base = kinds[fid[a, b]]
                        for c in range(N):
                            if base + kinds[fid[ab, c]] != kinds[fid[b, c]] + kinds[fid[a, int(raw[b, c])]]:
                                ok = False
                                break
                        if not ok:
                            break
                    if not ok:
                        break
            s.check(f"associativity with floats {fl.value}({n})", ok)
    for fl, allowed in GENUS_SETS.items():
        seen = set()
        for n in range(1, 4):
            m = build_diagram_monoid(fl, n)
            used = np.unique(m.float_ids).tolist()
            seen |= {g for k in used for g, _ in m.float_kinds[k]}
        s.check(f"genus set {fl.value}", seen == allowed, sorted(seen))
    for fl in (F.PLANAR_PARTITION, F.PARTITION):
        seen = set()
        for n in range(1, 4):
            m = build_diagram_monoid(fl, n)
            seen |= {g for k in np.unique(m.float_ids).tolist() for g, _ in m.float_kinds[k]}
        s.check(f"genus set {fl.value}", seen <= set(range(0, 4)) and {0, 1} <= seen, sorted(seen))
    rng = np.random.default_rng(seed)
    for fl in ALL_FLAVORS:
        ds = enumerate_diagrams(fl, 3 if fl is not F.PARTITION else 2)
        ok = True
        for _ in range(300):
            x, y = ds[rng.integers(len(ds))], ds[rng.integers(len(ds))]
            p, q = compose(x, y), compose(involute(y), involute(x))
            if involute(p.result) != q.result or sorted(p.floats) != sorted(q.floats):
                ok = False
                break
        s.check(f"involution reverses products {fl.value}", ok)
    for fl, n in ((F.TEMPERLEY_LIEB, 4), (F.MOTZKIN, 3), (F.PLANAR_PARTITION, 2)):
        m = build_diagram_monoid(fl, n)
        g = green(m)
        ok = all(dclass_rank_permutation_invariance(gram(m, g, j), trials=100, seed=seed)
                 for j in range(len(g.j_classes)))
        s.check(f"gram rank permutation invariance {fl.value}({n})", ok)
    bad = []
    for fl in ALL_FLAVORS:
        for n in range(1, 4):
            for name, a in ARCHETYPES.items():
                if not green(build_diagram_monoid(fl, n, a)).d_equals_j:
                    bad.append(f"{fl.value}({n}) {name}")
    s.check("D = J on all built monoids", not bad, bad)
    for n in (2, 3):
        w = planar_rook_zero_indecomposable(n, seed)
        ok = w["commutant_dim"] == 2 and w["local"] and len(w["basis"]) == 2
        if n == 2:
            ok = ok and w["generator_action"] == [[0, 0], [1, 0]]
        s.check(f"planar rook a0=0 witness n={n}", ok,
                {"commutant_dim": w["commutant_dim"], "local": w["local"], "generator_action": w["generator_action"]})
    return s.report()


SUITES: dict[str, tuple[int, Callable[..., dict]]] = {
    "tl4": (1, suite_tl4),
    "enumeration": (2, suite_enumeration),
    "cell-dims": (3, suite_cell_dims),
    "generic-ranks": (4, suite_generic_ranks),
    "twisting": (5, suite_twisting),
    "nonss-tl": (6, suite_nonss_tl),
    "nonss-mo": (7, suite_nonss_mo),
    "partition-predicate": (8, suite_partition_predicate),
    "concentration": (9, suite_concentration),
    "plancherel": (10, suite_plancherel),
    "properties": (11, suite_properties),
}


def run_suite(name: str, seed: int = 0) -> dict:
    crit, fn = SUITES[name]
    rep = fn(seed)
    rep["criterion"] = crit
    return rep
