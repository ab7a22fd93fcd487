"""Finite monoids, Green's relations, Gram matrices and their ranks."""
from __future__ import annotations

import csv
import io
import json
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .diagrams import (
    BudgetExceeded,
    Diagram,
    EvaluationMap,
    Flavor,
    _compose_rgs,
    enumerate_diagrams,
)
from ._kernels import decode_floats, product_table, rgs_keys
from .linalg import rank_mod_p, rank_rational, rank_univariate

__all__ = [
    "FiniteMonoid", "GreenStructure", "GramMatrix", "ParameterAssignment", "Prime",
    "GENERIC", "SYMBOLIC", "build_diagram_monoid", "monoid_from_table", "green", "gram",
    "rank", "simple_dimensions", "apexes", "expected_apexes", "derived_apexes", "repgap",
    "is_well_connected", "truncate", "dclass_rank_permutation_invariance",
    "NontrivialHClass", "NontrivialHWithoutIndicatorMode", "GenericDisagreement",
    "NoNontrivialSimple", "EmptyWindow", "NotAMonoid", "GenusSensitiveWarning",
]


class NontrivialHClass(ValueError):
    pass


class NontrivialHWithoutIndicatorMode(NontrivialHClass):
    pass


class GenericDisagreement(ArithmeticError):
    pass


class NoNontrivialSimple(ValueError):
    pass


class EmptyWindow(ValueError):
    pass


class NotAMonoid(ValueError):
    pass


Monomial = tuple  # sorted (genus, exponent) pairs; () is the scalar 1


@dataclass(eq=False)
class FiniteMonoid:
    """Multiplication table on ids ``0..N-1``.

    For diagram monoids ``raw[i, j]`` is the underlying product diagram
    (ignoring scalars) and ``float_ids[i, j]`` indexes ``float_kinds``,
    the multiset of closed components produced by that product.
    """

    table: np.ndarray
    identity: int
    zero: int | None = None
    labels: list | None = None
    raw: np.ndarray | None = None
    float_ids: np.ndarray | None = None
    float_kinds: list = field(default_factory=lambda: [()])
    flavor: Flavor | None = None
    n: int | None = None
    evaluation: EvaluationMap | None = None

    @property
    def size(self) -> int:
        return int(self.table.shape[0])

    def __len__(self) -> int:
        return self.size

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def index(self, d: Diagram) -> int:
        if not hasattr(self, "_index"):
            self._index = {lab: i for i, lab in enumerate(self.labels or []) if lab is not None}
        return self._index[d]

    def strands(self, i: int) -> int | None:
        if self.labels is None or self.labels[i] is None:
            return None
        return self.labels[i].through_strands()

    def floats(self, i: int, j: int) -> tuple:
        if self.float_ids is None:
            return ()
        return self.float_kinds[int(self.float_ids[i, j])]

    def check_identity(self) -> bool:
        e = self.identity
        ids = np.arange(self.size)
        ok = bool((self.table[e] == ids).all() and (self.table[:, e] == ids).all())
        if self.zero is not None:
            z = self.zero
            ok = ok and bool((self.table[z] == z).all() and (self.table[:, z] == z).all())
        return ok

    def check_associative(self, samples: int | None = None, seed: int = 0) -> bool:
        """Exhaustive for N <= 200 unless ``samples`` is given."""
        t = self.table
        n = self.size
        if samples is None and n <= 200:
            for a in range(n):
                lhs = t[t[a]][:, :]            # (a*b)*c for all b, c
                rhs = t[a][t]                  # a*(b*c)
                if not np.array_equal(lhs, rhs):
                    return False
            return True
        rng = np.random.default_rng(seed)
        k = samples or 20000
        a, b, c = rng.integers(0, n, size=(3, k))
        return bool(np.array_equal(t[t[a, b], c], t[a, t[b, c]]))

    def to_dict(self) -> dict:
        out = {"size": self.size, "table": self.table.ravel().tolist(), "identity": self.identity}
        if self.zero is not None:
            out["zero"] = self.zero
        if self.labels is not None:
            out["labels"] = [None if d is None else d.to_dict() for d in self.labels]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "FiniteMonoid":
        n = data["size"]
        table = np.asarray(data["table"], dtype=np.int32).reshape(n, n)
        labels = data.get("labels")
        if labels is not None:
            labels = [None if d is None else Diagram.from_dict(d) for d in labels]
        ident = data.get("identity")
        m = monoid_from_table(table, identity=ident, zero=data.get("zero"))
        m.labels = labels
        return m

    @classmethod
    def from_json(cls, text: str) -> "FiniteMonoid":
        return cls.from_dict(json.loads(text))

    def save_binary(self, path) -> None:
        np.save(path, self.table.astype(np.int32))


def monoid_from_table(table, identity: int | None = None, zero: int | None = None) -> FiniteMonoid:
    """Wrap a square table, locating identity (and zero) when not given."""
    t = np.asarray(table, dtype=np.int32)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise NotAMonoid("table must be square")
    n = t.shape[0]
    ids = np.arange(n)
    if t.min(initial=0) < 0 or t.max(initial=0) >= n:
        raise NotAMonoid("table entries out of range")
    if identity is None:
        cands = [e for e in range(n) if (t[e] == ids).all() and (t[:, e] == ids).all()]
        if not cands:
            raise NotAMonoid("no identity element")
        identity = cands[0]
    if zero is None:
        cands = [z for z in range(n) if (t[z] == z).all() and (t[:, z] == z).all()]
        zero = cands[0] if cands and n > 1 else None
    m = FiniteMonoid(t, int(identity), None if zero is None else int(zero))
    if not m.check_identity():
        raise NotAMonoid("identity law fails")
    return m


_SMALL = 64  # below this many elements the pure Python path beats loading the kernel


def _float_code(floats: tuple, n: int) -> int:
    return sum(c * (2 * n + 1) ** g for g, c in floats)


def _product_tables_py(n: int, rgss: list[tuple]) -> tuple[np.ndarray, np.ndarray, list]:
    N = len(rgss)
    index = {r: i for i, r in enumerate(rgss)}
    raw = np.empty((N, N), dtype=np.int32)
    fl = [[()] * N for _ in range(N)]
    for a in range(N):
        for b in range(N):
            r, f = _compose_rgs(n, rgss[a], rgss[b])
            raw[a, b] = index[r]
            fl[a][b] = f
    kinds = sorted({f for row in fl for f in row} | {()}, key=lambda f: _float_code(f, n))
    kid = {f: i for i, f in enumerate(kinds)}
    fids = np.array([[kid[f] for f in row] for row in fl], dtype=np.int32).reshape(N, N)
    return raw, fids, kinds


def _product_tables(n: int, rgss: list[tuple]) -> tuple[np.ndarray, np.ndarray, list]:
    N = len(rgss)
    if N <= _SMALL:
        return _product_tables_py(n, rgss)
    R = np.asarray(rgss, dtype=np.int64).reshape(N, 2 * n)
    keys = rgs_keys(R, n)
    order = np.argsort(keys)
    raw = np.empty((N, N), dtype=np.int32)
    codes = np.empty((N, N), dtype=np.int64)
    product_table(n, R, keys[order], order, raw, codes)
    uniq, inv = np.unique(codes, return_inverse=True)
    kinds = [decode_floats(int(c), n) for c in uniq]
    if kinds[0] != ():
        kinds.insert(0, ())
        inv = inv + 1
    return raw, inv.reshape(N, N).astype(np.int32), kinds


def build_diagram_monoid(flavor: Flavor, n: int, a: EvaluationMap | None = None,
                         budget: int | None = None) -> FiniteMonoid:
    """The monoid of ``flavor`` diagrams on ``n`` strands with parameters ``a``.

    A zero is adjoined (as the last id) exactly when some product produces a
    floating component of a genus that ``a`` sends to 0.
    """
    a = EvaluationMap.classical() if a is None else a
    diagrams = enumerate_diagrams(flavor, n, budget)
    N = len(diagrams)
    index = {d.rgs: i for i, d in enumerate(diagrams)}
    raw, fids, kind_list = _product_tables(n, [d.rgs for d in diagrams])
    dead = np.array([a.kills(fl) for fl in kind_list], dtype=bool)
    killed = dead[fids]
    if flavor.max_block is None or flavor.max_block > 2:
        seen = {a(g) for fl in kind_list for g, _ in fl}
        if len(seen) > 1:
            warnings.warn(f"{flavor.value}({n}) with {a.describe()}: genus is not tracked on through "
                          "components, so the table need not be associative", GenusSensitiveWarning)
    labels: list = list(diagrams)
    zero = None
    table = raw
    if killed.any():
        zero = N
        table = np.full((N + 1, N + 1), N, dtype=np.int32)
        table[:N, :N] = np.where(killed, N, raw)
        raw_full = np.full((N + 1, N + 1), -1, dtype=np.int32)
        raw_full[:N, :N] = raw
        f_full = np.zeros((N + 1, N + 1), dtype=np.int32)
        f_full[:N, :N] = fids
        raw, fids = raw_full, f_full
        labels.append(None)
    ident = index[Diagram.identity(n, flavor).rgs]
    return FiniteMonoid(table, ident, zero, labels, raw, fids, kind_list, flavor, n, a)


class GenusSensitiveWarning(UserWarning):
    pass


# ---------------------------------------------------------------- Green


@dataclass(eq=False)
class GreenStructure:
    r_of: np.ndarray
    l_of: np.ndarray
    j_of: np.ndarray
    r_classes: list[list[int]]
    l_classes: list[list[int]]
    j_classes: list[list[int]]
    eggbox: list[dict]  # per J: {"rows": [R ids], "cols": [L ids], "cells": {(r, c): [ids]}}
    j_leq: np.ndarray  # j_leq[a, b]: J_a <= J_b
    d_equals_j: bool

    def j_index(self, x: int) -> int:
        return int(self.j_of[x])

    def h_class(self, x: int) -> list[int]:
        return [y for y in self.j_classes[self.j_of[x]]
                if self.r_of[y] == self.r_of[x] and self.l_of[y] == self.l_of[x]]

    def h_trivial(self, j: int | None = None) -> bool:
        js = range(len(self.j_classes)) if j is None else [j]
        return all(len(ids) == 1 for jj in js for ids in self.eggbox[jj]["cells"].values())

    def minimal_classes(self) -> list[int]:
        k = len(self.j_classes)
        return [a for a in range(k) if not any(self.j_leq[b, a] and b != a for b in range(k))]


def _sccs(t: np.ndarray, transpose: bool) -> np.ndarray:
    n = t.shape[0]
    src = np.repeat(np.arange(n), n)
    dst = (t.T if transpose else t).ravel()
    g = csr_matrix((np.ones(n * n, dtype=np.int8), (src, dst)), shape=(n, n))
    _, lab = connected_components(g, directed=True, connection="strong")
    return lab


def _relabel(lab: np.ndarray) -> tuple[np.ndarray, list[list[int]]]:
    """Order classes by least member."""
    first: dict[int, int] = {}
    for x, c in enumerate(lab.tolist()):
        first.setdefault(c, len(first))
    new = np.array([first[c] for c in lab.tolist()], dtype=np.int64)
    classes: list[list[int]] = [[] for _ in first]
    for x, c in enumerate(new.tolist()):
        classes[c].append(x)
    return new, classes


def _ideal(t: np.ndarray, x: int) -> np.ndarray:
    left = np.unique(t[:, x])
    return np.unique(t[left].ravel())


def green(m: FiniteMonoid) -> GreenStructure:
    t = m.table
    r_of, r_classes = _relabel(_sccs(t, transpose=False))   # a -> a*s
    l_of, l_classes = _relabel(_sccs(t, transpose=True))    # a -> s*a
    # D is the join of R and L.
    parent = list(range(m.size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cls in r_classes + l_classes:
        for y in cls[1:]:
            a, b = find(cls[0]), find(y)
            if a != b:
                parent[a] = b
    j_of, j_classes = _relabel(np.array([find(x) for x in range(m.size)]))
    reps = [c[0] for c in j_classes]
    ideals = [set(_ideal(t, r).tolist()) for r in reps]
    k = len(reps)
    j_leq = np.zeros((k, k), dtype=bool)
    for a in range(k):
        for b in range(k):
            j_leq[a, b] = reps[a] in ideals[b]
    d_equals_j = all(not (j_leq[a, b] and j_leq[b, a]) for a in range(k) for b in range(k) if a != b)
    eggbox = []
    for cls in j_classes:
        rows = sorted({int(r_of[x]) for x in cls}, key=lambda r: _class_key(m, r_classes[r], "top"))
        cols = sorted({int(l_of[x]) for x in cls}, key=lambda c: _class_key(m, l_classes[c], "bottom"))
        rpos = {r: i for i, r in enumerate(rows)}
        cpos = {c: i for i, c in enumerate(cols)}
        cells: dict[tuple[int, int], list[int]] = {}
        for x in cls:
            cells.setdefault((rpos[int(r_of[x])], cpos[int(l_of[x])]), []).append(x)
        eggbox.append({"rows": rows, "cols": cols, "cells": cells})
    return GreenStructure(r_of, l_of, j_of, r_classes, l_classes, j_classes, eggbox, j_leq, d_equals_j)


def _class_key(m: FiniteMonoid, members: list[int], side: str):
    lab = m.labels[members[0]] if m.labels is not None else None
    if lab is None:
        return (1, (), members[0])
    return (0, lab.half(side), members[0])


# ---------------------------------------------------------------- Gram


@dataclass(frozen=True)
class ParameterAssignment:
    """Values of the genus variables ``a_g``; unlisted genera take ``default``."""

    values: dict
    default: Fraction = Fraction(1)

    def __call__(self, g: int) -> Fraction:
        return Fraction(self.values.get(g, self.default))

    @classmethod
    def from_evaluation(cls, a: EvaluationMap, upto: int = 64) -> "ParameterAssignment":
        return cls({g: Fraction(a(g)) for g in range(upto)}, Fraction(a(upto)))

    @classmethod
    def uniform(cls, value) -> "ParameterAssignment":
        return cls({}, Fraction(value))


@dataclass(frozen=True)
class Prime:
    p: int
    at: object = None


GENERIC = "generic"
SYMBOLIC = "symbolic"


@dataclass(eq=False)
class GramMatrix:
    """Entries are ``None`` (zero) or monomials ``((genus, exponent), ...)``."""

    j: int
    entries: list[list]
    indicator: bool = False
    evaluation: EvaluationMap | None = None
    apex: int | None = None

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0]) if self.entries else 0

    def is_zero(self) -> bool:
        return all(e is None for row in self.entries for e in row)

    def genera(self) -> list[int]:
        return sorted({g for row in self.entries for e in row if e for g, _ in e})

    def specialize(self, at=None) -> list[list[Fraction]]:
        if at is None:
            at = self.evaluation
        if at is None:
            at = ParameterAssignment.uniform(1)
        if isinstance(at, EvaluationMap):
            at = ParameterAssignment.from_evaluation(at, upto=max(self.genera(), default=0) + 1)
        out = []
        for row in self.entries:
            r = []
            for e in row:
                if e is None:
                    r.append(Fraction(0))
                else:
                    v = Fraction(1)
                    for g, k in e:
                        v *= at(g) ** k
                    r.append(v)
            out.append(r)
        return out

    def display(self, names: dict[int, str] | None = None) -> list[list[str]]:
        """Human readable entries, e.g. ``a1^2``."""
        out = []
        for row in self.entries:
            r = []
            for e in row:
                if e is None:
                    r.append("0")
                elif not e:
                    r.append("1")
                else:
                    parts = []
                    for g, k in e:
                        name = (names or {}).get(g, f"a{g}")
                        parts.append(name if k == 1 else f"{name}^{k}")
                    r.append("*".join(parts))
            out.append(r)
        return out

    def to_dict(self) -> dict:
        return {"j": self.j, "apex": self.apex, "indicator": self.indicator,
                "entries": [[None if e is None else {str(g): k for g, k in e} for e in row]
                            for row in self.entries]}


def gram(m: FiniteMonoid, g: GreenStructure, j: int, indicator: bool = False) -> GramMatrix:
    box = g.eggbox[j]
    nr, nc = len(box["rows"]), len(box["cols"])
    trivial = g.h_trivial(j)
    if not trivial and not indicator:
        raise NontrivialHWithoutIndicatorMode(f"J-class {j} has nontrivial H-classes")
    entries: list[list] = [[None] * nc for _ in range(nr)]
    for (r, c), ids in box["cells"].items():
        if indicator or m.raw is None:
            if any(m.table[h, h] == h for h in ids):
                entries[r][c] = ()
            continue
        h = ids[0]
        if m.raw[h, h] == h:
            fl = m.floats(h, h)
            entries[r][c] = tuple(fl)
    apex = m.strands(g.j_classes[j][0])
    return GramMatrix(j, entries, indicator or not trivial, m.evaluation, apex)


def _random_point(genera: Iterable[int], rng: np.random.Generator) -> ParameterAssignment:
    hi = 2 ** 31
    vals = {}
    for gg in genera:
        num, den = rng.integers(1, hi, size=2, endpoint=True)
        vals[gg] = Fraction(int(num) * (1 if rng.random() < 0.5 else -1), int(den))
    return ParameterAssignment(vals, Fraction(1))


def rank(gm: GramMatrix, at=None, seed: int = 0) -> int:
    """Rank of ``gm`` after specialization.

    ``at`` may be None (the monoid's own parameters), a ParameterAssignment,
    an EvaluationMap, ``GENERIC`` (two random rational points that must
    agree), ``SYMBOLIC`` (exact over Q(x) for univariate matrices) or a
    ``Prime``.  Random points fail with probability at most
    ``deg / 2**31`` each by Schwartz-Zippel.
    """
    if gm.is_zero():
        return 0
    if isinstance(at, Prime):
        spec = gm.specialize(at.at)
        if any(f.denominator % at.p == 0 for row in spec for f in row):
            raise ZeroDivisionError("parameter not defined modulo p")
        ints = [[f.numerator * pow(f.denominator, -1, at.p) for f in row] for row in spec]
        return rank_mod_p(ints, at.p)
    if at == SYMBOLIC:
        gens = gm.genera()
        if len(gens) > 1:
            raise ValueError("symbolic rank supports a single genus variable")
        polys = [[{} if e is None else {(e[0][1] if e else 0): 1} for e in row] for row in gm.entries]
        return rank_univariate(polys)
    if at == GENERIC:
        rng = np.random.default_rng([seed, gm.j])
        gens = gm.genera()
        for _ in range(3):
            r1 = rank_rational(gm.specialize(_random_point(gens, rng)))
            r2 = rank_rational(gm.specialize(_random_point(gens, rng)))
            if r1 == r2:
                return r1
        raise GenericDisagreement("random evaluations disagree; symbolic rank needed")
    return rank_rational(gm.specialize(at))


def _labelled(m: FiniteMonoid, g: GreenStructure, j: int):
    k = m.strands(g.j_classes[j][0])
    return j if k is None else k


def simple_dimensions(m: FiniteMonoid, at=None, g: GreenStructure | None = None,
                      seed: int = 0, by: str = "apex") -> dict:
    """Apex -> dimension of the simple module, for H-trivial monoids.

    Keys are through-strand counts for diagram monoids (J-class indices
    otherwise, or with ``by="j"``).  The adjoined zero is not an apex of the
    contracted algebra and is left out.
    """
    g = green(m) if g is None else g
    if not g.h_trivial():
        raise NontrivialHClass("H-classes are nontrivial; use the closed formulas in diagmon.dims")
    out = {}
    for j, cls in enumerate(g.j_classes):
        if m.zero is not None and cls == [m.zero]:
            continue
        r = rank(gram(m, g, j), at, seed)
        if r:
            key = j if by == "j" else _labelled(m, g, j)
            if key in out:
                raise ValueError(f"two apexes share the key {key}; use by='j'")
            out[key] = r
    return out


def apexes(m: FiniteMonoid, at=None, g: GreenStructure | None = None) -> set:
    """Through-strand counts of J-classes with nonzero Gram matrix.

    Nontrivial H-classes fall back to indicator mode.
    """
    g = green(m) if g is None else g
    out = set()
    for j, cls in enumerate(g.j_classes):
        if m.zero is not None and cls == [m.zero]:
            continue
        gm = gram(m, g, j, indicator=not g.h_trivial(j))
        if rank(gm, at) if not gm.indicator else not gm.is_zero():
            out.add(_labelled(m, g, j))
    return out


def expected_apexes(flavor: Flavor, n: int, a: EvaluationMap) -> set[int]:
    full = set(range(n + 1))
    F = Flavor
    if flavor in (F.PARTITION, F.PLANAR_PARTITION, F.MOTZKIN, F.ROOK_BRAUER):
        if a(0):
            return full
        if flavor in (F.MOTZKIN, F.ROOK_BRAUER):
            some = bool(a(1))
        else:
            some = any(a(r) for r in range(1, n + 1))
        return full - {n - 1} if some else full - {0, n - 1}
    if flavor in (F.TEMPERLEY_LIEB, F.BRAUER):
        out = set(range(n % 2, n + 1, 2))
        return out if a(1) else out - {0}
    if flavor in (F.ROOK, F.PLANAR_ROOK):
        return full if a(0) else {n}
    if flavor is F.SYMMETRIC:
        return {n}
    raise ValueError(flavor)


def derived_apexes(flavor: Flavor, n: int, a: EvaluationMap) -> set[int]:
    """Apex sets as they come out of the tables, where they differ from above.

    With ``a0 = 0``: for (planar) partitions ``n - 1`` stays an apex and only
    the empty cell can be lost; for Motzkin / rook Brauer a middle singleton
    either closes a genus 0 component or cuts a strand, so the apexes follow
    the Temperley-Lieb / Brauer parity pattern.
    """
    F = Flavor
    full = set(range(n + 1))
    if flavor in (F.PARTITION, F.PLANAR_PARTITION):
        if a(0) or any(a(r) for r in range(1, n)):
            return full
        return full - {0}
    if flavor in (F.MOTZKIN, F.ROOK_BRAUER):
        if a(0):
            return full
        out = set(range(n % 2, n + 1, 2))
        return out if a(1) else out - {0}
    return expected_apexes(flavor, n, a)


# ---------------------------------------------------------------- RepGap


def _all_scalars_one(m: FiniteMonoid) -> bool:
    if m.zero is not None:
        return False
    if m.float_ids is None or m.evaluation is None:
        return True
    used = np.unique(m.float_ids)
    return all(m.evaluation(gg) == 1 for k in used.tolist() for gg, _ in m.float_kinds[k])


def repgap(m: FiniteMonoid, at=None, g: GreenStructure | None = None, seed: int = 0) -> int:
    """Smallest simple dimension after removing the two trivial modules.

    Assumes the unit group has vanishing first cohomology; well-connectedness
    is the caller's to check with :func:`is_well_connected`.
    """
    g = green(m) if g is None else g
    dims = simple_dimensions(m, at, g, seed, by="j")
    drop = set()
    top = g.j_index(m.identity)
    if dims.get(top) == 1:
        drop.add(top)          # units act by 1, the rest by 0
    uniform_one = _all_scalars_one(m) if at is None else (
        _all_scalars_one(m) and at != GENERIC)
    if uniform_one:
        mins = [j for j in g.minimal_classes() if not (m.zero is not None and g.j_classes[j] == [m.zero])]
        if len(mins) == 1 and dims.get(mins[0]) == 1:
            drop.add(mins[0])  # everything acts by 1
    rest = [d for j, d in dims.items() if j not in drop]
    if not rest:
        raise NoNontrivialSimple("only trivial simple modules")
    return min(rest)


@dataclass(frozen=True)
class Connectedness:
    null_connected: bool
    right_connected: bool
    left_connected: bool
    is_group: bool

    @property
    def well_connected(self) -> bool:
        return self.is_group or (self.null_connected and self.right_connected and self.left_connected)

    def to_dict(self) -> dict:
        return {"nullConnected": self.null_connected, "rightConnected": self.right_connected,
                "leftConnected": self.left_connected, "isGroup": self.is_group,
                "wellConnected": self.well_connected}


def _units(m: FiniteMonoid) -> np.ndarray:
    e = m.identity
    t = m.table
    has_right = (t == e).any(axis=1)
    has_left = (t == e).any(axis=0)
    return has_right & has_left


def is_well_connected(m: FiniteMonoid) -> Connectedness:
    unit = _units(m)
    nonunits = np.flatnonzero(~unit)
    if len(nonunits) == 0:
        return Connectedness(True, True, True, True)
    sub = m.table[np.ix_(nonunits, nonunits)]
    null = set(nonunits.tolist()) <= set(np.unique(sub).tolist())

    def single_class(left: bool) -> bool:
        pos = {x: i for i, x in enumerate(nonunits.tolist())}
        parent = list(range(len(nonunits)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, a in enumerate(nonunits.tolist()):
            prods = sub[:, i] if left else sub[i]
            for p in np.unique(prods).tolist():
                x, y = find(i), find(pos[p])
                if x != y:
                    parent[x] = y
        return len({find(i) for i in range(len(nonunits))}) == 1

    return Connectedness(bool(null), single_class(False), single_class(True), False)


# ---------------------------------------------------------------- truncation


def truncate(m: FiniteMonoid, g: GreenStructure | None, lo: int, hi: int) -> FiniteMonoid:
    """Rees quotient on the cells with ``lo <= k <= hi`` through strands.

    A zero is always adjoined; the identity is adjoined when ``hi < n``.
    """
    if m.labels is None or m.n is None:
        raise ValueError("truncation needs a diagram monoid")
    keep = [i for i, d in enumerate(m.labels) if d is not None and lo <= d.through_strands() <= hi]
    if not keep:
        raise EmptyWindow(f"no diagrams with {lo} <= k <= {hi}")
    add_unit = hi < m.n
    ids = keep + ([m.identity] if add_unit else [])
    N = len(ids) + 1
    z = N - 1
    pos = np.full(m.size, z, dtype=np.int32)
    pos[keep] = np.arange(len(keep))
    sub = pos[m.table[np.ix_(ids, ids)]]
    table = np.full((N, N), z, dtype=np.int32)
    table[: N - 1, : N - 1] = sub
    raw = np.full((N, N), -1, dtype=np.int32)
    fids = np.zeros((N, N), dtype=np.int32)
    if m.raw is not None:
        r = m.raw[np.ix_(ids, ids)]
        rawpos = np.where(r >= 0, pos[np.maximum(r, 0)], z)
        raw[: N - 1, : N - 1] = np.where(rawpos == z, -1, rawpos)
        fids[: N - 1, : N - 1] = m.float_ids[np.ix_(ids, ids)]
    labels = [m.labels[i] for i in keep] + ([None] if add_unit else []) + [None]
    if add_unit:
        u = len(keep)
        ar = np.arange(N, dtype=np.int32)
        table[u, :] = ar
        table[:, u] = ar
        raw[u, :] = ar
        raw[:, u] = ar
        raw[u, z] = raw[z, u] = -1
        fids[u, :] = 0
        fids[:, u] = 0
        ident = u
    else:
        ident = int(pos[m.identity])
    table[z, :] = z
    table[:, z] = z
    out = FiniteMonoid(table, ident, z, labels, raw, fids, m.float_kinds, m.flavor, m.n, m.evaluation)
    out.window = (lo, hi)
    return out


# ---------------------------------------------------------------- utilities


def dclass_rank_permutation_invariance(gm: GramMatrix, at=None, trials: int = 100, seed: int = 0) -> bool:
    base = gm.specialize(at)
    r0 = rank_rational(base)
    rng = np.random.default_rng(seed)
    nr, nc = gm.shape
    for _ in range(trials):
        rp, cp = rng.permutation(nr), rng.permutation(nc)
        if rank_rational([[base[i][j] for j in cp] for i in rp]) != r0:
            return False
    return True


def eggbox_report(m: FiniteMonoid, g: GreenStructure) -> list[dict]:
    out = []
    for j, box in enumerate(g.eggbox):
        out.append({
            "j": j,
            "apex": _labelled(m, g, j) if m.zero is None or g.j_classes[j] != [m.zero] else "zero",
            "size": len(g.j_classes[j]),
            "rows": len(box["rows"]),
            "cols": len(box["cols"]),
            "h_size": len(next(iter(box["cells"].values()))),
            "below": [b for b in range(len(g.j_classes)) if g.j_leq[b, j] and b != j],
        })
    return out


def rank_rows_csv(rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=["flavor", "n", "params", "apex", "rank"], lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()
