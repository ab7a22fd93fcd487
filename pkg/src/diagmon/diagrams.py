"""Flavored diagrams: set partitions of 2n boundary points.

Points are stored internally as integers: bottom point ``Bi`` is ``i - 1`` and
top point ``Ti`` is ``n + i - 1``.  A diagram keeps its partition as a
restricted growth string ``rgs`` (block index per point, first occurrences in
increasing order), which doubles as the canonical form.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class DiagramError(ValueError):
    pass


class MismatchedStrands(DiagramError):
    pass


class MismatchedFlavor(DiagramError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class Flavor(enum.Enum):
    PARTITION = "partition"
    PLANAR_PARTITION = "planar-partition"
    BRAUER = "brauer"
    TEMPERLEY_LIEB = "tl"
    ROOK_BRAUER = "rook-brauer"
    MOTZKIN = "motzkin"
    ROOK = "rook"
    PLANAR_ROOK = "planar-rook"
    SYMMETRIC = "symmetric"

    @property
    def planar(self) -> bool:
        return self in _PLANAR

    @property
    def max_block(self) -> int | None:
        if self in (Flavor.PARTITION, Flavor.PLANAR_PARTITION):
            return None
        return 2

    @property
    def min_block(self) -> int:
        if self in (Flavor.BRAUER, Flavor.TEMPERLEY_LIEB, Flavor.SYMMETRIC):
            return 2
        return 1

    @property
    def symmetric_counterpart(self) -> "Flavor":
        return _UNPLANAR.get(self, self)

    @classmethod
    def parse(cls, text: str) -> "Flavor":
        key = text.strip().lower().replace("_", "-")
        if key in _ALIASES:
            return _ALIASES[key]
        for f in cls:
            if f.value == key or f.name.lower().replace("_", "-") == key:
                return f
        raise ValueError(f"unknown flavor {text!r}")


_PLANAR = {Flavor.PLANAR_PARTITION, Flavor.TEMPERLEY_LIEB, Flavor.MOTZKIN, Flavor.PLANAR_ROOK}
_UNPLANAR = {
    Flavor.PLANAR_PARTITION: Flavor.PARTITION,
    Flavor.TEMPERLEY_LIEB: Flavor.BRAUER,
    Flavor.MOTZKIN: Flavor.ROOK_BRAUER,
    Flavor.PLANAR_ROOK: Flavor.ROOK,
}
_ALIASES = {
    "pa": Flavor.PARTITION,
    "ppa": Flavor.PLANAR_PARTITION,
    "br": Flavor.BRAUER,
    "temperley-lieb": Flavor.TEMPERLEY_LIEB,
    "robr": Flavor.ROOK_BRAUER,
    "mo": Flavor.MOTZKIN,
    "ro": Flavor.ROOK,
    "pro": Flavor.PLANAR_ROOK,
    "sym": Flavor.SYMMETRIC,
    "s": Flavor.SYMMETRIC,
}

# default enumeration guards
DEFAULT_BUDGET = {Flavor.PARTITION: 6, Flavor.PLANAR_PARTITION: 6}
DEFAULT_BUDGET_OTHER = 8


def _rgs(labels: Sequence[int]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    out = []
    for b in labels:
        if b not in seen:
            seen[b] = len(seen)
        out.append(seen[b])
    return tuple(out)


def label_name(p: int, n: int) -> str:
    return f"B{p + 1}" if p < n else f"T{p - n + 1}"


def parse_label(s: str, n: int) -> int:
    side, idx = s[0].upper(), int(s[1:])
    if side not in "BT" or not 1 <= idx <= n:
        raise DiagramError(f"bad label {s!r} for n={n}")
    return idx - 1 if side == "B" else n + idx - 1


@dataclass(frozen=True)
class Diagram:
    n: int
    rgs: tuple[int, ...]
    flavor: Flavor

    def __post_init__(self):
        if len(self.rgs) != 2 * self.n:
            raise DiagramError("partition must cover all 2n points")
        if _rgs(self.rgs) != self.rgs:
            raise DiagramError("rgs is not in canonical form")

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable], flavor: Flavor) -> "Diagram":
        lab = [-1] * (2 * n)
        for b, block in enumerate(blocks):
            block = list(block)
            if not block:
                raise DiagramError("empty block")
            for p in block:
                if isinstance(p, str):
                    p = parse_label(p, n)
                if lab[p] != -1:
                    raise DiagramError(f"point {label_name(p, n)} in two blocks")
                lab[p] = b
        if -1 in lab:
            raise DiagramError("blocks do not cover all 2n points")
        return cls(n, _rgs(lab), flavor)

    @classmethod
    def identity(cls, n: int, flavor: Flavor) -> "Diagram":
        return cls(n, tuple(range(n)) * 2, flavor)

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(max(self.rgs, default=-1) + 1)]
        for p, b in enumerate(self.rgs):
            out[b].append(p)
        return tuple(tuple(b) for b in out)

    def labeled_blocks(self) -> list[list[str]]:
        return [[label_name(p, self.n) for p in b] for b in self.blocks]

    def through_strands(self) -> int:
        bottom = set(self.rgs[: self.n])
        return len(bottom.intersection(self.rgs[self.n :]))

    def half(self, side: str) -> tuple:
        """Half-diagram key of the top or bottom row.

        The key records the partition of that row's points (as an RGS) and
        which of its blocks reach the other side.
        """
        n = self.n
        pts = range(n, 2 * n) if side == "top" else range(n)
        other = set(self.rgs[:n] if side == "top" else self.rgs[n:])
        row = [self.rgs[p] for p in pts]
        return tuple(zip(_rgs(row), (b in other for b in row)))

    def __repr__(self):
        return f"Diagram({self.flavor.value}, n={self.n}, {self.labeled_blocks()})"

    def to_dict(self) -> dict:
        return {"n": self.n, "flavor": self.flavor.value, "blocks": self.labeled_blocks()}

    @classmethod
    def from_dict(cls, data: dict) -> "Diagram":
        return cls.from_blocks(data["n"], data["blocks"], Flavor.parse(data["flavor"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Diagram":
        return cls.from_dict(json.loads(text))


def _position(p: int, n: int) -> int:
    # cyclic order B1..Bn, Tn..T1
    return p if p < n else 3 * n - 1 - p


def is_planar(d: Diagram) -> bool:
    """No two blocks interleave along the boundary of the rectangle."""
    n = d.n
    order = [0] * (2 * n)
    for p, b in enumerate(d.rgs):
        order[_position(p, n)] = b
    last = {b: i for i, b in enumerate(order)}
    stack: list[int] = []
    seen = set()
    for i, b in enumerate(order):
        if b in seen:
            if stack[-1] != b:
                return False
        else:
            seen.add(b)
            stack.append(b)
        if last[b] == i:
            stack.pop()
    return True


def validate_flavor(d: Diagram, flavor: Flavor | None = None) -> bool:
    flavor = d.flavor if flavor is None else flavor
    n = d.n
    for block in d.blocks:
        size = len(block)
        if size < flavor.min_block:
            return False
        if flavor.max_block is not None and size > flavor.max_block:
            return False
        bottoms = sum(1 for p in block if p < n)
        if flavor in (Flavor.ROOK, Flavor.PLANAR_ROOK) and size == 2 and bottoms != 1:
            return False
        if flavor is Flavor.SYMMETRIC and bottoms != 1:
            return False
    if flavor.planar and not is_planar(d):
        return False
    return True


@dataclass(frozen=True)
class ProductOutcome:
    result: Diagram
    floats: tuple[tuple[int, int], ...]  # sorted (genus, multiplicity) pairs

    @property
    def genus_counts(self) -> dict[int, int]:
        return dict(self.floats)


def _compose_rgs(n: int, top: tuple, bottom: tuple) -> tuple[tuple, tuple]:
    """Stack ``top`` over ``bottom``; return (result rgs, floats)."""
    nb = max(bottom) + 1 if bottom else 0
    nt = max(top) + 1 if top else 0
    parent = list(range(nb + nt))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        a, b = find(bottom[n + i]), find(nb + top[i])
        if a != b:
            parent[a] = b
    roots = [find(x) for x in range(nb + nt)]
    out = [roots[bottom[i]] for i in range(n)] + [roots[nb + top[n + i]] for i in range(n)]
    boundary = set(out)
    if len(boundary) == len(set(roots)):
        return _rgs(out), ()
    blocks = Counter(r for r in roots if r not in boundary)
    middle = Counter(roots[bottom[n + i]] for i in range(n))
    genera = Counter(middle[r] - b + 1 for r, b in blocks.items())
    return _rgs(out), tuple(sorted(genera.items()))


def compose(top: Diagram, bottom: Diagram) -> ProductOutcome:
    """Stack ``top`` on ``bottom`` (bottom's top row glued to top's bottom row).

    Each floating component is reported by its genus ``E - B + 1`` where ``B``
    counts the blocks it is made of and ``E`` the middle points it contains.
    """
    if top.n != bottom.n:
        raise MismatchedStrands(f"{top.n} != {bottom.n}")
    if top.flavor is not bottom.flavor:
        raise MismatchedFlavor(f"{top.flavor.value} != {bottom.flavor.value}")
    rgs, floats = _compose_rgs(top.n, top.rgs, bottom.rgs)
    result = Diagram(top.n, rgs, top.flavor)
    if __debug__ and not validate_flavor(result):
        raise AssertionError("composition left the flavor")
    return ProductOutcome(result, floats)


def tensor(d1: Diagram, d2: Diagram) -> Diagram:
    if d1.flavor is not d2.flavor:
        raise MismatchedFlavor(f"{d1.flavor.value} != {d2.flavor.value}")
    n1, n2 = d1.n, d2.n
    off = max(d1.rgs, default=-1) + 1
    lab = list(d1.rgs[:n1]) + [b + off for b in d2.rgs[:n2]]
    lab += list(d1.rgs[n1:]) + [b + off for b in d2.rgs[n2:]]
    return Diagram(n1 + n2, _rgs(lab), d1.flavor)


def involute(d: Diagram) -> Diagram:
    n = d.n
    return Diagram(n, _rgs(d.rgs[n:] + d.rgs[:n]), d.flavor)


def through_strands(d: Diagram) -> int:
    return d.through_strands()


def _set_partitions(m: int, max_block: int | None, min_block: int = 1) -> Iterator[list[int]]:
    lab = [0] * m
    sizes: list[int] = []
    short = [0]  # blocks still below min_block

    def rec(p):
        if short[0] > m - p:
            return
        if p == m:
            yield lab
            return
        for b in range(len(sizes)):
            if max_block is None or sizes[b] < max_block:
                lab[p] = b
                sizes[b] += 1
                if sizes[b] == min_block:
                    short[0] -= 1
                yield from rec(p + 1)
                if sizes[b] == min_block:
                    short[0] += 1
                sizes[b] -= 1
        lab[p] = len(sizes)
        sizes.append(1)
        if min_block > 1:
            short[0] += 1
        yield from rec(p + 1)
        if min_block > 1:
            short[0] -= 1
        sizes.pop()

    yield from rec(0)


def enumerate_diagrams(flavor: Flavor, n: int, budget: int | None = None) -> list[Diagram]:
    """All diagrams of ``flavor`` on ``n`` strands, in canonical (RGS) order.

    Set partitions of the 2n points are generated with the flavor's block-size
    cap applied during generation; the remaining constraints are filtered.
    """
    limit = budget if budget is not None else DEFAULT_BUDGET.get(flavor, DEFAULT_BUDGET_OTHER)
    if n > limit:
        raise BudgetExceeded(f"{flavor.value} with n={n} exceeds budget n<={limit}")
    out = []
    for lab in _set_partitions(2 * n, flavor.max_block, flavor.min_block):
        d = Diagram(n, tuple(lab), flavor)
        if validate_flavor(d):
            out.append(d)
    return out


@dataclass(frozen=True)
class EvaluationMap:
    """Eventually periodic {0,1}-valued evaluation of closed surfaces by genus."""

    prefix: tuple[int, ...]
    period: int = 1

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")
        if len(self.prefix) < self.period:
            raise ValueError("prefix must cover at least one period")
        if any(v not in (0, 1) for v in self.prefix):
            raise ValueError("monoid parameters take values in {0, 1}")

    @classmethod
    def classical(cls) -> "EvaluationMap":
        return cls((1,), 1)

    @classmethod
    def zero(cls) -> "EvaluationMap":
        return cls((0,), 1)

    @classmethod
    def from_values(cls, *values: int) -> "EvaluationMap":
        """``a0, a1, ..., a_m`` with the last value repeated forever."""
        return cls(tuple(values), 1)

    def __call__(self, g: int) -> int:
        m = len(self.prefix)
        if g < m:
            return self.prefix[g]
        return self.prefix[m - self.period + (g - m) % self.period]

    def kills(self, floats: Iterable[tuple[int, int]]) -> bool:
        return any(self(g) == 0 for g, _ in floats)

    @property
    def is_classical(self) -> bool:
        return all(v == 1 for v in self.prefix)

    def describe(self) -> str:
        return f"prefix={','.join(map(str, self.prefix))};period={self.period}"


ZERO = None  # the distinguished zero returned by evaluate


def evaluate(o: ProductOutcome, a: EvaluationMap) -> Diagram | None:
    """The product's diagram, or ``None`` (the adjoined zero) if a float dies."""
    return None if a.kills(o.floats) else o.result


def floats_to_json(floats: Iterable[tuple[int, int]]) -> dict[str, int]:
    return {str(g): c for g, c in floats}
