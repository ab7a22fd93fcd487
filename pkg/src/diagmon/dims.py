"""Closed-form counts: monoid orders, cell dimensions, partition-cell simplicity."""
from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator

from .diagrams import Flavor

__all__ = [
    "PartitionLabel", "partitions", "stirling2", "binomial", "double_factorial", "catalan",
    "motzkin_number", "bell", "telephone", "syt_count", "cell_dim", "merge_diagram_count",
    "monoid_order", "cell_dim_row", "b_semisimple", "sum_of_squares", "admissible_k", "labels_for", "phi_delta", "Verdict",
    "partition_cell_is_simple", "InadmissibleLabel", "dim_table", "dim_table_csv",
]


class InadmissibleLabel(ValueError):
    pass


binomial = comb


@lru_cache(maxsize=None)
def stirling2(n: int, b: int) -> int:
    if n == b:
        return 1
    if b <= 0 or b > n:
        return 0
    return b * stirling2(n - 1, b) + stirling2(n - 1, b - 1)


def double_factorial(m: int) -> int:
    """m!! with (-1)!! = 0!! = 1."""
    if m < -1:
        raise ValueError("double factorial needs m >= -1")
    return prod(range(m, 0, -2)) if m > 0 else 1


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def motzkin_number(n: int) -> int:
    if n < 2:
        return 1
    return ((2 * n + 1) * motzkin_number(n - 1) + (3 * n - 3) * motzkin_number(n - 2)) // (n + 2)


def bell(n: int) -> int:
    return sum(stirling2(n, b) for b in range(n + 1))


@lru_cache(maxsize=None)
def telephone(n: int) -> int:
    """Number of involutions of an n-set."""
    if n < 2:
        return 1
    return telephone(n - 1) + (n - 1) * telephone(n - 2)


@dataclass(frozen=True, order=True)
class PartitionLabel:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        p = tuple(int(x) for x in self.parts if x)
        if any(x < 0 for x in p) or list(p) != sorted(p, reverse=True):
            raise ValueError(f"not a partition: {self.parts}")
        object.__setattr__(self, "parts", p)

    @classmethod
    def row(cls, k: int) -> "PartitionLabel":
        return cls((k,) if k else ())

    @classmethod
    def column(cls, k: int) -> "PartitionLabel":
        return cls((1,) * k)

    @classmethod
    def parse(cls, text: str) -> "PartitionLabel":
        text = text.strip().strip("()[]")
        return cls(tuple(int(x) for x in text.replace(";", ",").split(",") if x.strip()))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "PartitionLabel":
        if not self.parts:
            return self
        return PartitionLabel(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def hooks(self) -> list[int]:
        conj = self.conjugate().parts
        return [self.parts[i] - j + conj[j] - i - 1
                for i in range(len(self.parts)) for j in range(self.parts[i])]

    def contains(self, other: "PartitionLabel") -> bool:
        return len(other) <= len(self) and all(a >= b for a, b in zip(self.parts, other.parts))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(k: int, max_part: int | None = None) -> Iterator[PartitionLabel]:
    """Partitions of k in reverse lexicographic order."""
    def rec(rem, cap):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in rec(rem - first, first):
                yield (first,) + rest
    for p in rec(k, k if max_part is None else max_part):
        yield PartitionLabel(p)


def syt_count(lam: PartitionLabel) -> int:
    """Hook length formula."""
    return factorial(lam.size) // prod(lam.hooks())


def _ballot(k: int, t: int) -> int:
    # (k+1)/(k+t+1) * C(k+2t, t)
    return comb(k + 2 * t, t) - (comb(k + 2 * t, t - 1) if t else 0)


def _tl(n: int, k: int) -> int:
    c = (n - k) // 2
    return comb(n, c) - (comb(n, c - 1) if c else 0)


def _half_count(flavor: Flavor, n: int, k: int) -> int:
    F = Flavor
    if flavor is F.TEMPERLEY_LIEB:
        return _tl(n, k)
    if flavor is F.MOTZKIN:
        return sum(comb(n, k + 2 * t) * _ballot(k, t) for t in range(n + 1))
    if flavor is F.PLANAR_PARTITION:
        return _tl(2 * n, 2 * k)
    if flavor is F.PLANAR_ROOK:
        return comb(n, k)
    if flavor is F.PARTITION:
        return sum(stirling2(n, t) * comb(t, k) for t in range(n + 1))
    if flavor is F.ROOK_BRAUER:
        return sum(comb(n, k) * comb(n - k, 2 * t) * double_factorial(2 * t - 1) for t in range(n + 1))
    if flavor is F.BRAUER:
        return comb(n, k) * double_factorial(n - k - 1)
    if flavor is F.ROOK:
        return comb(n, k)
    if flavor is F.SYMMETRIC:
        return 1
    raise ValueError(flavor)


def admissible_k(flavor: Flavor, n: int) -> list[int]:
    if flavor in (Flavor.TEMPERLEY_LIEB, Flavor.BRAUER):
        return list(range(n % 2, n + 1, 2))
    if flavor is Flavor.SYMMETRIC:
        return [n]
    return list(range(n + 1))


def cell_dim(flavor: Flavor, n: int, k: int, lam: PartitionLabel | None = None, ell: int = 1) -> int:
    """Dimension of the cell module with k through strands (and label lam)."""
    if ell != 1:
        raise InadmissibleLabel("cell dimensions are tabulated for ell = 1 only")
    if k not in admissible_k(flavor, n):
        raise InadmissibleLabel(f"k={k} is not a cell of {flavor.value}({n})")
    if flavor.planar:
        if lam is not None and lam.size:
            raise InadmissibleLabel("planar cells carry no partition label")
        return _half_count(flavor, n, k)
    lam = PartitionLabel.row(k) if lam is None else lam
    if lam.size != k:
        raise InadmissibleLabel(f"{lam} is not a partition of {k}")
    return _half_count(flavor, n, k) * syt_count(lam)


def _binomial_row(n: int) -> list[int]:
    row = [1]
    for j in range(n):
        row.append(row[-1] * (n - j) // (j + 1))
    return row


def _tl_row(n: int) -> dict[int, int]:
    b = _binomial_row(n)
    return {k: b[(n - k) // 2] - (b[(n - k) // 2 - 1] if k < n else 0) for k in range(n % 2, n + 1, 2)}


def cell_dim_row(flavor: Flavor, n: int) -> dict[int, int]:
    """All unlabeled cell dimensions of a planar flavor at once (fast for large n)."""
    if flavor is Flavor.TEMPERLEY_LIEB:
        return _tl_row(n)
    if flavor is Flavor.PLANAR_PARTITION:
        return {k // 2: v for k, v in _tl_row(2 * n).items()}
    if flavor is Flavor.PLANAR_ROOK:
        return dict(enumerate(_binomial_row(n)))
    if flavor is Flavor.MOTZKIN:
        # paths with steps up/flat/down that never go below 0
        row = [1]
        for m in range(1, n + 1):
            prev = row + [0, 0]
            row = [(prev[k - 1] if k else 0) + prev[k] + prev[k + 1] for k in range(m + 1)]
        return dict(enumerate(row))
    raise ValueError(f"no fast row for {flavor.value}")


def labels_for(flavor: Flavor, n: int) -> list[tuple[int, PartitionLabel | None]]:
    out = []
    for k in admissible_k(flavor, n):
        if flavor.planar:
            out.append((k, None))
        else:
            out.extend((k, lam) for lam in partitions(k))
    return out


def merge_diagram_count(n: int, k: int, ell: int = 1) -> int:
    return sum(
        ell ** (k - 2 * i)
        * sum(stirling2(n, b) * comb(b, k) * comb(k, 2 * i) * double_factorial(2 * i - 1)
              for b in range(k, n + 1))
        for i in range(k // 2 + 1)
    )


def monoid_order(flavor: Flavor, n: int) -> int:
    F = Flavor
    return {
        F.TEMPERLEY_LIEB: lambda: catalan(n),
        F.PLANAR_PARTITION: lambda: catalan(2 * n),
        F.BRAUER: lambda: double_factorial(2 * n - 1),
        F.PARTITION: lambda: bell(2 * n),
        F.MOTZKIN: lambda: motzkin_number(2 * n),
        F.ROOK_BRAUER: lambda: telephone(2 * n),
        F.ROOK: lambda: sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1)),
        F.PLANAR_ROOK: lambda: comb(2 * n, n),
        F.SYMMETRIC: lambda: factorial(n),
    }[flavor]()


def b_semisimple(flavor: Flavor, n: int) -> int:
    return sum(cell_dim(flavor, n, k, lam) for k, lam in labels_for(flavor, n))


def sum_of_squares(flavor: Flavor, n: int) -> int:
    return sum(cell_dim(flavor, n, k, lam) ** 2 for k, lam in labels_for(flavor, n))


# ------------------------------------------------------------ partition cells


def phi_delta(n: int, k: int, lam: PartitionLabel, delta: int, components: int) -> list[int]:
    head = delta - k - (n % 2)
    out = [head]
    for j in range(1, components):
        out.append((lam.parts[j - 1] if j <= len(lam) else 0) - j)
    return out


class Verdict(enum.Enum):
    SIMPLE = "Simple"
    EVENTUALLY_NOT_SIMPLE = "EventuallyNotSimple"
    UNKNOWN = "Unknown"


def partition_cell_is_simple(n: int, k: int, lam: PartitionLabel, delta: int) -> Verdict:
    """Simplicity of the partition cell module from the head/tail coincidence test.

    ``EVENTUALLY_NOT_SIMPLE`` means strictly smaller simple head for all
    large enough n, with a threshold that is not computed here.
    """
    if lam.size != k or k > n or k < 0:
        return Verdict.UNKNOWN
    head = phi_delta(n, k, lam, delta, 1)[0]
    if any(lam.parts[j - 1] - j == head for j in range(1, len(lam) + 1)):
        return Verdict.SIMPLE
    # tail entries are -j for every j > len(lam)
    if head <= -(len(lam) + 1):
        return Verdict.SIMPLE
    return Verdict.EVENTUALLY_NOT_SIMPLE


# ------------------------------------------------------------ tables


def dim_table(flavor: Flavor, n: int) -> list[dict]:
    return [{"flavor": flavor.value, "n": n, "k": k, "lambda": "" if lam is None else str(lam),
             "dim": cell_dim(flavor, n, k, lam)} for k, lam in labels_for(flavor, n)]


def dim_table_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=["flavor", "n", "k", "lambda", "dim"], lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()
