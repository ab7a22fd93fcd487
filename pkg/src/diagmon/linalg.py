"""Exact rank routines: rationals, prime fields, univariate rational functions."""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from sympy import QQ, Poly, symbols
from sympy.polys.matrices import DomainMatrix


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        den = lcm(*(f.denominator for f in fr)) if fr else 1
        out.append([int(f * den) for f in fr])
    return out


def rank_rational(rows: Sequence[Sequence]) -> int:
    """Rank over Q by fraction-free elimination on integer rows."""
    mat = [r for r in _integer_rows(rows) if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        p = mat[rank]
        for i in range(rank + 1, len(mat)):
            f = mat[i][c]
            if f:
                row = [p[c] * x - f * y for x, y in zip(mat[i], p)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                mat[i] = [x // g for x in row] if g > 1 else row
        rank += 1
        if rank == len(mat):
            break
    return rank


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over the field with p elements (p prime)."""
    mat = [[int(x) % p for x in r] for r in rows]
    mat = [r for r in mat if any(r)]
    if not mat:
        return 0
    rank = 0
    for c in range(len(mat[0])):
        piv = next((i for i in range(rank, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][c], -1, p)
        prow = [(x * inv) % p for x in mat[rank]]
        mat[rank] = prow
        for i in range(len(mat)):
            if i != rank and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], prow)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def rank_univariate(rows: Sequence[Sequence[dict[int, int]]]) -> int:
    """Exact rank over Q(x).

    Entries are polynomials given as ``{exponent: coefficient}`` dicts.
    """
    x = symbols("x")
    field = QQ.frac_field(x)
    conv = [
        [field.from_sympy(Poly(dict(((e,), c) for e, c in entry.items()) or {(0,): 0}, x).as_expr())
         for entry in row]
        for row in rows
    ]
    if not conv or not conv[0]:
        return 0
    return DomainMatrix(conv, (len(conv), len(conv[0])), field).rank()
