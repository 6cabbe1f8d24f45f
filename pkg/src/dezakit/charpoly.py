"""Exact integer characteristic polynomials and polynomial helpers.

char_poly runs the Faddeev-LeVerrier recurrence over arbitrary-precision
integers (object-dtype numpy matrices), n+1 matrix products of size n, so
O(n^4) integer multiplications overall.  Every interior division is exact
and asserted.  Polynomials are ascending coefficient tuples.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph

# -- integer polynomial helpers (ascending coefficients) -------------------


def poly_eval(coeffs, x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_mul(a, b) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


def poly_divmod_monic(a, b) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Divide by a monic divisor over the integers."""
    if b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(a)
    db = len(b) - 1
    quot = [0] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        quot[i - db] = c
        for j in range(db + 1):
            rem[i - db + j] -= c * b[j]
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return tuple(quot), tuple(rem)


def poly_try_divide(a, b) -> tuple[int, ...] | None:
    """Quotient a/b when b (monic) divides a exactly, else None."""
    if len(b) > len(a):
        return None
    quot, rem = poly_divmod_monic(a, b)
    if any(rem):
        return None
    return quot


@dataclass(frozen=True)
class CharPoly:
    """Monic integer characteristic polynomial of an adjacency matrix."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) < 2 or self.coeffs[-1] != 1:
            raise ValueError("characteristic polynomial must be monic")
        if self.coeffs[-2] != 0:
            raise ValueError("adjacency matrices are traceless")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        return poly_eval(self.coeffs, x)

    def __str__(self) -> str:
        terms = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            mag = abs(c)
            piece = "x" if e == 1 else f"x^{e}" if e else ""
            if e and mag == 1:
                body = piece
            elif e:
                body = f"{mag}{piece}"
            else:
                body = str(mag)
            terms.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def char_poly(g: Graph) -> CharPoly:
    """det(xI - M) computed exactly (Faddeev-LeVerrier over Z)."""
    n = g.n
    a = g.adj.astype(object)
    eye = np.eye(n, dtype=object)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = a.copy()
    for k in range(1, n + 1):
        t = int(np.trace(mk))
        if t % k:
            raise ArithmeticError("inexact division in Faddeev-LeVerrier")
        ck = -(t // k)
        coeffs[n - k] = ck
        if k < n:
            mk = a.dot(mk + ck * eye)
    return CharPoly(tuple(coeffs))
