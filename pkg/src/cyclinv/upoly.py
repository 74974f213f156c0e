"""Dense univariate polynomials over an exact field.

A polynomial is a tuple of coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is the empty tuple).  Coefficients are
any exact field elements supporting ``+ - * /`` (``Fraction`` or
``CycNumber``); plain ints are promoted to ``Fraction`` so that ``/`` stays
exact.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import Sequence

Poly = tuple


def _lift(c):
    return Fraction(c) if isinstance(c, int) else c


def trim(coeffs: Sequence) -> Poly:
    coeffs = [_lift(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(p: Poly) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def add(p: Poly, q: Poly) -> Poly:
    return trim([a + b for a, b in zip_longest(p, q, fillvalue=0)])


def sub(p: Poly, q: Poly) -> Poly:
    return trim([a - b for a, b in zip_longest(p, q, fillvalue=0)])


def scale(p: Poly, c) -> Poly:
    return trim([a * c for a in p])


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return trim(out)


def divmod_(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quot = [0] * max(len(p) - dq, 0)
    for k in range(len(p) - 1 - dq, -1, -1):
        c = rem[k + dq]
        if c == 0:
            continue
        c = c if lead == 1 else c / lead
        quot[k] = c
        for j, b in enumerate(q):
            rem[k + j] = rem[k + j] - c * b
    return trim(quot), trim(rem[:dq])


def monic(p: Poly) -> Poly:
    if not p:
        return p
    lead = p[-1]
    return p if lead == 1 else tuple(c / lead for c in p)


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor (Euclid)."""
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def ext_gcd(p: Poly, q: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*p + t*q == g`` and ``g`` monic."""
    r0, r1 = trim(p), trim(q)
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        quo, rem = divmod_(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return (), s0, t0
    lead = r0[-1]
    inv = 1 / lead if not isinstance(lead, Fraction) else Fraction(1) / lead
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def evaluate(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc
