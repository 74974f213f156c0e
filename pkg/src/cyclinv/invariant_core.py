"""Invariants of C_d in the free algebra: monomial bases, free generators, series.

In the y-basis, where the generator of C_d acts as ``y_k -> e^k y_k``, a
word is invariant exactly when its index sum is 0 mod d.  Everything here is
combinatorics on such words, plus the Molien-type averages over a matrix
group which give the same counts independently.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from cyclinv.config import Caps, resolve
from cyclinv.free_algebra import Word
from cyclinv.group_actions import FiniteMatrixGroup
from cyclinv.series import RationalSeries


def invariant_monomial_basis(d: int, n: int, caps: Caps | None = None) -> list[Word]:
    """Degree-n y-words with index sum 0 mod d, deg-lex ordered."""
    if d < 2 or n < 0:
        raise ValueError("need d >= 2 and n >= 0")
    resolve(caps).check_ambient(d ** n)
    # itertools.product already yields lexicographic order
    return [Word(w, d, "y") for w in itertools.product(range(d), repeat=n) if sum(w) % d == 0]


def is_free_generator(w: Word, d: int | None = None) -> bool:
    """True iff ``w`` is invariant and no proper nonempty prefix is."""
    d = w.alphabet_size if d is None else d
    if w.index_sum() % d:
        raise ValueError(f"{w} is not invariant")
    if not w.letters:
        return False
    s = 0
    for a in w.letters[:-1]:
        s = (s + a) % d
        if s == 0:
            return False
    return True


def free_generators_up_to_degree(d: int, max_degree: int, caps: Caps | None = None) -> dict[int, list[Word]]:
    """Free generators Z_1..Z_N, built by extending the non-invariant words U_(n-1).

    Z_1 = {y0}, U_1 = {y1..y(d-1)}; every u in U_(n-1) has exactly one
    completing letter (sending it to Z_n) and d-1 others (sending it to U_n).
    """
    if d < 2 or max_degree < 1:
        raise ValueError("need d >= 2 and max_degree >= 1")
    caps = resolve(caps)
    caps.check_ambient((d - 1) ** max_degree)
    gens = {1: [Word((0,), d, "y")]}
    frontier = [((i,), i) for i in range(1, d)]  # (word, index sum mod d)
    for n in range(2, max_degree + 1):
        z, u = [], []
        for word, s in frontier:
            closing = (-s) % d
            for j in range(d):
                if j == closing:
                    z.append(word + (j,))
                else:
                    u.append((word + (j,), (s + j) % d))
        gens[n] = [Word(w, d, "y") for w in sorted(z)]
        frontier = u
    return gens


def free_factorizations(w: Word, generators: set[tuple[int, ...]]) -> list[list[tuple[int, ...]]]:
    """All ways of writing ``w`` as a concatenation of words from ``generators``."""
    letters = w.letters
    n = len(letters)
    ways: list[list[list[tuple[int, ...]]]] = [[] for _ in range(n + 1)]
    ways[0] = [[]]
    for end in range(1, n + 1):
        for start in range(end):
            piece = letters[start:end]
            if ways[start] and piece in generators:
                ways[end].extend(f + [piece] for f in ways[start])
    return ways[n]


def cyclic_hilbert_series(d: int) -> RationalSeries:
    """(1 - (d-1)t) / (1 - dt)."""
    if d < 2:
        raise ValueError("need d >= 2")
    return RationalSeries((1, -(d - 1)), (1, -d))


def noncommutative_molien_series(group: FiniteMatrixGroup, rational: bool = True) -> RationalSeries:
    """(1/|G|) sum_g 1/(1 - tr(g) t), summed exactly and reduced."""
    field = group.field
    total = None
    for g in group.elements:
        term = RationalSeries((1,), (1, -g.trace()), field)
        total = term if total is None else total + term
    total = total.scale(Fraction(1, group.order)).reduced()
    return total.to_rational() if rational and total.is_rational() else total


def commutative_molien_series(group: FiniteMatrixGroup, rational: bool = True) -> RationalSeries:
    """(1/|G|) sum_g 1/det(1 - g t), summed exactly and reduced.

    With ``rational=False`` the sum is returned over the group's field so the
    cancellation of the irrational parts can be inspected.
    """
    field = group.field
    total = None
    for g in group.elements:
        term = RationalSeries((1,), g.charpoly_reversed(), field)
        total = term if total is None else total + term
    total = total.scale(Fraction(1, group.order)).reduced()
    return total.to_rational() if rational and total.is_rational() else total


def free_generator_counts_from_hilbert(h: RationalSeries, max_degree: int) -> list:
    """Coefficients 1..N of g(t) = 1 - 1/H(t)."""
    if h.constant_term() != 1:
        raise ValueError("Hilbert series must have constant term 1")
    g = RationalSeries((1,), (1,), h.field) - h.reciprocal()
    return g.coefficients(max_degree + 1)[1:]


def composition_count(counts: dict[int, int], n: int) -> int:
    """Number of concatenations of generators of total degree n (|Z_k| = counts[k])."""
    ways = [1] + [0] * n
    for m in range(1, n + 1):
        ways[m] = sum(counts.get(k, 0) * ways[m - k] for k in range(1, m + 1))
    return ways[n]


__all__ = [
    "commutative_molien_series",
    "composition_count",
    "cyclic_hilbert_series",
    "free_factorizations",
    "free_generator_counts_from_hilbert",
    "free_generators_up_to_degree",
    "invariant_monomial_basis",
    "is_free_generator",
    "noncommutative_molien_series",
]
