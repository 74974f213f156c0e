"""Irreducible characters of Sym_n (Murnaghan-Nakayama on beta-sets)."""

from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from collections import Counter


def partitions(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of n in reverse-lex order, e.g. (3,), (2, 1), (1, 1, 1)."""
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in partitions(n - first, first))
    return out


def class_size(mu: tuple[int, ...]) -> int:
    """Number of permutations of cycle type mu."""
    n = sum(mu)
    z = prod(k ** m * factorial(m) for k, m in Counter(mu).items())
    return factorial(n) // z


def _beta(lam: tuple[int, ...]) -> frozenset[int]:
    k = len(lam)
    return frozenset(part + (k - 1 - i) for i, part in enumerate(lam))


@lru_cache(maxsize=None)
def _mn(beta: frozenset[int], mu: tuple[int, ...]) -> int:
    if not mu:
        # empty partition <=> beads packed at 0..k-1
        return 1 if beta == frozenset(range(len(beta))) else 0
    r, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beta:
            continue
        between = sum(1 for c in beta if target < c < b)
        total += (-1) ** between * _mn((beta - {b}) | {target}, rest)
    return total


def character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """chi^lam evaluated at a permutation of cycle type mu."""
    if sum(lam) != sum(mu):
        raise ValueError("partitions of different sizes")
    return _mn(_beta(tuple(lam)), tuple(sorted(mu, reverse=True)))


def hook_dimension(lam: tuple[int, ...]) -> int:
    """dim of the irreducible module, by the hook length formula."""
    n = sum(lam)
    conj = [sum(1 for part in lam if part > j) for j in range(lam[0])] if lam else []
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(n) // hooks


def character_table(n: int) -> dict[tuple[int, ...], dict[tuple[int, ...], int]]:
    parts = partitions(n)
    return {lam: {mu: character(lam, mu) for mu in parts} for lam in parts}


def cycle_type_representative(mu: tuple[int, ...]):
    """A permutation with cycle type mu, as an images tuple (1-based)."""
    images = []
    start = 1
    for length in mu:
        images.extend(range(start + 1, start + length))
        images.append(start)
        start += length
    return tuple(images)
