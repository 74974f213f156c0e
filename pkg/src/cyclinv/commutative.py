"""Commutative invariants of C_d: the invariant monoid in the y-variables and
identities among cyclic sums in the x-variables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from cyclinv.exact_arith import DomainError


@dataclass(frozen=True)
class ExponentVector:
    """y0^n0 * y1^n1 * ... * y(d-1)^n(d-1)."""

    exps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(self.exps))
        if any(e < 0 for e in self.exps):
            raise ValueError("exponents must be non-negative")

    @property
    def d(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def weight(self) -> int:
        return sum(i * n for i, n in enumerate(self.exps)) % self.d

    def is_invariant(self) -> bool:
        return self.weight == 0

    def __add__(self, other: "ExponentVector") -> "ExponentVector":
        if other.d != self.d:
            raise DomainError("exponent vectors of different length")
        return ExponentVector(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __sub__(self, other: "ExponentVector") -> "ExponentVector":
        return ExponentVector(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def __le__(self, other: "ExponentVector") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def letters(self) -> tuple[int, ...]:
        """The sorted word y_i...y_j carrying these exponents."""
        return tuple(i for i, n in enumerate(self.exps) for _ in range(n))

    def sort_key(self):
        return (self.degree, self.letters())

    @classmethod
    def from_letters(cls, letters: Iterable[int], d: int) -> "ExponentVector":
        exps = [0] * d
        for a in letters:
            exps[a] += 1
        return cls(tuple(exps))

    def __str__(self):
        parts = [f"y{i}" if n == 1 else f"y{i}^{n}" for i, n in enumerate(self.exps) if n]
        return "*".join(parts) if parts else "1"


def vectors_of_degree(d: int, n: int, support: Sequence[int] | None = None) -> Iterable[ExponentVector]:
    support = list(range(d)) if support is None else list(support)
    for combo in itertools.combinations_with_replacement(support, n):
        yield ExponentVector.from_letters(combo, d)


def invariant_vectors(d: int, n: int, support: Sequence[int] | None = None) -> list[ExponentVector]:
    return sorted((v for v in vectors_of_degree(d, n, support) if v.is_invariant()), key=ExponentVector.sort_key)


def is_irreducible_invariant(v: ExponentVector) -> bool:
    """No split v = a + b into nonzero invariant vectors supported on y1..y(d-1)."""
    if v.exps[0] != 0 or v.degree < 1 or not v.is_invariant():
        raise ValueError(f"{v} is not a nonzero invariant supported on y1..y(d-1)")
    for sub in itertools.product(*(range(e + 1) for e in v.exps)):
        a = ExponentVector(sub)
        if 0 < a.degree < v.degree and a.is_invariant():
            return False
    return True


def minimal_monoid_generators(d: int) -> list[ExponentVector]:
    """y0 together with the irreducible invariant vectors on y1..y(d-1) of degree <= d."""
    if d < 2:
        raise ValueError("need d >= 2")
    y0 = ExponentVector((1,) + (0,) * (d - 1))
    found = []
    for n in range(1, d + 1):
        for v in invariant_vectors(d, n, support=range(1, d)):
            if is_irreducible_invariant(v):
                found.append(v)
    return [y0] + sorted(found, key=ExponentVector.sort_key)


def factor_in_monoid(v: ExponentVector, generators: Sequence[ExponentVector]) -> list[int] | None:
    """Multiplicities p with v = sum p_i * generators[i], or None."""
    memo: dict[tuple[int, ...], list[int] | None] = {}
    zero = (0,) * v.d

    def solve(exps: tuple[int, ...], start: int) -> list[int] | None:
        if exps == zero:
            return [0] * len(generators)
        key = exps + (start,)
        if key in memo:
            return memo[key]
        result = None
        for i in range(start, len(generators)):
            g = generators[i].exps
            if all(a >= b for a, b in zip(exps, g)):
                rest = solve(tuple(a - b for a, b in zip(exps, g)), i)
                if rest is not None:
                    rest = list(rest)
                    rest[i] += 1
                    result = rest
                    break
        memo[key] = result
        return result

    return solve(v.exps, 0)


def generation_closure_check(d: int, max_degree: int) -> bool:
    """Every invariant vector of degree <= N is a sum of minimal generators."""
    gens = minimal_monoid_generators(d)
    representable = {(0,) * d}
    for n in range(1, max_degree + 1):
        for v in invariant_vectors(d, n):
            if not any(g <= v and (v - g).exps in representable for g in gens):
                return False
            representable.add(v.exps)
    return True


def count_invariant_monomials(d: int, n: int, support: Sequence[int] | None = None) -> int:
    return len(invariant_vectors(d, n, support))


class CPoly:
    """Commutative polynomial in x1..xd with rational coefficients."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], object] = ()):
        clean = {}
        for exps, c in dict(terms).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError("exponent vector length mismatch")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self.nvars = nvars
        self._terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def variable(cls, i: int, nvars: int) -> "CPoly":
        """x_i, 1-based."""
        exps = [0] * nvars
        exps[i - 1] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def constant(cls, c, nvars: int) -> "CPoly":
        return cls(nvars, {(0,) * nvars: c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def _lift(self, other) -> "CPoly":
        if isinstance(other, CPoly):
            if other.nvars != self.nvars:
                raise DomainError("variable-count mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return CPoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out = dict(self._terms)
        for k, v in o._terms.items():
            out[k] = out.get(k, 0) + v
        return CPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return CPoly(self.nvars, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out: dict = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in o._terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return CPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = CPoly.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, CPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def shift(self) -> "CPoly":
        """Apply the cyclic shift x_i -> x_(i+1)."""
        return CPoly(self.nvars, {k[-1:] + k[:-1]: v for k, v in self._terms.items()})

    def is_cyclic_invariant(self) -> bool:
        return self.shift() == self

    def symmetrize(self) -> "CPoly":
        """Sum over all variable permutations divided by d!."""
        total = CPoly(self.nvars)
        perms = list(itertools.permutations(range(self.nvars)))
        for p in perms:
            total = total + CPoly(self.nvars, {tuple(k[i] for i in p): v for k, v in self._terms.items()})
        return total * Fraction(1, len(perms))

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for exps in sorted(self._terms, key=lambda e: (-sum(e), tuple(-a for a in e))):
            c = self._terms[exps]
            mono = "*".join(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exps) if e)
            mag = abs(c)
            body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
            out.append(("-" if c < 0 else "+") + " " + body)
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def elementary_symmetric(d: int, n: int) -> CPoly:
    """e_n(x1..xd)."""
    if not 1 <= n <= d:
        raise ValueError(f"need 1 <= n <= {d}")
    terms = {}
    for idx in itertools.combinations(range(d), n):
        exps = [0] * d
        for i in idx:
            exps[i] = 1
        terms[tuple(exps)] = 1
    assert len(terms) == comb(d, n)
    return CPoly(d, terms)


def orbit_sum(exps: Sequence[int]) -> CPoly:
    """Sum of the distinct cyclic shifts of x1^a1 * ... * xd^ad."""
    exps = tuple(exps)
    orbit = {exps[-k:] + exps[:-k] for k in range(len(exps))}
    return CPoly(len(exps), {o: 1 for o in orbit})


def verify_commutative_identity(lhs: CPoly, rhs: CPoly) -> bool:
    if lhs.nvars != rhs.nvars:
        raise DomainError("variable-count mismatch")
    return lhs == rhs


@dataclass(frozen=True)
class Identity:
    name: str
    lhs: CPoly
    rhs: CPoly

    def holds(self) -> bool:
        return verify_commutative_identity(self.lhs, self.rhs)


def identity_catalog(d: int) -> list[Identity]:
    """Relations among cyclic sums for d = 3 and d = 4."""
    if d == 3:
        e1, e2, e3 = (elementary_symmetric(3, k) for k in (1, 2, 3))
        u1 = orbit_sum([2, 1, 0])
        u2 = orbit_sum([1, 2, 0])
        s = u1 + u2
        return [
            Identity("u1+u2 is symmetric", s, s.symmetrize()),
            Identity("u2 = e1*e2 - 3*e3 - u1", u2, e1 * e2 - 3 * e3 - u1),
        ]
    if d == 4:
        e1, e2, e3, e4 = (elementary_symmetric(4, k) for k in (1, 2, 3, 4))
        u = orbit_sum([1, 1, 0, 0])
        v = orbit_sum([2, 1, 0, 0])
        w = orbit_sum([3, 1, 0, 0])
        return [
            Identity("x1x3 + x2x4 = e2 - u", orbit_sum([1, 0, 1, 0]), e2 - u),
            Identity("cyc(x1^2 x3) = e1e2 - e3 - e1u", orbit_sum([2, 0, 1, 0]), e1 * e2 - e3 - e1 * u),
            Identity("cyc(x1 x2^2) = -2e3 + e1u - v", orbit_sum([1, 2, 0, 0]), -2 * e3 + e1 * u - v),
            Identity("cyc(x1^3 x3) = e1^2e2 - e1e3 - 2e2^2 + 4e4 - ue1^2 + 3ue2 - u^2",
                     orbit_sum([3, 0, 1, 0]),
                     e1 ** 2 * e2 - e1 * e3 - 2 * e2 ** 2 + 4 * e4 - u * e1 ** 2 + 3 * u * e2 - u ** 2),
            Identity("cyc(x1 x2^3) = ue1^2 - 3ue2 + u^2 - w", orbit_sum([1, 3, 0, 0]),
                     u * e1 ** 2 - 3 * u * e2 + u ** 2 - w),
            Identity("cyc(x1^2 x2^2) = -2e1e3 + 4e4 + 2ue2 - u^2", orbit_sum([2, 2, 0, 0]),
                     -2 * e1 * e3 + 4 * e4 + 2 * u * e2 - u ** 2),
            Identity("x1^2x3^2 + x2^2x4^2 = e2^2 - 2e4 - 2ue2 + u^2", orbit_sum([2, 0, 2, 0]),
                     e2 ** 2 - 2 * e4 - 2 * u * e2 + u ** 2),
        ]
    raise ValueError("identity catalog exists for d = 3 and d = 4 only")
