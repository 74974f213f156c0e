"""Linear substitutions of finite matrix groups on the free algebra.

Matrices act on the column of generators: ``x_i -> sum_j g[i][j] x_j``,
i.e. row ``i`` is the image of ``x_i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from cyclinv import upoly
from cyclinv.config import Caps, resolve
from cyclinv.exact_arith import QQ, CyclotomicField, primitive_root_power
from cyclinv.free_algebra import NcPoly, deglex_key
from cyclinv.linalg import EchelonBasis


@dataclass(frozen=True)
class SquareMatrix:
    rows: tuple[tuple, ...]
    field: object = QQ

    def __post_init__(self):
        rows = tuple(tuple(self.field(c) for c in r) for r in self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix is not square")
        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, d: int, field=QQ) -> "SquareMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(d)) for i in range(d)), field)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        if other.size != self.size or other.field != self.field:
            raise ValueError("matrix size or field mismatch")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            out.append(tuple(sum((a * b for a, b in zip(r, c) if a != 0), self.field.zero) for c in cols))
        return SquareMatrix(tuple(out), self.field)

    def __pow__(self, k: int) -> "SquareMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        out = SquareMatrix.identity(self.size, self.field)
        for _ in range(k):
            out = out @ self
        return out

    def trace(self):
        return sum((self.rows[i][i] for i in range(self.size)), self.field.zero)

    def is_identity(self) -> bool:
        return self == SquareMatrix.identity(self.size, self.field)

    def is_diagonal(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.size) for j in range(self.size) if i != j)

    def det(self):
        """Determinant by Gaussian elimination over the field."""
        a = [list(r) for r in self.rows]
        d = self.size
        det = self.field.one
        for col in range(d):
            piv = next((r for r in range(col, d) if a[r][col] != 0), None)
            if piv is None:
                return self.field.zero
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            p = a[col][col]
            det = det * p
            inv = 1 / p
            for r in range(col + 1, d):
                f = a[r][col]
                if f != 0:
                    f = f * inv
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return det

    def inverse(self) -> "SquareMatrix":
        d = self.size
        a = [list(r) + [self.field.one if i == j else self.field.zero for j in range(d)]
             for i, r in enumerate(self.rows)]
        for col in range(d):
            piv = next((r for r in range(col, d) if a[r][col] != 0), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            inv = 1 / a[col][col]
            a[col] = [x * inv for x in a[col]]
            for r in range(d):
                if r != col and a[r][col] != 0:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return SquareMatrix(tuple(tuple(r[d:]) for r in a), self.field)

    def charpoly_reversed(self) -> upoly.Poly:
        """Coefficients of det(I - t*g) in t, lowest first (Faddeev-LeVerrier)."""
        d = self.size
        coeffs = [None] * (d + 1)  # coeffs[k]: coefficient of lambda^k in det(lambda I - g)
        coeffs[d] = self.field.one
        m = SquareMatrix(tuple(tuple(self.field.zero for _ in range(d)) for _ in range(d)), self.field)
        for k in range(1, d + 1):
            c_prev = coeffs[d - k + 1]
            m = self @ m
            m = SquareMatrix(tuple(tuple(m.rows[i][j] + (c_prev if i == j else 0) for j in range(d))
                                   for i in range(d)), self.field)
            coeffs[d - k] = -(self @ m).trace() / Fraction(k)
        return upoly.trim([coeffs[d - k] for k in range(d + 1)])

    def to_json(self) -> list:
        return [[self.field.format(c) for c in r] for r in self.rows]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]], field=QQ) -> "SquareMatrix":
        return cls(tuple(tuple(field.parse(str(c)) for c in r) for r in data), field)


@dataclass(frozen=True)
class FiniteMatrixGroup:
    elements: tuple[SquareMatrix, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def size(self) -> int:
        return self.elements[0].size

    @property
    def field(self):
        return self.elements[0].field

    @classmethod
    def generated_by(cls, generators: Iterable[SquareMatrix], caps: Caps | None = None) -> "FiniteMatrixGroup":
        """Closure of the generators under products (finite order assumed)."""
        caps = resolve(caps)
        gens = list(generators)
        if not gens:
            raise ValueError("need at least one generator")
        ident = SquareMatrix.identity(gens[0].size, gens[0].field)
        elements = [ident]
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = a @ g
                    if b not in seen:
                        seen.add(b)
                        elements.append(b)
                        nxt.append(b)
                        caps.check_group_order(len(elements))
            frontier = nxt
        return cls(tuple(elements))

    def is_closed(self) -> bool:
        s = set(self.elements)
        return all(a @ b in s for a in self.elements for b in self.elements)


def cyclic_shift_matrix(d: int, field=QQ) -> SquareMatrix:
    """The shift x_1 -> x_2 -> ... -> x_d -> x_1 (row i is the image of x_i)."""
    if d < 2:
        raise ValueError("cyclic shift needs d >= 2")
    return SquareMatrix(tuple(tuple(int(j == (i + 1) % d) for j in range(d)) for i in range(d)), field)


def diagonal_generator(d: int) -> SquareMatrix:
    """The shift in the y-basis: diag(1, e, ..., e^(d-1)) over Q(e_d)."""
    field = CyclotomicField(d)
    return SquareMatrix(tuple(tuple(primitive_root_power(d, i) if i == j else 0 for j in range(d))
                              for i in range(d)), field)


def cyclic_group(d: int, basis: str = "x", caps: Caps | None = None) -> FiniteMatrixGroup:
    """C_d acting by shifting x-variables (over QQ) or diagonally on y-variables (over Q(e_d))."""
    if basis == "x":
        gen = cyclic_shift_matrix(d)
    elif basis == "y":
        gen = diagonal_generator(d)
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return FiniteMatrixGroup.generated_by([gen], caps)


def trivial_group(d: int, field=QQ) -> FiniteMatrixGroup:
    return FiniteMatrixGroup((SquareMatrix.identity(d, field),))


def x_to_y_basis_change(d: int) -> tuple[SquareMatrix, SquareMatrix]:
    """``(B, B^-1)`` with ``B[k][j] = e^(-k j)``: row k writes y_k in the x-basis."""
    if d < 2:
        raise ValueError("basis change needs d >= 2")
    field = CyclotomicField(d)
    b = SquareMatrix(tuple(tuple(primitive_root_power(d, -k * j) for j in range(d)) for k in range(d)), field)
    binv = SquareMatrix(tuple(tuple(primitive_root_power(d, k * j) / d for j in range(d)) for k in range(d)), field)
    return b, binv


def substitute(g: SquareMatrix, f: NcPoly, symbol: str | None = None) -> NcPoly:
    """Replace each letter i of f by the linear form of row i of g."""
    if g.size != f.alphabet_size:
        raise ValueError(f"matrix size {g.size} vs alphabet size {f.alphabet_size}")
    field = g.field
    if g.field != f.field:
        if g.field == QQ:
            field = f.field
        else:
            f = f.embed(g.field)
    images = [[(j, field(c)) for j, c in enumerate(row) if c != 0] for row in g.rows]
    out: dict = {}
    for word, coeff in f.terms.items():
        partial = {(): coeff}
        for letter in word:
            nxt: dict = {}
            for w, c in partial.items():
                for j, a in images[letter]:
                    key = w + (j,)
                    v = c * a
                    nxt[key] = nxt[key] + v if key in nxt else v
            partial = nxt
        for w, c in partial.items():
            out[w] = out[w] + c if w in out else c
    return NcPoly(field, g.size, out, f.symbol if symbol is None else symbol)


def y_to_x(f: NcPoly) -> NcPoly:
    """Rewrite a polynomial in y-variables in the x-variables (over Q(e_d))."""
    b, _ = x_to_y_basis_change(f.alphabet_size)
    return substitute(b, f, symbol="x")


def x_to_y(f: NcPoly) -> NcPoly:
    _, binv = x_to_y_basis_change(f.alphabet_size)
    return substitute(binv, f, symbol="y")


def reynolds(group: FiniteMatrixGroup, f: NcPoly) -> NcPoly:
    """Group average (1/|G|) sum_g g(f)."""
    if group.size != f.alphabet_size:
        raise ValueError("group and polynomial have different numbers of variables")
    images = [substitute(g, f) for g in group.elements]
    total = images[0]
    for img in images[1:]:
        total = total + img
    return total / group.order


def all_words(d: int, n: int) -> Iterable[tuple[int, ...]]:
    return itertools.product(range(d), repeat=n)


def invariant_dimension_bruteforce(group: FiniteMatrixGroup, n: int, caps: Caps | None = None) -> int:
    """Rank of the Reynolds projection on the degree-n component."""
    caps = resolve(caps)
    d = group.size
    caps.check_ambient(d ** n)
    basis = EchelonBasis(key=deglex_key)
    seen = set()
    for word in all_words(d, n):
        img = reynolds(group, NcPoly.monomial(word, group.field, d))
        if img.is_zero() or img in seen:
            continue
        seen.add(img)
        basis.add(img.terms)
    return basis.rank


__all__ = [
    "FiniteMatrixGroup",
    "SquareMatrix",
    "cyclic_group",
    "cyclic_shift_matrix",
    "diagonal_generator",
    "invariant_dimension_bruteforce",
    "reynolds",
    "substitute",
    "trivial_group",
    "x_to_y",
    "x_to_y_basis_change",
    "y_to_x",
]
