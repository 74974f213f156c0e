"""Words, position permutations and polynomials of the free associative algebra.

Letters are 0-based indices.  Display is 1-based for ``x`` variables
(``x1 .. xd``) and 0-based for every other symbol (``y0 .. y(d-1)``).

Sym_n acts on the right of the degree-n component by moving positions:
in ``w o s`` the letter at position ``i`` lands at position ``s(i)``.
Products compose left to right, ``(s * t)(i) = t(s(i))``, so that
``(f o s) o t == f o (s * t)``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from cyclinv.exact_arith import QQ, CycNumber, DomainError, evaluate_expression


def index_offset(symbol: str) -> int:
    return 1 if symbol == "x" else 0


def deglex_key(letters: Sequence[int]):
    return (len(letters), tuple(letters))


def format_word(letters: Sequence[int], symbol: str = "x") -> str:
    if not letters:
        return "1"
    off = index_offset(symbol)
    parts = []
    for letter, run in itertools.groupby(letters):
        k = len(list(run))
        name = f"{symbol}{letter + off}"
        parts.append(name if k == 1 else f"{name}^{k}")
    return "*".join(parts)


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]
    alphabet_size: int
    symbol: str = "x"

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if any(not 0 <= a < self.alphabet_size for a in self.letters):
            raise ValueError(f"letter out of range for alphabet of size {self.alphabet_size}")

    @property
    def degree(self) -> int:
        return len(self.letters)

    def index_sum(self) -> int:
        return sum(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if (other.alphabet_size, other.symbol) != (self.alphabet_size, self.symbol):
            raise DomainError("alphabet mismatch")
        return Word(self.letters + other.letters, self.alphabet_size, self.symbol)

    def permute(self, sigma: "Permutation") -> "Word":
        return Word(sigma.act(self.letters), self.alphabet_size, self.symbol)

    def sort_key(self):
        return deglex_key(self.letters)

    def __lt__(self, other: "Word"):
        return self.sort_key() < other.sort_key()

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return format_word(self.letters, self.symbol)


@dataclass(frozen=True)
class Permutation:
    """Element of Sym_n; ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            if any(c in seen for c in cyc):
                raise ValueError("cycles must be disjoint")
            seen.update(cyc)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, n: int) -> "Permutation":
        """Cycle notation: ``()``, ``(12)``, ``(1 2)(3 4)``."""
        text = text.strip()
        if text in ("", "1", "()", "id"):
            return cls.identity(n)
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", text):
            toks = body.split() if (" " in body or "," in body) else list(body)
            toks = [t for t in re.split(r"[ ,]+", " ".join(toks)) if t]
            if toks:
                cycles.append([int(t) for t in toks])
        return cls.from_cycles(n, *cycles)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``self`` first, then ``other``."""
        if other.n != self.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other(self(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def block(self, other: "Permutation") -> "Permutation":
        """``self x other`` acting on positions ``1..m`` and ``m+1..m+n``."""
        m = self.n
        return Permutation(self.images + tuple(m + j for j in other.images))

    def act(self, letters: Sequence[int]) -> tuple[int, ...]:
        if len(letters) != self.n:
            raise ValueError(f"word of degree {len(letters)} vs permutation of degree {self.n}")
        out = [0] * self.n
        for i, a in enumerate(letters):
            out[self.images[i] - 1] = a
        return tuple(out)

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def __str__(self):
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "()"
        sep = "" if self.n < 10 else " "
        return "".join("(" + sep.join(map(str, c)) + ")" for c in nontrivial)


def all_permutations(n: int) -> Iterable[Permutation]:
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def permutation_between(source: Sequence[int], target: Sequence[int]) -> Permutation:
    """Some ``s`` with ``source o s == target`` (same letter multiset required)."""
    if sorted(source) != sorted(target):
        raise ValueError("words are not rearrangements of each other")
    free: dict[int, list[int]] = {}
    for pos, a in enumerate(target, start=1):
        free.setdefault(a, []).append(pos)
    for positions in free.values():
        positions.reverse()
    return Permutation(tuple(free[a].pop() for a in source))


class NcPoly:
    """Immutable polynomial in the free algebra over QQ or Q(e_d)."""

    __slots__ = ("field", "alphabet_size", "symbol", "_terms", "_hash")

    def __init__(self, field, alphabet_size: int, terms: Mapping = (), symbol: str = "x"):
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for word, c in items:
            word = tuple(word)
            if any(not 0 <= a < alphabet_size for a in word):
                raise ValueError(f"letter out of range in {word}")
            c = field(c)
            if c != 0:
                clean[word] = c
        self.field = field
        self.alphabet_size = alphabet_size
        self.symbol = symbol
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, like: "NcPoly", terms: dict) -> "NcPoly":
        obj = cls.__new__(cls)
        obj.field = like.field
        obj.alphabet_size = like.alphabet_size
        obj.symbol = like.symbol
        obj._terms = {w: c for w, c in terms.items() if c != 0}
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, field, alphabet_size: int, symbol: str = "x") -> "NcPoly":
        return cls(field, alphabet_size, {}, symbol)

    @classmethod
    def one(cls, field, alphabet_size: int, symbol: str = "x") -> "NcPoly":
        return cls(field, alphabet_size, {(): 1}, symbol)

    @classmethod
    def variable(cls, index: int, field, alphabet_size: int, symbol: str = "x") -> "NcPoly":
        """Variable by 0-based index."""
        return cls(field, alphabet_size, {(index,): 1}, symbol)

    @classmethod
    def monomial(cls, letters: Sequence[int] | Word, field=QQ, alphabet_size: int | None = None,
                 symbol: str = "x", coeff=1) -> "NcPoly":
        if isinstance(letters, Word):
            alphabet_size, symbol, letters = letters.alphabet_size, letters.symbol, letters.letters
        if alphabet_size is None:
            raise ValueError("alphabet_size required")
        return cls(field, alphabet_size, {tuple(letters): coeff}, symbol)

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def words(self) -> list[tuple[int, ...]]:
        return sorted(self._terms, key=deglex_key)

    def items(self) -> list[tuple[tuple[int, ...], object]]:
        return [(w, self._terms[w]) for w in self.words()]

    def coefficient(self, word: Sequence[int]):
        return self._terms.get(tuple(word), self.field.zero)

    def degree(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self._terms}) <= 1

    def homogeneous_component(self, n: int) -> "NcPoly":
        return NcPoly._raw(self, {w: c for w, c in self._terms.items() if len(w) == n})

    def is_monomial(self) -> bool:
        return len(self._terms) == 1 and next(iter(self._terms.values())) == 1

    def _check(self, other: "NcPoly"):
        if self.field != other.field:
            raise DomainError(f"coefficient field mismatch: {self.field!r} vs {other.field!r}")
        if self.alphabet_size != other.alphabet_size or self.symbol != other.symbol:
            raise DomainError("alphabet mismatch")

    def _as_poly(self, other) -> "NcPoly | None":
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        if self._is_scalar(other):
            return NcPoly._raw(self, {(): self.field(other)})
        return None

    def _is_scalar(self, c) -> bool:
        return isinstance(c, (int, Fraction)) or (isinstance(c, CycNumber) and self.field.contains(c))

    def __add__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for w, c in o._terms.items():
            out[w] = out[w] + c if w in out else c
        return NcPoly._raw(self, out)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly._raw(self, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> "NcPoly":
        c = self.field(c)
        if c == 0:
            return NcPoly._raw(self, {})
        return NcPoly._raw(self, {w: a * c for w, a in self._terms.items()})

    def __mul__(self, other):
        if self._is_scalar(other):
            return self.scale(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check(other)
        out: dict = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                c = c1 * c2
                out[w] = out[w] + c if w in out else c
        return NcPoly._raw(self, out)

    def __rmul__(self, other):
        if self._is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, NcPoly):
            if other.degree() > 0 or other.is_zero():
                raise ValueError("can only divide by a nonzero scalar")
            other = other._terms[()]
        if not self._is_scalar(other):
            return NotImplemented
        return self.scale(1 / self.field(other))

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            raise ValueError("negative power")
        out = NcPoly.one(self.field, self.alphabet_size, self.symbol)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return (self.field == other.field and self.alphabet_size == other.alphabet_size
                    and self.symbol == other.symbol and self._terms == other._terms)
        if isinstance(other, (int, Fraction)) and other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.symbol, self.alphabet_size, frozenset(self._terms.items())))
        return self._hash

    def permute(self, sigma: Permutation) -> "NcPoly":
        return apply_position_permutation(self, sigma)

    def embed(self, field) -> "NcPoly":
        """Explicit embedding QQ -> Q(e_d); identity if already over ``field``."""
        if field == self.field:
            return self
        if self.field != QQ:
            raise DomainError(f"cannot embed {self.field!r} into {field!r}")
        return NcPoly(field, self.alphabet_size, self._terms, self.symbol)

    def rename(self, symbol: str) -> "NcPoly":
        return NcPoly(self.field, self.alphabet_size, self._terms, symbol)

    def to_json(self) -> list:
        return [[list(w), self.field.format(c)] for w, c in self.items()]

    @classmethod
    def from_json(cls, data: list, field, alphabet_size: int, symbol: str = "x") -> "NcPoly":
        return cls(field, alphabet_size, {tuple(w): field.parse(c) for w, c in data}, symbol)

    def __str__(self):
        return format_ncpoly(self)

    def __repr__(self):
        return f"NcPoly({self.field!r}, {self.alphabet_size}, {str(self)!r})"


def _format_coeff(field, c) -> tuple[int, str]:
    """Sign and magnitude text of a coefficient."""
    if isinstance(c, CycNumber) and not c.is_rational():
        return 1, f"({field.format(c)})"
    q = c.to_fraction() if isinstance(c, CycNumber) else Fraction(c)
    return (1 if q > 0 else -1), QQ.format(abs(q))


def format_ncpoly(f: NcPoly) -> str:
    if f.is_zero():
        return "0"
    out = []
    for w, c in f.items():
        sign, mag = _format_coeff(f.field, c)
        word = format_word(w, f.symbol)
        if not w:
            body = mag
        elif mag == "1":
            body = word
        else:
            body = f"{mag}*{word}"
        if not out:
            out.append(body if sign > 0 else f"-{body}")
        else:
            out.append(("+ " if sign > 0 else "- ") + body)
    return " ".join(out)


_VAR = re.compile(r"^([a-df-z])(\d+)$")


def parse_ncpoly(text: str, alphabet_size: int, field=QQ, symbol: str | None = None) -> NcPoly:
    """Parse text such as ``2*x1*x2*x1 - x2^3`` or ``(e - 1)*y1*y2``.

    ``e`` is the primitive root of the field (Q(e_d) only).  When ``symbol``
    is None it is inferred from the variables used (``x`` if none).
    """
    used = {m.group(1) for m in re.finditer(r"\b([a-df-z])\d+\b", text)}
    if symbol is None:
        if len(used) > 1:
            raise ValueError(f"mixed variable symbols in {text!r}")
        symbol = used.pop() if used else "x"
    off = index_offset(symbol)

    def atom(name):
        if name == "e":
            if not hasattr(field, "e"):
                raise ValueError("'e' is only available over Q(e_d)")
            return field.e
        m = _VAR.match(name)
        if not m or m.group(1) != symbol:
            raise ValueError(f"unknown symbol {name!r}")
        idx = int(m.group(2)) - off
        if not 0 <= idx < alphabet_size:
            raise ValueError(f"variable {name} outside alphabet of size {alphabet_size}")
        return NcPoly.variable(idx, field, alphabet_size, symbol)

    val = evaluate_expression(text, atom)
    if isinstance(val, NcPoly):
        return val
    return NcPoly(field, alphabet_size, {(): val}, symbol)


def nc_mul(f: NcPoly, g: NcPoly) -> NcPoly:
    return f * g


def apply_position_permutation(f: NcPoly, sigma: Permutation) -> NcPoly:
    """``f o sigma`` for ``f`` homogeneous of degree ``sigma.n``."""
    if not f.is_homogeneous():
        raise ValueError("position permutation needs a homogeneous polynomial")
    if not f.is_zero() and f.degree() != sigma.n:
        raise ValueError(f"degree {f.degree()} vs permutation of degree {sigma.n}")
    return NcPoly._raw(f, {sigma.act(w): c for w, c in f._terms.items()})


def apply_group_algebra_element(f: NcPoly, combo: Iterable[tuple[object, Permutation]]) -> NcPoly:
    """``sum c_k * (f o s_k)`` for a formal combination of permutations."""
    out = NcPoly.zero(f.field, f.alphabet_size, f.symbol)
    for c, sigma in combo:
        out = out + apply_position_permutation(f, sigma).scale(c)
    return out
