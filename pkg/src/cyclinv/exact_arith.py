"""Exact rationals and the cyclotomic field Q(e_d).

Rationals are :class:`fractions.Fraction`.  An element of Q(e_d) is stored as
a residue of Q[x] modulo the d-th cyclotomic polynomial, in the power basis
``1, e, ..., e^(phi(d)-1)``.
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd as igcd

from cyclinv import upoly


class DomainError(ValueError):
    """Operands live in different coefficient fields."""


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if igcd(k, n) == 1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_d, lowest degree first.

    Computed as ``(x^d - 1) / prod(Phi_e for e | d, e < d)``.
    """
    if d < 1:
        raise ValueError("cyclotomic_polynomial needs d >= 1")
    num = upoly.trim([-1] + [0] * (d - 1) + [1])
    den: upoly.Poly = (Fraction(1),)
    for e in range(1, d):
        if d % e == 0:
            den = upoly.mul(den, upoly.trim(cyclotomic_polynomial(e)))
    quot, rem = upoly.divmod_(num, den)
    assert not rem
    return tuple(int(c) for c in quot)


@lru_cache(maxsize=None)
def _reduction_table(d: int) -> tuple[tuple[Fraction, ...], ...]:
    # row k: x^k mod Phi_d, for k < 2*phi(d) - 1
    phi = cyclotomic_polynomial(d)
    m = len(phi) - 1
    rows = []
    for k in range(max(2 * m - 1, 1)):
        if k < m:
            row = [Fraction(0)] * m
            row[k] = Fraction(1)
        else:
            prev = rows[k - 1]
            # x * prev, then replace x^m by -(phi_0 + ... + phi_{m-1} x^{m-1})
            top = prev[m - 1]
            row = [Fraction(0)] + list(prev[: m - 1])
            for i in range(m):
                row[i] -= top * phi[i]
        rows.append(tuple(row))
    return tuple(rows)


def _reduce(coeffs, d: int) -> tuple[Fraction, ...]:
    table = _reduction_table(d)
    m = len(table[0])
    if len(coeffs) > len(table):
        _, rem = upoly.divmod_(upoly.trim(coeffs), upoly.trim(cyclotomic_polynomial(d)))
        return tuple(list(rem) + [Fraction(0)] * (m - len(rem)))
    out = [Fraction(0)] * m
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        row = table[k]
        for i in range(m):
            if row[i]:
                out[i] += c * row[i]
    return tuple(out)


class CycNumber:
    """Immutable element of Q(e_d), e a primitive d-th root of unity."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if order < 1:
            raise ValueError("order must be >= 1")
        m = euler_phi(order)
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > m:
            coeffs = list(_reduce(coeffs, order))
        coeffs += [Fraction(0)] * (m - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("CycNumber is immutable")

    @classmethod
    def rational(cls, order: int, value) -> "CycNumber":
        return cls(order, (Fraction(value),))

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise DomainError(f"{self} is not rational")
        return self.coeffs[0]

    def _coerce(self, other) -> "CycNumber | None":
        if isinstance(other, CycNumber):
            if other.order != self.order:
                raise DomainError(f"order mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.order, (other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNumber(self.order, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.order, [-a for a in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNumber(self.order, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.order, [a * other for a in self.coeffs])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = len(self.coeffs)
        prod = [Fraction(0)] * (2 * m - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    prod[i + j] += a * b
        return CycNumber(self.order, _reduce(prod, self.order))

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(e_%d)" % self.order)
        if self.is_rational():
            return CycNumber(self.order, (1 / self.coeffs[0],))
        phi = upoly.trim(cyclotomic_polynomial(self.order))
        g, s, _ = upoly.ext_gcd(upoly.trim(self.coeffs), phi)
        # Phi_d is irreducible, so g == 1
        assert g == (Fraction(1),)
        return CycNumber(self.order, s)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CycNumber(self.order, [a / other for a in self.coeffs])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNumber(self.order, (1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CycNumber):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CycNumber({self.order}, {format_cyc(self)!r})"

    def __str__(self):
        return format_cyc(self)


def primitive_root_power(d: int, k: int) -> CycNumber:
    """e^(k mod d) in Q(e_d)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    k %= d
    return CycNumber(d, _reduce((0,) * k + (1,), d))


def cyc_add(a: CycNumber, b: CycNumber) -> CycNumber:
    return a + b


def cyc_mul(a: CycNumber, b: CycNumber) -> CycNumber:
    return a * b


def cyc_inv(a: CycNumber) -> CycNumber:
    return a.inverse()


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_cyc(a: CycNumber, symbol: str = "e") -> str:
    """Render as a polynomial in ``e``, e.g. ``1 - e + 2*e^2``."""
    parts: list[str] = []
    for k, c in enumerate(a.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            power = symbol if k == 1 else f"{symbol}^{k}"
            body = power if mag == 1 else f"{format_rational(mag)}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def evaluate_expression(text: str, atom):
    """Evaluate a ``+ - * / ^`` expression over integers and named atoms.

    ``atom(name)`` maps an identifier to a value; the values only need to
    support Python arithmetic operators.  Nothing else is evaluated.
    """
    src = text.replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}: {exc.msg}") from None

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            return atom(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = walk(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
            left, right = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                return left / right
            if not isinstance(right, Fraction) or right.denominator != 1 or right < 0:
                raise ValueError("exponents must be non-negative integers")
            return left ** int(right)
        raise ValueError(f"unsupported syntax in {text!r}")

    return walk(tree)


def parse_cyc(text: str, d: int, symbol: str = "e") -> CycNumber:
    def atom(name):
        if name == symbol:
            return primitive_root_power(d, 1)
        raise ValueError(f"unknown symbol {name!r}")

    val = evaluate_expression(text, atom)
    return val if isinstance(val, CycNumber) else CycNumber(d, (val,))


class RationalField:
    """The field Q; elements are Fractions."""

    tag = "Q"
    order = 1

    def __call__(self, value) -> Fraction:
        if isinstance(value, CycNumber):
            raise DomainError("Q(e_d) element given where QQ expected; use to_fraction()")
        return Fraction(value)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def format(self, c) -> str:
        return format_rational(c)

    def parse(self, text: str) -> Fraction:
        val = evaluate_expression(text, lambda name: _bad_symbol(name))
        return Fraction(val)

    def contains(self, c) -> bool:
        return isinstance(c, (int, Fraction))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


def _bad_symbol(name):
    raise ValueError(f"unknown symbol {name!r}")


class CyclotomicField:
    """The field Q(e_d); elements are CycNumbers of order d."""

    def __init__(self, d: int):
        if d < 1:
            raise ValueError("d must be >= 1")
        self.order = d
        self.tag = f"Q(e_{d})"

    def __call__(self, value) -> CycNumber:
        if isinstance(value, CycNumber):
            if value.order != self.order:
                raise DomainError(f"order mismatch: {value.order} vs {self.order}")
            return value
        return CycNumber(self.order, (Fraction(value),))

    @property
    def zero(self) -> CycNumber:
        return CycNumber(self.order)

    @property
    def one(self) -> CycNumber:
        return CycNumber(self.order, (1,))

    @property
    def e(self) -> CycNumber:
        return primitive_root_power(self.order, 1)

    def format(self, c) -> str:
        return format_cyc(self(c))

    def parse(self, text: str) -> CycNumber:
        return parse_cyc(text, self.order)

    def contains(self, c) -> bool:
        return isinstance(c, CycNumber) and c.order == self.order

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.order == self.order

    def __hash__(self):
        return hash(("Q(e)", self.order))

    def __repr__(self):
        return f"CyclotomicField({self.order})"


QQ = RationalField()

_FIELD_TAG = re.compile(r"^Q\(e_?(\d+)\)$|^Qe(\d+)$")


def field_from_tag(tag: str, d: int | None = None):
    """``Q`` -> QQ; ``Q(e_3)`` / ``Qe3`` -> Q(e_3); bare ``Qe`` uses ``d``."""
    tag = tag.strip()
    if tag == "Q":
        return QQ
    if tag == "Qe":
        if d is None:
            raise ValueError("field tag 'Qe' needs an explicit order d")
        return CyclotomicField(d)
    m = _FIELD_TAG.match(tag)
    if not m:
        raise ValueError(f"unknown field tag {tag!r}")
    return CyclotomicField(int(m.group(1) or m.group(2)))
