"""Formal power series given as exact rational functions p(t)/q(t)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from cyclinv import upoly
from cyclinv.exact_arith import QQ, CycNumber


@dataclass(frozen=True, eq=False)
class RationalSeries:
    """``numerator / denominator`` with the denominator's constant term normalized to 1."""

    numerator: tuple
    denominator: tuple
    field: object = QQ

    def __post_init__(self):
        num = upoly.trim([self.field(c) for c in self.numerator])
        den = upoly.trim([self.field(c) for c in self.denominator])
        if not den or den[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")
        if den[0] != 1:
            inv = 1 / den[0]
            num, den = upoly.scale(num, inv), upoly.scale(den, inv)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def polynomial(cls, coeffs, field=QQ) -> "RationalSeries":
        return cls(tuple(coeffs), (1,), field)

    def coefficients(self, count: int) -> list:
        """First ``count`` coefficients via the denominator's linear recurrence."""
        num, den = self.numerator, self.denominator
        out = []
        for k in range(count):
            acc = num[k] if k < len(num) else self.field.zero
            for i in range(1, min(k, len(den) - 1) + 1):
                acc = acc - den[i] * out[k - i]
            out.append(acc)
        return out

    def coefficients_by_division(self, count: int) -> list:
        """Same coefficients by truncated series inversion of the denominator, then a product."""
        den = list(self.denominator) + [self.field.zero] * count
        inv = [self.field.one]
        for k in range(1, count):
            inv.append(-sum((den[i] * inv[k - i] for i in range(1, k + 1)), self.field.zero))
        num = list(self.numerator) + [self.field.zero] * count
        return [sum((num[i] * inv[k - i] for i in range(k + 1)), self.field.zero) for k in range(count)]

    def constant_term(self):
        return self.numerator[0] if self.numerator else self.field.zero

    def reduced(self) -> "RationalSeries":
        g = upoly.gcd(self.numerator, self.denominator)
        if len(g) <= 1:
            return self
        num, _ = upoly.divmod_(self.numerator, g)
        den, _ = upoly.divmod_(self.denominator, g)
        return RationalSeries(num, den, self.field)

    def _check(self, other: "RationalSeries"):
        if other.field != self.field:
            raise ValueError("series over different fields")

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        self._check(other)
        g = upoly.gcd(self.denominator, other.denominator)
        a, _ = upoly.divmod_(self.denominator, g)
        b, _ = upoly.divmod_(other.denominator, g)
        num = upoly.add(upoly.mul(self.numerator, b), upoly.mul(other.numerator, a))
        den = upoly.mul(a, other.denominator)
        return RationalSeries(num, den, self.field).reduced()

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "RationalSeries":
        return RationalSeries(upoly.scale(self.numerator, self.field(c)), self.denominator, self.field)

    def reciprocal(self) -> "RationalSeries":
        if self.constant_term() == 0:
            raise ValueError("series with zero constant term is not invertible")
        return RationalSeries(self.denominator, self.numerator, self.field)

    def __eq__(self, other):
        """Equality as rational functions."""
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return (other.field == self.field
                and upoly.mul(self.numerator, other.denominator) == upoly.mul(other.numerator, self.denominator))

    def __hash__(self):
        r = self.reduced()
        return hash((r.numerator, r.denominator))

    def is_rational(self) -> bool:
        return all(not isinstance(c, CycNumber) or c.is_rational()
                   for c in self.numerator + self.denominator)

    def to_rational(self) -> "RationalSeries":
        """Same series over QQ; raises if some coefficient is irrational."""
        conv = lambda c: c.to_fraction() if isinstance(c, CycNumber) else Fraction(c)  # noqa: E731
        return RationalSeries(tuple(conv(c) for c in self.numerator),
                              tuple(conv(c) for c in self.denominator), QQ)

    def to_json(self, terms: int = 0) -> dict:
        fmt = self.field.format
        out = {"num": [fmt(c) for c in self.numerator], "den": [fmt(c) for c in self.denominator]}
        if terms:
            out["coeffs"] = [fmt(c) for c in self.coefficients(terms)]
        return out

    def __str__(self):
        return f"({_poly_str(self.numerator, self.field)})/({_poly_str(self.denominator, self.field)})"


def _poly_str(p, field) -> str:
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        if isinstance(c, CycNumber) and not c.is_rational():
            mag, neg = f"({field.format(c)})", False
        else:
            q = c.to_fraction() if isinstance(c, CycNumber) else Fraction(c)
            mag, neg = QQ.format(abs(q)), q < 0
        power = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if power:
            body = power if mag == "1" else f"{mag}*{power}"
        else:
            body = mag
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)
