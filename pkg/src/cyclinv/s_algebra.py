"""S-subalgebras of the free algebra: spans of position-permuted products.

The degree-n component of the S-subalgebra generated by homogeneous
``u_1..u_k`` is the span of ``(u_j1 ... u_jm) o s`` over all generator
sequences of total degree n and all ``s`` in Sym_n, because
``(f o s)(g o t) == (fg) o (s x t)``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from math import ceil, factorial
from typing import Callable, Iterator, Sequence

from cyclinv.commutative import ExponentVector, factor_in_monoid, minimal_monoid_generators
from cyclinv.config import Caps, resolve
from cyclinv.exact_arith import QQ, CyclotomicField, CycNumber, field_from_tag
from cyclinv.free_algebra import (
    NcPoly,
    Permutation,
    all_permutations,
    apply_group_algebra_element,
    deglex_key,
    parse_ncpoly,
    permutation_between,
)
from cyclinv.group_actions import y_to_x
from cyclinv.linalg import EchelonBasis
from cyclinv.sym_characters import character, class_size, cycle_type_representative, partitions


@dataclass(frozen=True)
class SGeneratorSet:
    generators: tuple[NcPoly, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("empty generator set")
        first = gens[0]
        for g in gens:
            if g.is_zero() or not g.is_homogeneous() or g.degree() < 1:
                raise ValueError(f"generator {g} must be nonzero, homogeneous, of degree >= 1")
            if (g.field, g.alphabet_size, g.symbol) != (first.field, first.alphabet_size, first.symbol):
                raise ValueError("generators must share field and alphabet")
        names = tuple(self.names) or tuple(str(g) for g in gens)
        if len(names) != len(gens):
            raise ValueError("one name per generator")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "names", names)

    @property
    def field(self):
        return self.generators[0].field

    @property
    def alphabet_size(self) -> int:
        return self.generators[0].alphabet_size

    @property
    def symbol(self) -> str:
        return self.generators[0].symbol

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree() for g in self.generators)

    def __len__(self):
        return len(self.generators)

    def embed(self, field) -> "SGeneratorSet":
        return SGeneratorSet(tuple(g.embed(field) for g in self.generators), self.names)

    def without(self, index: int) -> "SGeneratorSet":
        keep = [i for i in range(len(self)) if i != index]
        return SGeneratorSet(tuple(self.generators[i] for i in keep), tuple(self.names[i] for i in keep))

    def to_json(self) -> dict:
        return {
            "field": self.field.tag,
            "d": self.alphabet_size,
            "generators": [str(g) for g in self.generators],
            "names": list(self.names),
        }

    @classmethod
    def from_json(cls, data, d: int | None = None) -> "SGeneratorSet":
        """Accepts ``{"field", "d"?, "generators", "names"?}`` or a bare list of strings (over Q)."""
        if isinstance(data, list):
            data = {"field": "Q", "generators": data}
        d = data.get("d", d)
        fld = field_from_tag(data.get("field", "Q"), d)
        if d is None:
            d = fld.order if isinstance(fld, CyclotomicField) else _infer_alphabet(data["generators"])
        gens = tuple(parse_ncpoly(s, d, fld) for s in data["generators"])
        return cls(gens, tuple(data.get("names", ())))

    @classmethod
    def load(cls, path, d: int | None = None) -> "SGeneratorSet":
        with open(path) as fh:
            return cls.from_json(json.load(fh), d)


def _infer_alphabet(texts: Sequence[str]) -> int:
    import re

    best = 0
    for t in texts:
        for sym, idx in re.findall(r"\b([a-df-z])(\d+)\b", t):
            best = max(best, int(idx) + (0 if sym == "x" else 1))
    if best == 0:
        raise ValueError("cannot infer the number of variables; give 'd'")
    return best


def cyclic_s_generators(d: int) -> SGeneratorSet:
    """y0 and the minimal invariant monomials u_i, as words in the y-variables over QQ."""
    gens = []
    for v in minimal_monoid_generators(d):
        gens.append(NcPoly.monomial(v.letters(), QQ, d, "y"))
    return SGeneratorSet(tuple(gens))


def x_basis_s_generators_d3() -> SGeneratorSet:
    """The cyclic sums v1, v2, v31, v32 in x1, x2, x3 over QQ."""
    texts = {
        "v1": "x1 + x2 + x3",
        "v2": "x1*x2 + x2*x3 + x3*x1",
        "v31": "x1^2*x2 + x2^2*x3 + x3^2*x1",
        "v32": "x1*x2^2 + x2*x3^2 + x3*x1^2",
    }
    return SGeneratorSet(tuple(parse_ncpoly(t, 3) for t in texts.values()), tuple(texts))


@dataclass(frozen=True)
class Candidate:
    """``(prod of generators[i] for i in product) o permutation``."""

    product: tuple[int, ...]
    permutation: Permutation

    def evaluate(self, gens: SGeneratorSet) -> NcPoly:
        p = gens.generators[self.product[0]]
        for i in self.product[1:]:
            p = p * gens.generators[i]
        return p.permute(self.permutation)

    def describe(self, gens: SGeneratorSet) -> str:
        body = "*".join(gens.names[i] if len(self.product) == 1 else f"({gens.names[i]})"
                        for i in self.product)
        if self.permutation.is_identity():
            return body
        return f"({body}) o {self.permutation}" if len(self.product) > 1 else f"{body} o {self.permutation}"


def generator_products(gens: SGeneratorSet, n: int) -> Iterator[tuple[tuple[int, ...], NcPoly]]:
    """All generator sequences of total degree n with their products (lexicographic)."""
    degs = gens.degrees

    def rec(prefix: tuple[int, ...], poly: NcPoly | None, left: int):
        if left == 0:
            yield prefix, poly
            return
        for i, g in enumerate(gens.generators):
            if degs[i] <= left:
                yield from rec(prefix + (i,), g if poly is None else poly * g, left - degs[i])

    if n >= 1:
        yield from rec((), None, n)


def permuted_products(gens: SGeneratorSet, n: int) -> Iterator[tuple[Candidate, NcPoly]]:
    """Distinct ``P o s`` for generator products P of degree n."""
    seen: set = set()
    for product, poly in generator_products(gens, n):
        if len(poly) == 1:
            (word, _), = poly.terms.items()
            perms = (permutation_between(word, w) for w in sorted(set(itertools.permutations(word))))
        else:
            perms = all_permutations(n)
        for sigma in perms:
            img = poly.permute(sigma)
            if img in seen:
                continue
            seen.add(img)
            yield Candidate(product, sigma), img


@dataclass
class SpanBasis:
    degree: int
    ambient_dim: int
    basis: EchelonBasis
    candidates: list[Candidate] = dc_field(default_factory=list)
    template: NcPoly | None = None

    @property
    def rank(self) -> int:
        return self.basis.rank

    def rows(self) -> list[NcPoly]:
        t = self.template
        return [NcPoly(t.field, t.alphabet_size, self.basis.rows[p], t.symbol) for p in self.basis.pivots()]

    def contains(self, f: NcPoly) -> bool:
        return self.basis.contains(f.terms)

    def trace(self, sigma: Permutation):
        """Trace of ``o sigma`` on the span (assumed Sym_n-stable)."""
        total = Fraction(0)
        for p, row in self.basis.rows.items():
            moved = {sigma.act(w): c for w, c in row.items()}
            total = total + moved.get(p, 0)
        return total


def s_component_span(gens: SGeneratorSet, n: int, caps: Caps | None = None, track: bool = False) -> SpanBasis:
    caps = resolve(caps)
    caps.check_s_degree(n)
    caps.check_ambient(gens.alphabet_size ** n)
    basis = EchelonBasis(key=deglex_key, track=track)
    span = SpanBasis(n, gens.alphabet_size ** n, basis,
                     template=NcPoly.zero(gens.field, gens.alphabet_size, gens.symbol))
    for cand, img in permuted_products(gens, n):
        if track:
            span.candidates.append(cand)
        basis.add(img.terms, len(span.candidates) - 1)
        if basis.rank == span.ambient_dim:
            break
    return span


@dataclass
class MembershipCertificate:
    target: NcPoly
    generators: SGeneratorSet
    terms: list[tuple[object, Candidate]]

    def evaluate(self) -> NcPoly:
        out = NcPoly.zero(self.generators.field, self.generators.alphabet_size, self.generators.symbol)
        for c, cand in self.terms:
            out = out + cand.evaluate(self.generators).scale(c)
        return out

    def verify(self) -> bool:
        return self.evaluate() == self.target

    def to_json(self) -> dict:
        fmt = self.generators.field.format
        return {
            "member": True,
            "target": str(self.target),
            "field": self.generators.field.tag,
            "terms": [
                {
                    "coeff": fmt(c),
                    "product": [self.generators.names[i] for i in cand.product],
                    "permutation": str(cand.permutation),
                    "images": list(cand.permutation.images),
                }
                for c, cand in self.terms
            ],
        }

    def __str__(self):
        parts = []
        fmt = self.generators.field.format
        for c, cand in self.terms:
            txt = fmt(c)
            coef = "" if txt == "1" else (f"({txt})*" if (" " in txt or txt.startswith("-")) else f"{txt}*")
            parts.append(coef + cand.describe(self.generators))
        return f"{self.target} = " + " + ".join(parts)


@dataclass
class MembershipResult:
    member: bool
    certificate: MembershipCertificate | None = None

    def __bool__(self):
        return self.member


def s_membership(f: NcPoly, gens: SGeneratorSet, caps: Caps | None = None) -> MembershipResult:
    """Is homogeneous ``f`` in the S-subalgebra generated by ``gens``?"""
    if not f.is_homogeneous() or f.is_zero():
        raise ValueError("target must be a nonzero homogeneous polynomial")
    if f.field != gens.field:
        if f.field == QQ:
            f = f.embed(gens.field)
        else:
            gens = gens.embed(f.field)
    span = s_component_span(gens, f.degree(), caps, track=True)
    combo = span.basis.express(f.terms)
    if combo is None:
        return MembershipResult(False)
    terms = [(c, span.candidates[label]) for label, c in sorted(combo.items())]
    cert = MembershipCertificate(f, gens, terms)
    assert cert.verify()
    return MembershipResult(True, cert)


@dataclass
class ExpressionCertificate:
    """``word o (sigma * tau)`` equals the product of the listed generators."""

    word: tuple[int, ...]
    d: int
    sigma: Permutation
    multiplicities: list[int]
    generators: list[ExponentVector]
    tau: Permutation

    @property
    def factors(self) -> list[tuple[int, ...]]:
        out = []
        for g, p in zip(self.generators, self.multiplicities):
            out.extend([g.letters()] * p)
        return out

    def product_word(self) -> tuple[int, ...]:
        return tuple(a for f in self.factors for a in f)

    def verify(self) -> bool:
        sorted_word = (self.sigma.act(self.word) if self.word else ())
        if sorted_word != tuple(sorted(self.word)):
            return False
        lhs = NcPoly.monomial(self.word, QQ, self.d, "y").permute(self.sigma * self.tau)
        rhs = NcPoly.monomial((), QQ, self.d, "y")
        for f in self.factors:
            rhs = rhs * NcPoly.monomial(f, QQ, self.d, "y")
        return lhs == rhs


def express_invariant_via_s_generators(word: Sequence[int], d: int) -> ExpressionCertificate:
    """Two-permutation construction writing an invariant y-word via the generators U."""
    word = tuple(word)
    if sum(word) % d:
        raise ValueError("word is not invariant")
    sorted_word = tuple(sorted(word))
    sigma = permutation_between(word, sorted_word)
    gens = minimal_monoid_generators(d)
    mult = factor_in_monoid(ExponentVector.from_letters(word, d), gens)
    assert mult is not None
    target = tuple(a for g, p in zip(gens, mult) for _ in range(p) for a in g.letters())
    tau = permutation_between(sorted_word, target)
    return ExpressionCertificate(word, d, sigma, mult, gens, tau)


# -- deficiency ------------------------------------------------------------


def shuffles(n: int, k: int) -> Iterator[Permutation]:
    """Right coset representatives of Sym_k x Sym_(n-k) in Sym_n."""
    positions = range(1, n + 1)
    for left in itertools.combinations(positions, k):
        right = [p for p in positions if p not in left]
        yield Permutation(tuple(left) + tuple(right))


@dataclass(frozen=True)
class DeficiencyReport:
    degree: int
    invariant_dim: int
    component_rank: int
    decomposable_rank: int
    generators_needed: int

    @property
    def codimension(self) -> int:
        return self.invariant_dim - self.decomposable_rank

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "invariant_dim": self.invariant_dim,
            "component_rank": self.component_rank,
            "decomposable_rank": self.decomposable_rank,
            "codimension": self.codimension,
            "generators_needed": self.generators_needed,
        }


def _as_int(x) -> int:
    q = x.to_fraction() if isinstance(x, CycNumber) else Fraction(x)
    assert q.denominator == 1
    return int(q)


def module_generator_count(span: SpanBasis, sub: SpanBasis) -> int:
    """Minimal number of generators of the Sym_n-module span/sub.

    Sym_n is semisimple in characteristic 0, so this is the max over
    irreducibles of ceil(multiplicity / dimension).
    """
    n = span.degree
    if n == 0:
        return 0
    parts = partitions(n)
    chi = {}
    for mu in parts:
        sigma = Permutation(cycle_type_representative(mu))
        chi[mu] = _as_int(span.trace(sigma)) - _as_int(sub.trace(sigma))
    needed = 0
    for lam in parts:
        mult = Fraction(sum(class_size(mu) * chi[mu] * character(lam, mu) for mu in parts), factorial(n))
        assert mult.denominator == 1 and mult >= 0
        dim = character(lam, (1,) * n)
        needed = max(needed, ceil(mult / dim))
    return needed


def deficiency_reports(d: int, gens: SGeneratorSet, max_degree: int,
                       caps: Caps | None = None) -> list[DeficiencyReport]:
    caps = resolve(caps)
    caps.check_s_degree(max_degree)
    spans: dict[int, SpanBasis] = {}
    rows: dict[int, list[NcPoly]] = {}
    reports = []
    for n in range(1, max_degree + 1):
        spans[n] = s_component_span(gens, n, caps)
        rows[n] = spans[n].rows()
        dec = EchelonBasis(key=deglex_key)
        dec_span = SpanBasis(n, gens.alphabet_size ** n, dec, template=spans[n].template)
        for k in range(1, n // 2 + 1):
            perms = list(shuffles(n, k))
            for a in rows[k]:
                for b in rows[n - k]:
                    ab = a * b
                    for pi in perms:
                        dec.add(ab.permute(pi).terms)
        reports.append(DeficiencyReport(
            degree=n,
            invariant_dim=d ** (n - 1),
            component_rank=spans[n].rank,
            decomposable_rank=dec.rank,
            generators_needed=module_generator_count(spans[n], dec_span),
        ))
    return reports


def s_generator_deficiency(d: int, gens: SGeneratorSet, n: int, caps: Caps | None = None) -> int:
    """Number of new S-generators the subalgebra needs in degree n."""
    return deficiency_reports(d, gens, n, caps)[-1].generators_needed


# -- identity catalog (d = 3) ----------------------------------------------


def _combo(field, *cycles) -> list[tuple[object, Permutation]]:
    """``1 + sum of the given transpositions`` in the group algebra of Sym_3."""
    return [(field.one, Permutation.identity(3))] + [(field.one, Permutation.from_cycles(3, c)) for c in cycles]


@lru_cache(maxsize=None)
def _v(field_order: int):
    fld = CyclotomicField(field_order)
    gens = x_basis_s_generators_d3().embed(fld)
    return fld, dict(zip(gens.names, gens.generators))


def cubic_rhs(a: int, b: int, v32_cycles=((1, 2), (1, 3))) -> NcPoly:
    """``v1^3 + (e^a - 1) v31 o (1+(23)+(13)) + (e^b - 1) v32 o (1 + v32_cycles)``.

    Each combination runs over the three distinct rearrangements of the
    leading word (x1^2 x2, resp. x1 x2^2).  Using ``(23), (13)`` for v32 hits
    x3 x1^2 twice and misses x2 x1 x2; that variant is kept only to show it
    fails.
    """
    f, v = _v(3)
    e = f.e
    return (v["v1"] ** 3
            + apply_group_algebra_element(v["v31"], _combo(f, (2, 3), (1, 3))).scale(e ** a - 1)
            + apply_group_algebra_element(v["v32"], _combo(f, *v32_cycles)).scale(e ** b - 1))


def _rhs_y1y2() -> NcPoly:
    f, v = _v(3)
    e = f.e
    swap = Permutation.from_cycles(2, (1, 2))
    return v["v1"] * v["v1"] + v["v2"].scale(e - 1) + v["v2"].permute(swap).scale(e * e - 1)


def s_identity_catalog() -> dict[str, tuple[str, Callable[[], NcPoly]]]:
    """id -> (y-expression, builder of the right-hand side in x over Q(e_3))."""
    return {
        "y1y2": ("y1*y2", _rhs_y1y2),
        "y1^3": ("y1^3", lambda: cubic_rhs(2, 1)),
        "y2^3": ("y2^3", lambda: cubic_rhs(1, 2)),
    }


def identity_sides(catalog_id: str) -> tuple[NcPoly, NcPoly]:
    catalog = s_identity_catalog()
    if catalog_id not in catalog:
        raise KeyError(f"unknown identity {catalog_id!r}; known: {sorted(catalog)}")
    lhs_text, build = catalog[catalog_id]
    return y_to_x(parse_ncpoly(lhs_text, 3, CyclotomicField(3), "y")), build()


def verify_s_identity(catalog_id: str) -> bool:
    lhs, rhs = identity_sides(catalog_id)
    return lhs == rhs


def minimality_witnesses(gens: SGeneratorSet, targets: Sequence[NcPoly],
                         caps: Caps | None = None) -> dict[str, str | None]:
    """For each generator: the first target that fails membership once it is removed."""
    out = {}
    for i, name in enumerate(gens.names):
        reduced = gens.without(i)
        out[name] = None
        for t in targets:
            if not s_membership(t, reduced, caps):
                out[name] = str(t)
                break
    return out


def d3_targets_in_x() -> list[NcPoly]:
    """y0, y1y2, y1^3, y2^3 rewritten in the x-variables over Q(e_3)."""
    fld = CyclotomicField(3)
    return [y_to_x(parse_ncpoly(t, 3, fld, "y")) for t in ("y0", "y1*y2", "y1^3", "y2^3")]
