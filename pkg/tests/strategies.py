"""Shared hypothesis strategies."""

from fractions import Fraction

import hypothesis.strategies as st

from cyclinv.exact_arith import CycNumber, euler_phi
from cyclinv.free_algebra import NcPoly, Permutation
from cyclinv.exact_arith import QQ

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
orders = st.integers(min_value=2, max_value=8)


@st.composite
def cyc_numbers(draw, d):
    coeffs = draw(st.lists(small_fractions, min_size=euler_phi(d), max_size=euler_phi(d)))
    return CycNumber(d, coeffs)


@st.composite
def permutations(draw, n):
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def homogeneous_polys(draw, d, n, max_terms=4):
    words = draw(st.lists(st.tuples(*[st.integers(0, d - 1)] * n), min_size=1, max_size=max_terms))
    coeffs = draw(st.lists(st.integers(-3, 3).filter(bool).map(Fraction), min_size=len(words), max_size=len(words)))
    return NcPoly(QQ, d, dict(zip(words, coeffs)))
