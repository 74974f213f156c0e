from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import given

from cyclinv.linalg import EchelonBasis, rank

vectors = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)),
                          st.integers(-3, 3).filter(bool).map(Fraction), max_size=5)


def dense_rank(vs, keys):
    """Gaussian elimination on a dense matrix, as an independent oracle."""
    rows = [[v.get(k, Fraction(0)) for k in keys] for v in vs]
    r = 0
    for col in range(len(keys)):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                c = rows[i][col] / rows[r][col]
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


@given(st.lists(vectors, max_size=8))
def test_rank_matches_dense_oracle(vs):
    keys = sorted({k for v in vs for k in v})
    assert rank(vs) == dense_rank(vs, keys)


@given(st.lists(vectors, max_size=6))
def test_rref_shape(vs):
    b = EchelonBasis()
    b.extend(vs)
    for p, row in b.rows.items():
        assert row[p] == 1
        assert min(row, key=b.key) == p
        for q in b.rows:
            if q != p:
                assert p not in b.rows[q]


@given(st.lists(vectors, min_size=1, max_size=6), st.lists(st.integers(-2, 2), min_size=6, max_size=6))
def test_express_reconstructs(vs, coeffs):
    b = EchelonBasis(track=True)
    for i, v in enumerate(vs):
        b.add(v, i)
    target = {}
    for c, v in zip(coeffs, vs):
        for k, x in v.items():
            target[k] = target.get(k, 0) + c * x
    target = {k: x for k, x in target.items() if x}
    combo = b.express(target)
    assert combo is not None
    rebuilt = {}
    for label, c in combo.items():
        for k, x in vs[label].items():
            rebuilt[k] = rebuilt.get(k, 0) + c * x
    assert {k: x for k, x in rebuilt.items() if x} == target


def test_non_member():
    b = EchelonBasis(track=True)
    b.add({(0,): 1, (1,): 1}, "a")
    assert b.express({(0,): 1}) is None
    assert b.contains({(0,): 2, (1,): 2})
