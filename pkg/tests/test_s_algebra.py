import json

import hypothesis.strategies as st
import pytest
from hypothesis import given

from cyclinv.config import CapExceeded, Caps
from cyclinv.exact_arith import QQ, CyclotomicField
from cyclinv.free_algebra import NcPoly, Permutation, parse_ncpoly
from cyclinv.invariant_core import invariant_monomial_basis
from cyclinv.s_algebra import (
    SGeneratorSet,
    cubic_rhs,
    cyclic_s_generators,
    d3_targets_in_x,
    deficiency_reports,
    express_invariant_via_s_generators,
    identity_sides,
    minimality_witnesses,
    s_component_span,
    s_generator_deficiency,
    s_identity_catalog,
    s_membership,
    verify_s_identity,
    x_basis_s_generators_d3,
)

E3 = CyclotomicField(3)


def variables(d):
    return SGeneratorSet(tuple(NcPoly.variable(i, QQ, d) for i in range(d)))


@pytest.mark.parametrize("d, n", [(2, 3), (3, 2), (3, 3)])
def test_span_of_all_variables_is_everything(d, n):
    assert s_component_span(variables(d), n).rank == d ** n


def test_span_of_y0_alone():
    y0 = SGeneratorSet((parse_ncpoly("y0", 3),))
    assert s_component_span(y0, 2).rank == 1


@pytest.mark.parametrize("d, max_n", [(3, 5), (4, 4), (5, 3)])
def test_generation(d, max_n):
    gens = cyclic_s_generators(d)
    for n in range(1, max_n + 1):
        span = s_component_span(gens, n)
        assert span.rank == d ** (n - 1)
        # the span lies in the invariant subspace
        inv = {w.letters for w in invariant_monomial_basis(d, n)}
        assert all(set(row) <= inv for row in span.basis.rows.values())


def test_generator_names():
    assert cyclic_s_generators(3).names == ("y0", "y1*y2", "y1^3", "y2^3")
    assert len(cyclic_s_generators(4)) == 7
    assert x_basis_s_generators_d3().names == ("v1", "v2", "v31", "v32")


def test_generator_set_validation():
    with pytest.raises(ValueError):
        SGeneratorSet((parse_ncpoly("x1 + x1*x2", 2),))
    with pytest.raises(ValueError):
        SGeneratorSet(())
    with pytest.raises(ValueError):
        SGeneratorSet((parse_ncpoly("x1", 2), parse_ncpoly("x1", 3)))


def test_generator_set_json_roundtrip(tmp_path):
    gens = x_basis_s_generators_d3().embed(E3)
    path = tmp_path / "g.json"
    path.write_text(json.dumps(gens.to_json()))
    back = SGeneratorSet.load(path)
    assert back.generators == gens.generators and back.names == gens.names
    bare = SGeneratorSet.from_json(["x1 + x2 + x3"])
    assert bare.field == QQ and bare.alphabet_size == 3


def test_y1y2_certificate():
    gens = x_basis_s_generators_d3().embed(E3)
    v12 = SGeneratorSet(gens.generators[:2], gens.names[:2])
    res = s_membership(d3_targets_in_x()[1], v12)
    assert res and res.certificate.verify()
    e = E3.e
    terms = {c.describe(v12): k for k, c in res.certificate.terms}
    assert terms == {"(v1)*(v1)": 1, "v2": e - 1, "v2 o (12)": e * e - 1}
    data = res.certificate.to_json()
    assert data["member"] and data["field"] == "Q(e_3)"


def test_y1_cubed_needs_v32():
    gens = x_basis_s_generators_d3().embed(E3)
    assert not s_membership(d3_targets_in_x()[2], gens.without(3))
    assert s_membership(d3_targets_in_x()[2], gens)


def test_rational_target_is_embedded():
    gens = x_basis_s_generators_d3().embed(E3)
    assert s_membership(parse_ncpoly("x1 + x2 + x3", 3), gens)


@pytest.mark.parametrize("gens", [cyclic_s_generators(3), x_basis_s_generators_d3(), cyclic_s_generators(4)])
def test_each_generator_is_a_member(gens):
    for g in gens.generators:
        res = s_membership(g, gens)
        assert res and res.certificate.verify()


@given(st.data())
def test_certificates_reevaluate(data):
    gens = x_basis_s_generators_d3()
    n = data.draw(st.integers(2, 3))
    span = s_component_span(gens, n, track=True)
    picks = data.draw(st.lists(st.sampled_from(span.candidates), min_size=1, max_size=3))
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=len(picks), max_size=len(picks)))
    target = NcPoly.zero(QQ, 3)
    for c, cand in zip(coeffs, picks):
        target = target + cand.evaluate(gens).scale(c)
    if target.is_zero():
        return
    res = s_membership(target, gens)
    assert res and res.certificate.evaluate() == target


def test_minimality_witnesses():
    witnesses = minimality_witnesses(x_basis_s_generators_d3().embed(E3), d3_targets_in_x())
    assert all(w is not None for w in witnesses.values())


def test_express_examples():
    cert = express_invariant_via_s_generators((2, 1), 3)
    assert cert.sigma == Permutation.parse("(12)", 2) and cert.tau.is_identity()
    assert cert.verify()
    cert = express_invariant_via_s_generators((1, 2, 0), 3)
    assert cert.factors == [(0,), (1, 2)] and cert.verify()
    with pytest.raises(ValueError):
        express_invariant_via_s_generators((1, 1), 3)


@given(st.integers(2, 5), st.lists(st.integers(0, 4), min_size=0, max_size=7))
def test_express_random_words(d, letters):
    letters = [a % d for a in letters]
    letters.append((-sum(letters)) % d)
    assert express_invariant_via_s_generators(letters, d).verify()


def test_deficiency_values():
    y = deficiency_reports(3, cyclic_s_generators(3), 4)
    x = deficiency_reports(3, x_basis_s_generators_d3(), 4)
    assert [r.generators_needed for r in y] == [r.generators_needed for r in x] == [1, 1, 2, 0]
    # the plain codimension counts Sym_2-images of y1*y2 separately
    assert [r.codimension for r in y] == [r.codimension for r in x] == [1, 2, 2, 0]
    assert s_generator_deficiency(3, cyclic_s_generators(3), 3) == 2


def test_deficiency_d4_matches_generator_degrees():
    reports = deficiency_reports(4, cyclic_s_generators(4), 4)
    assert [r.generators_needed for r in reports] == [1, 2, 2, 2]


@pytest.mark.parametrize("key", ["y1y2", "y1^3", "y2^3"])
def test_identity_catalog(key):
    assert key in s_identity_catalog()
    assert verify_s_identity(key)
    lhs, rhs = identity_sides(key)
    assert lhs.field == rhs.field == E3


def test_cubic_identity_with_23_13_on_v32_fails():
    lhs, _ = identity_sides("y1^3")
    assert lhs != cubic_rhs(2, 1, v32_cycles=((2, 3), (1, 3)))


def test_unknown_identity():
    with pytest.raises(KeyError):
        verify_s_identity("y0^7")


def test_degree_cap():
    with pytest.raises(CapExceeded) as exc:
        s_component_span(cyclic_s_generators(3), 3, Caps(s_degree=2))
    assert exc.value.cap == "s-degree"
    with pytest.raises(CapExceeded):
        s_component_span(cyclic_s_generators(3), 3, Caps(ambient=10))
