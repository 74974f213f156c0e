import hypothesis.strategies as st
import pytest
from hypothesis import given

from cyclinv.config import CapExceeded, Caps
from cyclinv.exact_arith import CyclotomicField, primitive_root_power
from cyclinv.free_algebra import NcPoly, parse_ncpoly
from cyclinv.group_actions import (
    FiniteMatrixGroup,
    SquareMatrix,
    cyclic_group,
    cyclic_shift_matrix,
    diagonal_generator,
    invariant_dimension_bruteforce,
    reynolds,
    substitute,
    trivial_group,
    x_to_y,
    x_to_y_basis_change,
    y_to_x,
)
from strategies import homogeneous_polys


@pytest.mark.parametrize("d", range(2, 7))
def test_shift_traces(d):
    rho = cyclic_shift_matrix(d)
    assert [(rho ** k).trace() for k in range(d + 1)] == [d] + [0] * (d - 1) + [d]
    assert (rho ** d).is_identity()
    assert rho.det() in (1, -1)


def test_shift_acts_on_monomials():
    rho = cyclic_shift_matrix(3)
    assert str(substitute(rho, parse_ncpoly("x1*x2", 3))) == "x2*x3"
    assert str(substitute(rho, parse_ncpoly("x3^2", 3))) == "x1^2"


@pytest.mark.parametrize("d", range(2, 7))
def test_basis_change_diagonalizes(d):
    b, binv = x_to_y_basis_change(d)
    assert (b @ binv).is_identity()
    rho = cyclic_shift_matrix(d, b.field)
    assert b @ rho @ binv == diagonal_generator(d)


@pytest.mark.parametrize("d", range(2, 6))
def test_shift_on_y_variables(d):
    fld = CyclotomicField(d)
    rho = cyclic_shift_matrix(d)
    for k in range(d):
        yk = y_to_x(NcPoly.variable(k, fld, d, "y"))
        assert substitute(rho, yk) == yk.scale(primitive_root_power(d, k))


@given(st.data(), st.integers(1, 3))
def test_basis_change_roundtrip(data, n):
    f = data.draw(homogeneous_polys(3, n)).embed(CyclotomicField(3))
    assert y_to_x(x_to_y(f)) == f


@given(st.data(), st.integers(1, 3))
def test_substitution_is_multiplicative(data, n):
    f, g = data.draw(homogeneous_polys(3, n)), data.draw(homogeneous_polys(3, 1))
    rho = cyclic_shift_matrix(3)
    assert substitute(rho, f * g) == substitute(rho, f) * substitute(rho, g)
    assert substitute(rho ** 2, f) == substitute(rho, substitute(rho, f))


@given(st.data(), st.integers(1, 3))
def test_reynolds_is_idempotent_projection(data, n):
    group = cyclic_group(3)
    f = data.draw(homogeneous_polys(3, n))
    r = reynolds(group, f)
    assert reynolds(group, r) == r
    assert all(substitute(g, r) == r for g in group.elements)


def test_reynolds_examples():
    g = cyclic_group(3)
    assert reynolds(g, parse_ncpoly("x1*x2", 3)) == parse_ncpoly("1/3*x1*x2 + 1/3*x2*x3 + 1/3*x3*x1", 3)
    y1 = y_to_x(NcPoly.variable(1, CyclotomicField(3), 3, "y"))
    assert reynolds(g, y1).is_zero()


def test_group_closure():
    g = cyclic_group(4)
    assert g.order == 4 and g.is_closed()
    assert cyclic_group(4, basis="y").order == 4
    assert trivial_group(3).order == 1
    with pytest.raises(CapExceeded):
        FiniteMatrixGroup.generated_by([cyclic_shift_matrix(5)], Caps(group_order=3))


# dimensions computed once by averaging traces of the substitution on words
@pytest.mark.parametrize("d, n, dim", [(3, 1, 1), (3, 3, 9), (4, 3, 16), (2, 5, 16), (5, 4, 125)])
def test_bruteforce_dimensions(d, n, dim):
    assert invariant_dimension_bruteforce(cyclic_group(d), n) == dim


def test_bruteforce_trivial_group_is_everything():
    assert invariant_dimension_bruteforce(trivial_group(3), 3) == 27


def test_ambient_cap():
    with pytest.raises(CapExceeded) as exc:
        invariant_dimension_bruteforce(cyclic_group(3), 5, Caps(ambient=100))
    assert exc.value.cap == "ambient"


def test_matrix_json_roundtrip():
    b, _ = x_to_y_basis_change(3)
    assert SquareMatrix.from_json(b.to_json(), b.field) == b
    assert b.inverse() @ b == SquareMatrix.identity(3, b.field)
