"""Spaces: canonical bases, ramification, duality, bilinear form, Witt bases."""

from fractions import Fraction
from math import factorial

import pytest

from g2spaces.polynomials import Poly
from g2spaces.spaces import (
    BasePointError,
    DegreePatternError,
    NotSelfDualError,
    PolySpace,
    SpaceError,
    canonicalize,
    degree_steps,
    degree_window_space,
    monomial_space,
    witt_basis,
    witt_scales,
)

X = Poly.x()
F = Fraction


def test_canonicalize_orders_and_reduces():
    basis = canonicalize([X + 1, 2 * X, X**3 + X])
    assert [p.degree for p in basis] == [0, 1, 3]
    assert all(p.lc == 1 for p in basis)
    # Echelon reduction: x^3 + x reduces to x^3 against the x row.
    assert basis[2] == X**3
    assert canonicalize([Poly.zero()]) == []
    # Dependent input collapses.
    assert len(canonicalize([X, 2 * X, X + X])) == 1


def test_space_membership_and_coords():
    sp = PolySpace([Poly.one(), X, X**2])
    assert sp.dim == 3
    assert sp.contains(X**2 + 3 * X - 1)
    assert sp.coords(X**2 + 3 * X - 1) == [F(-1), F(3), F(1)]
    assert not sp.contains(X**3)
    assert sp.element([1, 0, 2]) == 2 * X**2 + 1
    rebuilt = PolySpace.from_json(sp.to_json())
    assert rebuilt == sp


def test_degree_window_space_unramified():
    sp = degree_window_space()
    assert sp.degrees == (0, 1, 2, 3, 4, 5, 6)
    assert all(t == Poly.one() for t in sp.ramification)
    assert all(sp.U(k) == Poly.one() for k in range(1, 8))
    # Top Wronskian constant is the product of factorials 0! ... 6!.
    expect = 1
    for i in range(7):
        expect *= factorial(i)
    assert sp.top_constant() == expect


def test_monomial_space_ramification():
    sp = monomial_space(2, 3)
    assert sp.degrees == (0, 2, 3, 5, 7, 8, 10)
    # Divisor pattern x^(m-1), x^(n-m-1), x^(m-1) and its mirror.
    assert [str(t) for t in sp.ramification] == ["x", "1", "x", "x", "1", "x"]
    assert sp.U(7) == X**14
    sp13 = monomial_space(1, 3)
    assert [str(t) for t in sp13.ramification] == ["1", "x", "1", "1", "x", "1"]


def test_base_point_detection():
    sp = PolySpace([X, X**2, X**3])
    with pytest.raises(BasePointError):
        sp.U(1)


def test_divided_wronskian_membership_guard():
    sp = degree_window_space()
    with pytest.raises(SpaceError):
        sp.divided_wronskian([X, X**7])


def test_self_duality():
    assert degree_window_space().is_self_dual()
    assert monomial_space(2, 3).is_self_dual()
    # Degree 7 instead of 6 breaks duality.
    crooked = PolySpace([X**i for i in (0, 1, 2, 3, 4, 5, 7)])
    assert not crooked.is_self_dual()
    with pytest.raises(NotSelfDualError):
        crooked.bilinear_form()


def test_degree_window_gram_frozen():
    # In the monic basis 1, x, ..., x^6 the form pairs degree i with 6-i:
    # B(x^(i-1), x^(j-1)) = (i-1)! (j-1)! (-1)^(i+1) for i+j=8, else 0.
    B = degree_window_space().bilinear_form()
    g = B.gram
    for i in range(1, 8):
        for j in range(1, 8):
            if i + j == 8:
                expect = F(factorial(i - 1) * factorial(j - 1) * (-1) ** (i + 1))
            else:
                expect = F(0)
            assert g.rows[i - 1][j - 1] == expect
    assert B(Poly.one(), X**6) == 720
    assert B(X**3, X**3) == -36
    assert B.is_isotropic(Poly.one())


def test_degree_steps():
    assert degree_steps(degree_window_space()) == (0, 1, 2)
    assert degree_steps(monomial_space(2, 3)) == (0, 2, 3)
    with pytest.raises(DegreePatternError):
        degree_steps(PolySpace([X**i for i in (0, 1, 2, 3, 4, 5, 7)]))


def test_witt_scales_factorials():
    assert witt_scales(1, 2) == [F(1, factorial(i)) for i in range(7)]
    assert witt_scales(1, 3)[3] == F(1, 12)


def test_witt_basis_degree_window():
    wb = witt_basis(degree_window_space())
    # The standard basis x^i / i! survives unchanged.
    for i, v in enumerate(wb.vectors):
        assert v == Poly.monomial(i, F(1, factorial(i)))
    assert (wb.a, wb.m, wb.n) == (0, 1, 2)
    assert wb.coords(X**2) == [0, 0, 2, 0, 0, 0, 0]


def test_witt_basis_pairing_exact():
    for m, n in [(1, 2), (1, 3), (2, 3), (1, 4)]:
        sp = monomial_space(m, n)
        wb = witt_basis(sp)
        B = sp.bilinear_form()
        for i in range(7):
            for j in range(7):
                want = F((-1) ** i) if i + j == 6 else F(0)
                assert B(wb.vectors[i], wb.vectors[j]) == want
        scales = witt_scales(m, n)
        for v, s in zip(wb.vectors, scales):
            assert v.lc == s


def test_witt_basis_translated_space():
    # Translation x -> x + 1 of the (1, 2) space is the same space, so the
    # translated monomial spans must again produce an exact Witt basis.
    polys = [Poly.monomial(k).translate(1) for k in range(7)]
    sp = PolySpace(polys)
    wb = witt_basis(sp)
    B = sp.bilinear_form()
    assert B(wb.vectors[0], wb.vectors[6]) == 1
    assert B(wb.vectors[3], wb.vectors[3]) == -1


def test_pair_coords():
    from g2spaces.spaces import WittBasis

    x = [F(0)] * 7
    y = [F(0)] * 7
    x[0] = F(1)
    y[6] = F(1)
    assert WittBasis.pair_coords(x, y) == 1
    x2 = [F(0)] * 7
    x2[3] = F(1)
    assert WittBasis.pair_coords(x2, x2) == -1
