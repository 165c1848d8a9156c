from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from liessence import catalog
from liessence.core import LieAlgebra
from liessence.poly import Polynomial
from liessence.spectral import (ad_matrix, ad_spectrum, char_poly, eigenspace, image,
                                is_r_diagonalizable, nilpotency_index)

GL2 = catalog.build("gl:2").algebra
SO3 = catalog.build("so:3,0").algebra
SL2 = catalog.build("sl:2").algebra
SL3 = catalog.build("sl:3").algebra


def test_gl2_diagonal_element():
    M = ad_matrix(GL2, GL2["e11"])
    assert char_poly(M) == Polynomial.of([1, 0, -1, 0, 0])
    spec = ad_spectrum(M)
    assert spec.rational_eigenvalues == ((-1, 1, 1), (0, 2, 2), (1, 1, 1))
    assert is_r_diagonalizable(M)


def test_rotation_has_complex_pair():
    M = ad_matrix(SO3, SO3["m12"])
    assert str(char_poly(M)) == "t^3 + t"
    spec = ad_spectrum(M)
    assert spec.complex_root_pair_count == 1 and not spec.all_real
    verdict = is_r_diagonalizable(M)
    assert verdict.value == "no" and "non-real" in verdict.reason


def test_nilpotent_element_is_not_diagonalizable():
    M = ad_matrix(SL2, SL2["f12"])
    assert ad_spectrum(M).rational_eigenvalues == ((0, 3, 1),)
    verdict = is_r_diagonalizable(M)
    assert verdict.value == "no" and "square-free" in verdict.reason
    assert nilpotency_index(M) == 3
    assert nilpotency_index(ad_matrix(SL2, SL2["e1"])) is None


def test_irrational_spectrum_is_counted():
    a = catalog.build("gl:2").algebra
    x = a["e11"] + a["e12"] + a["e21"]
    spec = ad_spectrum(ad_matrix(a, x))
    # eigenvalues of ad are differences of eigenvalues of [[1,1],[1,0]]: 0, 0, ±sqrt(5)
    assert spec.nonrational_real_root_count == 2
    assert spec.rational_eigenvalues == ((0, 2, 2),)
    assert is_r_diagonalizable(ad_matrix(a, x))


def test_image_and_eigenspaces():
    M = ad_matrix(GL2, GL2["e11"])
    assert image(M).dim == 2
    assert eigenspace(M, 1).basis() == [GL2["e12"]]
    assert eigenspace(M, -1).basis() == [GL2["e21"]]
    assert eigenspace(M, 5).dim == 0


coords = st.lists(st.integers(-2, 2), min_size=8, max_size=8)


@given(coords, coords, st.integers(-3, 3))
def test_ad_is_linear(x, y, c):
    X, Y = SL3.element(x), SL3.element(y)
    lhs = ad_matrix(SL3, X * c + Y).matrix
    mx, my = ad_matrix(SL3, X).matrix, ad_matrix(SL3, Y).matrix
    assert all(lhs[i][j] == c * mx[i][j] + my[i][j] for i in range(8) for j in range(8))


@given(coords)
def test_spectrum_agrees_with_floating_point(x):
    X = SL3.element(x)
    if X.is_zero():
        return
    M = ad_matrix(SL3, X)
    spec = ad_spectrum(M)
    ev = np.linalg.eigvals(np.array([[float(v) for v in r] for r in M.matrix]))
    n_real_num = int(np.sum(np.abs(ev.imag) < 1e-6))
    n_rational = sum(am for _, am, _ in spec.rational_eigenvalues)
    # defective eigenvalues blur numerically; only compare the count of real roots
    # when every eigenvalue is simple
    if len(spec.rational_eigenvalues) == n_rational and spec.nonrational_real_root_count == 0:
        assert n_rational + 2 * spec.complex_root_pair_count == 8
        if spec.complex_root_pair_count == 0:
            assert n_real_num == 8


@given(coords)
def test_diagonalizable_iff_eigenspaces_fill(x):
    X = SL3.element(x)
    M = ad_matrix(SL3, X)
    spec = ad_spectrum(M)
    if spec.has_irrational_real:
        return
    full = sum(g for _, _, g in spec.rational_eigenvalues) == SL3.dim
    assert bool(is_r_diagonalizable(M)) == full


def test_rational_scaling_of_ad():
    a = LieAlgebra(["x", "y"], {(0, 1): [0, Fraction(1, 3)]})
    M = ad_matrix(a, a["x"] * Fraction(3, 2))
    spec = ad_spectrum(M)
    assert spec.rational_eigenvalues == ((0, 1, 1), (Fraction(1, 2), 1, 1))
    assert is_r_diagonalizable(M)
