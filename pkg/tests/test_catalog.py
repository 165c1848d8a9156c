from fractions import Fraction

import numpy as np
import pytest

from liessence import catalog
from liessence.core import bracket, verify_jacobi

EXTRA = ("so:2,2", "sp:3", "su:4", "so:0,3")
ALL = catalog.GOLDEN_SPECS + catalog.COMPACT_SPECS + EXTRA


@pytest.fixture(scope="module", params=ALL)
def entry(request):
    return catalog.build(request.param)


def test_dimension(entry):
    assert entry.algebra.dim == catalog.expected_dim(entry.family, entry.params)


def test_jacobi(entry):
    assert verify_jacobi(entry.algebra).ok


def test_representation_matches_brackets(entry):
    """rep([x, y]) = [rep(x), rep(y)] on basis pairs."""
    if entry.defining_rep is None:
        pytest.skip("no matrix representation")
    a = entry.algebra
    reps = [np.array(r, dtype=object) for r in entry.defining_rep]

    def rep(x):
        out = reps[0] * 0
        for c, r in zip(x.coords, reps):
            if c:
                out = out + r * c
        return out

    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            lhs = rep(bracket(a.basis_element(i), a.basis_element(j)))
            rhs = reps[i].dot(reps[j]) - reps[j].dot(reps[i])
            assert (lhs == rhs).all(), (a.basis[i], a.basis[j])


def test_representation_is_faithful(entry):
    if entry.defining_rep is None:
        pytest.skip("no matrix representation")
    flat = np.array([np.array(r, dtype=float).ravel() for r in entry.defining_rep])
    assert np.linalg.matrix_rank(flat) == entry.algebra.dim


def test_labels():
    assert catalog.build("gl:2").algebra.basis == ("e11", "e12", "e21", "e22")
    assert catalog.build("sl:2").algebra.basis == ("e1", "f12", "f21")
    assert catalog.build("sp:1").algebra.basis == ("f11", "g11", "h11")
    assert catalog.build("so:1,2").algebra.basis == ("m01", "m02", "m12")
    assert catalog.build("so:3,0").algebra.basis == ("m12", "m13", "m23")
    assert catalog.build("poincare:2").algebra.basis[-3:] == ("p0", "p1", "p2")


def test_sample_brackets():
    a = catalog.build("so:1,2").algebra
    assert bracket(a["m01"], a["m02"]) == a["m12"]
    g = catalog.build("gl:3").algebra
    assert bracket(g["e12"], g["e23"]) == g["e13"]
    assert bracket(g["e12"], g["e21"]) == g["e11"] - g["e22"]
    p = catalog.build("poincare:3").algebra
    assert bracket(p["p1"], p["p2"]).is_zero()


def test_so_metric_signature_in_representation():
    """Each so(p,q) rep matrix X satisfies X^T g + g X = 0."""
    for p, q in ((1, 3), (2, 3), (3, 0)):
        e = catalog.build(f"so:{p},{q}")
        g = np.diag([1] * p + [-1] * q) if p else np.diag([-1] * q)
        for r in e.defining_rep:
            X = np.array(r, dtype=object)
            assert ((X.T.dot(g) + g.dot(X)) == 0).all()


def test_golden_flags():
    e = catalog.build("gl:3")
    assert [str(x) for x in e.golden_essential()] == ["e11", "e22", "e33"]
    assert dict((str(x), v) for x, v in e.known_essential)["e11 + e22 + e33"] is False
    assert catalog.build("su:2").no_essential_elements
    assert catalog.build("so:1,3").spec == "so:1,3"


@pytest.mark.parametrize("bad", ["gl", "gl:x", "so:3", "zz:2", "sl:1,2"])
def test_bad_names(bad):
    with pytest.raises(ValueError):
        catalog.build(bad)


def test_rational_structure_constants():
    a = catalog.build("su:3").algebra
    coeffs = {c for pairs in a.structure_constants.values() for _, c in pairs}
    assert all(isinstance(c, Fraction) for c in coeffs)
