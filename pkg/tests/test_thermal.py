import math
from fractions import Fraction

import pytest

from liessence import catalog
from liessence.core import bracket
from liessence.essential import CapabilityError
from liessence.thermal import (J_COMMUTING, J_FLIPPING, OTHER, PreconditionError, TwoPiOver,
                               check_rotation, find_sl2_triples, has_no_nonzero_real_eigenvalues,
                               kms_temperature, modular_commutation_table,
                               rotation_conjugation_exact, rotation_conjugation_identity,
                               triple_from_pair, triple_from_seeds)


def entry(spec):
    return catalog.build(spec)


def test_two_pi_over():
    b = TwoPiOver(Fraction(1))
    assert str(b) == "2π/1"
    assert b.to_json() == {"two_pi_over": "1"}
    assert math.isclose(float(TwoPiOver(Fraction(2))), math.pi)


def test_boost_temperature():
    a = entry("so:1,3").algebra
    rep = kms_temperature(a, a["m01"])
    assert rep.uniform and rep.beta == TwoPiOver(1)
    assert rep.to_json()["beta"] == {"two_pi_over": "1"}


def test_scaled_boost_changes_temperature():
    a = entry("so:1,2").algebra
    rep = kms_temperature(a, a["m01"] * 3)
    assert rep.moduli == (3,) and str(rep.beta) == "2π/3"


def test_non_uniform_moduli():
    a = entry("sl:3").algebra
    rep = kms_temperature(a, a["e1"])
    assert not rep.uniform and rep.beta is None
    assert rep.moduli == (1, 2)
    assert "2π/1" in rep.notes and "2π/2" in rep.notes


def test_temperature_preconditions():
    a = entry("so:3,0").algebra
    with pytest.raises(PreconditionError):
        kms_temperature(a, a["m12"])
    g = entry("gl:2").algebra
    with pytest.raises(CapabilityError):
        kms_temperature(g, g["e11"] + g["e12"] + g["e21"])


def test_commutation_table():
    a = entry("so:1,2").algebra
    rows = modular_commutation_table(a, a["m01"])
    kinds = sorted(r.relation for r in rows)
    assert kinds == [J_COMMUTING, J_FLIPPING, J_FLIPPING]
    assert OTHER not in kinds
    with pytest.raises(PreconditionError):
        modular_commutation_table(entry("sl:3").algebra, entry("sl:3").algebra["e1"])


@pytest.mark.parametrize("spec,label,lam", [
    ("sl:2", "e1", 2), ("so:1,2", "m01", 1), ("so:1,3", "m02", 1), ("poincare:3", "m01", 1),
])
def test_triples_are_exact(spec, label, lam):
    a = entry(spec).algebra
    found = find_sl2_triples(a, a[label], lam)
    assert found
    for t in found:
        assert t.is_valid(), t.violations()
        assert bracket(t.rotation, bracket(t.rotation, t.M)) == t.M * (-t.lam ** 2)


def test_triple_search_preconditions():
    a = entry("so:1,2").algebra
    with pytest.raises(PreconditionError):
        find_sl2_triples(a, a["m01"], 0)
    with pytest.raises(PreconditionError):
        find_sl2_triples(a, a["m01"], 2)


def test_negative_pairing_is_rescaled():
    a = entry("sl:2").algebra
    t = triple_from_pair(a, a["e1"], a["f12"], -a["f21"], 2)
    assert t is not None and t.is_valid()
    assert triple_from_pair(a, a["e1"], a["f12"], a.zero(), 2) is None


def test_triple_from_boost_seeds():
    a = entry("so:1,2").algebra
    # eigenvectors of ad(m01) for +-1 are m02 -+ m12 (up to sign)
    t = triple_from_seeds(a, a["m01"], a["m02"], a["m12"], 1)
    if t is None:
        t = triple_from_seeds(a, a["m01"], a["m02"], -a["m12"], 1)
    assert t is not None and t.is_valid()


def test_rotation_checks():
    e = entry("so:1,2")
    a = e.algebra
    t = find_sl2_triples(a, a["m01"], 1)[0]
    chk = check_rotation(e, t.rotation, t.lam)
    assert chk.ad_spectrum_imaginary and chk.rep_periodic
    for s in (0.0, math.pi / 2, math.pi, 2 * math.pi, 1.234):
        assert rotation_conjugation_identity(a, t, s) <= 1e-9
    for q in range(4):
        assert rotation_conjugation_exact(a, t, q).is_zero()


def test_boost_is_not_a_rotation():
    e = entry("so:1,2")
    assert not has_no_nonzero_real_eigenvalues(e.algebra, e.algebra["m01"])
    assert not check_rotation(e, e.algebra["m01"], 1).rep_periodic


def test_sl2_rotation_is_double_covered():
    # exp(pi R) = -1 in the defining rep, so the period there is 2*(2 pi / lam)
    e = entry("sl:2")
    a = e.algebra
    t = find_sl2_triples(a, a["e1"], 2)[0]
    chk = check_rotation(e, t.rotation, t.lam)
    assert chk.ad_spectrum_imaginary and not chk.rep_periodic
    assert check_rotation(e, t.rotation, t.lam / 2).rep_periodic
