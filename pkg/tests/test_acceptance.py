"""Acceptance gate: one PASS/FAIL line per criterion.

Run on its own with ``pytest tests/test_acceptance.py -v`` or
``python3 tests/test_acceptance.py``; the lines are repeated in the
pytest terminal summary.
"""

import math
import random
import subprocess
import sys
import time

import numpy as np
import pytest

from liessence import catalog
from liessence.core import LieAlgebra, verify_jacobi
from liessence.essential import (conjugate_element, invariance_closure, is_essential,
                                 killing_report)
from liessence.modular_toy import (density_state, gibbs_state, j_action_check, kms_verify,
                                   modular_covariance_check, passivity_sample, random_hermitian,
                                   random_matrix)
from liessence.spectral import ad_matrix, nilpotency_index
from liessence.sweeps import criteria_equivalence, random_nonzero_element
from liessence.thermal import (TwoPiOver, check_rotation, find_sl2_triples, kms_temperature,
                               rotation_conjugation_exact, rotation_conjugation_identity)


def _golden_labels():
    """Expected essential elements, listed independently of the catalog flags."""
    out = {}
    for n in (2, 3, 4):
        out[f"gl:{n}"] = [f"e{i}{i}" for i in range(1, n + 1)]
        out[f"sl:{n}"] = [f"e{i}" for i in range(1, n)]
    for n in (1, 2):
        out[f"sp:{n}"] = [f"h{i}{i}" for i in range(1, n + 1)]
    for n in (2, 3, 4):
        out[f"so:1,{n}"] = [f"m0{v}" for v in range(1, n + 1)]
    out["so:2,3"] = [f"m{mu}{nu}" for mu in (1, 2) for nu in (3, 4, 5)]
    for n in (2, 3):
        out[f"poincare:{n}"] = [f"m0{v}" for v in range(1, n + 1)]
    return out


ALL_SPECS = catalog.GOLDEN_SPECS + catalog.COMPACT_SPECS


def test_criterion_1_golden_sweep(acceptance_line):
    start = time.perf_counter()
    mismatches, total = [], 0
    for spec, labels in _golden_labels().items():
        a = catalog.build(spec).algebra
        for lab in labels:
            total += 1
            if not is_essential(a, a[lab]).essential:
                mismatches.append(f"{spec}:{lab}")
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 10
    acceptance_line(1, "golden essentiality sweep", ok,
                    f"{total} elements, {len(mismatches)} mismatches, {elapsed:.2f}s")
    assert not mismatches, mismatches
    assert elapsed < 10


def test_criterion_2_compactness_sweep(acceptance_line):
    failures = []
    for spec in ("so:3,0", "so:4,0", "su:2", "su:3"):
        a = catalog.build(spec).algebra
        if not killing_report(a).negative_definite:
            failures.append(f"{spec}: Killing form not negative definite")
        rng = random.Random(f"compact:{spec}")
        for _ in range(200):
            x = random_nonzero_element(a, rng)
            if is_essential(a, x).essential:
                failures.append(f"{spec}: {x}")
    acceptance_line(2, "compact algebras have no essential elements", not failures,
                    f"4 x 200 samples, {len(failures)} violations")
    assert not failures, failures


def test_criterion_3_generation_equals_span(acceptance_line):
    disagreements, checked, skipped = [], 0, 0
    for spec in ALL_SPECS:
        tally = criteria_equivalence(catalog.build(spec), n_random=100, seed=0)
        checked += tally.checked
        skipped += tally.skipped
        disagreements += [(spec, d) for d in tally.disagreements]
    rate = skipped / (checked + skipped)
    acceptance_line(3, "generation and span criteria agree", not disagreements,
                    f"{checked} checked, {skipped} skipped (skip rate {rate:.1%}), "
                    f"{len(disagreements)} disagreements")
    assert not disagreements, disagreements


def test_criterion_4_temperature_goldens(acceptance_line):
    failures = []
    cases = [(f"so:1,{n}", f"m0{v}") for n in (2, 3, 4) for v in range(1, n + 1)]
    cases += [("so:2,3", f"m{mu}{nu}") for mu in (1, 2) for nu in (3, 4, 5)]
    for spec, lab in cases:
        a = catalog.build(spec).algebra
        rep = kms_temperature(a, a[lab])
        if not (rep.uniform and rep.moduli == (1,) and rep.beta == TwoPiOver(1)):
            failures.append(f"{spec}:{lab} -> {rep}")
    a = catalog.build("sl:3").algebra
    rep = kms_temperature(a, a["e1"])
    if rep.uniform or set(rep.moduli) != {1, 2} or rep.beta is not None:
        failures.append(f"sl:3:e1 -> {rep}")
    acceptance_line(4, "temperature goldens", not failures,
                    f"{len(cases)} uniform cases at beta 2π/1, sl(3) e1 non-uniform")
    assert not failures, failures


def test_criterion_5_conjugation_transport(acceptance_line):
    failures, checked = [], 0
    for spec in catalog.GOLDEN_SPECS:
        entry = catalog.build(spec)
        a = entry.algebra
        directions = [b for b in a.basis_elements()
                      if nilpotency_index(ad_matrix(a, b)) is not None]
        for m in entry.golden_essential():
            for n in directions:
                for t in (1, -1, 2, -2):
                    checked += 1
                    moved = conjugate_element(a, m, n, t)
                    if not is_essential(a, moved).essential:
                        failures.append(f"{spec}: exp({t} ad {n}) {m}")
    acceptance_line(5, "conjugation preserves essentiality", not failures,
                    f"{checked} conjugates, {len(failures)} failures")
    assert not failures, failures


def test_criterion_6_invariance_closure(acceptance_line):
    dims = {}
    for spec, lab in (("so:1,2", "m01"), ("so:1,3", "m01"), ("so:3,0", "m12")):
        a = catalog.build(spec).algebra
        dims[spec] = (invariance_closure(a, [a[lab]]).subspace.dim, a.dim)
    ok = dims["so:1,2"] == (3, 3) and dims["so:1,3"] == (6, 6) and dims["so:3,0"][0] == 1
    acceptance_line(6, "invariance closure", ok,
                    ", ".join(f"{s} {d}/{n}" for s, (d, n) in dims.items()))
    assert ok, dims


def test_criterion_7_sl2_rotation(acceptance_line):
    failures, worst_series, worst_period, triples = [], 0.0, 0.0, 0
    for spec in ("so:1,2", "so:1,3"):
        entry = catalog.build(spec)
        a = entry.algebra
        for m in entry.golden_essential():
            found = [t for t in find_sl2_triples(a, m, 1) if t.is_valid()]
            if not found:
                failures.append(f"{spec}:{m} no triple")
                continue
            triples += len(found)
            for tr in found:
                lam = float(tr.lam)
                for t in (0.0, math.pi / (2 * lam), math.pi / lam):
                    worst_series = max(worst_series, rotation_conjugation_identity(a, tr, t))
                for q in (0, 1, 2):
                    if not rotation_conjugation_exact(a, tr, q).is_zero():
                        failures.append(f"{spec}:{m} exact identity at {q} quarter turns")
                chk = check_rotation(entry, tr.rotation, tr.lam)
                if not chk.ad_spectrum_imaginary:
                    failures.append(f"{spec}:{m} rotation has a real eigenvalue")
                if chk.period_residual is not None:
                    worst_period = max(worst_period, chk.period_residual)
    ok = not failures and worst_series <= 1e-9 and worst_period <= 1e-9
    acceptance_line(7, "sl(2,R) triples and rotation identities", ok,
                    f"{triples} triples, series residual {worst_series:.1e}, "
                    f"period residual {worst_period:.1e}")
    assert not failures, failures
    assert worst_series <= 1e-9 and worst_period <= 1e-9


def test_criterion_8_modular_toy(acceptance_line):
    start = time.perf_counter()
    worst = {"kms": 0.0, "cov": 0.0, "j": 0.0}
    wrong_min = math.inf
    violations = 0
    for i in range(20):
        n = (2, 3, 4)[i % 3]
        beta = (0.5, 1.0, 2.0)[(i // 3) % 3]
        rng = np.random.default_rng(1000 + i)
        s = gibbs_state(random_hermitian(n, rng), beta)
        A, B = random_matrix(n, rng), random_matrix(n, rng)
        for t in (0.0, 0.3, 1.0, 7.0):
            worst["kms"] = max(worst["kms"], kms_verify(s, A, B, t))
            wrong_min = min(wrong_min, kms_verify(s, A, B, t, beta=2 * beta))
        for t in (0.3, 1.0, 7.0):
            worst["cov"] = max(worst["cov"], modular_covariance_check(s, t))
        worst["j"] = max(worst["j"], j_action_check(s, A))
        violations += passivity_sample(s, 1000, rng_seed=i).violations
    inverted = density_state(np.diag([0.0, 1.0]), np.diag([1 / 3, 2 / 3]))
    inv = passivity_sample(inverted, 1000, rng_seed=0)
    elapsed = time.perf_counter() - start
    ok = (max(worst.values()) <= 1e-9 and wrong_min > 1e-3 and violations == 0
          and inv.violations >= 1 and abs(inv.min_gap + 1 / 3) <= 1e-9 and elapsed < 30)
    acceptance_line(8, "finite-dimensional modular checks", ok,
                    f"kms {worst['kms']:.1e}, wrong-beta min {wrong_min:.3g}, "
                    f"covariance {worst['cov']:.1e}, J {worst['j']:.1e}, "
                    f"passivity violations {violations}, inverted gap {inv.min_gap:.12f}, "
                    f"{elapsed:.1f}s")
    assert ok


def _cli(*args):
    proc = subprocess.run([sys.executable, "-m", "liessence", *args],
                          capture_output=True, text=True, check=True)
    return proc.stdout


def test_criterion_9_infrastructure(acceptance_line, tmp_path):
    failures = []
    for spec in ALL_SPECS:
        a = catalog.build(spec).algebra
        if not verify_jacobi(a).ok:
            failures.append(f"{spec}: Jacobi")
        text = a.dumps()
        if LieAlgebra.loads(text).dumps() != text:
            failures.append(f"{spec}: round trip")
        path = tmp_path / f"{spec.replace(':', '_').replace(',', '_')}.json"
        _cli("export", "--algebra", spec, "--out", str(path))
        if _cli("export", "--algebra", str(path)) != path.read_text():
            failures.append(f"{spec}: CLI re-export")
    commands = [
        ("catalog", "--output", "json"),
        ("essential", "--algebra", "so:1,3", "--element", "m01", "--crosscheck", "--output", "json"),
        ("temperature", "--algebra", "sl:3", "--element", "e1", "--output", "json"),
        ("sl2", "--algebra", "so:1,2", "--element", "m01", "--output", "json"),
        ("closure", "--algebra", "so:1,3", "--element", "m01", "--invariance"),
        ("killing", "--algebra", "poincare:3"),
        ("modular-demo", "--n", "3", "--beta", "1.0", "--seed", "42", "--trials", "200"),
    ]
    for cmd in commands:
        if _cli(*cmd) != _cli(*cmd):
            failures.append(f"nondeterministic: {' '.join(cmd)}")
    acceptance_line(9, "Jacobi, byte-identical round trip, CLI determinism", not failures,
                    f"{len(ALL_SPECS)} algebras, {len(commands)} commands, {len(failures)} failures")
    assert not failures, failures


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
