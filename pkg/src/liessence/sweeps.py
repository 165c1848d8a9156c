"""Catalog-wide sweeps shared by the acceptance suite and the benchmark."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import CatalogEntry
from .core import Element, LieAlgebra
from .essential import ESSENTIAL, criterion_a_dim, is_essential
from .spectral import ad_matrix, ad_spectrum

_COEFFS = (Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(1, 2), Fraction(1), Fraction(2))


def random_element(a: LieAlgebra, rng: random.Random, max_support: int = 3) -> Element:
    """Nonzero element with a few small rational coefficients.

    Sparse supports keep a useful share of samples with rational
    ad-spectra; dense random elements almost never have one.
    """
    k = rng.randint(1, min(max_support, a.dim))
    coords = [Fraction(0)] * a.dim
    for i in rng.sample(range(a.dim), k):
        coords[i] = rng.choice(_COEFFS)
    return a.element(coords)


def random_nonzero_element(a: LieAlgebra, rng: random.Random) -> Element:
    """Dense element with integer coefficients in [-3, 3], never zero."""
    while True:
        x = a.element([rng.randint(-3, 3) for _ in range(a.dim)])
        if not x.is_zero():
            return x


@dataclass
class EquivalenceTally:
    checked: int = 0
    skipped: int = 0
    essential: int = 0
    disagreements: list = field(default_factory=list)

    @property
    def skip_rate(self) -> float:
        total = self.checked + self.skipped
        return self.skipped / total if total else 0.0


def criteria_equivalence(entry: CatalogEntry, n_random: int = 100, seed: int = 0) -> EquivalenceTally:
    """Compare the span criterion with the generation criterion element by element."""
    a = entry.algebra
    rng = random.Random(f"{seed}:{entry.spec}")
    elements = a.basis_elements() + [random_element(a, rng) for _ in range(n_random)]
    tally = EquivalenceTally()
    for x in elements:
        M = ad_matrix(a, x)
        spec = ad_spectrum(M)
        if spec.has_irrational_real:
            tally.skipped += 1
            continue
        rep = is_essential(a, x)
        dim_a = criterion_a_dim(a, x, spec, M)
        tally.checked += 1
        ess_b = rep.verdict == ESSENTIAL
        tally.essential += ess_b
        if (dim_a == a.dim) != ess_b:
            tally.disagreements.append((str(x), dim_a, rep.verdict))
    return tally
