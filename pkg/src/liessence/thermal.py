"""Temperatures and sl(2, R) structure forced by adjoint spectra.

For an essential generator ``m`` with a ladder relation [m, N] = lam N
the equilibrium inverse temperature is ``2*pi/|lam|``; it is only well
defined when every nonzero eigenvalue of ad(m) has the same modulus.

Triple convention
-----------------
An :class:`Sl2Triple` satisfies [M, N+] = lam N+, [M, N-] = -lam N- and
[N+, N-] = lam M exactly. With these relations (N+ + N-)/2 is *not* a
compact generator: ad((N+ + N-)/2)^2 M = +lam^2/2 M. The rotation stored
with each triple is R = N+/2 - N-, for which [R, M] = -lam (N+/2 + N-)
and ad(R)^2 M = -lam^2 M, so exp(t ad R) M = cos(lam t) M
- sin(lam t) (N+/2 + N-) and R has period 2*pi/lam. All coefficients
stay rational.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.linalg import expm

from .catalog import CatalogEntry
from .core import Element, LieAlgebra, bracket, format_element
from .essential import CapabilityError, is_essential
from .spectral import ad_matrix, ad_spectrum, char_poly, eigenspace
from .poly import Polynomial, poly_divmod, real_root_count


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class TwoPiOver:
    """The exact inverse temperature 2*pi / divisor."""

    divisor: Fraction

    def __float__(self) -> float:
        return 2 * math.pi / float(self.divisor)

    def __str__(self) -> str:
        return f"2π/{self.divisor}"

    def to_json(self) -> dict:
        return {"two_pi_over": str(self.divisor)}


@dataclass(frozen=True)
class TemperatureReport:
    moduli: tuple
    uniform: bool
    beta: TwoPiOver | None
    notes: str = ""
    eigenvalues: tuple = ()

    def to_json(self) -> dict:
        return {
            "beta": self.beta.to_json() if self.beta else None,
            "moduli": [str(x) for x in self.moduli],
            "uniform": self.uniform,
            "notes": self.notes,
        }


def _essential_spectrum(a: LieAlgebra, m: Element):
    rep = is_essential(a, m)
    if rep.spectrum.has_irrational_real:
        raise CapabilityError("ad(m) has irrational real eigenvalues; no exact temperature")
    if not rep.essential:
        raise PreconditionError(f"{m} is not essential: {rep.failure_reason}")
    return rep


def kms_temperature(a: LieAlgebra, m: Element) -> TemperatureReport:
    rep = _essential_spectrum(a, m)
    nonzero = rep.spectrum.nonzero_rational()
    moduli = tuple(sorted({abs(x) for x in nonzero}))
    if not moduli:
        return TemperatureReport((), False, None, "ad(m) has no nonzero eigenvalues")
    if len(moduli) == 1:
        note = "all nonzero ad-eigenvalues share one modulus"
        if sorted(nonzero) != sorted(-x for x in nonzero):
            note += "; eigenvalue multiset is not symmetric under negation"
        return TemperatureReport(moduli, True, TwoPiOver(moduli[0]), note, tuple(nonzero))
    forced = ", ".join(f"2π/{x}" for x in moduli)
    return TemperatureReport(
        moduli, False, None,
        f"non-uniform moduli: each ladder relation would force a different beta ({forced}); "
        "no state can be KMS for all of them",
        tuple(nonzero))


J_COMMUTING = "J-commuting"
J_FLIPPING = "J-flipping"
OTHER = "other"


@dataclass(frozen=True, eq=False)
class CommutationRow:
    element: Element
    eigenvalue: Fraction
    relation: str


def modular_commutation_table(a: LieAlgebra, m: Element) -> list[CommutationRow]:
    """Classify eigenvectors of ad(m) by how the modular conjugation treats them.

    Eigenvalue 0: J commutes with exp(tN). Eigenvalue +-|lam|: J exp(tN) =
    exp(-tN) J. Anything else is outside what the theory covers and is
    reported as ``other``.
    """
    temp = kms_temperature(a, m)
    if not temp.uniform:
        raise PreconditionError("modular commutation needs a uniform eigenvalue modulus")
    lam = temp.moduli[0]
    M = ad_matrix(a, m)
    rows = []
    for mu, _, _ in ad_spectrum(M).rational_eigenvalues:
        if mu == 0:
            rel = J_COMMUTING
        elif abs(mu) == lam:
            rel = J_FLIPPING
        else:
            rel = OTHER
        for v in eigenspace(M, mu).basis():
            rows.append(CommutationRow(v, mu, rel))
    return rows


# ---------------------------------------------------------------------------
# sl(2, R) triples


@dataclass(frozen=True, eq=False)
class Sl2Triple:
    M: Element
    N_plus: Element
    N_minus: Element
    lam: Fraction
    rotation: Element
    scale_note: str = ""

    def violations(self) -> list[str]:
        out = []
        if bracket(self.M, self.N_plus) != self.N_plus * self.lam:
            out.append("[M,N+] != lam N+")
        if bracket(self.M, self.N_minus) != self.N_minus * (-self.lam):
            out.append("[M,N-] != -lam N-")
        if bracket(self.N_plus, self.N_minus) != self.M * self.lam:
            out.append("[N+,N-] != lam M")
        return out

    def is_valid(self) -> bool:
        return not self.violations()

    def to_json(self) -> dict:
        return {
            "M": format_element(self.M),
            "N_plus": format_element(self.N_plus),
            "N_minus": format_element(self.N_minus),
            "lambda": str(self.lam),
            "rotation": format_element(self.rotation),
            "scale_note": self.scale_note,
        }


def triple_from_pair(a: LieAlgebra, m: Element, u: Element, v: Element, lam) -> Sl2Triple | None:
    """Normalize (u, v) in E(+lam) x E(-lam) into a triple, if [u, v] is a multiple of m."""
    lam = Fraction(lam)
    br = bracket(u, v)
    piv = next((i for i, x in enumerate(m.coords) if x), None)
    if piv is None or br.is_zero():
        return None
    c = br.coords[piv] / m.coords[piv]
    if br != m * c:
        return None
    n_minus = v * (lam / c)
    rot = u / 2 - n_minus
    note = f"N- rescaled by {lam / c} so that [N+,N-] = {lam}*M; rotation = N+/2 - N-"
    return Sl2Triple(m, u, n_minus, lam, rot, note)


def find_sl2_triples(a: LieAlgebra, m: Element, lam, random_trials: int = 64,
                     seed: int = 0) -> list[Sl2Triple]:
    """Search E(+lam) x E(-lam) for pairs completing m to an sl(2, R) triple.

    Every pair of eigenspace basis vectors is tried first. Then
    ``random_trials`` seeded combinations with coefficients in
    {-2, ..., 2} are tried. An empty result does not prove that no
    triple exists.
    """
    lam = Fraction(lam)
    if lam <= 0:
        raise PreconditionError("lambda must be positive")
    M = ad_matrix(a, m)
    plus = eigenspace(M, lam).basis()
    minus = eigenspace(M, -lam).basis()
    if not plus or not minus:
        raise PreconditionError(f"±{lam} are not both eigenvalues of ad({m})")
    found = []
    seen = set()

    def consider(u, v):
        t = triple_from_pair(a, m, u, v, lam)
        if t is not None:
            key = (t.N_plus.coords, t.N_minus.coords)
            if key not in seen:
                seen.add(key)
                found.append(t)

    for u in plus:
        for v in minus:
            consider(u, v)
    rng = random.Random(seed)
    for _ in range(random_trials):
        u = a.zero()
        for b in plus:
            u = u + b * rng.randint(-2, 2)
        v = a.zero()
        for b in minus:
            v = v + b * rng.randint(-2, 2)
        if u.is_zero() or v.is_zero():
            continue
        consider(u, v)
    return found


def triple_from_seeds(a: LieAlgebra, m: Element, n: Element, n_prime: Element, lam) -> Sl2Triple | None:
    """Build N+ = n + n', N- = n - n' (the boost/rotation recipe) and normalize."""
    return triple_from_pair(a, m, n + n_prime, n - n_prime, lam)


# ---------------------------------------------------------------------------
# rotation checks


@dataclass(frozen=True)
class RotationCheck:
    ad_spectrum_imaginary: bool
    rep_periodic: bool | None = None
    period_residual: float | None = None

    def to_json(self) -> dict:
        return {"ad_spectrum_imaginary": self.ad_spectrum_imaginary,
                "rep_periodic": self.rep_periodic,
                "period_residual": self.period_residual}


def has_no_nonzero_real_eigenvalues(a: LieAlgebra, x: Element) -> bool:
    p = char_poly(ad_matrix(a, x))
    t = Polynomial.of([1, 0])
    while not p.is_zero() and p.coeffs[-1] == 0 and p.degree > 0:
        p = poly_divmod(p, t)[0]
    return p.degree <= 0 or real_root_count(p) == 0


def rep_matrix(entry: CatalogEntry, x: Element) -> np.ndarray:
    rep = entry.defining_rep
    size = len(rep[0])
    out = np.zeros((size, size))
    for c, mat in zip(x.coords, rep):
        if c:
            out += float(c) * np.array(mat, dtype=float)
    return out


def check_rotation(entry: CatalogEntry, rotation: Element, lam, tol: float = 1e-9) -> RotationCheck:
    """Exact necessary condition plus, when a matrix representation exists,
    numerical periodicity of exp((2*pi/lam) R)."""
    imag = has_no_nonzero_real_eigenvalues(entry.algebra, rotation)
    if entry.defining_rep is None:
        return RotationCheck(imag)
    R = rep_matrix(entry, rotation)
    U = expm((2 * math.pi / float(lam)) * R)
    res = float(np.linalg.norm(U - np.eye(len(R)), ord=2))
    return RotationCheck(imag, res <= tol, res)


def rotation_compactness_check(entry: CatalogEntry, triple: Sl2Triple, tol: float = 1e-9) -> RotationCheck:
    return check_rotation(entry, triple.rotation, triple.lam, tol)


def rotation_target(triple: Sl2Triple, t: float) -> np.ndarray:
    """Closed form cos(lam t) M - sin(lam t) (N+/2 + N-) as float coordinates."""
    lam = float(triple.lam)
    M = np.array([float(x) for x in triple.M.coords])
    S = np.array([float(x) for x in (triple.N_plus / 2 + triple.N_minus).coords])
    return math.cos(lam * t) * M - math.sin(lam * t) * S


def rotation_conjugation_identity(a: LieAlgebra, triple: Sl2Triple, t: float, terms: int = 40) -> float:
    """max-norm residual between the truncated series exp(t ad R) M and the closed form."""
    R = np.array([[float(x) for x in row] for row in ad_matrix(a, triple.rotation).matrix])
    term = np.array([float(x) for x in triple.M.coords])
    acc = term.copy()
    for k in range(1, terms):
        term = (t / k) * (R @ term)
        acc = acc + term
    return float(np.max(np.abs(acc - rotation_target(triple, t))))


def rotation_conjugation_exact(a: LieAlgebra, triple: Sl2Triple, quarter_turns: int) -> Element:
    """Exact residual at t = quarter_turns * pi / (2 lam).

    On span{M, [R, M]} the map ad(R) squares to -lam^2, so
    exp(t ad R) M = cos(lam t) M + sin(lam t)/lam [R, M] whenever that
    relation holds; it is verified exactly first.
    """
    lam = triple.lam
    RM = bracket(triple.rotation, triple.M)
    if bracket(triple.rotation, RM) != triple.M * (-lam * lam):
        raise CapabilityError("ad(R)^2 M != -lam^2 M; the rotation is not periodic on M")
    cos, sin = [(1, 0), (0, 1), (-1, 0), (0, -1)][quarter_turns % 4]
    lhs = triple.M * cos + RM * Fraction(sin) / lam
    target = triple.M * cos - (triple.N_plus / 2 + triple.N_minus) * sin
    return lhs - target
