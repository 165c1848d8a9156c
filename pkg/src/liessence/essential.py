"""Essentiality of Lie-algebra elements and related decision procedures.

An element ``m`` is essential when ad(m) is diagonalizable over R and

    R m + [m, g] + [[m, g], [m, g]] = g,

equivalently when ``m`` together with the ad(m)-eigenvectors for nonzero
eigenvalues generates ``g`` as a Lie algebra. Both forms are computed
here; the second serves as a cross-check of the first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .core import (
    Element,
    LieAlgebra,
    StructureError,
    Subspace,
    bracket,
    bracket_span,
    lie_closure,
    span_reduce,
    subspace_sum,
)
from .spectral import (
    AdSpectrum,
    DiagonalizabilityVerdict,
    ad_matrix,
    ad_spectrum,
    char_poly,
    eigenspace,
    image,
    is_r_diagonalizable,
    nilpotency_index,
)


class CapabilityError(RuntimeError):
    """The requested computation cannot be carried out exactly."""


class NilpotencyError(CapabilityError):
    pass


class ConsistencyError(AssertionError):
    """Two independent routes to the same verdict disagree."""


ESSENTIAL = "essential"
NOT_ESSENTIAL = "not_essential"
UNKNOWN = "unknown"


@dataclass(frozen=True, eq=False)
class EssentialityReport:
    element: Element
    verdict: str
    diagonalizable: DiagonalizabilityVerdict
    spectrum: AdSpectrum
    eigen_decomposition: tuple  # (eigenvalue, Subspace) for rational eigenvalues
    gstar: Subspace
    gstar_bracket: Subspace
    span_sum_dim: int
    criterion_a_dim: int | None = None
    failure_reason: str | None = None
    notes: tuple = ()

    @property
    def essential(self) -> bool:
        return self.verdict == ESSENTIAL

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "diagonalizable": self.diagonalizable.value == "yes",
            "eigenvalues": self.spectrum.to_json(),
            "gstar_dim": self.gstar.dim,
            "span_sum_dim": self.span_sum_dim,
            "crosscheck_dim": self.criterion_a_dim,
            "failure_reason": self.failure_reason,
        }


def _require(a: LieAlgebra, m: Element) -> None:
    if m.algebra is not a and m.algebra != a:
        raise StructureError("element does not belong to this algebra")


def nonzero_eigenvectors(a: LieAlgebra, m: Element, spectrum: AdSpectrum | None = None,
                         M=None) -> list[Element]:
    """Basis vectors of all rational, nonzero-eigenvalue eigenspaces of ad(m)."""
    M = M if M is not None else ad_matrix(a, m)
    spectrum = spectrum if spectrum is not None else ad_spectrum(M)
    out = []
    for lam in spectrum.nonzero_rational():
        out.extend(eigenspace(M, lam).basis())
    return out


def criterion_a_dim(a: LieAlgebra, m: Element, spectrum: AdSpectrum | None = None,
                    M=None) -> int | None:
    """dim of the Lie algebra generated by m and its nonzero-eigenvalue eigenvectors.

    None when ad(m) has irrational real eigenvalues, whose eigenvectors
    cannot be written down exactly.
    """
    M = M if M is not None else ad_matrix(a, m)
    spectrum = spectrum if spectrum is not None else ad_spectrum(M)
    if spectrum.has_irrational_real:
        return None
    return lie_closure(a, [m] + nonzero_eigenvectors(a, m, spectrum, M)).dim


def is_essential(a: LieAlgebra, m: Element, crosscheck: bool = False) -> EssentialityReport:
    _require(a, m)
    if m.is_zero():
        raise ValueError("the zero element is not a one-parameter-group generator")
    M = ad_matrix(a, m)
    poly = char_poly(M)
    spectrum = ad_spectrum(M, poly)
    diag = is_r_diagonalizable(M, poly)
    gstar = image(M)
    gbr = bracket_span(gstar, gstar)
    total = subspace_sum(span_reduce(a, [m]), gstar, gbr)
    decomposition = tuple((lam, eigenspace(M, lam)) for lam, _, _ in spectrum.rational_eigenvalues)

    reason = None
    if diag.value != "yes":
        verdict = NOT_ESSENTIAL
        reason = f"ad is not diagonalizable over R ({diag.reason})"
    elif total.dim < a.dim:
        verdict = NOT_ESSENTIAL
        reason = f"R m + [m,g] + [[m,g],[m,g]] has dimension {total.dim} < {a.dim}"
    else:
        verdict = ESSENTIAL

    notes = []
    if spectrum.has_irrational_real:
        notes.append(f"{spectrum.nonrational_real_root_count} irrational real eigenvalue(s); "
                     "eigenvectors not materialized")

    crit_a = None
    if crosscheck:
        crit_a = criterion_a_dim(a, m, spectrum, M)
        if crit_a is None:
            notes.append("generation cross-check skipped: irrational spectrum")
        elif (crit_a == a.dim) != (verdict == ESSENTIAL):
            raise ConsistencyError(
                f"generation criterion gives dim {crit_a}/{a.dim} but the span criterion "
                f"says {verdict} for {m}")

    return EssentialityReport(m, verdict, diag, spectrum, decomposition, gstar, gbr,
                              total.dim, crit_a, reason, tuple(notes))


# ---------------------------------------------------------------------------
# Killing form


@dataclass(frozen=True)
class KillingReport:
    matrix: tuple
    signature: tuple  # (n_pos, n_neg, n_zero)
    negative_definite: bool
    nondegenerate: bool

    def to_json(self) -> dict:
        return {
            "matrix": [[str(x) for x in row] for row in self.matrix],
            "signature": list(self.signature),
            "negative_definite": self.negative_definite,
            "nondegenerate": self.nondegenerate,
        }


def killing_matrix(a: LieAlgebra) -> tuple:
    mats = a.ad_basis_matrices()
    n = a.dim
    # K_ij = sum_kl ad_i[k][l] * ad_j[l][k]
    sparse = [[(k, l, x) for k, row in enumerate(m) for l, x in enumerate(row) if x] for m in mats]
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            mj = mats[j]
            s = Fraction(0)
            for k, l, x in sparse[i]:
                y = mj[l][k]
                if y:
                    s += x * y
            out[i][j] = out[j][i] = s
    return tuple(tuple(r) for r in out)


def killing_form(a: LieAlgebra, x: Element, y: Element) -> Fraction:
    """trace(ad(x) ad(y))."""
    X = ad_matrix(a, x).matrix
    Y = ad_matrix(a, y).matrix
    n = a.dim
    return sum((X[k][l] * Y[l][k] for k in range(n) for l in range(n) if X[k][l]), Fraction(0))


def congruence_signature(sym) -> tuple[int, int, int]:
    """Inertia (n_pos, n_neg, n_zero) of a rational symmetric matrix.

    Symmetric Gaussian elimination over Q. A zero diagonal with a nonzero
    off-diagonal entry is repaired by the congruence e_i -> e_i + e_j.
    """
    A = [list(map(Fraction, r)) for r in sym]
    n = len(A)
    active = list(range(n))
    pos = neg = 0
    while active:
        piv = next((i for i in active if A[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i != j and A[i][j]), None)
            if pair is None:
                break
            i, j = pair
            for k in range(n):
                A[i][k] += A[j][k]
            for k in range(n):
                A[k][i] += A[k][j]
            piv = i
        d = A[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for r in active:
            f = A[r][piv] / d
            if f:
                for c in active:
                    A[r][c] -= f * A[piv][c]
        for r in active:
            A[r][piv] = A[piv][r] = Fraction(0)
    return pos, neg, n - pos - neg


def killing_report(a: LieAlgebra) -> KillingReport:
    K = killing_matrix(a)
    sig = congruence_signature(K)
    return KillingReport(K, sig, sig[1] == a.dim, sig[2] == 0)


@dataclass(frozen=True)
class CompactnessObstruction:
    obstructed: bool
    K_mm: Fraction


def compactness_obstruction(a: LieAlgebra, m: Element,
                            report: KillingReport | None = None) -> CompactnessObstruction:
    """A negative-definite Killing form rules out essential elements.

    Essential m would give K(m, m) = trace(ad(m)^2) = sum of squares of
    real eigenvalues >= 0, while negative definiteness forces K(m, m) < 0.
    """
    _require(a, m)
    report = report if report is not None else killing_report(a)
    return CompactnessObstruction(report.negative_definite, killing_form(a, m, m))


# ---------------------------------------------------------------------------
# conjugation and invariance closure


def conjugate_element(a: LieAlgebra, m: Element, n: Element, t=1,
                      order: int | None = None) -> Element:
    """exp(t ad(n)) m.

    Exact when ad(n) is nilpotent (the series terminates). Otherwise an
    explicit truncation ``order`` must be given and the partial sum up to
    ``ad(n)^order`` is returned, still in exact arithmetic.
    """
    _require(a, m)
    _require(a, n)
    t = Fraction(t)
    N = ad_matrix(a, n)
    idx = nilpotency_index(N)
    if idx is None:
        if order is None:
            raise NilpotencyError(
                f"ad({n}) is not nilpotent: ad^{a.dim} != 0, so exp(t ad) is not a finite sum")
        last = order
    else:
        last = idx - 1 if order is None else min(order, idx - 1)
    out = m
    term = m.coords
    for k in range(1, last + 1):
        term = N.apply(term)
        if not any(term):
            break
        out = out + Element(a, term) * (t ** k / factorial(k))
    return out


@dataclass(frozen=True, eq=False)
class InvarianceClosure:
    subspace: Subspace
    is_full: bool
    under_approximation: bool = False


def invariance_closure(a: LieAlgebra, seeds) -> InvarianceClosure:
    """Largest subalgebra certified to fix every vector the seeds fix.

    Alternates Lie closure with adjoining the rational nonzero-eigenvalue
    eigenvectors of ad(X) for each basis element X of the current space,
    in index order, until the dimension stops growing.
    """
    seeds = list(seeds)
    if not seeds:
        raise ValueError("invariance_closure needs at least one seed")
    space = lie_closure(a, seeds)
    under = False
    while True:
        extra = []
        grown = space
        for X in space.basis():
            M = ad_matrix(a, X)
            spec = ad_spectrum(M)
            if spec.has_irrational_real:
                under = True
            for v in nonzero_eigenvectors(a, X, spec, M):
                if not grown.contains(v):
                    extra.append(v)
                    grown = span_reduce(a, list(grown.rows) + [v.coords])
        if not extra:
            break
        space = lie_closure(a, space.basis() + extra)
        if space.is_full():
            break
    return InvarianceClosure(space, space.is_full(), under)
