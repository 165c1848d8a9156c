"""Exact spectral analysis of adjoint maps."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import kernels
from .core import Element, LieAlgebra, StructureError, Subspace, nullspace, span_reduce
from .poly import (
    Polynomial,
    poly_divmod,
    rational_roots,
    real_root_count,
    squarefree_decomposition,
    squarefree_part,
)


@dataclass(frozen=True, eq=False)
class AdMatrix:
    algebra: LieAlgebra
    element: Element
    matrix: tuple  # dim x dim Fractions; column j = coords of [element, b_j]

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def scaled_integer(self) -> tuple[int, list[list[int]]]:
        """(D, D*matrix) with D the lcm of all denominators."""
        den = 1
        for row in self.matrix:
            for x in row:
                if x.denominator != 1:
                    den = lcm(den, x.denominator)
        return den, [[x.numerator * (den // x.denominator) for x in row] for row in self.matrix]

    def apply(self, v):
        return tuple(sum((r[j] * v[j] for j in range(self.dim) if v[j]), Fraction(0))
                     for r in self.matrix)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.matrix)


def ad_matrix(a: LieAlgebra, m: Element) -> AdMatrix:
    if m.algebra is not a and m.algebra != a:
        raise StructureError("element does not belong to this algebra")
    n = a.dim
    mats = a.ad_basis_matrices()
    out = [[Fraction(0)] * n for _ in range(n)]
    for i, c in enumerate(m.coords):
        if not c:
            continue
        mi = mats[i]
        for r in range(n):
            row_in, row_out = mi[r], out[r]
            for s in range(n):
                if row_in[s]:
                    row_out[s] += c * row_in[s]
    return AdMatrix(a, m, tuple(tuple(r) for r in out))


def char_poly(M: AdMatrix) -> Polynomial:
    """det(tI - ad) via Berkowitz on the integer-scaled matrix.

    If B = D*A then the coefficient of t^(n-k) in det(tI - A) is b_k / D^k.
    """
    den, b = M.scaled_integer()
    cb = kernels.charpoly_int(b)
    return Polynomial.of([Fraction(c, den ** k) for k, c in enumerate(cb)])


@dataclass(frozen=True)
class AdSpectrum:
    rational_eigenvalues: tuple  # of (eigenvalue, algebraic mult, geometric mult)
    nonrational_real_root_count: int
    complex_root_pair_count: int
    certification: str = "exact"

    @property
    def has_irrational_real(self) -> bool:
        return self.nonrational_real_root_count > 0

    @property
    def all_real(self) -> bool:
        return self.complex_root_pair_count == 0

    def nonzero_rational(self) -> list[Fraction]:
        return [lam for lam, _, _ in self.rational_eigenvalues if lam != 0]

    def to_json(self) -> list[dict]:
        return [{"eigenvalue": str(lam), "alg_mult": am, "geo_mult": gm}
                for lam, am, gm in self.rational_eigenvalues]


def ad_spectrum(M: AdMatrix, poly: Polynomial | None = None) -> AdSpectrum:
    p = poly if poly is not None else char_poly(M)
    roots = rational_roots(p)
    rest = p
    eig = []
    for lam, mult in roots:
        lin = Polynomial.of([1, -lam])
        for _ in range(mult):
            rest = poly_divmod(rest, lin)[0]
        geo = eigenspace(M, lam).dim
        eig.append((lam, mult, geo))
    real_with_mult = 0
    for f, k in squarefree_decomposition(rest):
        real_with_mult += k * real_root_count(f)
    pairs = (rest.degree - real_with_mult) // 2
    return AdSpectrum(tuple(eig), real_with_mult, pairs, "exact")


@dataclass(frozen=True)
class DiagonalizabilityVerdict:
    value: str  # "yes" | "no" | "unknown"
    reason: str
    certified: bool = True

    def __bool__(self) -> bool:
        return self.value == "yes"


def _poly_at_matrix_is_zero(coeffs_int: list[int], b: list[list[int]]) -> bool:
    n = len(b)
    acc = [[coeffs_int[0] if i == j else 0 for j in range(n)] for i in range(n)]
    for c in coeffs_int[1:]:
        acc = kernels.matmul_int(acc, b)
        if c:
            for i in range(n):
                acc[i][i] += c
    return not any(any(r) for r in acc)


def is_r_diagonalizable(M: AdMatrix, poly: Polynomial | None = None) -> DiagonalizabilityVerdict:
    """Exact decision: minimal polynomial square-free and every root real.

    The minimal polynomial is square-free iff the square-free part ``s`` of
    the characteristic polynomial annihilates the matrix. Reality of the
    roots is certified by a Sturm count equal to ``deg s``. Both checks
    run on the integer matrix ``D*A``, whose eigenvalues are ``D`` times
    those of ``A``.
    """
    den, b = M.scaled_integer()
    pb = Polynomial.of(kernels.charpoly_int(b))
    s = squarefree_part(pb)
    nreal = real_root_count(s)
    if nreal < s.degree:
        npairs = (s.degree - nreal) // 2
        return DiagonalizabilityVerdict(
            "no", f"non-real eigenvalues: {npairs} complex-conjugate pair(s)")
    if not _poly_at_matrix_is_zero(s.primitive(), b):
        return DiagonalizabilityVerdict("no", "minimal polynomial is not square-free")
    return DiagonalizabilityVerdict("yes", "square-free minimal polynomial with all roots real")


def eigenspace(M: AdMatrix, lam) -> Subspace:
    lam = Fraction(lam)
    n = M.dim
    shifted = [[x - lam if i == j else x for j, x in enumerate(row)]
               for i, row in enumerate(M.matrix)]
    return span_reduce(M.algebra, nullspace(shifted, n))


def image(M: AdMatrix) -> Subspace:
    """Column span of the ad matrix, i.e. [m, g]."""
    n = M.dim
    cols = [tuple(M.matrix[i][j] for i in range(n)) for j in range(n)]
    return span_reduce(M.algebra, cols)


def nilpotency_index(M: AdMatrix) -> int | None:
    """Smallest k with ad^k = 0, or None when the map is not nilpotent."""
    den, b = M.scaled_integer()
    n = len(b)
    acc = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        acc = kernels.matmul_int(acc, b)
        if not any(any(r) for r in acc):
            return k
    return None
