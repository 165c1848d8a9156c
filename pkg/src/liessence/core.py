"""Exact finite-dimensional real Lie algebras given by structure constants.

All scalars are :class:`fractions.Fraction`; nothing in this module
touches floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from . import kernels

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]


class StructureError(ValueError):
    """Raised when objects from different algebras are mixed, or a table is malformed."""


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


# ---------------------------------------------------------------------------
# vector helpers


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return not any(v)


def integer_rows(vectors: Iterable[Sequence[Fraction]]) -> list[list[int]]:
    """Scale each vector by the lcm of its denominators (span is unchanged)."""
    out = []
    for v in vectors:
        den = 1
        for x in v:
            if x.denominator != 1:
                den = lcm(den, x.denominator)
        out.append([x.numerator * (den // x.denominator) for x in v])
    return out


def rref(vectors: Sequence[Sequence[Fraction]], ncols: int):
    """Reduced row echelon form of the span of ``vectors``.

    Returns ``(rows, pivots)``; rows are Fraction tuples with unit pivots.
    """
    if not vectors:
        return (), ()
    red, pivots, d = kernels.rref_int(integer_rows(vectors), ncols)
    zero = Fraction(0)
    rows = tuple(tuple(Fraction(x, d) if x else zero for x in r) for r in red)
    return rows, tuple(pivots)


def nullspace(matrix: Sequence[Sequence[Fraction]], ncols: int) -> list[Vector]:
    """Exact basis of ``{x : matrix @ x = 0}``."""
    rows, pivots = rref([r for r in matrix if any(r)], ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, p in zip(rows, pivots):
            v[p] = -r[free]
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# algebra and elements


class LieAlgebra:
    """A real Lie algebra given by a basis and exact structure constants.

    ``brackets`` maps ordered pairs ``(i, j)`` with ``i < j`` to the
    coordinates of ``[b_i, b_j]``, either as a dense sequence or as
    ``(k, coeff)`` pairs. Pairs with ``i > j`` are accepted and folded
    in by antisymmetry; they must not contradict an ``i < j`` entry.
    """

    def __init__(self, basis: Sequence[str], brackets: Mapping, name: str = ""):
        basis = tuple(str(b) for b in basis)
        if not basis:
            raise StructureError("a Lie algebra needs a nonempty basis")
        if len(set(basis)) != len(basis):
            raise StructureError("basis labels must be distinct")
        self.name = name
        self.basis = basis
        self.dim = len(basis)
        self._index = {lab: i for i, lab in enumerate(basis)}
        sc: dict[tuple[int, int], tuple[tuple[int, Fraction], ...]] = {}
        for (i, j), coeffs in brackets.items():
            i, j = int(i), int(j)
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise StructureError(f"bracket index ({i}, {j}) out of range")
            pairs = _sparse_coeffs(coeffs, self.dim)
            if i == j:
                if pairs:
                    raise StructureError(f"[b{i}, b{i}] must vanish")
                continue
            if i > j:
                i, j = j, i
                pairs = tuple((k, -c) for k, c in pairs)
            if (i, j) in sc and sc[(i, j)] != pairs:
                raise StructureError(f"conflicting entries for bracket ({i}, {j})")
            if pairs:
                sc[(i, j)] = pairs
        self.structure_constants = dict(sorted(sc.items()))
        # full lookup table, both orders, for the bracket loop
        table: list[dict[int, tuple]] = [dict() for _ in range(self.dim)]
        for (i, j), pairs in self.structure_constants.items():
            table[i][j] = pairs
            table[j][i] = tuple((k, -c) for k, c in pairs)
        self._table = table
        self._ad_basis = None

    # -- basic accessors

    def __repr__(self) -> str:
        label = self.name or "LieAlgebra"
        return f"<{label} dim={self.dim}>"

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.basis == other.basis
                and self.structure_constants == other.structure_constants)

    def __hash__(self) -> int:
        return hash((self.basis, tuple(self.structure_constants.items())))

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def element(self, coords: Sequence) -> "Element":
        coords = tuple(as_rational(c) for c in coords)
        if len(coords) != self.dim:
            raise StructureError(f"expected {self.dim} coordinates, got {len(coords)}")
        return Element(self, coords)

    def zero(self) -> "Element":
        return Element(self, zero_vector(self.dim))

    def basis_element(self, i: int | str) -> "Element":
        if isinstance(i, str):
            i = self.index(i)
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return Element(self, tuple(v))

    def __getitem__(self, label: str) -> "Element":
        return self.basis_element(label)

    def basis_elements(self) -> list["Element"]:
        return [self.basis_element(i) for i in range(self.dim)]

    def bracket_coords(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        out = [Fraction(0)] * self.dim
        ys = [(j, yj) for j, yj in enumerate(y) if yj]
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self._table[i]
            for j, yj in ys:
                pairs = row.get(j)
                if pairs:
                    s = xi * yj
                    for k, c in pairs:
                        out[k] += s * c
        return tuple(out)

    def ad_basis_matrices(self) -> list[list[list[Fraction]]]:
        """Dense matrices of ad(b_i); column j holds the coordinates of [b_i, b_j]."""
        if self._ad_basis is None:
            mats = []
            for i in range(self.dim):
                m = [[Fraction(0)] * self.dim for _ in range(self.dim)]
                for j, pairs in self._table[i].items():
                    for k, c in pairs:
                        m[k][j] = c
                mats.append(m)
            self._ad_basis = mats
        return self._ad_basis

    # -- serialization

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "basis": list(self.basis),
            "brackets": [
                {"i": i, "j": j, "coeffs": [[k, str(c)] for k, c in pairs]}
                for (i, j), pairs in self.structure_constants.items()
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: Mapping) -> "LieAlgebra":
        try:
            basis = data["basis"]
            dim = int(data["dim"])
            raw = data.get("brackets", [])
        except (KeyError, TypeError) as exc:
            raise StructureError(f"malformed structure-constant document: {exc}") from None
        if len(basis) != dim:
            raise StructureError(f"dim={dim} but {len(basis)} basis labels")
        brackets = {}
        for entry in raw:
            i, j = int(entry["i"]), int(entry["j"])
            if not i < j:
                raise StructureError(f"only i<j entries are permitted, got ({i}, {j})")
            if (i, j) in brackets:
                raise StructureError(f"duplicate entry ({i}, {j})")
            coeffs = []
            for k, c in entry["coeffs"]:
                if not isinstance(c, str):
                    raise StructureError("coefficients must be exact rational strings")
                coeffs.append((int(k), Fraction(c)))
            brackets[(i, j)] = coeffs
        return cls(basis, brackets, name=data.get("name", ""))

    @classmethod
    def loads(cls, text: str) -> "LieAlgebra":
        return cls.from_dict(json.loads(text))


def _sparse_coeffs(coeffs, dim: int) -> tuple[tuple[int, Fraction], ...]:
    if isinstance(coeffs, Mapping):
        items = coeffs.items()
    else:
        coeffs = list(coeffs)
        if coeffs and not isinstance(coeffs[0], (tuple, list)):
            if len(coeffs) != dim:
                raise StructureError("dense bracket coordinates have the wrong length")
            items = enumerate(coeffs)
        else:
            items = coeffs
    acc: dict[int, Fraction] = {}
    for k, c in items:
        k = int(k)
        if not 0 <= k < dim:
            raise StructureError(f"coefficient index {k} out of range")
        acc[k] = acc.get(k, Fraction(0)) + as_rational(c)
    return tuple((k, c) for k, c in sorted(acc.items()) if c)


@dataclass(frozen=True, eq=False)
class Element:
    algebra: LieAlgebra
    coords: Vector

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected an Element, got {type(other).__name__}")
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise StructureError("elements belong to different Lie algebras")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        return Element(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, s) -> "Element":
        s = as_rational(s)
        return Element(self.algebra, tuple(s * a for a in self.coords))

    __rmul__ = __mul__

    def __truediv__(self, s) -> "Element":
        return self * (1 / as_rational(s))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.coords == other.coords and (
            self.algebra is other.algebra or self.algebra == other.algebra)

    def __hash__(self) -> int:
        return hash(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"Element({format_element(self)})"


def format_element(x: Element) -> str:
    terms = []
    for lab, c in zip(x.algebra.basis, x.coords):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = lab if mag == 1 else f"{mag}*{lab}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def bracket(x: Element, y: Element) -> Element:
    """Lie bracket [x, y] by bilinear extension of the structure constants."""
    x._check(y)
    return Element(x.algebra, x.algebra.bracket_coords(x.coords, y.coords))


@dataclass(frozen=True)
class JacobiReport:
    ok: bool
    first_violation: tuple[int, int, int] | None = None


def verify_jacobi(a: LieAlgebra) -> JacobiReport:
    """Check [[b_i,b_j],b_k] + cyclic = 0 for all i<j<k."""
    n = a.dim
    e = [a.basis_element(i).coords for i in range(n)]
    br = {}
    for i in range(n):
        for j in range(i + 1, n):
            br[(i, j)] = a.bracket_coords(e[i], e[j])

    def b2(i, j):
        if i < j:
            return br[(i, j)]
        return tuple(-c for c in br[(j, i)])

    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s1 = a.bracket_coords(b2(i, j), e[k])
                s2 = a.bracket_coords(b2(j, k), e[i])
                s3 = a.bracket_coords(b2(k, i), e[j])
                if any(p + q + r for p, q, r in zip(s1, s2, s3)):
                    return JacobiReport(False, (i, j, k))
    return JacobiReport(True, None)


# ---------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True, eq=False)
class Subspace:
    """Span of the rows of an exact reduced echelon matrix."""

    algebra: LieAlgebra
    rows: tuple = ()
    pivots: tuple = ()

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_full(self) -> bool:
        return self.dim == self.algebra.dim

    def basis(self) -> list[Element]:
        return [Element(self.algebra, r) for r in self.rows]

    def residual(self, v: Sequence[Fraction]) -> Vector:
        w = list(v)
        for r, p in zip(self.rows, self.pivots):
            c = w[p]
            if c:
                for j, x in enumerate(r):
                    if x:
                        w[j] -= c * x
        return tuple(w)

    def contains(self, x: Element) -> bool:
        if x.algebra is not self.algebra and x.algebra != self.algebra:
            raise StructureError("element and subspace belong to different algebras")
        return is_zero_vector(self.residual(x.coords))

    def __contains__(self, x: Element) -> bool:
        return self.contains(x)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.algebra == other.algebra and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, basis=[{', '.join(map(str, self.basis()))}])"


def span_reduce(a: LieAlgebra, vectors: Iterable[Element | Sequence[Fraction]]) -> Subspace:
    coords = []
    for v in vectors:
        if isinstance(v, Element):
            if v.algebra is not a and v.algebra != a:
                raise StructureError("vector from a different algebra")
            v = v.coords
        elif len(v) != a.dim:
            raise StructureError("coordinate vector has the wrong length")
        if any(v):
            coords.append(tuple(v))
    rows, pivots = rref(coords, a.dim)
    return Subspace(a, rows, pivots)


def subspace_sum(*spaces: Subspace) -> Subspace:
    if not spaces:
        raise ValueError("need at least one subspace")
    a = spaces[0].algebra
    rows = []
    for s in spaces:
        if s.algebra is not a and s.algebra != a:
            raise StructureError("subspaces belong to different algebras")
        rows.extend(s.rows)
    return span_reduce(a, rows)


def bracket_span(s: Subspace, t: Subspace) -> Subspace:
    """Span of all [x, y] with x in s, y in t."""
    a = s.algebra
    vecs = [a.bracket_coords(x, y) for x in s.rows for y in t.rows]
    return span_reduce(a, vecs)


def lie_closure(a: LieAlgebra, seeds: Sequence[Element]) -> Subspace:
    """Smallest bracket-closed subspace containing ``seeds``.

    Worklist over (new generator x current generator) bracket pairs;
    zero seeds are dropped.
    """
    seeds = list(seeds)
    if not seeds:
        raise ValueError("lie_closure needs at least one seed")
    gens: list[Vector] = []
    space = Subspace(a)
    for x in seeds:
        if x.algebra is not a and x.algebra != a:
            raise StructureError("seed from a different algebra")
        if not is_zero_vector(space.residual(x.coords)):
            gens.append(x.coords)
            space = span_reduce(a, gens)
    new = list(gens)
    while new and space.dim < a.dim:
        added = []
        for u in new:
            for v in list(gens):
                w = a.bracket_coords(u, v)
                if not is_zero_vector(space.residual(w)):
                    gens.append(w)
                    added.append(w)
                    space = span_reduce(a, gens)
        new = added
    return space
