"""Univariate polynomials over the rationals.

Coefficients are stored highest degree first, matching the Berkowitz
kernel. Only what the spectral analysis needs: Euclidean gcd,
square-free decomposition, Sturm sequences and rational roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, ceil, lcm, gcd as igcd
from typing import Sequence


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple  # highest degree first, no leading zeros; () is the zero polynomial

    @classmethod
    def of(cls, coeffs: Sequence) -> "Polynomial":
        cs = [Fraction(c) for c in coeffs]
        i = 0
        while i < len(cs) and cs[i] == 0:
            i += 1
        return cls(tuple(cs[i:]))

    @classmethod
    def from_roots(cls, roots: Sequence) -> "Polynomial":
        p = cls.of([1])
        for r in roots:
            p = p * cls.of([1, -Fraction(r)])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[0]

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = (Fraction(0),) * (n - len(a)) + a
        b = (Fraction(0),) * (n - len(b)) + b
        return Polynomial.of([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial.of([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Polynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Polynomial.of(out)

    def derivative(self) -> "Polynomial":
        n = self.degree
        return Polynomial.of([c * (n - i) for i, c in enumerate(self.coeffs[:-1])])

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return Polynomial(tuple(c / self.lead for c in self.coeffs))

    def primitive(self) -> list[int]:
        """Integer coefficients with gcd 1 and positive leading term."""
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for x in ints:
            g = igcd(g, x)
        g = g or 1
        if ints and ints[0] < 0:
            g = -g
        return [x // g for x in ints]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        n = self.degree
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            k = n - i
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or not mono) else ""
            if body and mono:
                body += "*"
            parts.append(("-" if c < 0 else "+", body + mono))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db = b.degree
    if a.degree < db:
        return Polynomial(()), a
    q = [Fraction(0)] * (a.degree - db + 1)
    inv = 1 / b.lead
    for i in range(len(q)):
        c = rem[i] * inv
        q[i] = c
        if c:
            for j, bc in enumerate(b.coeffs):
                rem[i + j] -= c * bc
    return Polynomial.of(q), Polynomial.of(rem[len(q):])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    if p.degree <= 0:
        return p.monic()
    g = poly_gcd(p, p.derivative())
    return poly_divmod(p, g)[0].monic()


def squarefree_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: monic square-free factors f_i with p ~ prod f_i**i."""
    if p.degree <= 0:
        return []
    out = []
    a = p.monic()
    b = a.derivative()
    c = poly_gcd(a, b)
    w = poly_divmod(a, c)[0]
    y = poly_divmod(b, c)[0]
    i = 1
    while w.degree > 0:
        z = y - w.derivative()
        g = poly_gcd(w, z)
        if g.degree > 0:
            out.append((g, i))
        w = poly_divmod(w, g)[0]
        y = poly_divmod(z, g)[0]
        i += 1
    return out


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        r = poly_divmod(seq[-2], seq[-1])[1]
        if r.is_zero():
            break
        seq.append(-r)
    return [s for s in seq if not s.is_zero()]


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _changes_at(seq: list[Polynomial], x: Fraction) -> int:
    return _sign_changes([s(x) for s in seq])


def _changes_at_infinity(seq: list[Polynomial], sign: int) -> int:
    vals = []
    for s in seq:
        lead = s.lead
        if sign < 0 and s.degree % 2 == 1:
            lead = -lead
        vals.append(lead)
    return _sign_changes(vals)


def real_root_count(p: Polynomial) -> int:
    """Number of distinct real roots (Sturm's theorem on the square-free part)."""
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    q = squarefree_part(p)
    if q.degree <= 0:
        return 0
    seq = sturm_sequence(q)
    return _changes_at_infinity(seq, -1) - _changes_at_infinity(seq, +1)


def root_bound(p: Polynomial) -> Fraction:
    """Cauchy bound: every root has modulus below the returned value."""
    lead = abs(p.lead)
    return 1 + max((abs(c) / lead for c in p.coeffs[1:]), default=Fraction(0))


def isolate_real_roots(p: Polynomial) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (lo, hi], each holding exactly one distinct real root."""
    q = squarefree_part(p)
    if q.degree <= 0:
        return []
    seq = sturm_sequence(q)
    b = root_bound(q)
    out = []
    stack = [(-b, b, _changes_at(seq, -b), _changes_at(seq, b))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = _changes_at(seq, mid)
        stack.append((mid, hi, vmid, vhi))
        stack.append((lo, mid, vlo, vmid))
    out.sort()
    return out


def _refine(seq, lo, hi, width):
    vlo, vhi = _changes_at(seq, lo), _changes_at(seq, hi)
    while hi - lo > width:
        mid = (lo + hi) / 2
        vmid = _changes_at(seq, mid)
        if vlo - vmid >= 1:
            hi, vhi = mid, vmid
        else:
            lo, vlo = mid, vmid
    return lo, hi


def rational_roots(p: Polynomial) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicities, in increasing order.

    For a primitive integer polynomial with leading coefficient ``a``,
    any rational root ``r`` has ``a*r`` integral. Each Sturm-isolated
    real root is narrowed until only one or two integers ``k`` fit
    ``a*lo <= k <= a*hi``; the candidates ``k/a`` are tested exactly
    and then deflated out to count multiplicity.
    """
    if p.is_zero():
        raise ValueError("rational_roots of the zero polynomial")
    q = squarefree_part(p)
    if q.degree <= 0:
        return []
    prim = q.primitive()
    a = prim[0]
    qi = Polynomial.of(prim)
    seq = sturm_sequence(qi)
    found = []
    for lo, hi in isolate_real_roots(qi):
        if qi(hi) == 0:
            found.append(hi)
            continue
        lo, hi = _refine(seq, lo, hi, Fraction(1, 2 * a))
        for k in range(ceil(a * lo), floor(a * hi) + 1):
            r = Fraction(k, a)
            if lo < r <= hi and qi(r) == 0:
                found.append(r)
    out = []
    for r in sorted(found):
        lin = Polynomial.of([1, -r])
        mult = 0
        rest = p
        while True:
            quo, rem = poly_divmod(rest, lin)
            if not rem.is_zero():
                break
            mult += 1
            rest = quo
        out.append((r, mult))
    return out
