"""Catalog of classical real Lie algebras with golden essentiality data.

gl, sl, sp and su are built from matrix-unit brackets
``[E(i,j), E(k,l)] = d_jk E(i,l) - d_li E(k,j)`` acting on sparse
combinations of matrix units; so(p,q) and the Poincare algebra use the
metric form of the Lorentz relations directly. Each entry also carries
a matrix representation so tests can check the structure constants
against plain matrix commutators.

Label conventions
-----------------
gl(n)        ``e{mu}{nu}``, row-major.
sl(n)        ``e{nu}`` (1 <= nu < n) then ``f{mu}{nu}`` (mu != nu).
sp(2n, R)    ``f{mu}{nu}``, ``g{mu}{nu}`` for mu <= nu (the generators are
             symmetric in their indices), then ``h{mu}{nu}``.
so(p, q)     ``m{mu}{nu}``, mu < nu, 1-based with metric
             diag(+1 x p, -1 x q). For p == 1 the time index is 0, so
             so(1, n) carries the Lorentz labels m01, ..., m{n-1}{n}.
poincare(n)  the so(1, n) labels followed by ``p0 .. p{n}``.
su(n)        ``x1 .. x{n^2-1}``: halves of the antisymmetric real
             units, of i times the symmetric units, then of i times the
             diagonal differences (see ``CatalogEntry.notes``).

Indices are written without separators when every index is below 10
and as ``{mu}_{nu}`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .core import Element, LieAlgebra

FAMILIES = ("gl", "sl", "sp", "so_pq", "su", "poincare")

Matrix = tuple  # tuple of tuples of Fraction


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    algebra: LieAlgebra
    family: str
    params: tuple
    known_essential: tuple = ()  # (Element, expected) pairs
    defining_rep: tuple | None = None
    no_essential_elements: bool = False
    notes: str = ""

    @property
    def spec(self) -> str:
        fam = "so" if self.family == "so_pq" else self.family
        return f"{fam}:{','.join(map(str, self.params))}"

    def golden_essential(self) -> list[Element]:
        return [x for x, ok in self.known_essential if ok]


# ---------------------------------------------------------------------------
# sparse matrix-unit combinations: dict {(i, j): Fraction}


def _E(i: int, j: int, c=1) -> dict:
    return {(i, j): Fraction(c)}


def _lin(*terms) -> dict:
    out: dict = {}
    for coeff, combo in terms:
        for key, v in combo.items():
            out[key] = out.get(key, Fraction(0)) + coeff * v
    return {k: v for k, v in out.items() if v}


def _ebracket(x: dict, y: dict) -> dict:
    out: dict = {}
    for (i, j), a in x.items():
        for (k, l), b in y.items():
            s = a * b
            if j == k:
                out[(i, l)] = out.get((i, l), Fraction(0)) + s
            if l == i:
                out[(k, j)] = out.get((k, j), Fraction(0)) - s
    return {k: v for k, v in out.items() if v}


def _dense(combo: dict, size: int) -> Matrix:
    m = [[Fraction(0)] * size for _ in range(size)]
    for (i, j), v in combo.items():
        m[i][j] += v
    return tuple(tuple(r) for r in m)


def _from_generators(name: str, labels: list[str], gens: list[dict],
                     decompose: Callable[[dict], dict]) -> LieAlgebra:
    brackets = {}
    n = len(gens)
    for i in range(n):
        for j in range(i + 1, n):
            c = _ebracket(gens[i], gens[j])
            if c:
                brackets[(i, j)] = decompose(c)
    return LieAlgebra(labels, brackets, name=name)


def _idx(*ks: int, wide: bool) -> str:
    return "_".join(map(str, ks)) if wide else "".join(map(str, ks))


# ---------------------------------------------------------------------------
# families


def build_gl(n: int) -> CatalogEntry:
    if n < 1:
        raise ValueError("gl(n) needs n >= 1")
    wide = n >= 10
    keys = [(i, j) for i in range(n) for j in range(n)]
    labels = ["e" + _idx(i + 1, j + 1, wide=wide) for i, j in keys]
    pos = {k: t for t, k in enumerate(keys)}
    gens = [_E(i, j) for i, j in keys]

    def decompose(c):
        return {pos[k]: v for k, v in c.items()}

    a = _from_generators(f"gl({n})", labels, gens, decompose)
    diag = [a.basis_element(pos[(v, v)]) for v in range(n)]
    ident = a.zero()
    for d in diag:
        ident = ident + d
    golden = [(d, True) for d in diag] + [(ident, False)]
    return CatalogEntry(a, "gl", (n,), tuple(golden),
                        tuple(_dense(g, n) for g in gens))


def build_sl(n: int) -> CatalogEntry:
    if n < 2:
        raise ValueError("sl(n) needs n >= 2")
    wide = n >= 10
    labels, gens = [], []
    for v in range(n - 1):
        labels.append("e" + str(v + 1))
        gens.append(_lin((1, _E(v, v)), (-1, _E(v + 1, v + 1))))
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    for i, j in off:
        labels.append("f" + _idx(i + 1, j + 1, wide=wide))
        gens.append(_E(i, j))
    pos = {k: n - 1 + t for t, k in enumerate(off)}

    def decompose(c):
        out = {}
        running = Fraction(0)
        for v in range(n - 1):
            running += c.get((v, v), Fraction(0))
            if running:
                out[v] = running
        for k, val in c.items():
            if k[0] != k[1]:
                out[pos[k]] = val
        return out

    a = _from_generators(f"sl({n})", labels, gens, decompose)
    golden = [(a.basis_element(v), True) for v in range(n - 1)]
    return CatalogEntry(a, "sl", (n,), tuple(golden),
                        tuple(_dense(g, n) for g in gens))


def build_sp(n: int) -> CatalogEntry:
    """sp(2n, R) in block form [[A, B], [C, -A^T]] with B, C symmetric."""
    if n < 1:
        raise ValueError("sp(2n) needs n >= 1")
    wide = n >= 10
    labels, gens, kinds = [], [], []
    sym = [(i, j) for i in range(n) for j in range(i, n)]
    for i, j in sym:
        labels.append("f" + _idx(i + 1, j + 1, wide=wide))
        gens.append(_lin((1, _E(i, j + n)), (1, _E(j, i + n))))
        kinds.append(("f", i, j))
    for i, j in sym:
        labels.append("g" + _idx(i + 1, j + 1, wide=wide))
        gens.append(_lin((1, _E(i + n, j)), (1, _E(j + n, i))))
        kinds.append(("g", i, j))
    for i in range(n):
        for j in range(n):
            labels.append("h" + _idx(i + 1, j + 1, wide=wide))
            gens.append(_lin((1, _E(i, j)), (-1, _E(j + n, i + n))))
            kinds.append(("h", i, j))
    pos = {k: t for t, k in enumerate(kinds)}

    def decompose(c):
        out = {}
        for (r, s), v in c.items():
            if r < n and s < n:
                out[pos[("h", r, s)]] = v
            elif r < n <= s:
                i, j = sorted((r, s - n))
                # f_ii has a 2 on the diagonal of the upper-right block
                out[pos[("f", i, j)]] = v / 2 if i == j else v
            elif s < n <= r:
                i, j = sorted((r - n, s))
                out[pos[("g", i, j)]] = v / 2 if i == j else v
        return out

    a = _from_generators(f"sp({2 * n})", labels, gens, decompose)
    golden = [(a.basis_element(pos[("h", v, v)]), True) for v in range(n)]
    return CatalogEntry(a, "sp", (n,), tuple(golden),
                        tuple(_dense(g, 2 * n) for g in gens),
                        notes="f_{mu nu} = f_{nu mu} and g_{mu nu} = g_{nu mu} are identified; "
                              "h_{mu nu} = E(mu,nu) - E(nu+n,mu+n)")


def _metric(p: int, q: int) -> list[int]:
    return [1] * p + [-1] * q


def _so_brackets(g: list[int], pairs: list[tuple[int, int]]) -> dict:
    """Structure constants of the m_{mu nu} from the metric commutation rule."""
    pos = {k: t for t, k in enumerate(pairs)}

    def m(mu, nu):
        if mu == nu:
            return {}
        if mu < nu:
            return {pos[(mu, nu)]: Fraction(1)}
        return {pos[(nu, mu)]: Fraction(-1)}

    def gm(a, b):
        return g[a] if a == b else 0

    out = {}
    for s, (mu, nu) in enumerate(pairs):
        for t in range(s + 1, len(pairs)):
            rho, sig = pairs[t]
            acc: dict = {}
            for coeff, term in ((gm(mu, rho), m(nu, sig)), (gm(nu, sig), m(mu, rho)),
                                (-gm(mu, sig), m(nu, rho)), (-gm(nu, rho), m(mu, sig))):
                if coeff:
                    for k, v in term.items():
                        acc[k] = acc.get(k, Fraction(0)) + coeff * v
            acc = {k: v for k, v in acc.items() if v}
            if acc:
                out[(s, t)] = acc
    return out


def _so_rep(g: list[int], mu: int, nu: int, size: int) -> Matrix:
    """Matrix of m_{mu nu}: e_s -> g_{mu s} e_nu - g_{nu s} e_mu."""
    return _dense(_lin((g[mu], _E(nu, mu)), (-g[nu], _E(mu, nu))), size)


def build_so(p: int, q: int) -> CatalogEntry:
    if p < 0 or q < 0 or p + q < 2:
        raise ValueError("so(p, q) needs p, q >= 0 and p + q >= 2")
    n = p + q
    g = _metric(p, q)
    base = 0 if p == 1 else 1
    wide = n - 1 + base >= 10
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    labels = ["m" + _idx(i + base, j + base, wide=wide) for i, j in pairs]
    a = LieAlgebra(labels, _so_brackets(g, pairs), name=f"so({p},{q})")
    rep = tuple(_so_rep(g, i, j, n) for i, j in pairs)
    compact = p == 0 or q == 0
    if compact:
        golden = [(a.basis_element(0), False)]
    else:
        golden = [(a.basis_element(t), True) for t, (i, j) in enumerate(pairs) if i < p <= j]
    return CatalogEntry(a, "so_pq", (p, q), tuple(golden), rep,
                        no_essential_elements=compact,
                        notes=f"indices start at {base}; metric diag(+1 x {p}, -1 x {q})")


def build_poincare(n: int) -> CatalogEntry:
    """so(1, n) semidirect R^(n+1); [m_{mu nu}, p_s] = g_{mu s} p_nu - g_{nu s} p_mu."""
    if n < 2:
        raise ValueError("poincare(n) needs n >= 2")
    g = _metric(1, n)
    size = n + 1
    wide = n >= 10
    pairs = [(i, j) for i in range(size) for j in range(i + 1, size)]
    nm = len(pairs)
    labels = ["m" + _idx(i, j, wide=wide) for i, j in pairs]
    labels += [f"p{s}" for s in range(size)]
    brackets = _so_brackets(g, pairs)
    for t, (mu, nu) in enumerate(pairs):
        for s in range(size):
            acc = {}
            if mu == s:
                acc[nm + nu] = Fraction(g[mu])
            if nu == s:
                acc[nm + mu] = acc.get(nm + mu, Fraction(0)) - g[nu]
            acc = {k: v for k, v in acc.items() if v}
            if acc:
                brackets[(t, nm + s)] = acc
    a = LieAlgebra(labels, brackets, name=f"poincare({n})")
    rep = [tuple(r + (Fraction(0),) for r in _so_rep(g, i, j, size)) + ((Fraction(0),) * (size + 1),)
           for i, j in pairs]
    rep += [_dense(_E(s, size), size + 1) for s in range(size)]
    golden = [(a.basis_element(t), True) for t, (i, j) in enumerate(pairs) if i == 0]
    return CatalogEntry(a, "poincare", (n,), tuple(golden), tuple(rep),
                        notes="affine (n+2)x(n+2) representation; translations in the last column")


def build_su(n: int) -> CatalogEntry:
    """Realified su(n): X = A + iB is stored as the real block matrix [[A, -B], [B, A]]."""
    if n < 2:
        raise ValueError("su(n) needs n >= 2")
    half = Fraction(1, 2)
    labels, gens, kinds = [], [], []

    def real_part(combo):  # A embedded twice on the diagonal blocks
        return _lin((1, combo), (1, {(i + n, j + n): v for (i, j), v in combo.items()}))

    def imag_part(combo):  # B embedded as [[0, -B], [B, 0]]
        return _lin((1, {(i + n, j): v for (i, j), v in combo.items()}),
                    (-1, {(i, j + n): v for (i, j), v in combo.items()}))

    offd = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for i, j in offd:
        gens.append(real_part(_lin((half, _E(i, j)), (-half, _E(j, i)))))
        kinds.append(("a", i, j))
    for i, j in offd:
        gens.append(imag_part(_lin((half, _E(i, j)), (half, _E(j, i)))))
        kinds.append(("s", i, j))
    for v in range(n - 1):
        gens.append(imag_part(_lin((half, _E(v, v)), (-half, _E(v + 1, v + 1)))))
        kinds.append(("d", v, v + 1))
    labels = [f"x{t + 1}" for t in range(len(gens))]
    pos = {k: t for t, k in enumerate(kinds)}

    def decompose(c):
        out = {}
        running = Fraction(0)
        for v in range(n - 1):
            running += c.get((v + n, v), Fraction(0))
            if running:
                out[pos[("d", v, v + 1)]] = 2 * running
        for (r, s), val in c.items():
            if r < n and s < n and r < s:
                out[pos[("a", r, s)]] = 2 * val
            elif r >= n and s < n and r - n < s:
                out[pos[("s", r - n, s)]] = 2 * val
        return out

    a = _from_generators(f"su({n})", labels, gens, decompose)
    legend = ", ".join(f"{lab}={k}{i + 1}{j + 1}" for lab, (k, i, j) in zip(labels, kinds))
    return CatalogEntry(a, "su", (n,), ((a.basis_element(0), False),),
                        tuple(_dense(gn, 2 * n) for gn in gens),
                        no_essential_elements=True,
                        notes="a_jk=(E_jk-E_kj)/2, s_jk=i(E_jk+E_kj)/2, d_j=i(E_jj-E_j+1,j+1)/2; "
                              + legend)


# ---------------------------------------------------------------------------
# CLI-facing names


def build(spec: str) -> CatalogEntry:
    """Build from a name such as ``gl:3``, ``so:1,3`` or ``poincare:3``."""
    try:
        fam, _, args = spec.strip().partition(":")
        params = [int(x) for x in args.split(",")] if args else []
    except ValueError:
        raise ValueError(f"malformed catalog name {spec!r}") from None
    builders = {"gl": build_gl, "sl": build_sl, "sp": build_sp, "su": build_su,
                "poincare": build_poincare}
    if fam == "so":
        if len(params) != 2:
            raise ValueError("so needs two parameters, e.g. so:1,3")
        return build_so(*params)
    if fam not in builders:
        raise ValueError(f"unknown family {fam!r}; expected one of gl, sl, sp, so, su, poincare")
    if len(params) != 1:
        raise ValueError(f"{fam} needs one parameter, e.g. {fam}:3")
    return builders[fam](params[0])


def expected_dim(family: str, params: tuple) -> int:
    if family == "gl":
        return params[0] ** 2
    if family in ("sl", "su"):
        return params[0] ** 2 - 1
    if family == "sp":
        n = params[0]
        return 2 * n * n + n
    if family == "so_pq":
        n = params[0] + params[1]
        return n * (n - 1) // 2
    if family == "poincare":
        n = params[0]
        return n * (n + 1) // 2 + n + 1
    raise ValueError(family)


# the algebras exercised by the golden sweeps
GOLDEN_SPECS = ("gl:2", "gl:3", "gl:4", "sl:2", "sl:3", "sl:4", "sp:1", "sp:2",
                "so:1,2", "so:1,3", "so:1,4", "so:2,3", "poincare:2", "poincare:3")
COMPACT_SPECS = ("so:3,0", "so:4,0", "su:2", "su:3")
