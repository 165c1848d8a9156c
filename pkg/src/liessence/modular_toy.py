"""Finite-dimensional Gibbs states and their modular objects.

The state on M_n(C) is rho = exp(-beta H)/Z. Its GNS space is M_n(C)
itself with <X, Y> = tr(X^* Y), and the cyclic vector is Omega =
sqrt(rho). Then

    Delta X = rho X rho^{-1},    J X = X^*,

and S = J Delta^{1/2} sends A Omega to A^* Omega.

This surrogate exercises the KMS and modular half of the temperature
argument only. A finite-dimensional unitary ladder [M, N] = lam N with
lam != 0 forces N = 0 (take traces of powers), so the ladder half is
checked at the Lie-algebra level instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np


def _herm_fn(H: np.ndarray, fn) -> np.ndarray:
    w, V = np.linalg.eigh(H)
    return (V * fn(w)) @ V.conj().T


@dataclass(frozen=True, eq=False)
class ModularToyState:
    H: np.ndarray
    beta: float | None
    rho: np.ndarray
    Omega: np.ndarray  # sqrt(rho) as an n x n matrix

    @property
    def n(self) -> int:
        return self.H.shape[0]

    # -- modular objects on the doubled space M_n(C)

    def delta_power(self, z: complex, X: np.ndarray) -> np.ndarray:
        """Delta^z X = rho^z X rho^{-z}."""
        left = _herm_fn(self.rho, lambda w: np.power(w.astype(complex), z))
        right = _herm_fn(self.rho, lambda w: np.power(w.astype(complex), -z))
        return left @ X @ right

    def delta(self, X: np.ndarray) -> np.ndarray:
        return self.delta_power(1, X)

    def J(self, X: np.ndarray) -> np.ndarray:
        return X.conj().T

    def delta_superoperator(self) -> np.ndarray:
        """Delta as an n^2 x n^2 matrix acting on row-major vec(X)."""
        rinv = np.linalg.inv(self.rho)
        return np.kron(self.rho, rinv.T)

    def expect(self, A: np.ndarray) -> complex:
        return complex(np.trace(self.rho @ A))

    def invariant_residuals(self) -> dict:
        O = self.Omega
        J, D = self.J, self.delta
        probes = _probe_basis(self.n)
        jdj = max(np.linalg.norm(J(D(J(X))) - self.delta_power(-1, X)) for X in probes)
        return {
            "trace": abs(np.trace(self.rho).real - 1),
            "delta_omega": float(np.linalg.norm(D(O) - O)),
            "j_omega": float(np.linalg.norm(J(O) - O)),
            "j_delta_j": float(jdj),
        }


def _probe_basis(n: int) -> list[np.ndarray]:
    out = []
    for i in range(n):
        for j in range(n):
            X = np.zeros((n, n), dtype=complex)
            X[i, j] = 1
            out.append(X)
    return out


def _check_hermitian(H: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValueError("H must be a square matrix")
    if np.max(np.abs(H - H.conj().T), initial=0.0) > tol:
        raise ValueError("H is not hermitian")
    return (H + H.conj().T) / 2


def gibbs_state(H, beta: float) -> ModularToyState:
    H = _check_hermitian(H)
    if not beta > 0:
        raise ValueError("beta must be positive")
    w, V = np.linalg.eigh(H)
    weights = np.exp(-beta * (w - w.min()))
    p = weights / weights.sum()
    rho = (V * p) @ V.conj().T
    omega = (V * np.sqrt(p)) @ V.conj().T
    return ModularToyState(H, float(beta), rho, omega)


def density_state(H, rho) -> ModularToyState:
    """A faithful state with an arbitrary density matrix (for negative controls)."""
    H = _check_hermitian(H)
    rho = _check_hermitian(rho)
    p = np.linalg.eigvalsh(rho)
    if p.min() <= 0 or abs(p.sum() - 1) > 1e-12:
        raise ValueError("rho must be positive definite with unit trace")
    return ModularToyState(H, None, rho, _herm_fn(rho, np.sqrt))


def evolve(H: np.ndarray, z: complex, B: np.ndarray) -> np.ndarray:
    """alpha_z(B) = exp(i z H) B exp(-i z H) for complex z."""
    left = _herm_fn(H, lambda w: np.exp(1j * z * w))
    right = _herm_fn(H, lambda w: np.exp(-1j * z * w))
    return left @ B @ right


def _same_shape(s: ModularToyState, *mats) -> None:
    for A in mats:
        if np.shape(A) != (s.n, s.n):
            raise ValueError(f"expected {s.n}x{s.n} matrices, got shape {np.shape(A)}")


def kms_verify(s: ModularToyState, A, B, t: float, beta: float | None = None) -> float:
    """|F(t + i beta) - tr(rho alpha_t(B) A)| with F(z) = tr(rho A alpha_z(B)).

    ``beta`` overrides the strip width (default: the state's own beta),
    which is how the wrong-temperature control is run.
    """
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    _same_shape(s, A, B)
    width = s.beta if beta is None else beta
    if width is None:
        raise ValueError("state has no temperature; pass beta explicitly")
    lhs = np.trace(s.rho @ A @ evolve(s.H, t + 1j * width, B))
    rhs = np.trace(s.rho @ evolve(s.H, t, B) @ A)
    return float(abs(lhs - rhs))


def modular_covariance_check(s: ModularToyState, t: float) -> float:
    """max over matrix units X of ||Delta^{it} X - exp(-i beta t H) X exp(i beta t H)||."""
    res = 0.0
    for X in _probe_basis(s.n):
        lhs = s.delta_power(1j * t, X)
        rhs = evolve(s.H, -s.beta * t, X)
        res = max(res, float(np.linalg.norm(lhs - rhs)))
    return res


def j_action_check(s: ModularToyState, A) -> float:
    """||J(A Omega) - Delta^{1/2}(A^* Omega)||."""
    A = np.asarray(A, dtype=complex)
    _same_shape(s, A)
    lhs = s.J(A @ s.Omega)
    rhs = s.delta_power(0.5, A.conj().T @ s.Omega)
    return float(np.linalg.norm(lhs - rhs))


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    Z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    Q, R = np.linalg.qr(Z)
    d = np.diag(R)
    return Q * (d / np.abs(d))


def random_hermitian(n: int, rng: np.random.Generator) -> np.ndarray:
    Z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (Z + Z.conj().T) / 2


def random_matrix(n: int, rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


@dataclass(frozen=True)
class PassivityResult:
    min_gap: float
    violations: int
    trials: int

    def to_json(self) -> dict:
        return {"min_gap": self.min_gap, "violations": self.violations}


def passivity_sample(s: ModularToyState, trials: int, rng_seed: int = 0,
                     tol: float = 1e-10) -> PassivityResult:
    """Energy change tr(rho V^* H V) - tr(rho H) over cyclic processes V.

    Trial 0 is the identity; then every permutation matrix (n <= 6);
    the remaining trials are Haar-random unitaries from ``rng_seed``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    n = s.n
    base = s.expect(s.H).real
    unitaries = [np.eye(n, dtype=complex)]
    if n <= 6:
        for perm in itertools.permutations(range(n)):
            if list(perm) != list(range(n)):
                unitaries.append(np.eye(n, dtype=complex)[list(perm)])
    unitaries = unitaries[:trials]
    rng = np.random.default_rng(rng_seed)
    while len(unitaries) < trials:
        unitaries.append(random_unitary(n, rng))
    gaps = [s.expect(V.conj().T @ s.H @ V).real - base for V in unitaries]
    return PassivityResult(float(min(gaps)), int(sum(g < -tol for g in gaps)), len(gaps))


def modular_demo(n: int = 3, beta: float = 1.0, seed: int = 42, trials: int = 1000) -> dict:
    """Random Gibbs state plus all residual checks, as a plain dict."""
    rng = np.random.default_rng(seed)
    H = random_hermitian(n, rng)
    s = gibbs_state(H, beta)
    kms = cov = jres = 0.0
    for t in (0.0, 0.3, 1.0, 7.0):
        A, B = random_matrix(n, rng), random_matrix(n, rng)
        kms = max(kms, kms_verify(s, A, B, t))
        cov = max(cov, modular_covariance_check(s, t))
        jres = max(jres, j_action_check(s, A))
    pas = passivity_sample(s, trials, seed)
    return {
        "kms_residual_max": kms,
        "covariance_residual_max": cov,
        "j_residual_max": jres,
        "passivity": pas.to_json(),
    }
