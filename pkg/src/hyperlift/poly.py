"""Monic real polynomials with all-real roots.

Conversions between root multisets, elementary symmetric values and power
sums, real-rootedness certification, root extraction, and centering (removal
of the mean / diagonal direction). The coefficient convention throughout is

    P(z) = z^n + a_1 z^{n-1} + ... + a_n,   a_j = (-1)^j e_j,

so user-facing data is always the vector of elementary symmetric values
e = (e_1, ..., e_n).

All operations are pure and deterministic: identical input bits produce
identical output bits (roots are accumulated over the sorted input, batched
solves are index-ordered).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, NotHyperbolicError

#: Default relative tolerance for the real-rootedness certificate. Curves
#: handed over in floating point can exit the hyperbolic set by rounding, so
#: membership is always checked up to tol * scale(p).
DEFAULT_TOL = 1e-9

_POLISH_STEPS = 3


@dataclass(frozen=True, eq=False)
class RootMultiset:
    """Unordered collection of n real roots, stored sorted non-decreasing."""

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 1 or v.size == 0:
            raise InvalidInputError("root multiset must be a non-empty 1-D vector")
        if not np.all(np.isfinite(v)):
            raise InvalidInputError("root multiset contains non-finite entries")
        object.__setattr__(self, "values", np.sort(v))

    def __len__(self) -> int:
        return int(self.values.size)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True, eq=False)
class HyperbolicPoly:
    """Monic degree-n polynomial represented by its elementary symmetric values."""

    n: int
    elem: np.ndarray

    def __post_init__(self):
        e = np.atleast_1d(np.asarray(self.elem, dtype=float))
        if self.n < 1 or e.shape != (self.n,):
            raise InvalidInputError(f"need elem of shape ({self.n},), got {e.shape}")
        if not np.all(np.isfinite(e)):
            raise InvalidInputError("non-finite elementary symmetric values")
        object.__setattr__(self, "elem", e)

    @property
    def monic_coeffs(self) -> np.ndarray:
        """Coefficients (a_1, ..., a_n) with a_j = (-1)^j e_j."""
        signs = (-1.0) ** np.arange(1, self.n + 1)
        return signs * self.elem

    @property
    def full_coeffs(self) -> np.ndarray:
        """Coefficients (1, a_1, ..., a_n), leading power first."""
        return np.concatenate([[1.0], self.monic_coeffs])

    @property
    def scale(self) -> float:
        """max(1, max_j |a_j|); all residual tolerances are relative to this."""
        return float(max(1.0, np.abs(self.monic_coeffs).max()))

    def __call__(self, z):
        c = self.full_coeffs
        z = np.asarray(z, dtype=float)
        out = np.full_like(z, c[0], dtype=float)
        for j in range(1, self.n + 1):
            out = out * z + c[j]
        return out


@dataclass(frozen=True)
class HyperbolicityCertificate:
    hyperbolic: bool
    witness: float  # largest imaginary magnitude found among the roots


def elem_from_roots(roots: np.ndarray) -> np.ndarray:
    """Elementary symmetric values of a sorted root vector.

    Accumulation is left-to-right over the sorted vector, which fixes the
    arithmetic order: any permutation of the same multiset gives bit-identical
    output.
    """
    r = np.sort(np.asarray(roots, dtype=float))
    n = r.size
    e = np.zeros(n + 1)
    e[0] = 1.0
    for k in range(n):
        x = r[k]
        for j in range(min(k + 1, n), 0, -1):
            e[j] += x * e[j - 1]
    return e[1:]


def elem_from_roots_rows(rows: np.ndarray) -> np.ndarray:
    """Row-wise ``elem_from_roots`` for a (N, n) matrix of roots."""
    R = np.sort(np.asarray(rows, dtype=float), axis=1)
    N, n = R.shape
    e = np.zeros((N, n + 1))
    e[:, 0] = 1.0
    for k in range(n):
        x = R[:, k]
        for j in range(min(k + 1, n), 0, -1):
            e[:, j] += x * e[:, j - 1]
    return e[:, 1:]


def from_roots(r) -> HyperbolicPoly:
    """Polynomial with the given real roots (Vieta's map)."""
    if isinstance(r, RootMultiset):
        v = r.values
    else:
        v = np.asarray(r, dtype=float)
        if v.ndim != 1 or v.size == 0:
            raise InvalidInputError("roots must form a non-empty 1-D vector")
        if not np.all(np.isfinite(v)):
            raise InvalidInputError("non-finite root input")
    return HyperbolicPoly(v.size, elem_from_roots(v))


def _companion_eigs(a_rows: np.ndarray) -> np.ndarray:
    """Complex eigenvalues of the companion matrices of monic polynomials.

    a_rows has shape (N, n) holding (a_1, ..., a_n) per row.
    """
    N, n = a_rows.shape
    C = np.zeros((N, n, n))
    if n > 1:
        idx = np.arange(1, n)
        C[:, idx, idx - 1] = 1.0
    C[:, :, n - 1] = -a_rows[:, ::-1]
    return np.linalg.eigvals(C)


def _polish_real_roots(lam: np.ndarray, a_rows: np.ndarray, steps: int = _POLISH_STEPS) -> np.ndarray:
    """A few guarded Newton steps on each root; no-ops near multiple roots."""
    N, n = a_rows.shape
    full = np.concatenate([np.ones((N, 1)), a_rows], axis=1)
    lam = lam.copy()
    for _ in range(steps):
        p = np.broadcast_to(full[:, 0:1], lam.shape).copy()
        dp = np.zeros_like(lam)
        for j in range(1, n + 1):
            dp = dp * lam + p
            p = p * lam + full[:, j : j + 1]
        safe = np.abs(dp) > 1e-300
        step = np.where(safe, p / np.where(safe, dp, 1.0), 0.0)
        # trust region keeps ill-conditioned (near-multiple) roots untouched
        step = np.where(np.abs(step) < 1e-3 * (1.0 + np.abs(lam)), step, 0.0)
        lam = lam - step
    return lam


def real_roots_rows(elem_rows: np.ndarray, tol: float = DEFAULT_TOL):
    """Sorted real roots for a batch of elementary-value rows.

    Returns (roots (N, n), witnesses (N,), hyperbolic mask (N,)). Rows that
    fail the certificate still get the real parts of their roots; callers
    decide whether to raise.
    """
    E = np.atleast_2d(np.asarray(elem_rows, dtype=float))
    N, n = E.shape
    signs = (-1.0) ** np.arange(1, n + 1)
    a = E * signs
    scale = np.maximum(1.0, np.abs(a).max(axis=1))

    if n == 1:
        roots = E.copy()
        return roots, np.zeros(N), np.ones(N, dtype=bool)

    if n == 2:
        e1, e2 = E[:, 0], E[:, 1]
        disc = e1 * e1 - 4.0 * e2
        witness = np.where(disc < 0, np.sqrt(np.maximum(-disc, 0.0)) / 2.0, 0.0)
        ok = witness <= tol * scale
        sq = np.sqrt(np.maximum(disc, 0.0))
        roots = np.stack([(e1 - sq) / 2.0, (e1 + sq) / 2.0], axis=1)
    else:
        ev = _companion_eigs(a)
        witness = np.abs(ev.imag).max(axis=1)
        ok = witness <= tol * scale
        roots = np.sort(ev.real, axis=1)

    roots = _polish_real_roots(roots, a)
    roots = np.sort(roots, axis=1)
    return roots, witness, ok


def is_hyperbolic(p: HyperbolicPoly, tol: float = DEFAULT_TOL) -> HyperbolicityCertificate:
    """Certify that every root is real up to |imag| <= tol * scale(p)."""
    if tol <= 0:
        raise InvalidInputError("tolerance must be positive")
    _, witness, ok = real_roots_rows(p.elem[None, :], tol)
    return HyperbolicityCertificate(bool(ok[0]), float(witness[0]))


def roots(p: HyperbolicPoly, tol: float = DEFAULT_TOL) -> RootMultiset:
    """Sorted real roots of a certified polynomial.

    The residual contract |P(root_k)| <= tol * scale(p) is enforced; the
    method (companion eigenvalues plus guarded Newton polish) is an
    implementation detail.
    """
    if tol <= 0:
        raise InvalidInputError("tolerance must be positive")
    r, witness, ok = real_roots_rows(p.elem[None, :], tol)
    if not ok[0]:
        raise NotHyperbolicError(
            f"polynomial is not hyperbolic: max imaginary magnitude {witness[0]:.3e} "
            f"exceeds {tol:.1e} * scale",
            witness=float(witness[0]),
        )
    res = np.abs(p(r[0])).max()
    if res > max(tol, 1e-12) * p.scale * 100.0:
        raise NotHyperbolicError(
            f"root residual {res:.3e} violates the residual contract", witness=float(res)
        )
    return RootMultiset(r[0])


def center(p: HyperbolicPoly):
    """Shift roots by minus their mean; returns (shift, centered polynomial).

    The centered polynomial is computed by the Taylor shift P(z + shift), not
    through the roots, so the operation is exact polynomial arithmetic.
    """
    n = p.n
    shift = float(p.elem[0]) / n
    b = p.full_coeffs.copy()
    for k in range(n):
        for j in range(1, n + 1 - k):
            b[j] += shift * b[j - 1]
    signs = (-1.0) ** np.arange(1, n + 1)
    return shift, HyperbolicPoly(n, signs * b[1:])


def newton_transform(elem, n: int | None = None) -> np.ndarray:
    """Power sums p_k = sum_i r_i^k from elementary symmetric values.

    Newton's identities: p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-1} k e_k.
    """
    e = np.asarray(elem, dtype=float)
    n = e.size if n is None else n
    p = np.zeros(n + 1)
    for k in range(1, n + 1):
        acc = (-1.0) ** (k - 1) * k * e[k - 1]
        for i in range(1, k):
            acc += (-1.0) ** (i - 1) * e[i - 1] * p[k - i]
        p[k] = acc
    return p[1:]


def newton_transform_inverse(power_sums, n: int | None = None) -> np.ndarray:
    """Elementary symmetric values from power sums (inverse Newton identities)."""
    p = np.asarray(power_sums, dtype=float)
    n = p.size if n is None else n
    e = np.zeros(n + 1)
    e[0] = 1.0
    for k in range(1, n + 1):
        acc = 0.0
        for i in range(1, k + 1):
            acc += (-1.0) ** (i - 1) * e[k - i] * p[i - 1]
        e[k] = acc / k
    return e[1:]
