"""Exact arithmetic in Z[zeta_{2^m}].

An element is a coefficient vector of length ``D = max(1, 2^(m-1))`` on the
basis 1, zeta, ..., zeta^(D-1), using zeta^D = -1.  The array helpers work on
the last axis so whole spectra (and batches of spectra) are handled at once.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np


def ring_dim(m: int) -> int:
    if m < 0:
        raise ValueError(f"ring order exponent must be >= 0, got {m}")
    return 1 if m <= 1 else 1 << (m - 1)


def zeros(shape, m: int) -> np.ndarray:
    if isinstance(shape, int):
        shape = (shape,)
    return np.zeros((*shape, ring_dim(m)), dtype=np.int64)


def power_sum(exps: np.ndarray, m: int, axis: int = -1) -> np.ndarray:
    """Coefficients of sum(zeta^e) over ``axis`` of an integer exponent array."""
    period = 1 << m
    e = np.mod(exps, period)
    d = ring_dim(m)
    e = np.moveaxis(e, axis, -1)
    if m == 0:
        return np.full((*e.shape[:-1], 1), e.shape[-1], dtype=np.int64)
    out = np.empty((*e.shape[:-1], d), dtype=np.int64)
    for j in range(d):
        out[..., j] = np.count_nonzero(e == j, axis=-1) - np.count_nonzero(e == j + d, axis=-1)
    return out


def unit(exps: np.ndarray, m: int) -> np.ndarray:
    """zeta^e for every entry of ``exps`` (one coefficient vector each)."""
    return power_sum(np.asarray(exps)[..., None], m)


def rotate(a: np.ndarray, e: int, m: int) -> np.ndarray:
    """Multiply coefficient arrays by zeta^e (a signed cyclic shift)."""
    if m == 0:
        return a.copy()
    d = ring_dim(m)
    e %= 1 << m
    sign = 1
    if e >= d:
        sign, e = -1, e - d
    if e == 0:
        return sign * a
    out = np.empty_like(a)
    out[..., e:] = a[..., : d - e]
    out[..., :e] = -a[..., d - e:]
    return sign * out


def rotate_each(a: np.ndarray, exps: np.ndarray, m: int) -> np.ndarray:
    """Multiply ``a[..., i, :]`` by zeta^exps[i]; ``exps`` broadcasts over the second-last axis."""
    exps = np.mod(np.asarray(exps), 1 << m)
    out = np.empty_like(a)
    for e in np.unique(exps):
        sel = exps == e
        out[..., sel, :] = rotate(a[..., sel, :], int(e), m)
    return out


def mul(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    """Negacyclic convolution along the last axis."""
    d = ring_dim(m)
    a, b = np.broadcast_arrays(a, b)
    out = np.zeros(a.shape, dtype=np.int64)
    for j in range(d):
        out += a[..., j : j + 1] * rotate(b, j, m)
    return out


def conj(a: np.ndarray, m: int) -> np.ndarray:
    """Complex conjugation, zeta -> zeta^-1 = -zeta^(D-1) ... ."""
    d = ring_dim(m)
    if d == 1:
        return a.copy()
    out = np.empty_like(a)
    out[..., 0] = a[..., 0]
    out[..., 1:] = -a[..., :0:-1]
    return out


def abs_sq(a: np.ndarray, m: int) -> np.ndarray:
    return mul(a, conj(a, m), m)


def lift(a: np.ndarray, m: int, m2: int) -> np.ndarray:
    if m2 < m:
        raise ValueError(f"cannot lift from order 2^{m} down to 2^{m2}")
    if m2 == m:
        return a.copy()
    out = np.zeros((*a.shape[:-1], ring_dim(m2)), dtype=np.int64)
    if m <= 1:
        # Z[zeta_1] = Z[zeta_2] = Z; only the constant term is populated
        out[..., 0] = a[..., 0]
        return out
    step = 1 << (m2 - m)
    out[..., ::step] = a
    return out


def to_complex(a: np.ndarray, m: int) -> np.ndarray:
    d = ring_dim(m)
    if m <= 1:
        return a[..., 0].astype(complex)
    roots = np.exp(2j * np.pi * np.arange(d) / (1 << m))
    return a @ roots


def is_rational_integer(a: np.ndarray) -> np.ndarray:
    return np.all(a[..., 1:] == 0, axis=-1)


def exact_div(a: np.ndarray, divisor: int) -> np.ndarray:
    q, r = np.divmod(a, divisor)
    if np.any(r):
        raise ArithmeticError(f"coefficients not divisible by {divisor}")
    return q


@dataclass(frozen=True)
class CycElement:
    """A single element of Z[zeta_{2^m}] with hashable coefficients."""

    m: int
    coeffs: tuple

    def __post_init__(self):
        d = ring_dim(self.m)
        c = tuple(int(v) for v in self.coeffs)
        if len(c) != d:
            raise ValueError(f"expected {d} coefficients for m={self.m}, got {len(c)}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_int(cls, value: int, m: int = 0) -> "CycElement":
        return cls(m, (value,) + (0,) * (ring_dim(m) - 1))

    @classmethod
    def from_array(cls, arr, m: int) -> "CycElement":
        return cls(m, tuple(np.asarray(arr).tolist()))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)

    def lift(self, m2: int) -> "CycElement":
        return CycElement.from_array(lift(self.array, self.m, m2), m2)

    def _pair(self, other):
        if isinstance(other, (int, np.integer)):
            other = CycElement.from_int(int(other), self.m)
        if not isinstance(other, CycElement):
            return None
        m = max(self.m, other.m)
        return m, self.lift(m).array, other.lift(m).array

    def __add__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        m, a, b = p
        return CycElement.from_array(a + b, m)

    __radd__ = __add__

    def __neg__(self):
        return CycElement(self.m, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        m, a, b = p
        return CycElement.from_array(a - b, m)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        m, a, b = p
        return CycElement.from_array(mul(a, b, m), m)

    __rmul__ = __mul__

    def __eq__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        _, a, b = p
        return bool(np.array_equal(a, b))

    def __hash__(self):
        # equal elements of different m must hash alike: descend to the smallest subring
        c = self.coeffs
        while len(c) > 1 and not any(c[1::2]):
            c = c[::2]
        return hash(c)

    def conj(self) -> "CycElement":
        return CycElement.from_array(conj(self.array, self.m), self.m)

    def abs_sq(self) -> "CycElement":
        return CycElement.from_array(abs_sq(self.array, self.m), self.m)

    def to_complex(self) -> complex:
        return complex(to_complex(self.array, self.m))

    def is_integer(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def __int__(self):
        if not self.is_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def __repr__(self):
        if self.is_integer():
            return f"CycElement({self.coeffs[0]})"
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if j == 0 else f"{c}*z{1 << self.m}^{j}")
        return "CycElement(" + " + ".join(terms) + ")"


def zeta_pow(m: int, e: int) -> CycElement:
    return CycElement.from_array(unit(np.array(e), m), m)


def element_from_complex(z: complex, m: int, tol: float = 1e-9) -> CycElement:
    """Recover a Gaussian-integer-like element when z is exactly representable.

    Only handles values a + b*i with integer a, b (needs m >= 2 if b != 0).
    """
    a, b = round(z.real), round(z.imag)
    if abs(z - complex(a, b)) > tol:
        raise ValueError(f"{z} is not a Gaussian integer")
    if b and m < 2:
        raise ValueError("imaginary part needs m >= 2")
    out = np.zeros(ring_dim(m), dtype=np.int64)
    out[0] = a
    if b:
        out[ring_dim(m) // 2] = b
    return CycElement.from_array(out, m)


def complex_root(order: int, e: int = 1) -> complex:
    return cmath.exp(2j * cmath.pi * e / order)
