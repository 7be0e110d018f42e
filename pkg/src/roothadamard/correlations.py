"""Correlations of functions and of bipolar sequences.

Function correlations are all instances of one weighted sum

    sum_x zeta^{F(x+z) - G(x)} prod_s mu_s^{wt(x_{R_s} * z_{R_s})},   mu_s = alpha_s^2

(trivial spec: crosscorrelation; one order-4 block: nega-crosscorrelation).
``shift="second"`` moves the shift to G instead: sum_x zeta^{F(x) - G(x+z)} ...,
which is the orientation the spectral duality produces directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import cyclo
from .cyclo import CycElement
from .gbf import AnyFunction, GeneralizedBooleanFunction, as_generalized, as_index
from .transforms import RootSpec, Spectrum, _butterfly_exact, _butterfly_float, root_hadamard

SHIFTS = ("first", "second")


@dataclass(frozen=True, eq=False)
class CorrelationProfile:
    """Correlation values at every shift z, exact (coeffs) or complex (values)."""

    n: int
    kind: str
    spec: RootSpec
    m: Optional[int] = None
    coeffs: Optional[np.ndarray] = None
    values: Optional[np.ndarray] = None

    @property
    def exact(self) -> bool:
        return self.coeffs is not None

    def __getitem__(self, z) -> CycElement | complex:
        i = as_index(z, self.n)
        if self.exact:
            return CycElement.from_array(self.coeffs[i], self.m)
        return complex(self.values[i])

    def to_complex(self) -> np.ndarray:
        return cyclo.to_complex(self.coeffs, self.m) if self.exact else self.values.copy()

    def lifted(self, m2: int) -> np.ndarray:
        return cyclo.lift(self.coeffs, self.m, m2)

    def nonzero_shifts(self, tol: float = 1e-9) -> list[int]:
        if self.exact:
            mask = np.any(self.coeffs != 0, axis=1)
        else:
            mask = np.abs(self.values) > tol
        return [int(i) for i in np.flatnonzero(mask)]

    def equals(self, other: "CorrelationProfile", tol: float = 1e-9) -> bool:
        if self.n != other.n:
            return False
        if self.exact and other.exact:
            m = max(self.m, other.m)
            return bool(np.array_equal(self.lifted(m), other.lifted(m)))
        return bool(np.allclose(self.to_complex(), other.to_complex(), atol=tol, rtol=0))

    def __add__(self, other: "CorrelationProfile") -> "CorrelationProfile":
        if self.n != other.n:
            raise ValueError("profiles have different n")
        if self.exact and other.exact:
            m = max(self.m, other.m)
            return CorrelationProfile(self.n, self.kind, self.spec, m=m,
                                      coeffs=self.lifted(m) + other.lifted(m))
        return CorrelationProfile(self.n, self.kind, self.spec,
                                  values=self.to_complex() + other.to_complex())

    def to_json(self) -> dict:
        out = {"n": self.n, "kind": self.kind, "spec": self.spec.to_json()}
        if self.exact:
            out["ring_order_exponent"] = self.m
            out["entries"] = self.coeffs.tolist()
        out["entries_complex"] = [[float(z.real), float(z.imag)] for z in self.to_complex()]
        return out


def _pair(F: AnyFunction, G: AnyFunction) -> tuple[GeneralizedBooleanFunction, GeneralizedBooleanFunction]:
    F, G = as_generalized(F), as_generalized(G)
    if (F.n, F.k) != (G.n, G.k):
        raise ValueError(f"dimension mismatch: (n={F.n}, k={F.k}) vs (n={G.n}, k={G.k})")
    return F, G


def _kind_of(spec: RootSpec) -> str:
    if all(b.order == 1 for b in spec.blocks):
        return "cross"
    if spec == RootSpec.nega(spec.n):
        return "nega"
    return "root"


def _rows(F, G, spec: RootSpec, zs: np.ndarray, shift: str, mode: str):
    """Correlation values at the shifts ``zs`` (direct sums over x)."""
    if shift not in SHIFTS:
        raise ValueError(f"shift must be one of {SHIFTS}, got {shift!r}")
    n = F.n
    x = np.arange(1 << n)
    xz = x[None, :] ^ zs[:, None]
    if shift == "first":
        diff = F.values[xz] - G.values[None, :]
    else:
        diff = F.values[None, :] - G.values[xz]
    both = x[None, :] & zs[:, None]
    if mode == "exact":
        m = spec.ring_exponent(F.k)
        exps = (diff << (m - F.k)) + 2 * spec.lambda_exponents(m)[both]
        return cyclo.power_sum(exps, m, axis=1), m
    lam = spec.lambda_complex()
    terms = np.exp(2j * np.pi * diff / F.q) * lam[both] ** 2
    return terms.sum(axis=1), None


def root_correlation_profile(F: AnyFunction, G: Optional[AnyFunction], spec: RootSpec,
                             shift: str = "first", mode: str = "exact") -> CorrelationProfile:
    """Direct-sum profile of the root-crosscorrelation over all shifts."""
    F, G = _pair(F, F if G is None else G)
    if spec.n != F.n:
        raise ValueError(f"spec has n={spec.n} but the functions have n={F.n}")
    if mode == "exact" and not spec.is_power_of_two:
        raise ValueError("exact mode needs power-of-two block orders; use mode='float'")
    size = 1 << F.n
    chunk = max(1, (1 << 20) // size)
    parts = []
    m = None
    for start in range(0, size, chunk):
        zs = np.arange(start, min(size, start + chunk))
        vals, m = _rows(F, G, spec, zs, shift, mode)
        parts.append(vals)
    kind = _kind_of(spec)
    if mode == "exact":
        return CorrelationProfile(F.n, kind, spec, m=m, coeffs=np.concatenate(parts))
    return CorrelationProfile(F.n, kind, spec, values=np.concatenate(parts))


def _single(F, G, spec, z, shift, mode="exact"):
    F, G = _pair(F, G)
    if spec.n != F.n:
        raise ValueError(f"spec has n={spec.n} but the functions have n={F.n}")
    zi = as_index(z, F.n)
    vals, m = _rows(F, G, spec, np.array([zi]), shift, mode)
    return CycElement.from_array(vals[0], m) if mode == "exact" else complex(vals[0])


def crosscorrelation(F: AnyFunction, G: AnyFunction, z) -> CycElement:
    """sum_x zeta^{F(x+z) - G(x)}"""
    F = as_generalized(F)
    return _single(F, G, RootSpec.trivial(F.n), z, "first")


def nega_crosscorrelation(F: AnyFunction, G: AnyFunction, z) -> CycElement:
    """sum_x zeta^{F(x+z) - G(x)} (-1)^{x.z}"""
    F = as_generalized(F)
    return _single(F, G, RootSpec.nega(F.n), z, "first")


def root_crosscorrelation(F: AnyFunction, G: AnyFunction, spec: RootSpec, z,
                          shift: str = "first", mode: str = "exact") -> CycElement | complex:
    return _single(F, G, spec, z, shift, mode)


def root_autocorrelation(F: AnyFunction, spec: RootSpec, z) -> CycElement:
    return _single(F, F, spec, z, "first")


def function_periodic_correlation(F: AnyFunction, G: AnyFunction, u) -> CycElement:
    """sum_v zeta^{F(v) - G(v+u)}"""
    F = as_generalized(F)
    return _single(F, G, RootSpec.trivial(F.n), u, "second")


def function_negaperiodic_correlation(F: AnyFunction, G: AnyFunction, u) -> CycElement:
    """sum_v zeta^{F(v) - G(v+u)} (-1)^{u.v}"""
    F = as_generalized(F)
    return _single(F, G, RootSpec.nega(F.n), u, "second")


# ---------------------------------------------------------------------------
# spectral side

def correlation_from_spectrum(Sf: Spectrum, Sg: Spectrum) -> CorrelationProfile:
    """C(z) = 2^{-n} lambda(z) sum_u Sf(u) conj(Sg(u)) (-1)^{u.z}.

    ``lambda`` comes from the spectra's spec (1 for Walsh, i^{wt} for nega).
    The result is the correlation with the shift on the *second* function:
    sum_x zeta^{f(x) - g(x+z)} mu^{x*z}.  For the first-argument orientation
    feed the spectra of (-g, -f), as :func:`spectral_profile` does.
    """
    if Sf.n != Sg.n or Sf.k != Sg.k or Sf.spec != Sg.spec:
        raise ValueError("spectra must share n, k and spec")
    if Sf.kind != Sg.kind:
        raise ValueError(f"spectrum kinds differ: {Sf.kind} vs {Sg.kind}")
    n, spec = Sf.n, Sf.spec
    kind = _kind_of(spec)
    if Sf.exact and Sg.exact:
        m = max(Sf.m, Sg.m)
        prod = cyclo.mul(Sf.lifted(m), cyclo.conj(Sg.lifted(m), m), m)
        back = cyclo.exact_div(_butterfly_exact(prod, n, m, [0] * n), 1 << n)
        back = cyclo.rotate_each(back, spec.lambda_exponents(m), m)
        return CorrelationProfile(n, kind, spec, m=m, coeffs=back)
    prod = Sf.to_complex() * np.conj(Sg.to_complex())
    back = _butterfly_float(prod, n, np.ones(n)) / (1 << n)
    return CorrelationProfile(n, kind, spec, values=back * spec.lambda_complex())


def spectral_products(C: CorrelationProfile) -> tuple[np.ndarray, int]:
    """Invert :func:`correlation_from_spectrum`: sum_z conj(lambda(z)) C(z) (-1)^{u.z}.

    Returns ``(coeffs, m)`` for Sf(u) conj(Sg(u)); exact profiles only.
    """
    if not C.exact:
        raise ValueError("exact profile required")
    m = max(C.m, C.spec.ring_exponent(1))
    a = cyclo.rotate_each(C.lifted(m), -C.spec.lambda_exponents(m), m)
    return _butterfly_exact(a, C.n, m, [0] * C.n), m


def spectral_profile(F: AnyFunction, G: Optional[AnyFunction], spec: RootSpec,
                     shift: str = "first", mode: str = "exact") -> CorrelationProfile:
    """The correlation profile computed from root-Hadamard spectra only."""
    F, G = _pair(F, F if G is None else G)
    if shift == "second":
        a, b = F, G
    elif shift == "first":
        a, b = -G, -F
    else:
        raise ValueError(f"shift must be one of {SHIFTS}, got {shift!r}")
    return correlation_from_spectrum(root_hadamard(a, spec, mode=mode), root_hadamard(b, spec, mode=mode))


# ---------------------------------------------------------------------------
# bipolar sequences

def as_sequence(a) -> np.ndarray:
    arr = np.asarray(a, dtype=np.int64)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("a sequence must be a non-empty 1-D list")
    if np.any(np.abs(arr) != 1):
        raise ValueError("sequence entries must be +1 or -1")
    return arr


def _check_shift(k: int, N: int) -> None:
    if not 0 <= k <= N - 1:
        raise ValueError(f"shift {k} out of range 0..{N - 1}")


def _same_length(a, b):
    a, b = as_sequence(a), as_sequence(b)
    if a.size != b.size:
        raise ValueError(f"length mismatch: {a.size} vs {b.size}")
    return a, b


def aperiodic_crosscorr(a, b, k: int) -> int:
    """sum_{i=0}^{N-k-1} a_i b_{i+k}"""
    a, b = _same_length(a, b)
    _check_shift(k, a.size)
    return int(np.dot(a[: a.size - k], b[k:]))


def aperiodic_autocorr(a, k: int) -> int:
    return aperiodic_crosscorr(a, a, k)


def periodic_crosscorr(a, b, k: int) -> int:
    a, b = _same_length(a, b)
    _check_shift(k, a.size)
    return int(np.dot(a, np.roll(b, -k)))


def periodic_autocorr(a, k: int) -> int:
    return periodic_crosscorr(a, a, k)


def negaperiodic_crosscorr(a, b, k: int) -> int:
    """Like the periodic sum, but the wrapped-around terms change sign."""
    a, b = _same_length(a, b)
    N = a.size
    _check_shift(k, N)
    shifted = np.roll(b, -k)
    shifted[N - k:] *= -1
    return int(np.dot(a, shifted))


def negaperiodic_autocorr(a, k: int) -> int:
    return negaperiodic_crosscorr(a, a, k)


SEQUENCE_CORRELATIONS = {
    "aperiodic": aperiodic_crosscorr,
    "periodic": periodic_crosscorr,
    "nega": negaperiodic_crosscorr,
}


def sequence_profile(a, b=None, kind: str = "aperiodic") -> np.ndarray:
    """Correlation of the given kind at every shift 0..N-1."""
    try:
        fn = SEQUENCE_CORRELATIONS[kind]
    except KeyError:
        raise ValueError(f"kind must be one of {sorted(SEQUENCE_CORRELATIONS)}") from None
    a = as_sequence(a)
    b = a if b is None else as_sequence(b)
    return np.array([fn(a, b, k) for k in range(a.size)], dtype=np.int64)


def shift_matrix(N: int, kind: str) -> np.ndarray:
    """Cyclic (``periodic``) or negacyclic (``nega``) shift matrix."""
    M = np.eye(N, k=1, dtype=np.int64)
    if kind == "periodic":
        M[N - 1, 0] = 1
    elif kind == "nega":
        M[N - 1, 0] = -1
    else:
        raise ValueError(f"kind must be 'periodic' or 'nega', got {kind!r}")
    return M


def shift_matrix_autocorr(a, k: int, kind: str) -> int:
    a = as_sequence(a)
    _check_shift(k, a.size)
    Mk = np.linalg.matrix_power(shift_matrix(a.size, kind), k)
    return int(a @ (a @ Mk))


class LaurentPoly:
    """Integer Laurent polynomial as a sparse exponent -> coefficient map."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {int(e): int(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def from_sequence(cls, a, inverse: bool = False) -> "LaurentPoly":
        """A(x) = sum a_i x^i, or A(x^-1) when ``inverse``."""
        sign = -1 if inverse else 1
        return cls({sign * i: int(c) for i, c in enumerate(as_sequence(a))})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def coefficient(self, e: int) -> int:
        return self.terms.get(e, 0)

    def reduce(self, N: int, sign: int) -> "LaurentPoly":
        """Reduce modulo x^N - sign (sign=+1 cyclic, -1 negacyclic) into exponents 0..N-1."""
        out: dict[int, int] = {}
        for e, c in self.terms.items():
            q, r = divmod(e, N)
            out[r] = out.get(r, 0) + (c if sign == 1 or q % 2 == 0 else -c)
        return LaurentPoly(out)

    def is_constant(self, value: Optional[int] = None) -> bool:
        if any(e != 0 for e in self.terms):
            return False
        return value is None or self.coefficient(0) == value

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        return "LaurentPoly(" + " + ".join(f"{c}*x^{e}" for e, c in sorted(self.terms.items())) + ")"


def golay_poly_residue(a, b, kind: str = "aperiodic") -> LaurentPoly:
    """A(x)A(x^-1) + B(x)B(x^-1), reduced mod x^N - 1 (periodic) or x^N + 1 (nega).

    The pair is complementary of that kind iff the result is the constant 2N.
    """
    a, b = _same_length(a, b)
    total = LaurentPoly.from_sequence(a) * LaurentPoly.from_sequence(a, inverse=True)
    total = total + LaurentPoly.from_sequence(b) * LaurentPoly.from_sequence(b, inverse=True)
    if kind == "aperiodic":
        return total
    if kind == "periodic":
        return total.reduce(a.size, 1)
    if kind == "nega":
        return total.reduce(a.size, -1)
    raise ValueError(f"kind must be aperiodic, periodic or nega, got {kind!r}")
