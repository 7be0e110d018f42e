"""Walsh-type transforms of generalized Boolean functions.

Every transform here is a sum

    S(u) = sum_x zeta_{2^k}^{F(x)} (-1)^{u.x} lambda(x),    lambda(x) = prod_s alpha_s^{wt(x_{R_s})}

stored unnormalized (no 2^{-n/2}).  Since lambda factors over coordinates the
sum is a tensor product of 2x2 kernels [[1, a_j], [1, -a_j]] and is evaluated
with one butterfly pass per coordinate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Iterable, Optional, Sequence

import numpy as np

from . import cyclo
from .cyclo import CycElement
from .gbf import (
    AnyFunction,
    BooleanFunction,
    GeneralizedBooleanFunction,
    as_generalized,
    as_index,
    component_function,
    coord_bit,
    dot_parity,
    iota,
    masked_popcounts,
    selectors,
    symmetric_table,
)

KINDS = ("walsh", "generalized", "nega", "root")


def _log2_exact(v: int) -> Optional[int]:
    if v >= 1 and v & (v - 1) == 0:
        return v.bit_length() - 1
    return None


@dataclass(frozen=True)
class Block:
    indices: tuple
    order: int

    @property
    def order_exponent(self) -> Optional[int]:
        return _log2_exact(self.order)


@dataclass(frozen=True)
class RootSpec:
    """A partition of the coordinates 0..n-1, each block tagged with a root order."""

    n: int
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(
            b if isinstance(b, Block) else Block(tuple(b[0]), int(b[1])) for b in self.blocks
        )
        blocks = tuple(Block(tuple(int(i) for i in b.indices), int(b.order)) for b in blocks)
        seen: set[int] = set()
        for pos, b in enumerate(blocks):
            if b.order < 1:
                raise ValueError(f"blocks[{pos}].order must be >= 1, got {b.order}")
            if not b.indices:
                raise ValueError(f"blocks[{pos}].indices is empty")
            for i in b.indices:
                if not 0 <= i < self.n:
                    raise ValueError(f"blocks[{pos}].indices: {i} outside 0..{self.n - 1}")
                if i in seen:
                    raise ValueError(f"blocks[{pos}].indices: {i} appears in more than one block")
                seen.add(i)
        if len(seen) != self.n:
            missing = sorted(set(range(self.n)) - seen)
            raise ValueError(f"blocks do not cover coordinates {missing}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def trivial(cls, n: int) -> "RootSpec":
        return cls(n, (Block(tuple(range(n)), 1),))

    @classmethod
    def single(cls, n: int, order: int) -> "RootSpec":
        return cls(n, (Block(tuple(range(n)), order),))

    @classmethod
    def nega(cls, n: int) -> "RootSpec":
        return cls.single(n, 4)

    @property
    def is_power_of_two(self) -> bool:
        return all(b.order_exponent is not None for b in self.blocks)

    def ring_exponent(self, k: int) -> int:
        """Exponent m of the smallest 2^m-th cyclotomic ring holding all values."""
        if not self.is_power_of_two:
            raise ValueError("exact arithmetic needs every block order to be a power of two")
        return max([k] + [b.order_exponent for b in self.blocks])

    def block_of(self, j: int) -> Block:
        for b in self.blocks:
            if j in b.indices:
                return b
        raise KeyError(j)

    def coord_exponents(self, m: int) -> np.ndarray:
        """e_j with alpha_{s(j)} = zeta_{2^m}^{e_j}."""
        out = np.zeros(self.n, dtype=np.int64)
        for b in self.blocks:
            me = b.order_exponent
            if me is None or me > m:
                raise ValueError(f"order {b.order} does not fit in Z[zeta_{1 << m}]")
            for j in b.indices:
                out[j] = 1 << (m - me)
        return out

    def lambda_exponents(self, m: int) -> np.ndarray:
        """Exponent of lambda_L(x) in zeta_{2^m} at every point x."""
        exps = np.zeros(1 << self.n, dtype=np.int64)
        ce = self.coord_exponents(m)
        idx = np.arange(1 << self.n)
        for j in range(self.n):
            exps += ((idx >> coord_bit(j, self.n)) & 1) * ce[j]
        return exps

    def coord_roots(self) -> np.ndarray:
        roots = np.empty(self.n, dtype=complex)
        for b in self.blocks:
            for j in b.indices:
                roots[j] = cyclo.complex_root(b.order)
        return roots

    def lambda_complex(self) -> np.ndarray:
        out = np.ones(1 << self.n, dtype=complex)
        for b in self.blocks:
            out *= cyclo.complex_root(b.order) ** masked_popcounts(self.n, b.indices)
        return out

    def trivialize(self, positions: Iterable[int]) -> "RootSpec":
        """Replace the roots of the given blocks by 1."""
        pos = set(positions)
        for p in pos:
            if not 0 <= p < len(self.blocks):
                raise ValueError(f"block position {p} out of range")
        return RootSpec(
            self.n, tuple(Block(b.indices, 1) if i in pos else b for i, b in enumerate(self.blocks))
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "blocks": [{"indices": list(b.indices), "order": b.order} for b in self.blocks],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RootSpec":
        try:
            n = int(data["n"])
            raw = data["blocks"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"RootSpec JSON needs 'n' and 'blocks': missing {exc}") from None
        blocks = []
        for pos, b in enumerate(raw):
            if "indices" not in b or "order" not in b:
                raise ValueError(f"blocks[{pos}] needs 'indices' and 'order'")
            blocks.append(Block(tuple(b["indices"]), int(b["order"])))
        return cls(n, tuple(blocks))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Transform values at all 2^n points u, exact (coeffs) or complex (values)."""

    n: int
    kind: str
    spec: RootSpec
    k: int
    m: Optional[int] = None
    coeffs: Optional[np.ndarray] = field(default=None, repr=False)
    values: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def exact(self) -> bool:
        return self.coeffs is not None

    def __len__(self):
        return 1 << self.n

    def __getitem__(self, u) -> CycElement | complex:
        i = as_index(u, self.n)
        if self.exact:
            return CycElement.from_array(self.coeffs[i], self.m)
        return complex(self.values[i])

    @property
    def entries(self) -> list:
        return [self[i] for i in range(1 << self.n)]

    def to_complex(self) -> np.ndarray:
        if self.exact:
            return cyclo.to_complex(self.coeffs, self.m)
        return self.values.copy()

    def lifted(self, m2: int) -> np.ndarray:
        return cyclo.lift(self.coeffs, self.m, m2)

    def magnitudes_sq(self, tol: float = 1e-6) -> np.ndarray:
        """|S(u)|^2 as integers; ValueError if some value is not a rational integer."""
        if self.exact:
            sq = cyclo.abs_sq(self.coeffs, self.m)
            if not np.all(cyclo.is_rational_integer(sq)):
                raise ValueError("some |S(u)|^2 is not a rational integer")
            return sq[:, 0]
        sq = np.abs(self.values) ** 2
        rounded = np.rint(sq)
        if np.max(np.abs(sq - rounded), initial=0.0) > tol:
            raise ValueError("some |S(u)|^2 is not within tolerance of an integer")
        return rounded.astype(np.int64)

    def equals(self, other: "Spectrum", tol: float = 1e-9) -> bool:
        if self.n != other.n:
            return False
        if self.exact and other.exact:
            m = max(self.m, other.m)
            return bool(np.array_equal(self.lifted(m), other.lifted(m)))
        return bool(np.allclose(self.to_complex(), other.to_complex(), atol=tol, rtol=0))

    def to_json(self, with_complex: bool = True) -> dict:
        out = {"n": self.n, "kind": self.kind, "k": self.k, "spec": self.spec.to_json()}
        if self.exact:
            out["ring_order_exponent"] = self.m
            out["entries"] = self.coeffs.tolist()
        if with_complex or not self.exact:
            c = self.to_complex()
            out["entries_complex"] = [[float(z.real), float(z.imag)] for z in c]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Spectrum":
        spec = RootSpec.from_json(data["spec"]) if "spec" in data else RootSpec.trivial(int(data["n"]))
        kind = data.get("kind", "root")
        if kind not in KINDS:
            raise ValueError(f"unknown spectrum kind {kind!r}")
        common = dict(n=int(data["n"]), kind=kind, spec=spec, k=int(data.get("k", 1)))
        if "entries" in data:
            m = int(data["ring_order_exponent"])
            coeffs = np.array(data["entries"], dtype=np.int64)
            if coeffs.shape != (1 << common["n"], cyclo.ring_dim(m)):
                raise ValueError(f"entries must have shape (2^n, {cyclo.ring_dim(m)})")
            return cls(m=m, coeffs=coeffs, **common)
        vals = np.array([complex(re, im) for re, im in data["entries_complex"]])
        return cls(values=vals, **common)


# ---------------------------------------------------------------------------
# butterflies

def _butterfly_exact(a: np.ndarray, n: int, m: int, coord_exps: Sequence[int]) -> np.ndarray:
    """Apply [[1, z^e_j], [1, -z^e_j]] on every coordinate; a has shape (..., 2^n, D)."""
    a = np.array(a, dtype=np.int64, copy=True)
    lead = a.shape[:-2]
    d = a.shape[-1]
    for j in range(n):
        b = coord_bit(j, n)
        v = a.reshape(*lead, 1 << j, 2, 1 << b, d)
        t = cyclo.rotate(v[..., 1, :, :], int(coord_exps[j]), m)
        x0 = v[..., 0, :, :].copy()
        v[..., 0, :, :] = x0 + t
        v[..., 1, :, :] = x0 - t
    return a


def _butterfly_float(a: np.ndarray, n: int, roots: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex, copy=True)
    lead = a.shape[:-1]
    for j in range(n):
        b = coord_bit(j, n)
        v = a.reshape(*lead, 1 << j, 2, 1 << b)
        t = v[..., 1, :] * roots[j]
        x0 = v[..., 0, :].copy()
        v[..., 0, :] = x0 + t
        v[..., 1, :] = x0 - t
    return a


def root_hadamard_batch(values: np.ndarray, k: int, spec: RootSpec) -> tuple[np.ndarray, int]:
    """Exact root-Hadamard spectra of a batch of value tables, shape (..., 2^n).

    Returns ``(coeffs, m)`` with coeffs of shape (..., 2^n, D).
    """
    m = spec.ring_exponent(k)
    a = cyclo.unit(np.asarray(values, dtype=np.int64) << (m - k), m)
    return _butterfly_exact(a, spec.n, m, spec.coord_exponents(m)), m


def walsh_batch(tables: np.ndarray, n: int) -> np.ndarray:
    """Integer Walsh-Hadamard spectra of a batch of Boolean truth tables."""
    a = (1 - 2 * np.asarray(tables, dtype=np.int64))[..., None]
    return _butterfly_exact(a, n, 1, [0] * n)[..., 0]


def _check_dims(F: GeneralizedBooleanFunction, spec: RootSpec) -> None:
    if spec.n != F.n:
        raise ValueError(f"spec has n={spec.n} but the function has n={F.n}")


def root_hadamard(F: AnyFunction, spec: RootSpec, mode: str = "exact", kind: str = "root") -> Spectrum:
    F = as_generalized(F)
    _check_dims(F, spec)
    if mode == "exact":
        if not spec.is_power_of_two:
            raise ValueError("exact mode needs power-of-two block orders; use mode='float'")
        coeffs, m = root_hadamard_batch(F.values, F.k, spec)
        return Spectrum(F.n, kind, spec, F.k, m=m, coeffs=coeffs)
    if mode == "float":
        a = np.exp(2j * np.pi * F.values / F.q)
        return Spectrum(F.n, kind, spec, F.k, values=_butterfly_float(a, F.n, spec.coord_roots()))
    raise ValueError(f"mode must be 'exact' or 'float', got {mode!r}")


def walsh_hadamard(f: BooleanFunction) -> Spectrum:
    if not isinstance(f, BooleanFunction):
        raise TypeError("walsh_hadamard takes a BooleanFunction; use generalized_walsh otherwise")
    return root_hadamard(f, RootSpec.trivial(f.n), kind="walsh")


def generalized_walsh(F: AnyFunction) -> Spectrum:
    F = as_generalized(F)
    return root_hadamard(F, RootSpec.trivial(F.n), kind="generalized")


def nega_hadamard(F: AnyFunction) -> Spectrum:
    F = as_generalized(F)
    return root_hadamard(F, RootSpec.nega(F.n), kind="nega")


def binary_root_transform(f: BooleanFunction, spec: RootSpec, mode: str = "exact") -> Spectrum:
    return root_hadamard(as_generalized(f), spec, mode=mode)


def naive_root_hadamard(F: AnyFunction, spec: RootSpec, mode: str = "exact") -> Spectrum:
    """Direct O(4^n) evaluation, independent of the butterfly."""
    F = as_generalized(F)
    _check_dims(F, spec)
    n = F.n
    if mode == "float":
        kern = np.where(dot_parity(n) == 1, -1.0, 1.0)
        terms = np.exp(2j * np.pi * F.values / F.q) * spec.lambda_complex()
        return Spectrum(n, "root", spec, F.k, values=kern @ terms)
    m = spec.ring_exponent(F.k)
    half = 1 << (m - 1)
    exps = (F.values << (m - F.k))[None, :] + half * dot_parity(n) + spec.lambda_exponents(m)[None, :]
    return Spectrum(n, "root", spec, F.k, m=m, coeffs=cyclo.power_sum(exps, m, axis=1))


# ---------------------------------------------------------------------------
# inversion and component synthesis

def invert_root_hadamard(S: Spectrum, spec: Optional[RootSpec] = None) -> GeneralizedBooleanFunction:
    """Recover F from its exact root-Hadamard spectrum.

    2^n zeta^{F(y)} lambda(y) = sum_w S(w) (-1)^{y.w}; the quotient must be a
    single power of zeta_{2^k}, otherwise the spectrum is rejected.
    """
    spec = spec or S.spec
    if not S.exact:
        raise ValueError("inversion needs an exact spectrum")
    if spec.n != S.n:
        raise ValueError(f"spec has n={spec.n} but the spectrum has n={S.n}")
    n, m, k = S.n, S.m, S.k
    if spec.ring_exponent(k) > m:
        raise ValueError("spectrum ring is too small for this spec")
    back = _butterfly_exact(S.coeffs, n, m, [0] * n)
    try:
        back = cyclo.exact_div(back, 1 << n)
    except ArithmeticError:
        raise ValueError("spectrum is not in the image of the transform") from None
    back = cyclo.rotate_each(back, -spec.lambda_exponents(m), m)
    # each row must now be +-e_j, i.e. a single root of unity
    nz = np.count_nonzero(back, axis=1)
    pos = np.argmax(back != 0, axis=1)
    lead = back[np.arange(1 << n), pos]
    if np.any(nz != 1) or np.any(np.abs(lead) != 1):
        raise ValueError("spectrum is not in the image of the transform")
    d = cyclo.ring_dim(m)
    e = np.where(lead == 1, pos, pos + d) if m >= 1 else np.zeros_like(pos)
    step = 1 << (m - k)
    if np.any(e % step):
        raise ValueError("recovered values are not powers of zeta_{2^k}")
    return GeneralizedBooleanFunction(n, k, (e // step) % (1 << k))


def component_synthesis_spectrum(F: AnyFunction, spec: RootSpec) -> Spectrum:
    """Assemble U_F from the binary transforms of the component functions f_c.

    U_F(u) = 2^{-(k-1)} sum_{c,d} (-1)^{c.d} zeta_{2^k}^{iota(d)} T_{f_c}(u)
    """
    F = as_generalized(F)
    _check_dims(F, spec)
    k = F.k
    m = spec.ring_exponent(k)
    sels = selectors(k)
    total = cyclo.zeros(1 << F.n, m)
    for c in sels:
        T = binary_root_transform(component_function(F, c), spec)
        Tm = T.lifted(m)
        for d in sels:
            sign = -1 if sum(ci & di for ci, di in zip(c, d)) & 1 else 1
            total += sign * cyclo.rotate(Tm, iota(d) << (m - k), m)
    return Spectrum(F.n, "root", spec, k, m=m, coeffs=cyclo.exact_div(total, 1 << (k - 1)))


def component_synthesis(F: AnyFunction, spec: RootSpec, u) -> CycElement:
    return component_synthesis_spectrum(F, spec)[u]


def double_sum_reconstruction(family: np.ndarray, c: Sequence[int]) -> np.ndarray:
    """2^{-(k-1)} sum_{u,v} (-1)^{(u+c).v} F_u for a family indexed by iota(u) on axis 0.

    Equals ``family[iota(c)]``; integer families are divided exactly.
    """
    family = np.asarray(family)
    size = family.shape[0]
    if size & (size - 1):
        raise ValueError("family size must be a power of two")
    width = size.bit_length() - 1
    if len(c) != width:
        raise ValueError(f"selector has length {len(c)}, expected {width}")
    ci = iota(c)
    total = np.zeros(family.shape[1:], dtype=family.dtype)
    for u in range(size):
        for v in range(size):
            total = total + (-1) ** (bin((u ^ ci) & v).count("1") & 1) * family[u]
    if np.issubdtype(family.dtype, np.integer):
        return cyclo.exact_div(total, size)
    return total / size


# ---------------------------------------------------------------------------
# relationships between transforms

def nega_to_walsh_lift(F: AnyFunction) -> GeneralizedBooleanFunction:
    """g over Z_{2^{k+1}} whose generalized Walsh spectrum is the nega spectrum of F."""
    F = as_generalized(F)
    n, k = F.n, F.k
    g = 2 * F.values + (symmetric_table(n, 1) << (k - 1)) + (symmetric_table(n, 2) << k)
    return GeneralizedBooleanFunction.reduce(n, k + 1, g)


def root_shift_function(F: AnyFunction, spec: RootSpec, blocks: Iterable[int]) -> GeneralizedBooleanFunction:
    """h_J = F - sum_{s in J} 2^{k-m_s} (wt(x_{R_s}) mod 2^{m_s})  (mod 2^k).

    ``blocks`` lists positions in ``spec.blocks``.  The transform of h_J under
    ``spec`` equals the transform of F under ``spec.trivialize(blocks)``.
    """
    F = as_generalized(F)
    _check_dims(F, spec)
    k = F.k
    h = F.values.copy()
    for p in set(blocks):
        if not 0 <= p < len(spec.blocks):
            raise ValueError(f"block position {p} out of range")
        b = spec.blocks[p]
        ms = b.order_exponent
        if ms is None or ms > k:
            raise ValueError(f"block order {b.order} must be a power of two not exceeding 2^{k}")
        # wt mod 2^ms assembled from s_1, s_2, s_4, ... on the block
        wt_mod = sum(symmetric_table(F.n, 1 << j, b.indices) << j for j in range(ms))
        h = h - (np.asarray(wt_mod, dtype=np.int64) << (k - ms))
    return GeneralizedBooleanFunction.reduce(F.n, k, h)


# ---------------------------------------------------------------------------
# spectral classification

@dataclass(frozen=True)
class SpectralClass:
    kind: str  # bent | plateaued | landscape | general
    s: Optional[int] = None
    levels: frozenset = frozenset()
    zero_in_spectrum: bool = False
    length: Optional[int] = None
    magnitudes_sq: tuple = ()

    @property
    def is_bent(self) -> bool:
        return self.kind == "bent"

    @property
    def is_plateaued(self) -> bool:
        return self.kind in ("bent", "plateaued")

    @property
    def is_landscape(self) -> bool:
        return self.kind != "general"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "s": self.s,
            "levels": sorted([list(p) for p in self.levels]),
            "zero_in_spectrum": self.zero_in_spectrum,
            "length": self.length,
            "magnitudes_sq": sorted(set(self.magnitudes_sq)),
        }


def level_of(mag_sq: int) -> Optional[tuple[int, int]]:
    """(m, l) with mag_sq = 2^m l^2 and l odd, or None if no such pair exists."""
    if mag_sq <= 0:
        return None
    a = (mag_sq & -mag_sq).bit_length() - 1
    r = mag_sq >> a
    l = isqrt(r)
    if l * l != r:
        return None
    return a, l


def classify_magnitudes(n: int, mags: Sequence[int]) -> SpectralClass:
    mags = tuple(int(v) for v in mags)
    distinct = sorted(set(mags))
    zero = 0 in distinct
    nonzero = [v for v in distinct if v]
    levels = [level_of(v) for v in nonzero]
    if any(lv is None for lv in levels):
        return SpectralClass("general", zero_in_spectrum=zero, magnitudes_sq=mags)
    levels_set = frozenset(levels)
    length = len(levels_set) + (1 if zero else 0)
    if not zero and nonzero == [1 << n]:
        return SpectralClass("bent", 0, levels_set, False, length, mags)
    if len(nonzero) == 1:
        s = _log2_exact(nonzero[0])
        if s is not None and s >= n:
            return SpectralClass("plateaued", s - n, levels_set, zero, length, mags)
    return SpectralClass("landscape", None, levels_set, zero, length, mags)


def classify_spectrum(S: Spectrum, tol: float = 1e-6) -> SpectralClass:
    try:
        mags = S.magnitudes_sq(tol)
    except ValueError:
        raw = np.abs(S.to_complex()) ** 2
        return SpectralClass("general", zero_in_spectrum=bool(np.any(raw < tol)),
                             magnitudes_sq=tuple(float(v) for v in raw))
    return classify_magnitudes(S.n, mags)


def is_flat(S: Spectrum) -> bool:
    """bent / gbent / negabent / root-bent: |S(u)|^2 = 2^n everywhere."""
    try:
        return bool(np.all(S.magnitudes_sq() == (1 << S.n)))
    except ValueError:
        return False

