"""Exhaustive search over truth-table spaces.

Candidates are numbered by their truth-table integer and scanned in
contiguous ranges, so a parallel run is a concatenation of independent
single-threaded scans and always produces the same list.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import cyclo
from .correlations import SEQUENCE_CORRELATIONS, root_correlation_profile
from .cyclo import CycElement
from .gbf import (
    AnyFunction,
    GeneralizedBooleanFunction,
    anf_degrees,
    as_generalized,
    as_index,
)
from .transforms import RootSpec, _butterfly_exact, naive_root_hadamard, root_hadamard_batch

MAX_CANDIDATES = 1 << 24
MAX_GOLAY_LENGTH = 16
BATCH = 1 << 12


def function_code(F: AnyFunction) -> int:
    """Truth-table integer: the values read as base-2^k digits, F(v_0) most significant."""
    F = as_generalized(F)
    code = 0
    for v in F.values.tolist():
        code = (code << F.k) | v
    return code


@dataclass(frozen=True)
class SearchSpace:
    """A set of candidate functions F_2^n -> Z_{2^k}.

    With a ``template`` one binary component (``free_component``) is free and
    the others are copied from the template.  Without one, every function is a
    candidate.  ``candidates`` replaces enumeration by an explicit list.
    ``degree_bound`` keeps candidates whose free part (or every component, when
    there is no template) has ANF degree at most the bound.
    """

    n: int
    k: int = 1
    template: Optional[GeneralizedBooleanFunction] = None
    free_component: Optional[int] = None
    degree_bound: Optional[int] = None
    candidates: Optional[tuple] = None
    _free: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.template is not None:
            t = as_generalized(self.template)
            if t.n != self.n:
                raise ValueError(f"template has n={t.n}, space has n={self.n}")
            object.__setattr__(self, "template", t)
            object.__setattr__(self, "k", t.k)
        if self.candidates:
            object.__setattr__(self, "k", as_generalized(self.candidates[0]).k)
        free = self.k - 1 if self.free_component is None else self.free_component
        if not 0 <= free < self.k:
            raise ValueError(f"free_component must lie in 0..{self.k - 1}, got {free}")
        object.__setattr__(self, "_free", free)
        if self.candidates is not None:
            cands = tuple(sorted({as_generalized(F) for F in self.candidates}, key=function_code))
            if any((F.n, F.k) != (self.n, self.k) for F in cands):
                raise ValueError(f"candidates must all have n={self.n}, k={self.k}")
            object.__setattr__(self, "candidates", cands)

    @property
    def size(self) -> int:
        """Number of raw candidates before the degree filter."""
        if self.candidates is not None:
            return len(self.candidates)
        bits = 1 << self.n
        return 1 << (bits if self.template is not None else self.k * bits)

    def check_size(self) -> None:
        if self.size > MAX_CANDIDATES:
            raise ValueError(
                f"search space has {self.size} candidates, above the limit of {MAX_CANDIDATES}")

    def values(self, lo: int, hi: int) -> np.ndarray:
        """Value tables of raw candidates lo..hi-1 after the degree filter, shape (B, 2^n)."""
        size = 1 << self.n
        if self.candidates is not None:
            vals = np.array([F.values for F in self.candidates[lo:hi]], dtype=np.int64)
            vals = vals.reshape(-1, size)
            comps = [(vals >> i) & 1 for i in range(self.k)]
        else:
            codes = np.arange(lo, hi, dtype=np.int64)
            if self.template is not None:
                shifts = np.arange(size - 1, -1, -1)
                free = (codes[:, None] >> shifts) & 1
                base = self.template.values & ~np.int64(1 << self._free)
                vals = base + (free << self._free)
                comps = [free]
            else:
                shifts = self.k * np.arange(size - 1, -1, -1)
                vals = (codes[:, None] >> shifts) & ((1 << self.k) - 1)
                comps = [(vals >> i) & 1 for i in range(self.k)]
        if self.degree_bound is not None and len(vals):
            keep = np.ones(len(vals), dtype=bool)
            for c in comps:
                keep &= anf_degrees(c, self.n) <= self.degree_bound
            vals = vals[keep]
        return vals


@dataclass(frozen=True)
class ProfileTarget:
    """Required correlation value at each shift; unspecified shifts must be zero."""

    n: int
    values: dict
    wildcard: frozenset = frozenset()

    def __post_init__(self):
        vals = {}
        for u, v in self.values.items():
            idx = as_index(u, self.n)
            vals[idx] = v if isinstance(v, CycElement) else CycElement.from_int(int(v))
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "wildcard", frozenset(as_index(u, self.n) for u in self.wildcard))

    @property
    def is_consistent(self) -> bool:
        """An autocorrelation at the zero shift is always 2^n."""
        v = self.values.get(0)
        return v is None or v == (1 << self.n) or 0 in self.wildcard

    def arrays(self, m: int) -> tuple[np.ndarray, np.ndarray]:
        """Target coefficients at ring exponent m and the mask of checked shifts."""
        size = 1 << self.n
        out = cyclo.zeros(size, m)
        for u, v in self.values.items():
            out[u] = v.lift(m).array if v.m <= m else _descend(v, m)
        mask = np.ones(size, dtype=bool)
        mask[list(self.wildcard)] = False
        return out, mask


def _descend(v: CycElement, m: int) -> np.ndarray:
    """Coefficients of v in the smaller ring Z[zeta_{2^m}], or a sentinel that matches nothing."""
    step = cyclo.ring_dim(v.m) // cyclo.ring_dim(m)
    a = v.array
    if m <= 1:
        if np.any(a[1:]):
            return np.full(1, np.iinfo(np.int64).min)
        return a[:1]
    mask = np.ones(a.size, dtype=bool)
    mask[::step] = False
    if np.any(a[mask]):
        return np.full(cyclo.ring_dim(m), np.iinfo(np.int64).min)
    return a[::step]


# ---------------------------------------------------------------------------
# batch kernels

def _flat_rows(values: np.ndarray, k: int, spec: RootSpec) -> np.ndarray:
    coeffs, m = root_hadamard_batch(values, k, spec)
    mags = cyclo.abs_sq(coeffs, m)
    flat = np.all(mags[..., 1:] == 0, axis=-1) & (mags[..., 0] == 1 << spec.n)
    return np.all(flat, axis=-1)


def _autocorrelation_batch(values: np.ndarray, k: int, spec: RootSpec) -> tuple[np.ndarray, int]:
    """Root autocorrelation profiles (shift on the first argument) of a batch.

    Uses the spectrum of -F: C(z) = 2^-n lambda(z) sum_u |S_{-F}(u)|^2 (-1)^{u.z}.
    """
    n = spec.n
    coeffs, m = root_hadamard_batch(np.mod(-values, 1 << k), k, spec)
    back = cyclo.exact_div(_butterfly_exact(cyclo.abs_sq(coeffs, m), n, m, [0] * n), 1 << n)
    return cyclo.rotate_each(back, spec.lambda_exponents(m), m), m


def _profile_rows(values, k, spec, target: ProfileTarget) -> np.ndarray:
    prof, m = _autocorrelation_batch(values, k, spec)
    want, mask = target.arrays(m)
    return np.all((prof == want)[:, mask], axis=(-2, -1))


def _scan_range(args) -> list[np.ndarray]:
    space, spec, target, lo, hi = args
    hits = []
    for start in range(lo, hi, BATCH):
        vals = space.values(start, min(hi, start + BATCH))
        if not len(vals):
            continue
        if target is None:
            keep = _flat_rows(vals, space.k, spec)
        else:
            keep = _profile_rows(vals, space.k, spec, target)
        hits.extend(vals[keep])
    return hits


def _ranges(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    edges = np.linspace(0, total, parts + 1).astype(np.int64)
    return [(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:]) if b > a]


def default_jobs() -> int:
    env = os.environ.get("ROOTSPEC_JOBS")
    if env:
        jobs = int(env)
        if jobs < 1:
            raise ValueError(f"ROOTSPEC_JOBS must be >= 1, got {env!r}")
        return jobs
    return 1


def _run(space: SearchSpace, spec: RootSpec, target: Optional[ProfileTarget], jobs: int):
    space.check_size()
    if spec.n != space.n:
        raise ValueError(f"spec has n={spec.n}, space has n={space.n}")
    if not spec.is_power_of_two:
        raise ValueError("search needs power-of-two block orders")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    total = space.size
    if jobs == 1 or total <= BATCH:
        chunks = [_scan_range((space, spec, target, 0, total))]
    else:
        work = [(space, spec, target, a, b) for a, b in _ranges(total, 4 * jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_scan_range, work))
    found = [GeneralizedBooleanFunction(space.n, space.k, v) for chunk in chunks for v in chunk]
    return sorted(found, key=function_code)


def search_root_bent(space: SearchSpace, spec: RootSpec, jobs: int = 1) -> list[GeneralizedBooleanFunction]:
    """Every candidate with |S(u)|^2 = 2^n at all u, sorted by truth-table integer."""
    hits = _run(space, spec, None, jobs)
    for F in hits:
        mags = naive_root_hadamard(F, spec).coeffs
        if not np.all(cyclo.abs_sq(mags, spec.ring_exponent(F.k)) == _flat_value(spec, F.k)):
            raise RuntimeError(f"hit {function_code(F)} failed the direct re-check")
    return hits


def _flat_value(spec: RootSpec, k: int) -> np.ndarray:
    out = cyclo.zeros((), spec.ring_exponent(k))
    out[0] = 1 << spec.n
    return out


def search_profile_match(space: SearchSpace, spec: RootSpec, target: ProfileTarget,
                         jobs: int = 1) -> list[GeneralizedBooleanFunction]:
    """Every candidate whose root autocorrelation profile equals ``target``."""
    if target.n != space.n:
        raise ValueError(f"target has n={target.n}, space has n={space.n}")
    space.check_size()
    if not target.is_consistent:
        return []
    hits = _run(space, spec, target, jobs)
    for F in hits:
        direct = root_correlation_profile(F, None, spec)
        want, mask = target.arrays(direct.m)
        if not np.all((direct.coeffs == want)[mask]):
            raise RuntimeError(f"hit {function_code(F)} failed the direct re-check")
    return hits


# ---------------------------------------------------------------------------
# sequences

def sequences_of_length(N: int) -> np.ndarray:
    """All 2^N bipolar sequences; row c encodes +1 as bit 0, most significant first."""
    codes = np.arange(1 << N, dtype=np.int64)
    bits = (codes[:, None] >> np.arange(N - 1, -1, -1)) & 1
    return 1 - 2 * bits


def sequence_code(a: Sequence[int]) -> int:
    code = 0
    for v in a:
        code = (code << 1) | (v == -1)
    return code


def autocorrelation_table(seqs: np.ndarray, kind: str) -> np.ndarray:
    """Autocorrelations of every row at shifts 0..N-1."""
    N = seqs.shape[1]
    out = np.empty((len(seqs), N), dtype=np.int64)
    for s in range(N):
        head = np.sum(seqs[:, : N - s] * seqs[:, s:], axis=1)
        wrap = np.sum(seqs[:, N - s:] * seqs[:, :s], axis=1)
        if kind == "aperiodic":
            out[:, s] = head
        elif kind == "periodic":
            out[:, s] = head + wrap
        else:
            out[:, s] = head - wrap
    return out


def search_golay_pairs(N: int, kind: str = "aperiodic") -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All pairs (a, b) with code(a) <= code(b) whose autocorrelations cancel off the peak."""
    if kind not in SEQUENCE_CORRELATIONS:
        raise ValueError(f"kind must be one of {sorted(SEQUENCE_CORRELATIONS)}, got {kind!r}")
    if not 1 <= N <= MAX_GOLAY_LENGTH:
        raise ValueError(f"length must lie in 1..{MAX_GOLAY_LENGTH}, got {N}")
    seqs = sequences_of_length(N)
    side = autocorrelation_table(seqs, kind)[:, 1:]
    groups: dict[bytes, list[int]] = {}
    for c, row in enumerate(side):
        groups.setdefault(row.tobytes(), []).append(c)
    pairs = []
    for c, row in enumerate(side):
        for d in groups.get((-row).tobytes(), ()):
            if c <= d:
                pairs.append((c, d))
    pairs.sort()
    return [(tuple(seqs[c].tolist()), tuple(seqs[d].tolist())) for c, d in pairs]
