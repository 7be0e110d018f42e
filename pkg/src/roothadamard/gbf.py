"""Boolean and generalized Boolean functions.

Points of F_2^n are ordered lexicographically with x_n as the least
significant bit, so table index ``t`` holds the value at ``v_t`` and
coordinate ``j`` (variable ``x_{j+1}``) lives at bit ``n - 1 - j`` of ``t``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence, Union

import numpy as np

MAX_VARS = 24

BitVector = Sequence[int]
Point = Union[int, Sequence[int]]


def bits_to_index(bits: BitVector) -> int:
    """Table index of the point ``(x_1, ..., x_n)``."""
    t = 0
    for b in bits:
        t = (t << 1) | (int(b) & 1)
    return t


def index_to_bits(t: int, n: int) -> tuple[int, ...]:
    return tuple((t >> (n - 1 - j)) & 1 for j in range(n))


def as_index(x: Point, n: int) -> int:
    """Accept either a table index or a length-n bit sequence."""
    if isinstance(x, (int, np.integer)):
        if not 0 <= x < (1 << n):
            raise ValueError(f"point index {x} out of range for n={n}")
        return int(x)
    if len(x) != n:
        raise ValueError(f"bit vector has length {len(x)}, expected {n}")
    return bits_to_index(x)


def coord_bit(j: int, n: int) -> int:
    """Bit position in a table index of coordinate ``j`` (0-based)."""
    return n - 1 - j


def popcounts(n: int) -> np.ndarray:
    """Hamming weight of every point of F_2^n, in table order."""
    w = np.zeros(1 << n, dtype=np.int64)
    idx = np.arange(1 << n)
    for b in range(n):
        w += (idx >> b) & 1
    return w


def masked_popcounts(n: int, coords: Iterable[int]) -> np.ndarray:
    """wt(x_R) for every point, where R is a set of coordinates."""
    idx = np.arange(1 << n)
    w = np.zeros(1 << n, dtype=np.int64)
    for j in coords:
        w += (idx >> coord_bit(j, n)) & 1
    return w


def dot_parity(n: int) -> np.ndarray:
    """The 2^n x 2^n matrix of u.x mod 2."""
    idx = np.arange(1 << n)
    return popcounts_of(idx[:, None] & idx[None, :]) & 1


def popcounts_of(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    out = np.zeros_like(a)
    while np.any(a):
        out += a & 1
        a = a >> 1
    return out


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_VARS:
        raise ValueError(f"n must be in 1..{MAX_VARS}, got {n}")


class BooleanFunction:
    """An n-variable Boolean function stored as its truth table."""

    __slots__ = ("n", "table")

    def __init__(self, n: int, table):
        _check_n(n)
        tab = np.asarray(table, dtype=np.int64)
        if tab.shape != (1 << n,):
            raise ValueError(f"table must have length 2^{n} = {1 << n}, got {tab.shape}")
        if np.any((tab != 0) & (tab != 1)):
            raise ValueError("truth table entries must be 0 or 1")
        tab = tab.astype(np.uint8)
        tab.flags.writeable = False
        self.n = n
        self.table = tab

    def __call__(self, x: Point) -> int:
        return int(self.table[as_index(x, self.n)])

    def __eq__(self, other):
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.n, self.table.tobytes()))

    def __xor__(self, other: "BooleanFunction") -> "BooleanFunction":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return BooleanFunction(self.n, self.table ^ other.table)

    def __repr__(self):
        return f"BooleanFunction(n={self.n}, table={''.join(map(str, self.table))})"

    def weight(self) -> int:
        return int(self.table.sum())

    def to_int(self) -> int:
        """Truth table read as a binary string, f(v_0) most significant."""
        return int("".join(map(str, self.table)), 2)

    @classmethod
    def from_int(cls, n: int, value: int) -> "BooleanFunction":
        size = 1 << n
        return cls(n, [(value >> (size - 1 - i)) & 1 for i in range(size)])

    def as_generalized(self) -> "GeneralizedBooleanFunction":
        return GeneralizedBooleanFunction(self.n, 1, self.table)


class GeneralizedBooleanFunction:
    """A function F_2^n -> Z_{2^k}, stored as its 2^n values."""

    __slots__ = ("n", "k", "values")

    def __init__(self, n: int, k: int, values):
        _check_n(n)
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        vals = np.asarray(values, dtype=np.int64)
        if vals.shape != (1 << n,):
            raise ValueError(f"values must have length 2^{n} = {1 << n}, got {vals.shape}")
        if np.any((vals < 0) | (vals >= (1 << k))):
            raise ValueError(f"values must lie in 0..{(1 << k) - 1}")
        vals = vals.copy()
        vals.flags.writeable = False
        self.n = n
        self.k = k
        self.values = vals

    @classmethod
    def reduce(cls, n: int, k: int, values) -> "GeneralizedBooleanFunction":
        """Build from arbitrary integers, reducing modulo 2^k."""
        return cls(n, k, np.mod(np.asarray(values, dtype=np.int64), 1 << k))

    def __call__(self, x: Point) -> int:
        return int(self.values[as_index(x, self.n)])

    def __eq__(self, other):
        if not isinstance(other, GeneralizedBooleanFunction):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.n, self.k, self.values.tobytes()))

    def __neg__(self) -> "GeneralizedBooleanFunction":
        return GeneralizedBooleanFunction.reduce(self.n, self.k, -self.values)

    def __repr__(self):
        return f"GeneralizedBooleanFunction(n={self.n}, k={self.k}, values={self.values.tolist()})"

    @property
    def q(self) -> int:
        return 1 << self.k


AnyFunction = Union[BooleanFunction, GeneralizedBooleanFunction]


def as_generalized(f: AnyFunction) -> GeneralizedBooleanFunction:
    if isinstance(f, BooleanFunction):
        return f.as_generalized()
    if isinstance(f, GeneralizedBooleanFunction):
        return f
    raise TypeError(f"expected a Boolean or generalized Boolean function, got {type(f).__name__}")


# ---------------------------------------------------------------------------
# ANF

_TERM_RE = re.compile(r"^x(\d+)$")


@dataclass(frozen=True)
class AnfPolynomial:
    """Multilinear polynomial over F_2; monomials are sets of 1-based variables."""

    n: int
    monomials: frozenset

    def __post_init__(self):
        mons = frozenset(frozenset(m) for m in self.monomials)
        for m in mons:
            if any(not 1 <= v <= self.n for v in m):
                raise ValueError(f"monomial {sorted(m)} uses a variable outside x1..x{self.n}")
        object.__setattr__(self, "monomials", mons)

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.monomials), default=0)

    @classmethod
    def parse(cls, text: str, n: int) -> "AnfPolynomial":
        """Parse ``"x1*x2 + x3 + 1"``; juxtaposition ``x1 x2`` also means product.

        Repeated monomials cancel, since coefficients live in F_2.
        """
        body = text.replace(" ", "*").strip("*")
        mons: set[frozenset] = set()
        if body in ("", "0"):
            return cls(n, frozenset())
        for term in body.split("+"):
            factors = [p for p in term.split("*") if p]
            if not factors:
                raise ValueError(f"empty term in ANF {text!r}")
            mon: set[int] = set()
            for p in factors:
                if p == "1":
                    continue
                m = _TERM_RE.match(p)
                if not m:
                    raise ValueError(f"bad ANF factor {p!r} in {text!r}")
                mon.add(int(m.group(1)))
            mons ^= {frozenset(mon)}
        return cls(n, frozenset(mons))

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        ordered = sorted(self.monomials, key=lambda m: (len(m), sorted(m)))
        return " + ".join("*".join(f"x{v}" for v in sorted(m)) if m else "1" for m in ordered)


def truth_table_from_anf(anf: AnfPolynomial) -> BooleanFunction:
    n = anf.n
    _check_n(n)
    idx = np.arange(1 << n)
    table = np.zeros(1 << n, dtype=np.int64)
    for mon in anf.monomials:
        term = np.ones(1 << n, dtype=np.int64)
        for v in mon:
            term &= (idx >> coord_bit(v - 1, n)) & 1
        table ^= term
    return BooleanFunction(n, table)


def mobius(tables: np.ndarray, n: int) -> np.ndarray:
    """Binary Moebius transform along the last axis (self-inverse)."""
    a = np.array(tables, dtype=np.uint8, copy=True)
    lead = a.shape[:-1]
    for b in range(n):
        v = a.reshape(*lead, -1, 2, 1 << b)
        v[..., 1, :] ^= v[..., 0, :]
    return a


def anf_from_truth_table(f: BooleanFunction) -> AnfPolynomial:
    coeffs = mobius(f.table, f.n)
    mons = []
    for t in np.flatnonzero(coeffs):
        mons.append(frozenset(j + 1 for j in range(f.n) if (t >> coord_bit(j, f.n)) & 1))
    return AnfPolynomial(f.n, frozenset(mons))


def anf_degrees(tables: np.ndarray, n: int) -> np.ndarray:
    """Algebraic degree of each truth table in a batch (0 for the zero function)."""
    coeffs = mobius(tables, n).astype(bool)
    w = popcounts(n)
    return np.where(coeffs, w, 0).max(axis=-1)


def parse_function(text: str, n: int) -> BooleanFunction:
    return truth_table_from_anf(AnfPolynomial.parse(text, n))


# ---------------------------------------------------------------------------
# components

def decompose_components(F: GeneralizedBooleanFunction) -> list[BooleanFunction]:
    return [BooleanFunction(F.n, (F.values >> i) & 1) for i in range(F.k)]


def compose_components(components: Sequence[BooleanFunction]) -> GeneralizedBooleanFunction:
    if not components:
        raise ValueError("need at least one component")
    n = components[0].n
    if any(c.n != n for c in components):
        raise ValueError("components have different n")
    vals = sum(c.table.astype(np.int64) << i for i, c in enumerate(components))
    return GeneralizedBooleanFunction(n, len(components), vals)


def component_function(F: GeneralizedBooleanFunction, c: BitVector) -> BooleanFunction:
    """f_c = c_0 a_0 + ... + c_{k-2} a_{k-2} + a_{k-1} over F_2."""
    if len(c) != F.k - 1:
        raise ValueError(f"selector has length {len(c)}, expected k-1 = {F.k - 1}")
    table = (F.values >> (F.k - 1)) & 1
    for i, ci in enumerate(c):
        if ci:
            table = table ^ ((F.values >> i) & 1)
    return BooleanFunction(F.n, table)


def iota(c: BitVector) -> int:
    return sum((int(b) & 1) << j for j, b in enumerate(c))


def selectors(k: int) -> list[tuple[int, ...]]:
    """All of F_2^{k-1}, ordered so that ``iota(selectors(k)[i]) == i``."""
    return [tuple((i >> j) & 1 for j in range(k - 1)) for i in range(1 << (k - 1))]


# ---------------------------------------------------------------------------
# symmetric functions, weights, derivatives

def elementary_symmetric(t: int, x: BitVector) -> int:
    """s_t(x) over F_2, computed as C(wt(x), t) mod 2."""
    if t < 1:
        raise ValueError("t must be >= 1")
    w = sum(int(b) & 1 for b in x)
    return comb(w, t) & 1


def symmetric_table(n: int, t: int, coords: Iterable[int] | None = None) -> np.ndarray:
    """Truth table of s_t restricted to ``coords`` (all coordinates by default).

    Lucas: C(w, t) is odd iff the binary digits of t are a subset of those of w.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    w = popcounts(n) if coords is None else masked_popcounts(n, coords)
    return ((w & t) == t).astype(np.int64)


def weight(x: BitVector) -> int:
    return sum(int(b) & 1 for b in x)


def derivative(F: AnyFunction, a: Point) -> GeneralizedBooleanFunction:
    F = as_generalized(F)
    ai = as_index(a, F.n)
    idx = np.arange(1 << F.n)
    return GeneralizedBooleanFunction.reduce(F.n, F.k, F.values[idx ^ ai] - F.values)
