"""Complementarity predicates for sequence sets and function sets."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .correlations import (
    CorrelationProfile,
    as_sequence,
    function_negaperiodic_correlation,
    root_correlation_profile,
    sequence_profile,
)
from .gbf import (
    AnyFunction,
    GeneralizedBooleanFunction,
    as_generalized,
    component_function,
    index_to_bits,
    selectors,
)
from .transforms import RootSpec

SEQUENCE_KINDS = ("aperiodic", "periodic", "nega")
_CROSS_KINDS = {"A": "aperiodic", "P": "periodic", "N": "nega"}


@dataclass(frozen=True)
class ComplementarityVerdict:
    kind: str
    witnesses: tuple = ()
    holds: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "witnesses", tuple(self.witnesses))
        object.__setattr__(self, "holds", not self.witnesses)

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        return {"kind": self.kind, "holds": self.holds, "witnesses": [_jsonable(w) for w in self.witnesses]}


def _jsonable(w):
    return list(w) if isinstance(w, tuple) else w


def _sequence_set(seqs) -> list[np.ndarray]:
    seqs = [as_sequence(s) for s in seqs]
    if not seqs:
        raise ValueError("empty sequence set")
    if len({s.size for s in seqs}) != 1:
        raise ValueError("sequences have different lengths")
    return seqs


def is_complementary_set(seqs, kind: str = "aperiodic", pairwise: bool = False) -> ComplementarityVerdict:
    """Autocorrelations of the given kind sum to zero at every shift k != 0.

    With ``pairwise`` every 2-subset must be complementary on its own; the
    witnesses are then the offending index pairs.
    """
    if kind not in SEQUENCE_KINDS:
        raise ValueError(f"kind must be one of {SEQUENCE_KINDS}, got {kind!r}")
    seqs = _sequence_set(seqs)
    if pairwise:
        bad = [(i, j) for i, j in combinations(range(len(seqs)), 2)
               if not is_complementary_set([seqs[i], seqs[j]], kind)]
        return ComplementarityVerdict(f"pairwise-{kind}", bad)
    total = sum(sequence_profile(s, kind=kind) for s in seqs)
    return ComplementarityVerdict(kind, [int(k) for k in np.flatnonzero(total[1:]) + 1])


def is_crosscomplementary(p1, p2, kind: str = "A") -> ComplementarityVerdict:
    """Cross-correlations of (a1, a2) and (b1, b2) cancel at every shift k != 0."""
    if kind not in _CROSS_KINDS:
        raise ValueError(f"kind must be one of {sorted(_CROSS_KINDS)}, got {kind!r}")
    a1, a2 = p1
    b1, b2 = p2
    _sequence_set([a1, a2, b1, b2])
    which = _CROSS_KINDS[kind]
    total = sequence_profile(a1, a2, which) + sequence_profile(b1, b2, which)
    return ComplementarityVerdict(kind, [int(k) for k in np.flatnonzero(total[1:]) + 1])


@dataclass(frozen=True)
class PNReport:
    aperiodic: ComplementarityVerdict
    periodic: ComplementarityVerdict
    nega: ComplementarityVerdict

    @property
    def agree(self) -> bool:
        return self.aperiodic.holds == (self.periodic.holds and self.nega.holds)

    @property
    def holds(self) -> bool:
        return self.agree and self.aperiodic.holds

    def to_json(self) -> dict:
        return {
            "aperiodic": self.aperiodic.to_json(),
            "periodic": self.periodic.to_json(),
            "nega": self.nega.to_json(),
            "agree": self.agree,
        }


def complementary_iff_P_and_N(a, b) -> PNReport:
    pair = _sequence_set([a, b])
    return PNReport(*(is_complementary_set(pair, kind) for kind in SEQUENCE_KINDS))


# ---------------------------------------------------------------------------
# function sets

def _function_set(Fs) -> list[GeneralizedBooleanFunction]:
    Fs = [as_generalized(F) for F in Fs]
    if not Fs:
        raise ValueError("empty function set")
    if len({(F.n, F.k) for F in Fs}) != 1:
        raise ValueError("functions have different (n, k)")
    return Fs


def _verdict_from_total(kind: str, total: CorrelationProfile) -> ComplementarityVerdict:
    bad = [z for z in total.nonzero_shifts() if z != 0]
    return ComplementarityVerdict(kind, [index_to_bits(z, total.n) for z in bad])


def la_profile_sum(Fs: Sequence[AnyFunction], Gs: Sequence[AnyFunction], spec: RootSpec) -> CorrelationProfile:
    total = None
    for F, G in zip(Fs, Gs):
        p = root_correlation_profile(F, G, spec)
        total = p if total is None else total + p
    return total


def is_la_complementary_set(Fs: Sequence[AnyFunction], spec: RootSpec) -> ComplementarityVerdict:
    Fs = _function_set(Fs)
    return _verdict_from_total("LA", la_profile_sum(Fs, Fs, spec))


def is_la_crosscomplementary(S1: Sequence[AnyFunction], S2: Sequence[AnyFunction],
                             spec: RootSpec) -> ComplementarityVerdict:
    if len(S1) != len(S2):
        raise ValueError(f"tuples have different sizes: {len(S1)} vs {len(S2)}")
    _function_set(list(S1) + list(S2))
    return _verdict_from_total("LA-cross", la_profile_sum(S1, S2, spec))


def is_function_complementary_set(Fs: Sequence[AnyFunction], kind: str = "periodic") -> ComplementarityVerdict:
    """P-/N-complementarity of functions via the periodic / negaperiodic correlation."""
    Fs = _function_set(Fs)
    n = Fs[0].n
    if kind == "periodic":
        spec = RootSpec.trivial(n)
        total = la_profile_sum(Fs, Fs, spec)  # conjugate of the periodic sum; same zero set
        return _verdict_from_total("P", total)
    if kind == "nega":
        bad = []
        for u in range(1, 1 << n):
            s = sum((function_negaperiodic_correlation(F, F, u) for F in Fs), start=0)
            if s != 0:
                bad.append(index_to_bits(u, n))
        return ComplementarityVerdict("N", bad)
    raise ValueError(f"kind must be 'periodic' or 'nega', got {kind!r}")


@dataclass(frozen=True)
class ComponentReport:
    """Both sides of the component criterion for LA-complementarity."""

    left: ComplementarityVerdict
    right: dict  # (a, c) -> ComplementarityVerdict

    @property
    def right_holds(self) -> bool:
        return all(v.holds for v in self.right.values())

    @property
    def agree(self) -> bool:
        return self.left.holds == self.right_holds

    def to_json(self) -> dict:
        return {
            "left": self.left.to_json(),
            "right": [
                {"a": list(a), "c": list(c), **v.to_json()} for (a, c), v in sorted(self.right.items())
            ],
            "right_holds": self.right_holds,
            "agree": self.agree,
        }


def verify_component_complementarity(S: Sequence[AnyFunction], spec: RootSpec) -> ComponentReport:
    """Left: S is LA-complementary.  Right: for all a, c in F_2^{k-1} the
    binary tuples (f_a)_{f in S} and (f_c)_{f in S} are LA-crosscomplementary."""
    S = _function_set(S)
    left = is_la_complementary_set(S, spec)
    sels = selectors(S[0].k)
    comps = {c: [component_function(F, c) for F in S] for c in sels}
    right = {(a, c): is_la_crosscomplementary(comps[a], comps[c], spec) for a in sels for c in sels}
    return ComponentReport(left, right)

