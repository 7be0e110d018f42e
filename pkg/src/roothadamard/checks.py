"""The verification battery behind ``rootspec verify-paper``.

Each check recomputes one identity or worked example from scratch and
reports pass/fail with a one-line detail.  Failures are reported, never raised.
The two reference tables are taken from the ``Context`` so a corrupted copy can
be injected; only the checks that read a table are affected by it.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Optional

import numpy as np

from . import cyclo, data
from .complementarity import (
    complementary_iff_P_and_N,
    is_complementary_set,
    is_la_complementary_set,
    verify_component_complementarity,
)
from .correlations import (
    aperiodic_autocorr,
    correlation_from_spectrum,
    golay_poly_residue,
    negaperiodic_autocorr,
    periodic_autocorr,
    root_correlation_profile,
    shift_matrix_autocorr,
    spectral_profile,
)
from .cyclo import element_from_complex
from .gbf import GeneralizedBooleanFunction, decompose_components, parse_function, popcounts, symmetric_table
from .search import ProfileTarget, SearchSpace, search_golay_pairs, search_profile_match
from .transforms import (
    Block,
    RootSpec,
    classify_magnitudes,
    component_synthesis_spectrum,
    generalized_walsh,
    invert_root_hadamard,
    is_flat,
    naive_root_hadamard,
    nega_hadamard,
    nega_to_walsh_lift,
    root_hadamard,
    root_hadamard_batch,
    root_shift_function,
    walsh_batch,
)


# ---------------------------------------------------------------------------
# random instances

def random_function(rng: np.random.Generator, n: int, k: int) -> GeneralizedBooleanFunction:
    return GeneralizedBooleanFunction(n, k, rng.integers(0, 1 << k, size=1 << n))


def random_spec(rng: np.random.Generator, n: int, orders: Iterable[int] = (1, 2, 4, 8)) -> RootSpec:
    """A random partition of the n coordinates with a random order per block."""
    orders = list(orders)
    perm = rng.permutation(n).tolist()
    cuts = sorted(rng.choice(np.arange(1, n), size=rng.integers(0, n), replace=False).tolist()) if n > 1 else []
    parts = [perm[a:b] for a, b in zip([0] + cuts, cuts + [n])]
    return RootSpec(n, tuple(Block(tuple(sorted(p)), int(rng.choice(orders))) for p in parts))


# ---------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class CheckResult:
    key: str
    passed: bool
    detail: str
    seconds: float

    def to_json(self) -> dict:
        return {"check": self.key, "passed": self.passed, "detail": self.detail,
                "seconds": round(self.seconds, 3)}


@dataclass
class Context:
    f_table: tuple = data.F_TABLE
    g_table: tuple = data.G_TABLE
    seed: int = 20240601


CHECKS: dict[str, tuple[str, Callable[[Context], tuple[bool, str]]]] = {}


def check(key: str, title: str):
    def wrap(fn):
        CHECKS[key] = (title, fn)
        return fn
    return wrap


def run_checks(only: Optional[Iterable[str]] = None, context: Optional[Context] = None) -> list[CheckResult]:
    ctx = context or Context()
    keys = list(CHECKS) if only is None else list(only)
    unknown = [k for k in keys if k not in CHECKS]
    if unknown:
        raise KeyError(f"unknown check(s): {', '.join(unknown)}")
    out = []
    for key in keys:
        _, fn = CHECKS[key]
        t = time.perf_counter()
        try:
            ok, detail = fn(ctx)
        except Exception as exc:  # a crash is a failed check, not an aborted battery
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        out.append(CheckResult(key, bool(ok), detail, time.perf_counter() - t))
    return out


# ---------------------------------------------------------------------------
# worked examples

@check("rootbent-example", "root-bent example function, exact |U|^2 = 16")
def _rootbent(ctx: Context):
    F = data.root_bent_example()
    mags = root_hadamard(F, data.EXAMPLE_SPEC).magnitudes_sq()
    swapped = is_flat(root_hadamard(F, data.EXAMPLE_SPEC_SWAPPED))
    ok = bool(np.all(mags == 16))
    return ok, f"|U|^2 values {sorted(set(mags.tolist()))}; swapped pairing flat: {swapped}"


def example_target(sign: int) -> ProfileTarget:
    return ProfileTarget(4, {0: 16, (0, 1, 0, 1): element_from_complex(8j * sign, 2)})


def _profile_failures(funcs, target: ProfileTarget) -> list[int]:
    bad = []
    for i, F in enumerate(funcs):
        prof = root_correlation_profile(F, None, data.EXAMPLE_SPEC)
        want, _ = target.arrays(prof.m)
        if not np.array_equal(prof.coeffs, want):
            bad.append(i)
    return bad


@check("table-f", "first table: profile 16 / -8i at (0,1,0,1) / 0")
def _table_f(ctx: Context):
    bad = _profile_failures(data.f_functions(ctx.f_table), example_target(-1))
    return not bad, f"{len(ctx.f_table)} functions, mismatching rows {bad}"


@check("table-g", "second table: profile 16 / +8i at (0,1,0,1) / 0")
def _table_g(ctx: Context):
    bad = _profile_failures(data.g_functions(ctx.g_table), example_target(1))
    return not bad, f"{len(ctx.g_table)} functions, mismatching rows {bad}"


@check("la-example-pairs", "every (f, g) pair from the tables is LA-complementary")
def _la_pairs(ctx: Context):
    fs, gs = data.f_functions(ctx.f_table), data.g_functions(ctx.g_table)
    bad = [(i, j) for i, f in enumerate(fs) for j, g in enumerate(gs)
           if not is_la_complementary_set([f, g], data.EXAMPLE_SPEC)]
    return not bad, f"{len(fs) * len(gs)} pairs, failing {bad[:5]}"


def _table_search(low: str, table, sign: int, jobs: int = 1):
    space = SearchSpace(4, template=data.lift_with_low(low, "0"))
    hits = search_profile_match(space, data.EXAMPLE_SPEC, example_target(sign), jobs=jobs)
    found = {decompose_components(F)[1] for F in hits}
    missing = [i for i, t in enumerate(table) if parse_function(t, 4) not in found]
    return not missing, f"{len(hits)} hits in 2^16 candidates, table rows missing {missing}"


@check("table-search-f", "full search over the free component recovers the first table")
def _search_f(ctx: Context):
    return _table_search(data.F_LOW, ctx.f_table, -1)


@check("table-search-g", "full search over the free component recovers the second table")
def _search_g(ctx: Context):
    return _table_search(data.G_LOW, ctx.g_table, 1)


# ---------------------------------------------------------------------------
# transform identities

@check("spectral-crosscorrelation", "crosscorrelation from spectra and root-Parseval, 200 random cases")
def _spectral(ctx: Context):
    rng = np.random.default_rng(ctx.seed)
    bad = []
    for trial in range(200):
        n, k = int(rng.integers(1, 6)), int(rng.integers(1, 4))
        spec = random_spec(rng, n)
        F, G = random_function(rng, n, k), random_function(rng, n, k)
        Sf, Sg = root_hadamard(F, spec), root_hadamard(G, spec)
        second = root_correlation_profile(F, G, spec, shift="second")
        first = root_correlation_profile(F, G, spec, shift="first")
        parseval = cyclo.abs_sq(Sf.coeffs, Sf.m).sum(axis=0)
        ok = (second.equals(correlation_from_spectrum(Sf, Sg))
              and first.equals(spectral_profile(F, G, spec))
              and parseval[0] == 1 << (2 * n) and not parseval[1:].any())
        if not ok:
            bad.append(trial)
    return not bad, f"failing trials {bad}"


@check("inversion", "transform then invert returns the function, 100 random cases")
def _inversion(ctx: Context):
    rng = np.random.default_rng(ctx.seed + 1)
    bad = []
    for trial in range(100):
        n, k = int(rng.integers(1, 6)), int(rng.integers(1, 4))
        F = random_function(rng, n, k)
        if invert_root_hadamard(root_hadamard(F, random_spec(rng, n))) != F:
            bad.append(trial)
    return not bad, f"failing trials {bad}"


@check("component-synthesis", "transform assembled from binary components, 100 random cases")
def _synthesis(ctx: Context):
    rng = np.random.default_rng(ctx.seed + 2)
    bad = []
    for trial in range(100):
        n, k = int(rng.integers(1, 5)), int(rng.integers(1, 4))
        spec = random_spec(rng, n)
        F = random_function(rng, n, k)
        if not component_synthesis_spectrum(F, spec).equals(root_hadamard(F, spec)):
            bad.append(trial)
    return not bad, f"failing trials {bad}"


@check("transform-relationships", "nega/Walsh lift and block-shift identities, 100 random cases")
def _relationships(ctx: Context):
    rng = np.random.default_rng(ctx.seed + 3)
    bad = []
    for trial in range(100):
        n, k = int(rng.integers(1, 6)), int(rng.integers(1, 4))
        F = random_function(rng, n, k)
        ok = nega_hadamard(F).equals(generalized_walsh(nega_to_walsh_lift(F)))
        spec = random_spec(rng, n, [o for o in (2, 4, 8) if o <= 1 << k])
        J = [p for p in range(len(spec.blocks)) if rng.integers(0, 2)]
        ok &= root_hadamard(root_shift_function(F, spec, J), spec).equals(
            root_hadamard(F, spec.trivialize(J)))
        every = range(len(spec.blocks))
        ok &= root_hadamard(root_shift_function(F, spec, every), spec).equals(generalized_walsh(F))
        if not ok:
            bad.append(trial)
    return not bad, f"failing trials {bad}"


def b4_nega_and_shifted_walsh() -> tuple[np.ndarray, np.ndarray]:
    """|N_f(u)|^2 and |W_{f+s2}(u)|^2 for all 65536 f in B_4, rows by truth-table integer."""
    n = 4
    codes = np.arange(1 << 16, dtype=np.int64)
    tables = (codes[:, None] >> np.arange(15, -1, -1)) & 1
    coeffs, m = root_hadamard_batch(tables, 1, RootSpec.nega(n))
    nega = cyclo.abs_sq(coeffs, m)
    if np.any(nega[..., 1:]):
        raise ArithmeticError("nega magnitudes are not rational integers")
    walsh = walsh_batch(tables ^ symmetric_table(n, 2), n) ** 2
    return nega[..., 0], walsh


@check("negabent-shift", "all of B_4: negabent iff f+s2 bent, negaplateaued iff f+s2 plateaued")
def _negabent_shift(ctx: Context):
    nega, walsh = b4_nega_and_shifted_walsh()
    flat_n, flat_w = np.all(nega == 16, axis=1), np.all(walsh == 16, axis=1)
    plat_n = np.array([classify_magnitudes(4, r).is_plateaued for r in nega])
    plat_w = np.array([classify_magnitudes(4, r).is_plateaued for r in walsh])
    ok = np.array_equal(flat_n, flat_w) and np.array_equal(plat_n, plat_w)
    return ok, (f"{int(flat_n.sum())} negabent, {int(flat_w.sum())} bent shifts; "
                f"{int(plat_n.sum())} negaplateaued, {int(plat_w.sum())} plateaued shifts")


@check("fast-vs-naive", "butterfly equals the quadratic sum, 100 random cases")
def _fast_naive(ctx: Context):
    rng = np.random.default_rng(ctx.seed + 4)
    bad = []
    for trial in range(100):
        n, k = int(rng.integers(1, 7)), int(rng.integers(1, 4))
        spec = random_spec(rng, n)
        F = random_function(rng, n, k)
        if not root_hadamard(F, spec).equals(naive_root_hadamard(F, spec)):
            bad.append(trial)
    return not bad, f"failing trials {bad}"


# ---------------------------------------------------------------------------
# sequences and weights

def all_sequences(N: int):
    return list(product((1, -1), repeat=N))


@check("sequence-layer", "Golay pair search, polynomial criteria, P/N identities")
def _sequences(ctx: Context):
    notes = []
    found = ((1, 1, 1, -1), (1, 1, -1, 1)) in search_golay_pairs(4)
    notes.append(f"length-4 pair found: {found}")
    poly_bad = 0
    for N in range(1, 7):
        seqs = all_sequences(N)
        for a in seqs:
            for b in seqs:
                for kind in ("aperiodic", "periodic", "nega"):
                    verdict = is_complementary_set([a, b], kind).holds
                    if verdict != golay_poly_residue(a, b, kind).is_constant(2 * N):
                        poly_bad += 1
    notes.append(f"polynomial mismatches {poly_bad}")
    rng = np.random.default_rng(ctx.seed + 5)
    ident_bad = 0
    for _ in range(200):
        N = int(rng.integers(2, 17))
        a = rng.choice([1, -1], size=N)
        for s in range(1, N):
            A, Ab = aperiodic_autocorr(a, s), aperiodic_autocorr(a, N - s)
            C, Cn = periodic_autocorr(a, s), negaperiodic_autocorr(a, s)
            ident_bad += (C != A + Ab) + (Cn != A - Ab)
            ident_bad += (C != shift_matrix_autocorr(a, s, "periodic"))
            ident_bad += (Cn != shift_matrix_autocorr(a, s, "nega"))
    notes.append(f"identity mismatches {ident_bad}")
    pn_bad = sum(not complementary_iff_P_and_N(a, b).agree
                 for a in all_sequences(4) for b in all_sequences(4))
    notes.append(f"P-and-N disagreements {pn_bad}")
    return found and not (poly_bad or ident_bad or pn_bad), "; ".join(notes)


@check("weight-mod-2k", "wt mod 2^k from s_1, s_2, s_4, ..., all n <= 12, k <= 4")
def _weight(ctx: Context):
    bad = []
    for n in range(1, 13):
        wt = popcounts(n)
        s = {t: symmetric_table(n, t) for t in (1, 2, 4, 8)}
        if not np.array_equal(wt % 4, (s[1] + 2 * s[2]) % 4):
            bad.append((n, "mod 4"))
        for k in range(1, 5):
            rhs = sum(s[1 << j] << j for j in range(k)) % (1 << k)
            if not np.array_equal(wt % (1 << k), rhs):
                bad.append((n, k))
            # recursion: wt mod 2^k = wt mod 2^(k-1) + 2^(k-1) s_{2^(k-1)}
            if k > 1 and not np.array_equal(
                    wt % (1 << k), wt % (1 << (k - 1)) + (s[1 << (k - 1)] << (k - 1))):
                bad.append((n, k, "recursion"))
    return not bad, f"failures {bad}"


@check("component-complementarity", "LA-complementary iff components LA-crosscomplementary")
def _components(ctx: Context):
    rng = np.random.default_rng(ctx.seed + 6)
    disagree = []
    for trial in range(50):
        n = int(rng.integers(1, 5))
        spec = random_spec(rng, n)
        S = [random_function(rng, n, 2) for _ in range(int(rng.integers(1, 5)))]
        if not verify_component_complementarity(S, spec).agree:
            disagree.append(trial)
    pair = [data.f_functions(ctx.f_table)[0], data.g_functions(ctx.g_table)[0]]
    ex = verify_component_complementarity(pair, data.EXAMPLE_SPEC)
    ok = not disagree and ex.agree
    return ok, (f"random disagreements {disagree}; example pair: left={ex.left.holds}, "
                f"right={ex.right_holds}")
