"""Core engine for seeded subtraction games.

A game is a finite move set A of positive integers plus an optional seed:
the alpha = max(A) values w(-alpha), ..., w(-1) that the recurrence

    w(n) = 1 - min{ w(n-x) : x in A }

reads below zero.  Without a seed those values are all 1, which makes
w(0) = 0.  Bit strings are plain '0'/'1' strings whose leftmost character
is the most negative index, so the seed string reads left to right as
w(-alpha) ... w(-1), matching the window vector <w(n-alpha),...,w(n-1)>.

The engine generates sequences bit-exactly, finds the minimal period and
preperiod by cycle detection on the window orbit, and provides the
structural predicates (extensions, translating zeros, pure periodicity,
gcd decomposition, the universal period bound).  States are packed into
integers; walks use numba-accelerated Brent when available and alpha fits
a machine word, else a hash-map walk with a memory budget and a pure
Python constant-memory fallback.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

import numpy as np

try:
    from . import _accel
except ImportError:  # pragma: no cover - numba not installed
    _accel = None

# Default resource limits: a hash-map walk stores one entry per state,
# the constant-memory fallback only counts steps.
DEFAULT_STATE_BUDGET = 1 << 22
DEFAULT_STEP_BUDGET = 1_000_000_000


class BudgetError(RuntimeError):
    """Raised when a walk or enumeration would exceed its resource budget."""


class MoveSet:
    """The subtraction set A with alpha = max(A) and g = gcd(A)."""

    __slots__ = ("moves", "alpha", "g")

    def __init__(self, moves: Iterable[int]):
        ms = tuple(sorted({int(x) for x in moves}))
        if not ms:
            raise ValueError("move set must be nonempty")
        if ms[0] < 1:
            raise ValueError(f"moves must be positive, got {ms[0]}")
        self.moves = ms
        self.alpha = ms[-1]
        self.g = math.gcd(*ms)

    def __iter__(self):
        return iter(self.moves)

    def __len__(self):
        return len(self.moves)

    def __contains__(self, x):
        return x in self.moves

    def __eq__(self, other):
        return isinstance(other, MoveSet) and self.moves == other.moves

    def __hash__(self):
        return hash(self.moves)

    def __repr__(self):
        return "MoveSet({%s})" % ", ".join(map(str, self.moves))


def as_move_set(moves) -> MoveSet:
    return moves if isinstance(moves, MoveSet) else MoveSet(moves)


@dataclass(frozen=True)
class PeriodicityReport:
    """Minimal preperiod/period of one game, with the witnessing bits.

    prefix has exactly `preperiod` bits, cycle exactly `period` bits, and
    prefix + cycle repeated reproduces the whole sequence from n = 0.
    """

    preperiod: int
    period: int
    prefix: str
    cycle: str
    moves: tuple[int, ...]
    seed: str

    def sequence(self, n: int) -> str:
        """First n bits reconstructed from prefix and cycle."""
        if n <= self.preperiod:
            return self.prefix[:n]
        reps = (n - self.preperiod) // self.period + 1
        return (self.prefix + self.cycle * reps)[:n]

    def to_json(self) -> str:
        return json.dumps(
            {
                "moves": list(self.moves),
                "seed": self.seed,
                "preperiod": self.preperiod,
                "period": self.period,
                "prefix": self.prefix,
                "cycle": self.cycle,
            }
        )


# ---------------------------------------------------------------------------
# seeds and bit packing

def normalize_seed(raw: str | None, moves) -> str:
    """Normalize a raw seed string to exactly alpha bits.

    Shorter seeds are padded on the left with 1s (the sequence is preceded
    by infinitely many 1s), longer ones keep their last alpha characters.
    None or "" mean "no seed", i.e. all ones.
    """
    alpha = as_move_set(moves).alpha
    if raw is None:
        return "1" * alpha
    raw = raw.replace(" ", "")
    if any(c not in "01" for c in raw):
        raise ValueError(f"seed must consist of 0/1 characters, got {raw!r}")
    if len(raw) < alpha:
        return "1" * (alpha - len(raw)) + raw
    return raw[len(raw) - alpha:]


def mode_seed(mode: str, moves) -> str:
    """Seed realizing a named game variant: 'misere' or 'greedy'."""
    A = as_move_set(moves)
    if mode == "misere":
        return "0" * A.moves[0] + "1" * (A.alpha - A.moves[0])
    if mode == "greedy":
        return "0" * A.alpha
    raise ValueError(f"unknown mode {mode!r} (expected 'misere' or 'greedy')")


def _move_mask(A: MoveSet) -> int:
    # bit x-1 selects w(n-x)
    m = 0
    for x in A.moves:
        m |= 1 << (x - 1)
    return m


def _step_int(s: int, mask: int, wmask: int) -> tuple[int, int]:
    bit = 0 if (s & mask) == mask else 1
    return ((s << 1) | bit) & wmask, bit


def step(window: str, moves) -> tuple[str, int]:
    """Advance the window <w(n-alpha),...,w(n-1)> one step; return (new, bit)."""
    A = as_move_set(moves)
    if len(window) != A.alpha or any(c not in "01" for c in window):
        raise ValueError(f"window must be {A.alpha} bits")
    s = int(window, 2)
    s2, bit = _step_int(s, _move_mask(A), (1 << A.alpha) - 1)
    return format(s2, f"0{A.alpha}b"), bit


# ---------------------------------------------------------------------------
# sequence generation

def generate(moves, n: int, seed: str | None = None) -> str:
    """The first n bits w(0..n-1) of the game (moves, seed)."""
    A = as_move_set(moves)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ""
    s = int(normalize_seed(seed, A), 2)
    mask = _move_mask(A)
    wmask = (1 << A.alpha) - 1
    if _accel is not None and A.alpha <= 64 and n >= 4096:
        out = np.empty(n, dtype=np.uint8)
        _accel.fill_bits(np.uint64(mask), np.uint64(wmask), np.uint64(s), out)
        return (out + ord("0")).tobytes().decode()
    buf = bytearray(n)
    for i in range(n):
        s, bit = _step_int(s, mask, wmask)
        buf[i] = 48 + bit
    return buf.decode()


def _brent_py(s0: int, mask: int, wmask: int, max_steps: int) -> tuple[int, int]:
    """Constant-memory Brent cycle search on Python ints (any alpha)."""
    steps = 0
    power = lam = 1
    tortoise = s0
    hare, _ = _step_int(s0, mask, wmask)
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power <<= 1
            lam = 0
        hare, _ = _step_int(hare, mask, wmask)
        lam += 1
        steps += 1
        if steps > max_steps:
            raise BudgetError(f"cycle search exceeded step budget {max_steps}")
    hare = s0
    for _ in range(lam):
        hare, _ = _step_int(hare, mask, wmask)
    mu = 0
    tortoise = s0
    while tortoise != hare:
        tortoise, _ = _step_int(tortoise, mask, wmask)
        hare, _ = _step_int(hare, mask, wmask)
        mu += 1
    return mu, lam


def _orbit_params(
    A: MoveSet,
    seed_state: int,
    state_budget: int,
    allow_constant_memory: bool,
    step_budget: int,
) -> tuple[int, int]:
    """(mu, lam) of the window orbit: tail length and minimal cycle length."""
    mask = _move_mask(A)
    wmask = (1 << A.alpha) - 1
    if _accel is not None and A.alpha <= 64:
        lam, mu = _accel.brent(
            np.uint64(mask), np.uint64(wmask), np.uint64(seed_state), np.int64(step_budget)
        )
        if lam < 0:
            raise BudgetError(f"cycle search exceeded step budget {step_budget}")
        return int(mu), int(lam)
    seen: dict[int, int] = {}
    s = seed_state
    i = 0
    while s not in seen:
        if i >= state_budget:
            if not allow_constant_memory:
                raise BudgetError(
                    f"walk exceeded state budget {state_budget} and the "
                    "constant-memory fallback is disabled"
                )
            return _brent_py(seed_state, mask, wmask, step_budget)
        seen[s] = i
        s, _ = _step_int(s, mask, wmask)
        i += 1
    mu = seen[s]
    return mu, i - mu


def _min_preperiod(bits: str, mu: int, lam: int) -> int:
    """Backward scan: least N with w(n) = w(n+lam) for all n >= N."""
    if mu == 0:
        return 0
    arr = np.frombuffer(bits.encode(), dtype=np.uint8)
    mism = np.flatnonzero(arr[:mu] != arr[lam:lam + mu])
    return int(mism[-1]) + 1 if mism.size else 0


@lru_cache(maxsize=1 << 16)
def _period_preperiod_cached(
    moves: tuple[int, ...],
    seed: str,
    state_budget: int,
    allow_constant_memory: bool,
    step_budget: int,
) -> tuple[int, int]:
    A = MoveSet(moves)
    mu, lam = _orbit_params(A, int(seed, 2), state_budget, allow_constant_memory, step_budget)
    if mu == 0:
        return 0, lam
    bits = generate(A, mu + lam, seed)
    return _min_preperiod(bits, mu, lam), lam


def period_preperiod(
    moves,
    seed: str | None = None,
    *,
    state_budget: int = DEFAULT_STATE_BUDGET,
    allow_constant_memory: bool = True,
    step_budget: int = DEFAULT_STEP_BUDGET,
) -> tuple[int, int]:
    """(preperiod, period) of the game, without materializing the bits.

    Results are memoized per (moves, seed); safe for concurrent use.
    """
    A = as_move_set(moves)
    return _period_preperiod_cached(
        A.moves, normalize_seed(seed, A), state_budget, allow_constant_memory, step_budget
    )


def find_periodicity(
    moves,
    seed: str | None = None,
    *,
    state_budget: int = DEFAULT_STATE_BUDGET,
    allow_constant_memory: bool = True,
    step_budget: int = DEFAULT_STEP_BUDGET,
) -> PeriodicityReport:
    """Full periodicity report: minimal (preperiod, period) plus prefix/cycle bits."""
    A = as_move_set(moves)
    s = normalize_seed(seed, A)
    N, p = period_preperiod(
        A,
        s,
        state_budget=state_budget,
        allow_constant_memory=allow_constant_memory,
        step_budget=step_budget,
    )
    bits = generate(A, N + p, s)
    return PeriodicityReport(
        preperiod=N, period=p, prefix=bits[:N], cycle=bits[N:], moves=A.moves, seed=s
    )


# ---------------------------------------------------------------------------
# structural predicates

def decompose(moves, seed: str | None = None) -> list[tuple[MoveSet, str]]:
    """Split (A, S) with g = gcd(A) into g independent games on A/g.

    Component i runs on the subsequence w(mg + i); its seed takes every
    g-th seed bit starting at i.  Interleaving the component sequences
    reproduces the original, and when every component is purely periodic
    the full period is g * lcm of the component periods.
    """
    A = as_move_set(moves)
    S = normalize_seed(seed, A)
    if A.g == 1:
        return [(A, S)]
    sub = MoveSet(x // A.g for x in A.moves)
    return [(sub, S[i::A.g]) for i in range(A.g)]


def is_extension(moves, seed: str | None, b: int) -> bool:
    """Is b a redundant move, i.e. does adding it leave the sequence unchanged?

    Decided by comparing both sequences out to max(preperiods) +
    lcm(periods) + alpha, which is conclusive for eventually periodic
    sequences.
    """
    A = as_move_set(moves)
    if b in A:
        raise ValueError(f"{b} is already a move")
    if b < 1:
        raise ValueError("extension candidate must be positive")
    B = MoveSet(A.moves + (b,))
    n1, p1 = period_preperiod(A, seed)
    n2, p2 = period_preperiod(B, seed)
    horizon = max(n1, n2) + math.lcm(p1, p2) + max(A.alpha, B.alpha)
    return generate(A, horizon, seed) == generate(B, horizon, seed)


def check_translating_zeros(moves, p: int) -> bool:
    """Zero-translation test for the unseeded game over candidate period p.

    True iff for all x in A and m < x: w(m) = 0 implies w(m+p-x) = 1,
    which holds exactly when w is periodic over p with no preperiod.
    """
    A = as_move_set(moves)
    if p < 1:
        raise ValueError("p must be positive")
    w = generate(A, max(A.alpha, p))
    for x in A.moves:
        for m in range(x):
            if w[m] == "0":
                j = m + p - x
                if j >= 0 and w[j] == "0":
                    return False
    return True


def check_pure_periodic(moves, seed: str | None, p: int) -> bool:
    """True iff the game is periodic over p with no preperiod.

    Constant-work test: the windows at alpha and alpha+p coincide, i.e.
    w(0..alpha-1) equals w(p..p+alpha-1).
    """
    A = as_move_set(moves)
    if p < 1:
        raise ValueError("p must be positive")
    w = generate(A, p + A.alpha, seed)
    return w[:A.alpha] == w[p:p + A.alpha]


def period_bound(moves) -> int:
    """Universal bound: preperiod + period <= (beta+1) * 2^(alpha-|A|).

    beta = min(alpha, a1 + alpha') caps the longest run of 1s, with a1 the
    least and alpha' the second largest move.  Singletons get the exact 2a.
    """
    A = as_move_set(moves)
    if len(A.moves) == 1:
        return 2 * A.alpha
    beta = min(A.alpha, A.moves[0] + A.moves[-2])
    return (beta + 1) << (A.alpha - len(A.moves))


# ---------------------------------------------------------------------------
# infinite move sets

class InfiniteMoveSet:
    """A move set given by a membership predicate on positive integers."""

    def __init__(self, contains: Callable[[int], bool], name: str = "custom"):
        self.contains = contains
        self.name = name

    def members_up_to(self, n: int) -> list[int]:
        return [x for x in range(1, n + 1) if self.contains(x)]

    def __repr__(self):
        return f"InfiniteMoveSet({self.name})"


def _is_kth_power(x: int, k: int) -> bool:
    r = round(x ** (1.0 / k))
    return any((r + d) ** k == x for d in (-1, 0, 1))


SQUARES = InfiniteMoveSet(lambda x: _is_kth_power(x, 2), "squares")
CUBES = InfiniteMoveSet(lambda x: _is_kth_power(x, 3), "cubes")
ALL_POSITIVE = InfiniteMoveSet(lambda x: True, "all positive integers")


def generate_infinite(iset: InfiniteMoveSet, n: int) -> str:
    """w(0..n-1) for an unseeded game on an infinite move set.

    Sieve over losing positions: each losing position l marks l+x winning
    for every member x, so the work is (#losing) * (#members <= n).
    """
    members = np.asarray(iset.members_up_to(n), dtype=np.int64)
    win = np.zeros(n, dtype=np.uint8)
    for i in range(n):
        if not win[i]:
            targets = i + members
            win[targets[targets < n]] = 1
    return (win + ord("0")).tobytes().decode()


def losing_positions(bits: str) -> list[int]:
    """Indices n with w(n) = 0."""
    arr = np.frombuffer(bits.encode(), dtype=np.uint8)
    return np.flatnonzero(arr == ord("0")).tolist()


@dataclass(frozen=True)
class AperiodicityCertificate:
    """Empirical evidence (not a proof) that no small periodicity fits.

    ok means: no pair (N, p) with N + p <= horizon is consistent with the
    generated prefix.  counterexample, when set, is a consistent (N, p).
    """

    horizon: int
    prefix_length: int
    ok: bool
    counterexample: tuple[int, int] | None = None


def aperiodicity_certificate(bits: str, horizon: int) -> AperiodicityCertificate:
    """Check that no (N, p) with N + p <= horizon matches the given prefix."""
    L = len(bits)
    if horizon >= L:
        raise ValueError("horizon must be smaller than the generated prefix")
    arr = np.frombuffer(bits.encode(), dtype=np.uint8)
    for p in range(1, horizon):
        mism = np.flatnonzero(arr[: L - p] != arr[p:])
        min_n = int(mism[-1]) + 1 if mism.size else 0
        if min_n + p <= horizon:
            return AperiodicityCertificate(horizon, L, False, (min_n, p))
    return AperiodicityCertificate(horizon, L, True)
