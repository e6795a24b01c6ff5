"""Conjecture scanning: range sweeps, counterexample records, table reproduction.

Each scan walks a deterministic ordering of move sets (and seeds where
applicable), checks one claim per game, and returns a ScanReport whose
counterexample records re-verify from (moves, seed) alone.  Reports are
byte-identical across runs and thread counts: the work is partitioned
into contiguous chunks and merged in order.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .engine import (
    BudgetError,
    MoveSet,
    as_move_set,
    generate,
    is_extension,
    period_bound,
    period_preperiod,
)

try:
    from . import _accel
except ImportError:  # pragma: no cover
    _accel = None

PY_ALLSEED_LIMIT = 18  # all-seed scans above this alpha require the numba kernel


@dataclass(frozen=True)
class CounterexampleRecord:
    moves: tuple[int, ...]
    seed: str | None
    observed_period: int
    observed_preperiod: int
    claim: str
    witness: dict = field(default_factory=dict)

    def replay(self) -> bool:
        """Re-derive the observation from (moves, seed) alone."""
        N, p = period_preperiod(self.moves, self.seed)
        return (N, p) == (self.observed_preperiod, self.observed_period)

    def to_json(self) -> str:
        return json.dumps(
            {
                "moves": list(self.moves),
                "seed": self.seed,
                "period": self.observed_period,
                "preperiod": self.observed_preperiod,
                "claim": self.claim,
                "witness": self.witness,
            }
        )


@dataclass
class ScanReport:
    target: str
    params: dict
    checked: int
    counterexamples: list[CounterexampleRecord]
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json_lines(self) -> str:
        return "\n".join(r.to_json() for r in self.counterexamples)

    def to_json(self) -> str:
        return json.dumps(
            {
                "target": self.target,
                "params": self.params,
                "checked": self.checked,
                "counterexamples": [
                    json.loads(r.to_json()) for r in self.counterexamples
                ],
                "info": self.info,
            }
        )

    def to_csv(self) -> str:
        fh = io.StringIO()
        w = csv.writer(fh)
        w.writerow(["target", "moves", "seed", "period", "preperiod", "claim"])
        for r in self.counterexamples:
            w.writerow(
                [
                    self.target,
                    " ".join(map(str, r.moves)),
                    r.seed or "",
                    r.observed_period,
                    r.observed_preperiod,
                    r.claim,
                ]
            )
        return fh.getvalue()


# ---------------------------------------------------------------------------
# all-seed maxima via the functional-graph kernel

def _max_cycle_py(mask: int, wmask: int, n_states: int) -> tuple[int, int]:
    visited = bytearray(n_states)
    best = 0
    witness = 0
    for s0 in range(n_states):
        if visited[s0]:
            continue
        posmap: dict[int, int] = {}
        s = s0
        while not visited[s]:
            visited[s] = 1
            posmap[s] = len(posmap)
            bit = 0 if (s & mask) == mask else 1
            s = ((s << 1) | bit) & wmask
        j = posmap.get(s)
        if j is not None:
            lam = len(posmap) - j
            if lam > best:
                best, witness = lam, s
    return best, witness


class _AllSeedScanner:
    """Reusable buffers for maximum-period-over-all-seeds queries."""

    def __init__(self, max_alpha: int):
        self.max_alpha = max_alpha
        if _accel is not None:
            self._path = np.empty(1 << max_alpha, dtype=np.int32)
            self._visited = np.zeros(((1 << max_alpha) + 63) // 64, dtype=np.uint64)

    def max_period(self, moves) -> tuple[int, str]:
        """(max period over all seeds, a witness seed attaining it)."""
        A = as_move_set(moves)
        if A.alpha > self.max_alpha:
            raise BudgetError(f"alpha {A.alpha} exceeds scanner budget {self.max_alpha}")
        n = 1 << A.alpha
        mask = 0
        for x in A.moves:
            mask |= 1 << (x - 1)
        if _accel is None or A.alpha > 64:
            if A.alpha > PY_ALLSEED_LIMIT:
                raise BudgetError(
                    f"all-seed scan at alpha {A.alpha} requires the numba kernel"
                )
            best, wit = _max_cycle_py(mask, n - 1, n)
        else:
            nwords = (n + 63) // 64
            self._visited[:nwords] = 0
            best, wit = _accel.max_cycle(
                np.uint64(mask), np.uint64(n - 1), np.int64(n),
                self._path, self._visited,
            )
        return int(best), format(int(wit), f"0{A.alpha}b")


def _chunks(items: list, k: int) -> list[list]:
    k = max(1, min(k, len(items) or 1))
    size = -(-len(items) // k)
    return [items[i:i + size] for i in range(0, len(items), size)]


# ---------------------------------------------------------------------------
# unseeded linear bound

def scan_linear_bound(max_c: int, threads: int = 1) -> ScanReport:
    """Unseeded {a,b,c} with a+b != c: check period < 2c.

    Also re-checks the universal bound preperiod + period <= period_bound
    on every game scanned; violations of either claim become records.
    """
    triples = [
        t for t in combinations(range(1, max_c + 1), 3) if t[0] + t[1] != t[2]
    ]

    def work(chunk):
        out = []
        for a, b, c in chunk:
            N, p = period_preperiod([a, b, c])
            if p >= 2 * c:
                out.append(
                    CounterexampleRecord(
                        (a, b, c), None, p, N, f"period {p} >= 2c = {2 * c}"
                    )
                )
            if N + p > period_bound([a, b, c]):
                out.append(
                    CounterexampleRecord(
                        (a, b, c), None, p, N,
                        f"preperiod+period {N + p} exceeds the universal bound",
                    )
                )
        return out

    found = []
    with ThreadPoolExecutor(max_workers=max(1, threads)) as ex:
        for part in ex.map(work, _chunks(triples, threads)):
            found.extend(part)
    return ScanReport(
        "linear-bound", {"max_c": max_c}, len(triples), found
    )


# ---------------------------------------------------------------------------
# all-seed quadratic bound

def scan_quadratic_bound(
    max_c: int, seed_policy="all", threads: int = 1, rng_seed: int = 20240
) -> ScanReport:
    """Seeded {a,b,c} with gcd 1: check period < c^2 over the seed policy.

    seed_policy: "all" (every seed via the functional graph) or an int k
    (k pseudo-random seeds per move set, deterministic in rng_seed).
    """
    triples = [
        t
        for t in combinations(range(1, max_c + 1), 3)
        if math.gcd(*t) == 1
    ]
    sample = None if seed_policy == "all" else int(seed_policy)

    def work(chunk):
        out = []
        checked_seeds = 0
        scanner = _AllSeedScanner(max_c) if sample is None else None
        rng = np.random.default_rng(rng_seed)
        for a, b, c in chunk:
            if sample is None:
                p, wit = scanner.max_period([a, b, c])
                checked_seeds += 1 << c
                if p >= c * c:
                    N, p2 = period_preperiod([a, b, c], wit)
                    out.append(
                        CounterexampleRecord(
                            (a, b, c), wit, p2, N, f"period {p2} >= c^2 = {c * c}"
                        )
                    )
            else:
                k = min(sample, 1 << c)
                states = rng.choice(1 << c, size=k, replace=False)
                for s in states.tolist():
                    seed = format(s, f"0{c}b")
                    N, p = period_preperiod([a, b, c], seed)
                    checked_seeds += 1
                    if p >= c * c:
                        out.append(
                            CounterexampleRecord(
                                (a, b, c), seed, p, N, f"period {p} >= c^2 = {c * c}"
                            )
                        )
        return out, checked_seeds

    found = []
    total_seeds = 0
    with ThreadPoolExecutor(max_workers=max(1, threads)) as ex:
        for part, nseeds in ex.map(work, _chunks(triples, threads)):
            found.extend(part)
            total_seeds += nseeds
    return ScanReport(
        "quadratic-bound",
        {"max_c": max_c, "seed_policy": seed_policy},
        len(triples),
        found,
        info={"seeds_checked": total_seeds},
    )


# ---------------------------------------------------------------------------
# the arithmetic characterization of period b+c, preperiod 0

@dataclass(frozen=True)
class DivisionData:
    """Division-algorithm variables for the {a,b,c} period-(b+c) test."""

    a: int
    b: int
    c: int
    q: int
    r: int
    q_c: int
    r_c: int
    q_a: int
    r_a: int
    q_cp: int
    r_cp: int
    q_ap: int
    r_ap: int

    @classmethod
    def of(cls, a: int, b: int, c: int) -> "DivisionData":
        q, r = divmod(b, a)
        q_c, r_c = divmod(c, a + b)
        q_a, r_a = divmod(r_c, 2 * a)
        q_cp, r_cp = divmod(c - a, a + b)
        q_ap, r_ap = divmod(r_cp, 2 * a)
        return cls(a, b, c, q, r, q_c, r_c, q_a, r_a, q_cp, r_cp, q_ap, r_ap)

    def condition(self) -> bool:
        """Predicted: the unseeded game has period exactly b+c and no preperiod."""
        if self.q % 2 == 0:
            return (
                self.r_cp > 0
                and self.r_ap <= self.r
                and 2 * self.q_ap <= self.q
                and (2 * self.q_ap != self.q or self.r_ap <= 2 * self.r - self.a)
            )
        if self.r != 0:
            return (self.r <= self.r_a <= self.a) and (
                self.q_a != 0 or self.r_a < self.a
            )
        return self.r_a != self.a

    def boundary(self) -> bool:
        """Edge cases whose intended reading is ambiguous (logged, not judged)."""
        return self.q % 2 == 0 and 2 * self.q_ap == self.q and (
            self.r_ap == 0 or self.r == 0
        )


def zero_translation_ok(moves) -> bool:
    """per | (b+c) with no preperiod, tested via the last a values before b+c."""
    A = as_move_set(moves)
    a, b, c = A.moves
    w = generate(A, b + c)
    return all(w[b + c - i] == "1" for i in range(1, a + 1))


def scan_abc_per_bc(max_c: int, threads: int = 1) -> ScanReport:
    """Compare the arithmetic condition against engine truth for 1<a<b<c<=max_c.

    Mismatch records carry the full division data.  Triples on the
    ambiguous boundary of the condition are listed in info regardless of
    agreement, as are any games where the one-window zero-translation test
    disagrees with (period | b+c and preperiod 0) from the engine.
    """
    triples = [t for t in combinations(range(2, max_c + 1), 3)]

    def work(chunk):
        out = []
        boundary = []
        translation_bad = []
        for a, b, c in chunk:
            data = DivisionData.of(a, b, c)
            N, p = period_preperiod([a, b, c])
            truth = p == b + c and N == 0
            if data.boundary():
                boundary.append([a, b, c])
            if data.condition() != truth:
                out.append(
                    CounterexampleRecord(
                        (a, b, c), None, p, N,
                        f"condition predicts {data.condition()}, engine says {truth}",
                        witness={"division": data.__dict__},
                    )
                )
            if zero_translation_ok([a, b, c]) != ((b + c) % p == 0 and N == 0):
                translation_bad.append([a, b, c])
        return out, boundary, translation_bad

    found = []
    boundary_all = []
    translation_all = []
    with ThreadPoolExecutor(max_workers=max(1, threads)) as ex:
        for part, bnd, tr in ex.map(work, _chunks(triples, threads)):
            found.extend(part)
            boundary_all.extend(bnd)
            translation_all.extend(tr)
    return ScanReport(
        "abc-period-bc",
        {"max_c": max_c},
        len(triples),
        found,
        info={
            "boundary_triples": boundary_all,
            "zero_translation_disagreements": translation_all,
        },
    )


# ---------------------------------------------------------------------------
# extension converse

def scan_extension_converse(max_alpha: int) -> ScanReport:
    """Move sets of size <= 3, all seeds: if period+x is an extension for
    every move x, the sequence should be purely periodic."""
    move_sets = []
    for alpha in range(1, max_alpha + 1):
        move_sets.append((alpha,))
        for a in range(1, alpha):
            move_sets.append((a, alpha))
            for a2 in range(a + 1, alpha):
                move_sets.append((a, a2, alpha))
    move_sets.sort()

    found = []
    checked = 0
    for moves in move_sets:
        alpha = moves[-1]
        for s in range(1 << alpha):
            seed = format(s, f"0{alpha}b")
            N, p = period_preperiod(moves, seed)
            checked += 1
            premise = all(
                (p + x in moves) or is_extension(moves, seed, p + x) for x in moves
            )
            if premise and N != 0:
                found.append(
                    CounterexampleRecord(
                        moves, seed, p, N,
                        "every period+x is an extension but the preperiod is nonzero",
                    )
                )
    return ScanReport(
        "extension-converse", {"max_alpha": max_alpha}, checked, found
    )


# ---------------------------------------------------------------------------
# the exceptional superlinear sets

@dataclass(frozen=True)
class SuperlinearException:
    moves: tuple[int, int, int]
    max_period: int
    witness_seed: str


def find_superlinear_exceptions(
    max_c: int = 25, threads: int = 1
) -> list[SuperlinearException]:
    """Coprime {a,b,c} whose best seed beats period 2c although (a+b) does
    not divide c.  Exhaustive over all seeds; c is capped by memory at 31.
    """
    if max_c > 31:
        raise BudgetError("alpha above 31 exceeds the scanner's state budget")
    triples = [
        t
        for t in combinations(range(1, max_c + 1), 3)
        if math.gcd(*t) == 1 and t[2] % (t[0] + t[1]) != 0
    ]

    def work(chunk):
        out = []
        scanner = _AllSeedScanner(max_c)
        for a, b, c in chunk:
            p, wit = scanner.max_period([a, b, c])
            if p > 2 * c:
                out.append(SuperlinearException((a, b, c), p, wit))
        return out

    found = []
    with ThreadPoolExecutor(max_workers=max(1, threads)) as ex:
        for part in ex.map(work, _chunks(triples, threads)):
            found.extend(part)
    return sorted(found, key=lambda e: e.moves)
