"""Full seed-space enumeration: atlases, canonical cycles, distinct periodicities.

Every alpha-bit window is a seed, and the step function F is a functional
graph on 2^alpha states, so one traversal that decomposes the graph into
cycles-plus-tails yields the exact minimal period of every seed at once.
Minimal preperiods follow from a second pass: a seed's sequence is its
tail bits followed by the cycle word, and the preperiod is how far the
cycle word fails to extend backwards into the tail.

Periodicity classes ("distinct periodicities") identify cycle words up to
rotation and subperiod.  A cycle word can never have a proper subperiod
(the word determines the states on the cycle), so classes correspond
one-to-one to graph cycles and the class representative is the
lexicographically least rotation.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from .engine import BudgetError, MoveSet, as_move_set, generate, normalize_seed
from . import patterns

try:
    from . import _accel
except ImportError:  # pragma: no cover
    _accel = None

DEFAULT_MAX_ALPHA = 24


# ---------------------------------------------------------------------------
# canonical cycle words

def _kmp_prefix(s: str) -> list[int]:
    pi = [0] * len(s)
    k = 0
    for i in range(1, len(s)):
        while k and s[k] != s[i]:
            k = pi[k - 1]
        if s[k] == s[i]:
            k += 1
        pi[i] = k
    return pi


def minimal_subperiod(s: str) -> int:
    """Length of the shortest block whose repetition equals s."""
    if not s:
        raise ValueError("empty string")
    pi = _kmp_prefix(s)
    p = len(s) - pi[-1]
    return p if len(s) % p == 0 else len(s)


def least_rotation(s: str) -> int:
    """Index of the lexicographically least rotation (Booth's algorithm)."""
    ss = s + s
    n = len(ss)
    f = [-1] * n
    k = 0
    for j in range(1, n):
        c = ss[j]
        i = f[j - k - 1]
        while i != -1 and c != ss[k + i + 1]:
            if c < ss[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if c != ss[k + i + 1]:
            if c < ss[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def canonicalize(cycle: str) -> str:
    """Reduce to the minimal subperiod, then rotate to the least rotation."""
    p = minimal_subperiod(cycle)
    s = cycle[:p]
    r = least_rotation(s)
    return s[r:] + s[:r]


def similar(x: str, y: str) -> bool:
    """Equivalence of period structures up to rotation and common subperiod."""
    return canonicalize(x) == canonicalize(y)


# ---------------------------------------------------------------------------
# functional graph traversal (pure-python twin of _accel.atlas_traverse)

def _traverse_py(nxt, tail, lam, phase, cid, pos, path, cyc_start, cyc_len) -> int:
    n = nxt.shape[0]
    ncyc = 0
    for s0 in range(n):
        if tail[s0] >= 0:
            continue
        L = 0
        s = s0
        while tail[s] < 0 and pos[s] < 0:
            pos[s] = L
            path[L] = s
            L += 1
            s = nxt[s]
        if tail[s] < 0:
            start = pos[s]
            lamv = L - start
            cyc_start[ncyc] = s
            cyc_len[ncyc] = lamv
            for j in range(start, L):
                v = path[j]
                tail[v] = 0
                lam[v] = lamv
                phase[v] = j - start
                cid[v] = ncyc
                pos[v] = -1
            for j in range(start - 1, -1, -1):
                v = path[j]
                tail[v] = start - j
                lam[v] = lamv
                phase[v] = 0
                cid[v] = ncyc
                pos[v] = -1
            ncyc += 1
        else:
            t0 = tail[s]
            lam0 = lam[s]
            ph0 = phase[s]
            cid0 = cid[s]
            for j in range(L - 1, -1, -1):
                v = path[j]
                tail[v] = t0 + (L - j)
                lam[v] = lam0
                phase[v] = ph0
                cid[v] = cid0
                pos[v] = -1
    return ncyc


@dataclass(frozen=True)
class CycleClass:
    """One periodicity class: a graph cycle and its canonical word."""

    cycle_id: int
    length: int
    word: str        # bits emitted around the cycle, from the stored start state
    canonical: str   # least rotation (subperiod-free by construction)

    def pattern_text(self) -> str:
        return patterns.render(patterns.InfiniteTail(patterns.from_bits(self.canonical)))


class SeedAtlas:
    """Exact periodicity data for every one of the 2^alpha seeds of a move set."""

    def __init__(self, moves: MoveSet, nxt, tail, lam, phase, cid, preperiod, classes):
        self.moves = moves
        self.alpha = moves.alpha
        self.n_states = 1 << moves.alpha
        self._nxt = nxt
        self._tail = tail
        self._lam = lam
        self._phase = phase
        self._cid = cid
        self._preperiod = preperiod
        self.classes: list[CycleClass] = classes

    # -- per-seed access ----------------------------------------------------
    def _state(self, seed: str | None) -> int:
        return int(normalize_seed(seed, self.moves), 2)

    def period(self, seed: str | None) -> int:
        return int(self._lam[self._state(seed)])

    def preperiod(self, seed: str | None) -> int:
        return int(self._preperiod[self._state(seed)])

    def cycle_class(self, seed: str | None) -> CycleClass:
        return self.classes[int(self._cid[self._state(seed)])]

    def report(self, seed: str | None):
        from .engine import find_periodicity

        return find_periodicity(self.moves, seed)

    def seed_string(self, state: int) -> str:
        return format(state, f"0{self.alpha}b")

    # -- derived sets ---------------------------------------------------------
    @property
    def periods(self) -> set[int]:
        """The period set over all seeds (every graph cycle is seedable)."""
        return {c.length for c in self.classes}

    def distinct_periodicities(self) -> dict[int, list[str]]:
        """Canonical cycle words grouped by class length."""
        out: dict[int, list[str]] = {}
        for c in self.classes:
            out.setdefault(c.length, []).append(c.canonical)
        return {k: sorted(v) for k, v in sorted(out.items())}

    def class_count(self, length: int | None = None) -> int:
        if length is None:
            return len(self.classes)
        return sum(1 for c in self.classes if c.length == length)

    def preperiods(self) -> np.ndarray:
        """Minimal preperiod of every seed, indexed by seed value."""
        return self._preperiod.copy()

    def period_array(self) -> np.ndarray:
        return self._lam.copy()

    def sequence_prefixes(self, nbits: int) -> np.ndarray:
        """w(0..nbits-1) of every seed, packed first-bit-highest into int64."""
        if not 0 < nbits <= 63:
            raise ValueError("nbits must be in 1..63")
        n = self.n_states
        bit_of = (self._bit_of()).astype(np.int64)
        cur = np.arange(n, dtype=np.int64)
        acc = np.zeros(n, dtype=np.int64)
        nxt = self._nxt.astype(np.int64)
        for _ in range(nbits):
            acc = (acc << 1) | bit_of[cur]
            cur = nxt[cur]
        return acc

    def distinct_sequences(self, nbits: int) -> list[str]:
        """Distinct length-nbits sequence prefixes over all seeds, sorted.

        For purely periodic games (|A| <= 2), nbits = any common period
        makes prefixes faithful proxies for the full sequences.
        """
        packed = np.unique(self.sequence_prefixes(nbits))
        return [format(v, f"0{nbits}b") for v in packed.tolist()]

    def pure_sequence_count(self) -> int:
        """Number of distinct purely periodic sequences over all seeds.

        A sequence with no preperiod repeats a cycle word from position 0,
        so these correspond one-to-one to (cycle, phase) pairs, i.e. to
        the window states sitting on graph cycles.
        """
        return int((self._tail == 0).sum())

    def pure_distinct_sequences(self, nbits: int) -> list[str]:
        """Distinct length-nbits prefixes of the purely periodic sequences."""
        if not 0 < nbits <= 63:
            raise ValueError("nbits must be in 1..63")
        on_cycle = np.flatnonzero(self._tail == 0).astype(np.int64)
        bit_of = self._bit_of().astype(np.int64)
        nxt = self._nxt.astype(np.int64)
        cur = on_cycle
        acc = np.zeros(on_cycle.shape[0], dtype=np.int64)
        for _ in range(nbits):
            acc = (acc << 1) | bit_of[cur]
            cur = nxt[cur]
        return [format(v, f"0{nbits}b") for v in np.unique(acc).tolist()]

    def _bit_of(self) -> np.ndarray:
        n = self.n_states
        mask = 0
        for x in self.moves.moves:
            mask |= 1 << (x - 1)
        states = np.arange(n, dtype=np.int64)
        return ((states & mask) != mask).astype(np.uint8)

    # -- exports --------------------------------------------------------------
    def to_csv(self, fh=None) -> str | None:
        """Rows (seed, preperiod, period, canonical cycle), ordered by seed value."""
        own = fh is None
        if own:
            fh = io.StringIO()
        w = csv.writer(fh)
        w.writerow(["seed", "preperiod", "period", "cycle"])
        for s in range(self.n_states):
            w.writerow(
                [
                    self.seed_string(s),
                    int(self._preperiod[s]),
                    int(self._lam[s]),
                    self.classes[int(self._cid[s])].canonical,
                ]
            )
        if own:
            return fh.getvalue()
        return None

    def to_json(self) -> str:
        return json.dumps(
            {
                "moves": list(self.moves.moves),
                "alpha": self.alpha,
                "periods": sorted(self.periods),
                "classes": [
                    {
                        "length": c.length,
                        "cycle": c.canonical,
                        "pattern": c.pattern_text(),
                    }
                    for c in sorted(self.classes, key=lambda c: (c.length, c.canonical))
                ],
                "class_counts_by_length": {
                    str(length): len(words)
                    for length, words in self.distinct_periodicities().items()
                },
            }
        )


def enumerate_seeds(moves, *, max_alpha: int = DEFAULT_MAX_ALPHA) -> SeedAtlas:
    """Traverse all 2^alpha seeds of A and return the full atlas.

    Work and memory are O(2^alpha); alpha above max_alpha raises
    BudgetError stating the budget that would be needed.
    """
    A = as_move_set(moves)
    if A.alpha > max_alpha:
        raise BudgetError(
            f"enumerating {A} needs 2^{A.alpha} states; "
            f"the budget allows 2^{max_alpha} (raise max_alpha to {A.alpha})"
        )
    n = 1 << A.alpha
    mask = 0
    for x in A.moves:
        mask |= 1 << (x - 1)
    wmask = n - 1

    states = np.arange(n, dtype=np.int64)
    bit_of = ((states & mask) != mask).astype(np.int64)
    nxt = (((states << 1) & wmask) | bit_of).astype(np.int32)
    del states

    tail = np.full(n, -1, dtype=np.int32)
    lam = np.zeros(n, dtype=np.int32)
    phase = np.zeros(n, dtype=np.int32)
    cid = np.zeros(n, dtype=np.int32)
    pos = np.full(n, -1, dtype=np.int32)
    path = np.empty(n, dtype=np.int32)
    cyc_start = np.empty(n, dtype=np.int32)
    cyc_len = np.empty(n, dtype=np.int32)

    traverse = _accel.atlas_traverse if _accel is not None else _traverse_py
    ncyc = traverse(nxt, tail, lam, phase, cid, pos, path, cyc_start, cyc_len)

    classes = []
    step_mask = mask
    for k in range(ncyc):
        s = int(cyc_start[k])
        L = int(cyc_len[k])
        buf = bytearray(L)
        for j in range(L):
            bit = 0 if (s & step_mask) == step_mask else 1
            buf[j] = 48 + bit
            s = ((s << 1) | bit) & wmask
        word = buf.decode()
        classes.append(CycleClass(k, L, word, canonicalize(word)))

    preperiod = _preperiods(nxt, tail, lam, phase, cid, bit_of.astype(np.uint8), classes)
    return SeedAtlas(A, nxt, tail, lam, phase, cid, preperiod, classes)


def _preperiods(nxt, tail, lam, phase, cid, bit_of, classes) -> np.ndarray:
    """Minimal preperiod per seed, by increasing distance from the cycles.

    For a state v one step before u: if u's sequence needs a preperiod, v
    needs one more; if u is purely periodic, v is too exactly when v's own
    bit matches the cycle word extended one step further backwards, i.e.
    word[(phase - tail) mod lam].
    """
    n = nxt.shape[0]
    N = np.zeros(n, dtype=np.int32)
    maxt = int(tail.max()) if n else 0
    if maxt == 0:
        return N
    words = np.frombuffer("".join(c.word for c in classes).encode(), dtype=np.uint8) - ord("0")
    offsets = np.zeros(len(classes) + 1, dtype=np.int64)
    for c in classes:
        offsets[c.cycle_id + 1] = c.length
    offsets = np.cumsum(offsets)

    order = np.argsort(tail, kind="stable")
    sorted_tails = tail[order]
    for t in range(1, maxt + 1):
        lo = np.searchsorted(sorted_tails, t)
        hi = np.searchsorted(sorted_tails, t + 1)
        if lo == hi:
            continue
        V = order[lo:hi]
        U = nxt[V]
        NU = N[U]
        back = words[offsets[cid[V]] + ((phase[V] - t) % lam[V])]
        N[V] = np.where(NU >= 1, NU + 1, np.where(bit_of[V] == back, 0, 1))
    return N


def atlas_to_csv(atlas: SeedAtlas, fh=None) -> str | None:
    return atlas.to_csv(fh)
