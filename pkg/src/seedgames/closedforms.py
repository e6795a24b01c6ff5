"""Closed-form oracles for every solved game family, plus the counting formulas.

Each oracle returns an OracleResult: a run-length pattern for the whole
sequence together with the predicted minimal period and preperiod.  The
oracles are pure formulas; the test suite cross-validates every one of
them against the engine bit-for-bit.

Counting side: Q(l) (the Perrin numbers) counts the purely periodic
sequences of two-move games with coprime moves summing to l; N'(l) and
N(L) count their periodicity classes up to rotation and subperiod, with
gcd-refined variants N'(L, g), N(L, g) for non-coprime pairs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cache

import numpy as np

from .engine import normalize_seed
from .enumeration import minimal_subperiod
from .patterns import (
    Bit,
    Concat,
    InfiniteTail,
    PatternExpr,
    Power,
    expand,
    from_bits,
    render,
)

# Real and complex roots of x^3 - x - 1; the Perrin numbers are
# phi^l + z^l + zbar^l, so Q(l) = round(phi^l) once the complex part
# drops below 1/2 (from l = 10 on).
PLASTIC_CONSTANT = 1.3247179572447460
PLASTIC_COMPLEX_ROOTS = (
    -0.6623589786223730 + 0.5622795120623012j,
    -0.6623589786223730 - 0.5622795120623012j,
)


@dataclass(frozen=True)
class OracleResult:
    family: str
    params: dict
    pattern: PatternExpr
    period: int
    preperiod: int
    case: str | None = None

    def pattern_text(self) -> str:
        return render(self.pattern)

    def expand(self, n: int) -> str:
        return expand(self.pattern, n)

    def to_json(self) -> str:
        payload = {
            "family": self.family,
            "params": self.params,
            "pattern": self.pattern_text(),
            "period": self.period,
            "preperiod": self.preperiod,
        }
        if self.case is not None:
            payload["case"] = self.case
        return json.dumps(payload)


def _run(bit: int, k: int) -> PatternExpr:
    return Bit(bit) if k == 1 else Power(Bit(bit), k)


def _cat(*parts: PatternExpr) -> PatternExpr:
    flat = tuple(p for p in parts if not (isinstance(p, Power) and p.exponent == 0))
    return flat[0] if len(flat) == 1 else Concat(flat)


_01 = Concat((Bit(0), Bit(1)))


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


# ---------------------------------------------------------------------------
# one-move games

def cf_single(a: int, seed: str | None = None) -> OracleResult:
    """{a} with any seed: the sequence is (complement(S) S) repeated."""
    if a < 1:
        raise ValueError("a must be positive")
    S = normalize_seed(seed, [a])
    comp = "".join("1" if c == "0" else "0" for c in S)
    block = comp + S
    p = minimal_subperiod(block)
    return OracleResult(
        family="single",
        params={"a": a, "seed": S},
        pattern=InfiniteTail(from_bits(block[:p])),
        period=p,
        preperiod=0,
    )


def periods_single(a: int) -> set[int]:
    """All periods {a} attains over its 2^a seeds: 2^(k+1) d for d | c, a = 2^k c."""
    if a < 1:
        raise ValueError("a must be positive")
    k = 0
    c = a
    while c % 2 == 0:
        k += 1
        c //= 2
    return {(1 << (k + 1)) * d for d in _divisors(c)}


# ---------------------------------------------------------------------------
# two-move games, no seed

def cf_pair(a: int, b: int) -> OracleResult:
    """Unseeded {a, b}: alternating a-blocks until b, then a run of a+b ones."""
    if not 0 < a < b:
        raise ValueError("need 0 < a < b")
    q, r = divmod(b, a)
    if q % 2 == 0:
        word = ("0" * a + "1" * a) * (q // 2) + "0" * r + "1" * a
    else:
        word = ("0" * a + "1" * a) * ((q + 1) // 2) + "1" * r
    odd_multiple = r == 0 and q % 2 == 1
    period = 2 * a if odd_multiple else a + b
    return OracleResult(
        family="pair",
        params={"a": a, "b": b},
        pattern=InfiniteTail(from_bits(word[:period])),
        period=period,
        preperiod=0,
    )


# ---------------------------------------------------------------------------
# counting: Q-strings, Perrin numbers, periodicity-class counts

def q_strings(length: int) -> set[str]:
    """All binary strings of the given length that are cyclically free of
    00 and 111, i.e. rotations of concatenations of 01 and 011."""
    if length < 1:
        raise ValueError("length must be positive")
    if length > 26:
        raise ValueError("length > 26 would enumerate more than 2^26 strings")
    n = 1 << length
    full = n - 1
    arr = np.arange(n, dtype=np.int64)

    def rot(x, s):
        s %= length
        return ((x >> s) | (x << (length - s))) & full

    zeros = ~arr & full
    bad00 = (zeros & rot(zeros, 1)) != 0
    bad111 = (arr & rot(arr, 1) & rot(arr, 2)) != 0
    good = arr[~(bad00 | bad111)]
    return {format(v, f"0{length}b") for v in good.tolist()}


@cache
def perrin(length: int) -> int:
    """Q(l): Q(0)=3, Q(1)=0, Q(2)=2, Q(l) = Q(l-2) + Q(l-3)."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    a, b, c = 3, 0, 2
    if length == 0:
        return a
    if length == 1:
        return b
    for _ in range(length - 2):
        a, b, c = b, c, a + b
    return c


@cache
def n_prime(length: int) -> int:
    """N'(l): periodicity classes of length exactly l (coprime two-move games)."""
    if length < 1:
        raise ValueError("length must be positive")
    total = perrin(length) - sum(d * n_prime(d) for d in _divisors(length)[:-1])
    q, rem = divmod(total, length)
    if rem:
        raise ArithmeticError(f"class count for length {length} is not integral")
    return q


def n_total(length: int) -> int:
    """N(L): classes of any length dividing L."""
    return sum(n_prime(d) for d in _divisors(length))


@cache
def n_prime_gcd(length: int, g: int) -> int:
    """N'(L, g): classes of length exactly L when the moves have gcd g."""
    if length < 1 or g < 1 or length % g:
        raise ValueError("need g | L with both positive")
    total = perrin(length // g) ** g - sum(
        d * n_prime_gcd(d, math.gcd(d, g)) for d in _divisors(length)[:-1]
    )
    q, rem = divmod(total, length)
    if rem:
        raise ArithmeticError(f"class count for ({length}, {g}) is not integral")
    return q


def n_total_gcd(length: int, g: int) -> int:
    """N(L, g): classes of any length dividing L, moves with gcd g."""
    if length % g:
        raise ValueError("need g | L")
    return sum(n_prime_gcd(d, math.gcd(d, g)) for d in _divisors(length))


def periods_pair(a: int, b: int) -> set[int]:
    """All periods {a, b} attains over its seeds.

    Divisors p of a+b survive unless p divides gcd(a,b), p = 4*gcd(p,a,b),
    or (p, gcd(p,a,b)) = (6, 1).
    """
    if not 0 < a < b:
        raise ValueError("need 0 < a < b")
    g = math.gcd(a, b)
    out = set()
    for p in _divisors(a + b):
        gp = math.gcd(p, g)
        if g % p == 0:
            continue
        if p == 4 * gp:
            continue
        if p == 6 and gp == 1:
            continue
        out.add(p)
    return out


def mis_cycle_count(length: int) -> tuple[int, int]:
    """Maximal independent sets of the cycle graph C_l, by brute force.

    Returns (labeled, unlabeled-up-to-rotation).  Independent: no two
    chosen vertices adjacent; maximal: every unchosen vertex has a chosen
    neighbor.  This is the independent cross-check for the Q / N counts.
    """
    if length < 3:
        raise ValueError("cycle graphs need at least 3 vertices")
    if length > 24:
        raise ValueError("brute force above 2^24 subsets is not supported")
    n = 1 << length
    full = n - 1
    arr = np.arange(n, dtype=np.int64)

    def rot(x, s):
        s %= length
        return ((x >> s) | (x << (length - s))) & full

    independent = (arr & rot(arr, 1)) == 0
    covered = (~arr & ~(rot(arr, 1) | rot(arr, length - 1)) & full) == 0
    valid = arr[independent & covered]
    canon = valid.copy()
    for s in range(1, length):
        canon = np.minimum(canon, rot(valid, s))
    return int(valid.size), int(np.unique(canon).size)


# ---------------------------------------------------------------------------
# the position permutation between {a,b} and {1, a+b-1}

def sigma(a: int, p: int, bits: str) -> str:
    """Position permutation: result(n) = bits(a*n mod p).  Needs gcd(a,p)=1."""
    if math.gcd(a, p) != 1:
        raise ValueError(f"gcd({a}, {p}) != 1; the index map is not a permutation")
    if len(bits) != p:
        raise ValueError(f"input must have length {p}")
    return "".join(bits[(a * n) % p] for n in range(p))


def sigma_inverse(a: int, p: int, bits: str) -> str:
    return sigma(pow(a, -1, p), p, bits)


# ---------------------------------------------------------------------------
# three-move games {1, b, c}, no seed

def cf_1bc(b: int, c: int) -> OracleResult:
    """Unseeded {1, b, c} for 1 < b < c: full case analysis incl. preperiods.

    With q = floor(c/(b+1)), r = c mod (b+1), k = b/2, gamma = (b-r-2)/2,
    the preperiodic cases (b even, c > b+1, r even < b-2) share one
    prefix-term shape; the minimal preperiod is min(q, gamma)*(b+c+2)-b-1
    because the last b+1 prefix bits already agree with the cycle.
    """
    if not 1 < b < c:
        raise ValueError("need 1 < b < c")
    q, r = divmod(c, b + 1)

    if b % 2 == 1:
        if c % 2 == 1:
            return OracleResult(
                "1bc", {"b": b, "c": c}, InfiniteTail(_01), 2, 0, case="i"
            )
        cycle = _cat(Power(_01, c // 2), _run(1, b))
        return OracleResult(
            "1bc", {"b": b, "c": c}, InfiniteTail(cycle), b + c, 0, case="ii"
        )

    k = b // 2
    blk = _cat(Power(_01, k), Bit(1))        # (01)^k 1, length b+1
    blk_s = _cat(Power(_01, k - 1), Bit(1))  # (01)^(k-1) 1, length b-1

    if c == b + 1:
        cycle = _cat(Power(_01, k), _run(1, b))
        return OracleResult(
            "1bc", {"b": b, "c": c}, InfiniteTail(cycle), 2 * b, 0, case="iii"
        )
    if r == 1 or r == b:
        return OracleResult(
            "1bc", {"b": b, "c": c}, InfiniteTail(blk), b + 1, 0, case="iv"
        )
    if r % 2 == 1:
        cycle = _cat(Power(blk, q + 1), _run(1, r - 1))
        return OracleResult(
            "1bc", {"b": b, "c": c}, InfiniteTail(cycle), b + c, 0, case="v"
        )

    # r even, c > b+1: shared prefix-term shape, three period shapes
    gamma = (b - r - 2) // 2
    m = min(q, gamma)
    terms = [
        _cat(
            Power(blk, q - i),
            Power(blk_s, i),
            Power(_01, r // 2 + i),
            _run(1, 2 * (gamma - i) + 1),
            Power(_01, k - (gamma - i)),
            Bit(1),
        )
        for i in range(m)
    ]
    if gamma <= q:
        cycle = _cat(Power(blk, q - gamma), Power(blk_s, gamma + 1))
        period = c + 1
        case = "vi" if gamma == 0 else ("ix" if gamma == q else "vii")
    else:
        cycle = _cat(
            Power(blk_s, q),
            Power(_01, r // 2 + q),
            _run(1, 2 * (gamma - q) + 1),
            Power(_01, r // 2 + q),
            Bit(1),
        )
        period = b + c
        case = "viii"
    if case == "ix":
        cycle = blk_s
        period = b - 1
    preperiod = max(0, m * (b + c + 2) - b - 1)
    pattern = Concat(tuple(terms) + (InfiniteTail(cycle),)) if terms else InfiniteTail(cycle)
    return OracleResult("1bc", {"b": b, "c": c}, pattern, period, preperiod, case=case)


@dataclass(frozen=True)
class KnownTriple:
    moves: tuple[int, int, int]
    period: int
    preperiod: int
    family: str


def cf_known_3set_examples(s_max: int = 4, k_max: int = 9) -> list[KnownTriple]:
    """Unseeded 3-set families with long preperiods and short periods.

    {2s, 4s+1, 22s+2}: period 26s+3, preperiod 24s^2-4s-1 (s >= 2).
    {k, k+2, 2k+3} for odd k >= 3: period 2, preperiod (3k^2-5)/2.
    """
    out = []
    for s in range(2, s_max + 1):
        out.append(
            KnownTriple(
                (2 * s, 4 * s + 1, 22 * s + 2),
                26 * s + 3,
                24 * s * s - 4 * s - 1,
                "long-preperiod",
            )
        )
    for k in range(3, k_max + 1, 2):
        out.append(
            KnownTriple((k, k + 2, 2 * k + 3), 2, (3 * k * k - 5) // 2, "period-two")
        )
    return out


# ---------------------------------------------------------------------------
# three-move games {a, b, a+b}, no seed

def cf_ab_apb(a: int, b: int) -> OracleResult:
    """Unseeded {a, b, a+b} for a < b.

    With rho = b mod 2a: quadratic regime for 1 <= rho < a with period
    (a/gcd(a,b)) * (2b + rho); otherwise linear with period b + 2a(k+1),
    k = floor((b-1)/(2a)).  Always purely periodic.
    """
    if not 0 < a < b:
        raise ValueError("need 0 < a < b")
    k = (b - 1) // (2 * a)
    rho = b % (2 * a)
    ab_block = _cat(_run(0, a), _run(1, a))
    if 1 <= rho < a:
        g = math.gcd(a, b)
        a_t = a // g
        parts = []
        prev_sigma = 0
        for i in range(1, a_t):
            sig = (i * b) % a
            delta = 1 if (sig > prev_sigma and i > 1) else 0
            parts.append(
                _cat(
                    Power(ab_block, k - delta),
                    _run(0, sig),
                    _run(1, b),
                    _run(0, a - sig),
                    _run(1, a),
                )
            )
            prev_sigma = sig
        parts.append(_cat(Power(ab_block, k), _run(1, b)))
        period = a_t * (2 * b + rho)
        return OracleResult(
            "ab_apb",
            {"a": a, "b": b, "moves": [a, b, a + b]},
            InfiniteTail(_cat(*parts)),
            period,
            0,
            case="quadratic",
        )
    cycle = _cat(Power(ab_block, k), _run(0, a), _run(1, a + b))
    return OracleResult(
        "ab_apb",
        {"a": a, "b": b, "moves": [a, b, a + b]},
        InfiniteTail(cycle),
        b + 2 * a * (k + 1),
        0,
        case="linear",
    )
