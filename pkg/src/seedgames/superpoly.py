"""Seeded long-period families of {1,b,b+1} and the superpolynomial construction.

For odd b and the seed (0111)^n, the game {1,b,b+1} is purely periodic
with period 2(n+1)b+1, so one move set supports many period lengths at
once.  Scaling by n and choosing the seed that places (0111)^i on the
i-th residue class yields A_n = {n, n(4n-1), n(4n-1)+n} whose period is a
multiple of lcm{2(i+1)(4n-1)+1 : i < n}, superpolynomial in max(A_n).

The grid filling realizes the period structure constructively: copies of
X = 110(1110)^n are laid out in a (2n+2)-row table, column-extended by d
copies of the first two columns; reading across rows gives a valid cycle
of length 2(n+1)b+1 for b = 4n+1+2d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .engine import (
    BudgetError,
    MoveSet,
    decompose,
    generate,
    normalize_seed,
    period_preperiod,
)
from .enumeration import enumerate_seeds, minimal_subperiod


def lemma_seed(n: int, b: int) -> tuple[str | None, int]:
    """Seed (0111)^n for {1, b, b+1} and its predicted period 2(n+1)b+1.

    Requires odd b, and b > 4n+1 for n >= 1.  n = 0 means no seed and
    period 2b+1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if b < 3 or b % 2 == 0:
        raise ValueError(f"b must be odd and at least 3, got {b}")
    if n >= 1 and b <= 4 * n + 1:
        raise ValueError(f"need b > 4n+1 = {4 * n + 1}, got b = {b}")
    seed = "0111" * n if n else None
    return seed, 2 * (n + 1) * b + 1


class GridError(AssertionError):
    def __init__(self, row: int, col: int, case: int, message: str):
        super().__init__(f"cell ({row}, {col}) violates recurrence case {case}: {message}")
        self.row = row
        self.col = col
        self.case = case


@dataclass
class GridFilling:
    """The (2n+2)-row filling whose rows concatenate to a cycle of {1,b,b+1}.

    Rows are indexed 0..2n+1 and columns -2d..beta with beta = 4n+1;
    even rows are full (b+1 cells), odd rows lack the last two columns
    (b-1 cells) except the final row which lacks only the last (b cells).
    """

    n: int
    d: int
    rows: list[str]

    @property
    def beta(self) -> int:
        return 4 * self.n + 1

    @property
    def b(self) -> int:
        return self.beta + 2 * self.d

    @property
    def moves(self) -> tuple[int, int, int]:
        return (1, self.b, self.b + 1)

    def cell(self, i: int, j: int) -> int:
        """Value at row i, column j (columns start at -2d)."""
        return int(self.rows[i][j + 2 * self.d])

    def row_columns(self, i: int) -> range:
        return range(-2 * self.d, -2 * self.d + len(self.rows[i]))

    def flatten(self) -> str:
        return "".join(self.rows)

    # -- validation ---------------------------------------------------------
    def _case_refs(self, i: int, j: int) -> tuple[int, list[tuple[int, int]]]:
        """Case number and the three cells holding w(m-1), w(m-b), w(m-b-1)."""
        n, d, beta = self.n, self.d, self.beta
        lo = -2 * d
        last = 2 * n + 1
        if i == 0:
            if j == lo:
                return 5, [(last, beta - 1), (last, lo), (2 * n, beta)]
            if j == beta:
                return 6, [(0, beta - 1), (0, lo), (last, beta - 1)]
            return 4, [(0, j - 1), (last, j), (last, j - 1)]
        if i % 2 == 1:
            if j == lo:
                return 3, [(i - 1, beta), (i - 1, lo + 1), (i - 1, lo)]
            return 1, [(i, j - 1), (i - 1, j + 1), (i - 1, j)]
        if j == lo:
            return 9, [(i - 1, beta - 2), (i - 2, beta), (i - 2, beta - 1)]
        if j == lo + 1:
            return 8, [(i, lo), (i - 1, lo), (i - 2, beta)]
        if j == beta:
            return 7, [(i, beta - 1), (i, lo), (i - 1, beta - 2)]
        return 2, [(i, j - 1), (i - 1, j - 1), (i - 1, j - 2)]

    def validate(self) -> None:
        """Check every cell against its recurrence case; raise GridError if violated."""
        for i in range(len(self.rows)):
            for j in self.row_columns(i):
                case, refs = self._case_refs(i, j)
                vals = [self.cell(ri, rj) for ri, rj in refs]
                expect = 1 - min(vals)
                got = self.cell(i, j)
                if got != expect:
                    raise GridError(
                        i, j, case, f"value {got}, neighbors {refs} -> {vals}"
                    )

    def check_no_subperiod(self) -> None:
        """The flattened word must be aperiodic (needs d >= 1).

        The n+1 copies of (01)^(d+1) sit at the starts of the odd rows and
        of row 0's wraparound; their gaps are unequal because the last row
        is one cell longer, so no rotation-invariant subperiod can exist.
        """
        if self.d < 1:
            raise ValueError("the flattened word only lacks subperiods for d >= 1")
        word = self.flatten()
        if minimal_subperiod(word) != len(word):
            raise GridError(-1, -1, 0, "flattened word has a proper subperiod")
        marker = "01" * (self.d + 1)
        doubled = word + word
        hits = sorted(
            {
                pos % len(word)
                for pos in range(len(word))
                if doubled.startswith(marker, pos)
            }
        )
        if len(hits) != self.n + 1:
            raise GridError(
                -1, -1, 0, f"expected {self.n + 1} copies of {marker}, found {len(hits)}"
            )
        gaps = {
            (hits[(k + 1) % len(hits)] - hits[k]) % len(word) for k in range(len(hits))
        }
        if len(hits) > 1 and len(gaps) == 1:
            raise GridError(-1, -1, 0, "marker copies are equally spaced")

    def matches_engine_cycle(self) -> bool:
        """Is the flattened word a rotation of the engine's cycle for (n, d)?"""
        seed, period = lemma_seed(self.n, self.b) if self.d >= 1 else (None, None)
        if self.d < 1:
            return True
        word = self.flatten()
        from .engine import find_periodicity

        rep = find_periodicity(self.moves, seed)
        if rep.preperiod != 0 or rep.period != len(word):
            return False
        return word in rep.cycle + rep.cycle


def build_grid(n: int, d: int) -> GridFilling:
    """Construct the grid filling for parameters n >= 1, d >= 0."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if d < 0:
        raise ValueError("d must be nonnegative")
    rows = []
    for k in range(n + 1):
        even = "1110" * k + "11" + "0111" * (n - k)
        rows.append("11" * d + even)
        if k < n:
            odd = "0" + "1110" * k + "11" + "0111" * (n - k - 1) + "0"
        else:
            odd = "0" + "1110" * n
        rows.append("01" * d + odd)
    return GridFilling(n, d, rows)


# ---------------------------------------------------------------------------
# the superpolynomial family A_n

@dataclass(frozen=True)
class SuperFamilyInstance:
    """A_n = n * {1, b, b+1} with b = 4n-1 and the seed interleaving (0111)^i.

    component_lcm divides the true period (each residue class must stay
    periodic); predicted_period = n * component_lcm is the natural guess,
    confirmed exactly for n <= 4 but unproven in general.
    """

    n: int
    b: int
    moves: tuple[int, int, int]
    seed: str | None
    component_seeds: tuple[str | None, ...]
    component_periods: tuple[int, ...]
    component_lcm: int
    predicted_period: int

    def alpha(self) -> int:
        return self.moves[-1]


def super_family(n: int) -> SuperFamilyInstance:
    if n < 1:
        raise ValueError("n must be at least 1")
    b = 4 * n - 1
    moves = (n, n * b, n * b + n)
    seed = "".join("0" * j + "1" * (b - j) for j in range(1, n)) or None
    comp_seeds = tuple("0111" * i if i else None for i in range(n))
    comp_periods = tuple(2 * (i + 1) * b + 1 for i in range(n))
    comp_lcm = math.lcm(*comp_periods)
    return SuperFamilyInstance(
        n=n,
        b=b,
        moves=moves,
        seed=seed,
        component_seeds=comp_seeds,
        component_periods=comp_periods,
        component_lcm=comp_lcm,
        predicted_period=n * comp_lcm,
    )


@dataclass(frozen=True)
class FamilyVerification:
    instance: SuperFamilyInstance
    status: str  # "exact" | "divisor-confirmed" | "budget-exceeded"
    period: int | None = None
    preperiod: int | None = None
    divisor: int | None = None
    matches_predicted: bool | None = None


def verify_family(n: int, budget: int = 10**9) -> FamilyVerification:
    """Verify A_n: exact engine period within budget, else the divisor claim.

    The divisor mode checks every component ({1,b,b+1}, (0111)^i) has its
    exact predicted period; their lcm then divides per(A_n, S_n) because
    each residue class of a periodic interleaving is periodic.
    """
    inst = super_family(n)
    if inst.component_lcm <= budget:
        try:
            N, p = period_preperiod(inst.moves, inst.seed, step_budget=budget)
            return FamilyVerification(
                inst,
                "exact",
                period=p,
                preperiod=N,
                divisor=inst.component_lcm,
                matches_predicted=(p == inst.predicted_period),
            )
        except BudgetError:
            pass
    # component-wise divisor certificate
    sub = MoveSet((1, inst.b, inst.b + 1))
    parts = decompose(inst.moves, inst.seed)
    try:
        for i, (comp_moves, comp_seed) in enumerate(parts):
            if comp_moves != sub:
                return FamilyVerification(inst, "budget-exceeded")
            if normalize_seed(inst.component_seeds[i], sub) != comp_seed:
                return FamilyVerification(inst, "budget-exceeded")
            N, p = period_preperiod(sub, comp_seed)
            if (N, p) != (0, inst.component_periods[i]):
                return FamilyVerification(inst, "budget-exceeded")
    except BudgetError:
        return FamilyVerification(inst, "budget-exceeded")
    return FamilyVerification(
        inst, "divisor-confirmed", divisor=inst.component_lcm
    )


# ---------------------------------------------------------------------------
# period-profile data ({1,b,b+1}: how many periods, how large their lcm)

def period_profile(b_values, max_alpha: int = 20) -> list[tuple[int, int, int]]:
    """Rows (b, number of distinct periods over all seeds, lcm of the periods)."""
    rows = []
    for b in b_values:
        atlas = enumerate_seeds([1, b, b + 1], max_alpha=max_alpha)
        periods = sorted(atlas.periods)
        rows.append((b, len(periods), math.lcm(*periods)))
    return rows
