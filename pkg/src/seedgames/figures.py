"""Underlying data rows for the survey figures (the CLI serializes these).

Each builder returns a list of tuples plus a header; everything is
computed through the library oracles and atlases, so the rows double as
regression fixtures.
"""

from __future__ import annotations

import math

from .closedforms import cf_1bc, cf_ab_apb
from .enumeration import enumerate_seeds
from .superpoly import lemma_seed, period_profile

FIGURE_IDS = (2, 3, 5, 6, 7, 8)


def preperiod_existence(max_b: int, max_c: int) -> tuple[list[str], list[tuple]]:
    """(b, c, 1 if {1,b,c} has a preperiod) for 1 < b < c."""
    rows = [
        (b, c, int(cf_1bc(b, c).preperiod > 0))
        for b in range(2, max_b + 1)
        for c in range(b + 1, max_c + 1)
    ]
    return ["b", "c", "has_preperiod"], rows


def preperiod_lengths(max_b: int, max_c: int) -> tuple[list[str], list[tuple]]:
    """(b, c, preperiod length) for {1,b,c}."""
    rows = [
        (b, c, cf_1bc(b, c).preperiod)
        for b in range(2, max_b + 1)
        for c in range(b + 1, max_c + 1)
    ]
    return ["b", "c", "preperiod"], rows


def abapb_periods(a: int, max_b: int) -> tuple[list[str], list[tuple]]:
    """(a, b, period of {a,b,a+b}) for b up to max_b."""
    rows = [(a, b, cf_ab_apb(a, b).period) for b in range(a + 1, max_b + 1)]
    return ["a", "b", "period"], rows


def periods_1bb1(
    b_values, enum_alpha_limit: int = 20
) -> tuple[list[str], list[tuple]]:
    """All periods of {1, b, b+1} per b.

    Small b (b+1 within the enumeration budget) get the complete period set
    from the seed atlas; larger odd b get the closed-form series
    2(n+1)b+1 for every admissible n.
    """
    rows = []
    for b in b_values:
        if b + 1 <= enum_alpha_limit:
            atlas = enumerate_seeds([1, b, b + 1], max_alpha=enum_alpha_limit)
            rows.extend((b, p, "enumerated") for p in sorted(atlas.periods))
        elif b % 2 == 1:
            for n in range((b - 3) // 4 + 1):
                rows.append((b, lemma_seed(n, b)[1], "closed-form"))
    return ["b", "period", "series"], rows


def lcm_heuristic(b_values, enum_alpha_limit: int = 20) -> tuple[list[str], list[tuple]]:
    """(b, number of periods of {1,b,b+1}, lcm of those periods)."""
    usable = [b for b in b_values if b + 1 <= enum_alpha_limit]
    rows = period_profile(usable, max_alpha=enum_alpha_limit)
    return ["b", "n_periods", "lcm_of_periods"], rows


def figure_rows(figure_id: int, **kw) -> tuple[list[str], list[tuple]]:
    if figure_id == 2:
        return preperiod_existence(kw.get("max_b", 40), kw.get("max_c", 80))
    if figure_id == 3:
        return preperiod_lengths(kw.get("max_b", 40), kw.get("max_c", 80))
    if figure_id == 5:
        return abapb_periods(kw.get("a", 13), kw.get("max_b", 120))
    if figure_id == 6:
        return abapb_periods(kw.get("a", 360), kw.get("max_b", 1080))
    if figure_id == 7:
        b = kw.get("b")
        bs = [b] if b else list(range(2, 35))
        return periods_1bb1(bs, kw.get("enum_alpha_limit", 20))
    if figure_id == 8:
        b = kw.get("b")
        bs = [b] if b else list(range(3, 20, 2))
        return lcm_heuristic(bs, kw.get("enum_alpha_limit", 20))
    raise ValueError(f"unknown figure id {figure_id}; known: {FIGURE_IDS}")
