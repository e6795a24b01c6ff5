"""seedgames: eventual periodicity of seeded subtraction games.

Library layout:

- ``engine``      bit-exact sequence generation and minimal period/preperiod
- ``patterns``    run-length pattern expressions ("0^2 1^2 (1^2 0)^inf")
- ``closedforms`` solved-family oracles and the counting formulas
- ``enumeration`` full seed-space atlases and distinct periodicities
- ``superpoly``   long-period seeded families and the grid construction
- ``harness``     conjecture scans and table reproduction
- ``oeis``        bundled integer-sequence snapshots for cross-checks
- ``cli``         command-line front door (``seedgames ...``)
"""

from .engine import (
    BudgetError,
    InfiniteMoveSet,
    MoveSet,
    PeriodicityReport,
    aperiodicity_certificate,
    check_pure_periodic,
    check_translating_zeros,
    decompose,
    find_periodicity,
    generate,
    generate_infinite,
    is_extension,
    losing_positions,
    mode_seed,
    normalize_seed,
    period_bound,
    period_preperiod,
    step,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "InfiniteMoveSet",
    "MoveSet",
    "PeriodicityReport",
    "aperiodicity_certificate",
    "check_pure_periodic",
    "check_translating_zeros",
    "decompose",
    "find_periodicity",
    "generate",
    "generate_infinite",
    "is_extension",
    "losing_positions",
    "mode_seed",
    "normalize_seed",
    "period_bound",
    "period_preperiod",
    "step",
    "__version__",
]
