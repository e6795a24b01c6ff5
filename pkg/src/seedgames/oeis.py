"""Cross-checks against published integer sequences.

Bundled snapshots (JSON files under ``data/``) are the offline authority:
CI never touches the network.  ``fetch_bfile`` can pull a longer b-file
from oeis.org into a cache directory when explicitly requested; on any
failure it falls back to the snapshot.
"""

from __future__ import annotations

import json
import os
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

CACHE_ENV = "SEEDGAMES_OEIS_CACHE"


@dataclass(frozen=True)
class Snapshot:
    id: str
    name: str
    offset: int
    values: tuple[int, ...]


@dataclass(frozen=True)
class MatchReport:
    id: str
    ok: bool
    compared: int
    first_mismatch: int | None = None  # index in sequence coordinates
    expected: int | None = None
    got: int | None = None

    def __str__(self):
        if self.ok:
            return f"{self.id}: {self.compared} terms match"
        return (
            f"{self.id}: mismatch at n={self.first_mismatch} "
            f"(expected {self.expected}, got {self.got})"
        )


def snapshot_ids() -> list[str]:
    root = resources.files("seedgames").joinpath("data")
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_snapshot(oeis_id: str) -> Snapshot:
    path = resources.files("seedgames").joinpath("data").joinpath(f"{oeis_id}.json")
    try:
        payload = json.loads(path.read_text())
    except FileNotFoundError:
        raise KeyError(f"no bundled snapshot for {oeis_id!r}; have {snapshot_ids()}")
    return Snapshot(
        id=payload["id"],
        name=payload["name"],
        offset=int(payload["offset"]),
        values=tuple(payload["values"]),
    )


def check(oeis_id: str, computed: list[int], offset: int | None = None) -> MatchReport:
    """Compare a computed prefix against the authority values.

    computed[0] is taken to be the sequence term at the given offset
    (default: the snapshot's own offset).  Comparison runs over the
    overlap of the two ranges.
    """
    snap = load_snapshot(oeis_id)
    if offset is None:
        offset = snap.offset
    compared = 0
    for i, got in enumerate(computed):
        n = offset + i
        j = n - snap.offset
        if j < 0 or j >= len(snap.values):
            continue
        compared += 1
        if got != snap.values[j]:
            return MatchReport(
                oeis_id, False, compared, first_mismatch=n,
                expected=snap.values[j], got=got,
            )
    return MatchReport(oeis_id, True, compared)


def cache_dir(explicit: str | None = None) -> Path:
    if explicit:
        return Path(explicit)
    if CACHE_ENV in os.environ:
        return Path(os.environ[CACHE_ENV])
    return Path.home() / ".cache" / "seedgames" / "oeis"


def fetch_bfile(
    oeis_id: str, cache: str | None = None, timeout: float = 10.0
) -> tuple[int, list[int]]:
    """(offset, values) from the OEIS b-file, cached locally.

    Network problems fall back to the bundled snapshot.
    """
    cdir = cache_dir(cache)
    cdir.mkdir(parents=True, exist_ok=True)
    path = cdir / f"b{oeis_id[1:]}.txt"
    if not path.exists():
        url = f"https://oeis.org/{oeis_id}/b{oeis_id[1:]}.txt"
        try:
            with urllib.request.urlopen(url, timeout=timeout) as resp:
                path.write_bytes(resp.read())
        except OSError:
            snap = load_snapshot(oeis_id)
            return snap.offset, list(snap.values)
    pairs = []
    for line in path.read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, v = line.split()[:2]
        pairs.append((int(n), int(v)))
    pairs.sort()
    return pairs[0][0], [v for _, v in pairs]
