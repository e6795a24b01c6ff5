"""Numba kernels for the hot loops: cycle finding, bit generation, state-space scans.

Everything here operates on the packed window representation used by
``engine``: a game state is the alpha-bit integer whose bit j holds
w(n-1-j), i.e. the least significant bit is the most recent value.  One
step shifts left and appends the new bit; the new bit is 0 exactly when
every bit selected by ``mask`` (bit x-1 for each move x) is 1.

Importing this module requires numba; ``engine`` treats an ImportError
as "no acceleration available" and falls back to pure Python.
"""

import numpy as np
from numba import njit, uint64, int64

U1 = np.uint64(1)


@njit(uint64(uint64, uint64, uint64), nogil=True, cache=True, inline="always")
def _step(s, mask, wmask):
    bit = uint64(0) if (s & mask) == mask else uint64(1)
    return ((s << U1) | bit) & wmask


@njit(nogil=True, cache=True)
def brent(mask, wmask, x0, max_steps):
    """Brent cycle detection on the state orbit of x0.

    Returns (lam, mu): minimal cycle length and tail length of the orbit.
    Returns (-1, -1) if more than max_steps state transitions were needed.
    """
    steps = 0
    power = int64(1)
    lam = int64(1)
    tortoise = x0
    hare = _step(x0, mask, wmask)
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power <<= 1
            lam = 0
        hare = _step(hare, mask, wmask)
        lam += 1
        steps += 1
        if steps > max_steps:
            return int64(-1), int64(-1)
    hare = x0
    for _ in range(lam):
        hare = _step(hare, mask, wmask)
    mu = int64(0)
    tortoise = x0
    while tortoise != hare:
        tortoise = _step(tortoise, mask, wmask)
        hare = _step(hare, mask, wmask)
        mu += 1
        steps += 2
        if steps > max_steps:
            return int64(-1), int64(-1)
    return lam, mu


@njit(nogil=True, cache=True)
def fill_bits(mask, wmask, x0, out):
    """Write the next len(out) sequence bits into out; return the final state."""
    s = x0
    for i in range(out.shape[0]):
        bit = uint64(0) if (s & mask) == mask else uint64(1)
        s = ((s << U1) | bit) & wmask
        out[i] = bit
    return s


@njit(nogil=True, cache=True)
def max_cycle(mask, wmask, n_states, path, visited):
    """Largest cycle length in the functional graph over all n_states windows.

    path is an int32 scratch buffer of n_states entries; visited a zeroed
    uint64 bitmap with n_states bits.  Each state is walked exactly once,
    so the scan is O(n_states).  Returns (max_len, witness) where witness
    is a state on a maximum-length cycle.
    """
    max_len = int64(0)
    witness = int64(0)
    for s0 in range(n_states):
        if visited[s0 >> 6] & (U1 << uint64(s0 & 63)):
            continue
        L = 0
        s = uint64(s0)
        while True:
            w = visited[s >> uint64(6)]
            b = U1 << (s & uint64(63))
            if w & b:
                break
            visited[s >> uint64(6)] = w | b
            path[L] = int64(s)
            L += 1
            s = _step(s, mask, wmask)
        # s already visited: on the current path => new cycle, else old ground
        j = L - 1
        target = int64(s)
        while j >= 0 and path[j] != target:
            j -= 1
        if j >= 0:
            lam = L - j
            if lam > max_len:
                max_len = lam
                witness = target
    return max_len, witness


@njit(nogil=True, cache=True)
def atlas_traverse(nxt, tail, lam, phase, cid, pos, path, cyc_start, cyc_len):
    """Decompose a functional graph into cycles plus tails.

    nxt[s] is the successor of state s.  Fills, per state: tail (steps to
    reach the cycle), lam (cycle length), phase (index on the cycle of the
    entry state), cid (cycle id).  tail must come in as -1 and pos as -1.
    Returns the number of cycles; cyc_start/cyc_len get one entry each.
    """
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
