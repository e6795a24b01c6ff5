"""Naive reference implementations, kept independent of the library internals.

These exist so the fast paths are checked against something that is
obviously correct: direct recurrence evaluation, quadratic period
scanning, and block-concatenation enumeration.
"""


def ref_generate(moves, seed, n):
    """Evaluate the recurrence literally on a dict of index -> bit."""
    moves = sorted(moves)
    alpha = moves[-1]
    if seed is None:
        seed = ""
    if len(seed) < alpha:
        seed = "1" * (alpha - len(seed)) + seed
    else:
        seed = seed[len(seed) - alpha:]
    w = {i - alpha: int(ch) for i, ch in enumerate(seed)}

    def at(m):
        return w[m] if m >= -alpha else 1

    out = []
    for i in range(n):
        w[i] = 1 - min(at(i - x) for x in moves)
        out.append(str(w[i]))
    return "".join(out)


def ref_periodicity(bits, horizon):
    """Minimal (preperiod, period) with N + p <= horizon, by quadratic scan.

    The match must extend through the very end of bits, so a prefix a few
    times longer than the horizon rules out spurious small periods.
    """
    L = len(bits)
    assert 2 * horizon <= L, "prefix too short to attest the horizon"
    for p in range(1, horizon + 1):
        N = 0
        for n in range(L - p - 1, -1, -1):
            if bits[n] != bits[n + p]:
                N = n + 1
                break
        if N + p <= horizon:
            return N, p
    raise AssertionError(f"no (N, p) with N + p <= {horizon} fits")


def ref_q_strings(length):
    """All rotations of 01/011 block concatenations of the given length."""
    out = set()

    def build(blocks, rem):
        if rem == 0:
            s = "".join("01" if b == 2 else "011" for b in blocks)
            for r in range(length):
                out.add(s[r:] + s[:r])
            return
        for b in (2, 3):
            if b <= rem:
                build(blocks + [b], rem - b)

    build([], length)
    return out


def ref_is_maximal_independent(vertices, n):
    """Check one vertex subset of the n-cycle for maximal independence."""
    vs = set(vertices)
    for v in vs:
        if (v + 1) % n in vs:
            return False
    for v in range(n):
        if v not in vs and (v - 1) % n not in vs and (v + 1) % n not in vs:
            return False
    return True
