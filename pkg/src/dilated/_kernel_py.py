"""Pure-Python diffusion kernel.

Mirrors ``_ext/kernel.pyx`` operation for operation so both backends return
bitwise-identical results: fan-out in ascending source order, targets in CSR
order, decay applied after the incoming sum.
"""


def _as_list(seq):
    return seq.tolist() if hasattr(seq, "tolist") else list(seq)


def step(indptr, indices, energy, decay):
    """One update: ``out[v] = decay * sum(energy[u] / deg(u) for edges u -> v)``."""
    indptr = _as_list(indptr)
    indices = _as_list(indices)
    energy = _as_list(energy)
    n = len(indptr) - 1
    out = [0.0] * n
    for u in range(n):
        e = energy[u]
        lo = indptr[u]
        hi = indptr[u + 1]
        if e == 0.0 or hi == lo:
            continue
        share = e / (hi - lo)
        for j in range(lo, hi):
            out[indices[j]] += share
    for v in range(n):
        out[v] = decay * out[v]
    return out


def run(indptr, indices, initial, decay, max_steps, epsilon):
    """Accumulate ``initial + e_1 + ... + e_T``; returns ``(accumulated, T)``.

    Stops after ``max_steps`` updates or once an update's peak energy drops
    below ``epsilon``; the update that triggers the stop is still counted.
    """
    indptr = _as_list(indptr)
    indices = _as_list(indices)
    n = len(indptr) - 1
    current = [float(x) for x in _as_list(initial)]
    acc = list(current)
    steps = 0
    while steps < max_steps:
        nxt = [0.0] * n
        for u in range(n):
            e = current[u]
            lo = indptr[u]
            hi = indptr[u + 1]
            if e == 0.0 or hi == lo:
                continue
            share = e / (hi - lo)
            for j in range(lo, hi):
                nxt[indices[j]] += share
        peak = 0.0
        for v in range(n):
            x = decay * nxt[v]
            nxt[v] = x
            acc[v] += x
            if x > peak:
                peak = x
        current = nxt
        steps += 1
        if peak < epsilon:
            break
    return acc, steps
