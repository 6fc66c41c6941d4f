"""Deterministic random streams for reproducible experiments.

Everything seeded in this project runs off SplitMix64, a tiny counter-based
generator that is trivial to port: state advances by the 64-bit golden-ratio
constant and each output is a finalizing bit-mix of the new state.  Derived
streams (one per tree, one for the train/test shuffle, ...) are obtained by
hashing the seed together with integer stream ids, so concurrent consumers can
never interleave draws.

Stream ids used by this package:

* ``stream(seed, SPLIT_STREAM)``            train/test shuffle
* ``stream(seed, FOREST_STREAM, tree_idx)`` bootstrap + feature sampling of one tree
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

SPLIT_STREAM = 0
FOREST_STREAM = 1


def mix64(z: int) -> int:
    """SplitMix64 finalizer (Steele, Lea & Flood 2014)."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """64-bit SplitMix64 generator with unbiased bounded draws."""

    def __init__(self, state: int):
        self._state = state & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return mix64(self._state)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) via rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (_MASK + 1) - ((_MASK + 1) % bound)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def below_array(self, bound: int, count: int) -> np.ndarray:
        """Vectorized equivalent of ``count`` sequential :meth:`below` calls.

        Reproduces the rejection-sampling sequence exactly, including the
        generator state after the draw that yields the final accepted value.
        """
        if bound <= 0:
            raise ValueError("bound must be positive")
        if (_MASK + 1) % bound == 0:
            # bound divides 2**64: every draw is accepted
            start = np.uint64(self._state)
            steps = np.arange(1, count + 1, dtype=np.uint64) * np.uint64(_GAMMA)
            with np.errstate(over="ignore"):
                states = start + steps
                z = states
                z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
                z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
                z = z ^ (z >> np.uint64(31))
            if count:
                self._state = int(states[-1])
            return (z % np.uint64(bound)).astype(np.int64)
        out = np.empty(count, dtype=np.int64)
        filled = 0
        limit = np.uint64((_MASK + 1) - ((_MASK + 1) % bound))
        while filled < count:
            need = count - filled
            start = np.uint64(self._state)
            steps = np.arange(1, need + 1, dtype=np.uint64) * np.uint64(_GAMMA)
            with np.errstate(over="ignore"):
                states = start + steps
                z = states
                z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
                z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
                z = z ^ (z >> np.uint64(31))
            ok = z < limit
            accepted = (z[ok] % np.uint64(bound)).astype(np.int64)
            if len(accepted) >= need:
                # state stops right after the draw producing the last value kept
                last_pos = int(np.nonzero(ok)[0][need - 1])
                self._state = int(states[last_pos])
                out[filled:filled + need] = accepted[:need]
                filled += need
            else:
                self._state = int(states[-1])
                out[filled:filled + len(accepted)] = accepted
                filled += len(accepted)
        return out


def stream(seed: int, *ids: int) -> SplitMix64:
    """Derive an independent generator from ``seed`` and integer stream ids."""
    s = mix64(seed)
    for i in ids:
        s = mix64(s ^ mix64(i))
    return SplitMix64(s)
