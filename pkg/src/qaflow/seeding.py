"""Deterministic seeding for Monte Carlo sampling.

Every sampled shot owns an independent random stream so results do not
depend on chunking, vectorisation, or execution order.  The derivation is
fixed for all time:

    shot_key(master, i)  = splitmix64(splitmix64(master) ^ ((i + 1) * GOLDEN))
    sweep_key(master, i) = splitmix64(splitmix64(master) ^ ((i + 1) * GOLDEN)
                                      ^ SWEEP_SALT)

with GOLDEN = 0x9E3779B97F4A7C15 and SWEEP_SALT = 0xD1B54A32D192ED03, all
arithmetic modulo 2^64.  A shot's uniforms are the outputs of NumPy's
Philox counter-based generator (Philox 4x64-10) keyed with ``shot_key``,
consumed in a fixed documented order by each sampler.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
SWEEP_SALT = 0xD1B54A32D192ED03


def splitmix64(x: int) -> int:
    """One step of the splitmix64 mixing function (Steele et al.)."""
    x = (x + GOLDEN) & _MASK
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def shot_key(master_seed: int, shot_index: int) -> int:
    """64-bit Philox key for one shot of one run."""
    base = splitmix64(master_seed & _MASK)
    return splitmix64(base ^ (((shot_index + 1) * GOLDEN) & _MASK))


def sweep_key(master_seed: int, position: int) -> int:
    """Derived master seed for entry ``position`` of a parameter sweep.

    Salted so a sweep entry never shares a stream with a shot of the
    parent seed.
    """
    base = splitmix64(master_seed & _MASK)
    return splitmix64(base ^ (((position + 1) * GOLDEN) & _MASK)
                      ^ SWEEP_SALT)


def shot_uniforms(master_seed: int, shot_index: int,
                  count: int) -> np.ndarray:
    """First ``count`` uniforms in [0, 1) of a shot's Philox stream."""
    key = shot_key(master_seed, shot_index)
    return np.random.Generator(np.random.Philox(key=key)).random(count)
