"""Named, seedable random streams backed by PCG64.

Each stochastic concern of a run (package counts, storage times, slot
choice, scenario delays, trip distances) draws from its own sub-stream
keyed by (seed, stream name), so enabling a scenario never shifts the
draws of the baseline streams.
"""

from __future__ import annotations

import hashlib
import struct

import numpy as np

STREAM_PACKAGE_COUNTS = "package_counts"
STREAM_STORAGE_TIMES = "storage_times"
STREAM_SLOT_CHOICE = "slot_choice"
STREAM_SCENARIO_DELAYS = "scenario_delays"
STREAM_AGV_DISTANCES = "agv_distances"


def stream(seed: int, name: str) -> np.random.Generator:
    """Independent PCG64 generator for (seed, name), stable across platforms."""
    digest = hashlib.sha256(name.encode("utf-8")).digest()
    words = struct.unpack("<4I", digest[:16])
    seq = np.random.SeedSequence(entropy=seed, spawn_key=words)
    return np.random.Generator(np.random.PCG64(seq))


def sample_package_count(rng: np.random.Generator, low: int = 30, high: int = 35) -> int:
    """Uniform integer package count in [low, high] inclusive."""
    return int(rng.integers(low, high + 1))


def sample_storage_time(rng: np.random.Generator, low: float = 60.0, high: float = 90.0) -> float:
    """Uniform real storage duration in [low, high] seconds."""
    return float(rng.uniform(low, high))
