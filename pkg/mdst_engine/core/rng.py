"""
Named, splittable random streams derived from one root seed
"""

import zlib

import numpy as np


def stream(seed: int, name: str) -> np.random.Generator:
    """Independent generator for `name`; same (seed, name) gives the same draws"""
    return np.random.default_rng(np.random.SeedSequence([seed, zlib.crc32(name.encode())]))


def int_seed(seed: int, name: str) -> int:
    """A 32-bit integer seed for libraries that take plain ints"""
    return int(stream(seed, name).integers(0, 2**32 - 1))
