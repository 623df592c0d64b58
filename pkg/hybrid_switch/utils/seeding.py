"""Stable per-stream random number generators."""

import hashlib

import numpy as np


def stable_seed(*parts) -> int:
    """64-bit seed from a SHA-256 digest of ``parts``; identical on every platform and process."""
    payload = "::".join(str(p) for p in parts).encode("utf-8")
    digest = hashlib.sha256(payload).digest()
    return int.from_bytes(digest[:8], "little")


def stream_rng(*parts) -> np.random.Generator:
    """Independent generator for the stream named by ``parts``."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(stable_seed(*parts))))
