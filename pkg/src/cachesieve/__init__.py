"""Prime sieving with a cache-blocked, bit-packed hybrid engine.

Classical and segmented byte-flag baselines share one output contract with
the hybrid engine; a benchmark harness with a cross-engine correctness gate
and an analytical memory-access model round out the package. Hot kernels run
in a compiled extension when built, with a numpy fallback selected at import
(see :mod:`cachesieve.backends`).
"""

from . import backends, bench, memmodel
from .bitpack import OddBitBlock, aligned_zero_bytes
from .sieve import (
    ENGINES,
    BasePrimes,
    ChecksumSink,
    CollectSink,
    CountSink,
    PrimeSink,
    SieveConfig,
    WriteSink,
    base_primes,
    classical_sieve,
    count_primes,
    first_odd_multiple,
    hybrid_sieve,
    run_engine,
    segmented_sieve,
    sieve_block,
)

__version__ = "0.1.0"

backend_name = backends.name

__all__ = [
    "ENGINES",
    "BasePrimes",
    "ChecksumSink",
    "CollectSink",
    "CountSink",
    "OddBitBlock",
    "PrimeSink",
    "SieveConfig",
    "WriteSink",
    "aligned_zero_bytes",
    "backend_name",
    "backends",
    "base_primes",
    "bench",
    "classical_sieve",
    "count_primes",
    "first_odd_multiple",
    "hybrid_sieve",
    "memmodel",
    "run_engine",
    "segmented_sieve",
    "sieve_block",
]
