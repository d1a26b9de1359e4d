"""
Chunked evaluation over an optional thread pool.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, TypeVar

T = TypeVar("T")


class ChunkExecutor:
    """Split an index range into chunks and evaluate them, optionally concurrently.

    numpy releases the GIL inside the distance kernels, so threads give real
    speedup on large candidate and grid evaluations.
    """

    def __init__(self, max_workers: int = 1, chunk_size: int = 65536):
        """
        Initialize executor.

        Args:
            max_workers: Maximum number of concurrent chunks; 1 runs inline
            chunk_size: Number of items per chunk
        """
        if max_workers < 1 or chunk_size < 1:
            raise ValueError("max_workers and chunk_size must be positive")
        self.max_workers = max_workers
        self.chunk_size = chunk_size

    def chunks(self, total: int) -> List[range]:
        """Consecutive index ranges covering ``range(total)``."""
        return [
            range(start, min(start + self.chunk_size, total))
            for start in range(0, total, self.chunk_size)
        ]

    def map_chunks(self, func: Callable[[range], T], total: int) -> List[T]:
        """
        Apply ``func`` to every chunk of ``range(total)``.

        Args:
            func: Callable receiving one index range
            total: Number of items

        Returns:
            Results in chunk order
        """
        chunks = self.chunks(total)
        if self.max_workers == 1 or len(chunks) <= 1:
            return [func(chunk) for chunk in chunks]
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            return list(executor.map(func, chunks))
