"""Storage backends for cached zeta series"""

from tqmzv import config

from .base import BaseSeriesCache
from .disk import DiskSeriesCache
from .memory import MemorySeriesCache

_default: BaseSeriesCache | None = None


def configure_default_cache(cache_dir: str | None = None) -> BaseSeriesCache:
    """Install the process-wide cache; disk backed when a directory is set."""
    global _default
    cache_dir = cache_dir if cache_dir is not None else config.TQMZV_CACHE_DIR
    _default = DiskSeriesCache(cache_dir) if cache_dir else MemorySeriesCache()
    return _default


def get_default_cache() -> BaseSeriesCache:
    if _default is None:
        return configure_default_cache()
    return _default


__all__ = [
    "BaseSeriesCache",
    "DiskSeriesCache",
    "MemorySeriesCache",
    "configure_default_cache",
    "get_default_cache",
]
