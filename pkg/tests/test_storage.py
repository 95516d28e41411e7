from __future__ import annotations

import os

import pytest

from tqmzv.algebra import Index
from tqmzv.exceptions import CacheError
from tqmzv.series import QSeries
from tqmzv.series.zeta import zeta_q
from tqmzv.storage import (
    DiskSeriesCache,
    MemorySeriesCache,
    configure_default_cache,
    get_default_cache,
)
from tqmzv.storage.disk import format_record, parse_record
from tqmzv.utils.key_gen import series_digest, series_key

INDEX = Index.of(2, 1)
SERIES = QSeries.from_rationals([0, 0, 1, 0, 3], 4)


class TestKeys:
    def test_key(self):
        assert series_key("zeta", "2,1", 10) == "zeta:2,1:10"

    def test_digest(self):
        digest = series_digest("zeta", "2,1", 10)
        assert len(digest) == 32
        assert int(digest, 16) >= 0
        assert digest == series_digest("zeta", "2,1", 10)
        assert digest != series_digest("star", "2,1", 10)
        assert digest != series_digest("zeta", "2,1", 11)


class TestMemoryCache:
    def test_put_get_clear(self):
        cache = MemorySeriesCache()
        assert cache.get("zeta", INDEX, 4) is None
        cache.put("zeta", INDEX, 4, SERIES)
        assert cache.get("zeta", INDEX, 4) == SERIES
        assert cache.get("star", INDEX, 4) is None
        assert cache.get("zeta", INDEX, 5) is None
        cache.clear()
        assert len(cache) == 0


class TestRecords:
    def test_record_line(self):
        line = format_record(INDEX, 4, SERIES)
        assert line.startswith("2,1;4;{")
        assert line.endswith("\n")
        assert parse_record(line, INDEX, 4) == SERIES

    def test_record_of_another_index(self):
        line = format_record(INDEX, 4, SERIES)
        with pytest.raises(CacheError):
            parse_record(line, Index.of(3), 4)
        with pytest.raises(CacheError):
            parse_record(line, INDEX, 5)

    @pytest.mark.parametrize("text", ["", "2,1;4", "2,1;4;{not json", '2,1;4;{"N": 4, "coeffs": []}'])
    def test_corrupt_records(self, text):
        with pytest.raises(CacheError):
            parse_record(text, INDEX, 4)


class TestDiskCache:
    def test_persists_across_instances(self, tmp_path):
        DiskSeriesCache(str(tmp_path)).put("zeta", INDEX, 4, SERIES)
        fresh = DiskSeriesCache(str(tmp_path))
        assert fresh.get("zeta", INDEX, 4) == SERIES
        assert fresh.get("star", INDEX, 4) is None

    def test_layout(self, tmp_path):
        cache = DiskSeriesCache(str(tmp_path))
        path = cache.path_for("star", INDEX, 4)
        digest = series_digest("star", "2,1", 4)
        assert path == os.path.join(str(tmp_path), "star", digest[:2], digest)
        cache.put("star", INDEX, 4, SERIES)
        assert os.path.isfile(path)
        assert not [name for name in os.listdir(os.path.dirname(path)) if name.endswith(".tmp")]

    def test_corrupt_file_is_a_miss(self, tmp_path):
        cache = DiskSeriesCache(str(tmp_path))
        cache.put("zeta", INDEX, 4, SERIES)
        with open(cache.path_for("zeta", INDEX, 4), "w", encoding="utf-8") as f:
            f.write("garbage")
        fresh = DiskSeriesCache(str(tmp_path))
        assert fresh.get("zeta", INDEX, 4) is None
        assert zeta_q(INDEX, 4, fresh) == zeta_q(INDEX, 4, MemorySeriesCache())
        assert DiskSeriesCache(str(tmp_path)).get("zeta", INDEX, 4) is not None

    def test_clear(self, tmp_path):
        cache = DiskSeriesCache(str(tmp_path))
        cache.put("zeta", INDEX, 4, SERIES)
        cache.clear()
        assert cache.get("zeta", INDEX, 4) is None


class TestDefaultCache:
    def test_configure(self, tmp_path):
        try:
            assert isinstance(configure_default_cache(str(tmp_path)), DiskSeriesCache)
            assert isinstance(get_default_cache(), DiskSeriesCache)
            assert isinstance(configure_default_cache(""), MemorySeriesCache)
        finally:
            configure_default_cache("")


class TestBoundedMemory:
    def test_least_recently_used_is_evicted(self):
        cache = MemorySeriesCache(max_entries=2)
        cache.put("zeta", Index.of(2), 4, SERIES)
        cache.put("zeta", Index.of(3), 4, SERIES)
        assert cache.get("zeta", Index.of(2), 4) == SERIES
        cache.put("zeta", Index.of(4), 4, SERIES)
        assert len(cache) == 2
        assert cache.get("zeta", Index.of(3), 4) is None
        assert cache.get("zeta", Index.of(2), 4) == SERIES

    def test_disk_keeps_records_when_memory_is_dropped(self, tmp_path):
        cache = DiskSeriesCache(str(tmp_path))
        cache.put("zeta", INDEX, 4, SERIES)
        cache.clear_memory()
        assert len(cache.memory) == 0
        assert cache.get("zeta", INDEX, 4) == SERIES
