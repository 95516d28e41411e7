"""Series cache on disk, one content addressed file per series.

A record is a single line ``index;N;json(QSeries)``. Reads are fail-soft:
a missing, unreadable or corrupt record is a miss and gets overwritten by
the recomputed value. Writes go through a temporary file and an atomic
rename, so concurrent readers never see a partial record.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile

from pydantic import ValidationError

from .base import BaseSeriesCache
from .memory import MemorySeriesCache
from ..algebra.words import Index
from ..exceptions import CacheError
from ..series.qseries import QSeries
from ..utils.key_gen import series_digest

logger = logging.getLogger(__name__)


def format_record(index: Index, order: int, series: QSeries) -> str:
    payload = json.dumps(series.to_json(), separators=(",", ":"))
    return f"{index};{order};{payload}\n"


def parse_record(text: str, index: Index, order: int) -> QSeries:
    try:
        stored_index, stored_order, payload = text.rstrip("\n").split(";", 2)
        if stored_index != str(index) or int(stored_order) != order:
            raise CacheError(
                f"record holds ({stored_index}) at N={stored_order}, "
                f"expected ({index}) at N={order}"
            )
        series = QSeries.from_json(json.loads(payload))
    except (ValueError, ValidationError) as error:
        raise CacheError(f"corrupt series record: {error}") from error
    if series.order != order:
        raise CacheError(f"record order {series.order} does not match {order}")
    return series


class DiskSeriesCache(BaseSeriesCache):
    def __init__(self, root: str):
        self.root = root
        self.memory = MemorySeriesCache()
        os.makedirs(root, exist_ok=True)

    def path_for(self, kind: str, index: Index, order: int) -> str:
        digest = series_digest(kind, str(index), order)
        return os.path.join(self.root, kind, digest[:2], digest)

    def get(self, kind: str, index: Index, order: int) -> QSeries | None:
        series = self.memory.get(kind, index, order)
        if series is not None:
            return series
        path = self.path_for(kind, index, order)
        try:
            with open(path, encoding="utf-8") as f:
                text = f.read()
        except FileNotFoundError:
            return None
        except OSError as e:
            logger.warning("could not read cached series at %s: %s", path, e)
            return None
        try:
            series = parse_record(text, index, order)
        except CacheError as e:
            logger.warning(
                "discarding cached %s(%s) at N=%i in %s: %s",
                kind,
                index,
                order,
                path,
                e.details,
            )
            return None
        self.memory.put(kind, index, order, series)
        return series

    def put(self, kind: str, index: Index, order: int, series: QSeries) -> None:
        self.memory.put(kind, index, order, series)
        path = self.path_for(kind, index, order)
        directory = os.path.dirname(path)
        try:
            os.makedirs(directory, exist_ok=True)
            fd, tmp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as f:
                    f.write(format_record(index, order, series))
                os.replace(tmp_path, path)
            except BaseException:
                os.unlink(tmp_path)
                raise
        except OSError as e:
            logger.warning("could not persist series to %s: %s", path, e)

    def clear_memory(self) -> None:
        self.memory.clear()

    def clear(self) -> None:
        self.memory.clear()
        for kind in os.listdir(self.root):
            kind_dir = os.path.join(self.root, kind)
            if not os.path.isdir(kind_dir):
                continue
            for dirpath, _, filenames in os.walk(kind_dir):
                for name in filenames:
                    os.unlink(os.path.join(dirpath, name))
