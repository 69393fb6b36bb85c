"""
Enumeration Cache

Enumerations are kept in memory and persisted as line-delimited JSON, one
file per (representation, n). The first line of each file is a header with
a sha256 checksum of the record lines; a file that fails the check is
rebuilt.

Usage:
    from app.core.cache import get_cache

    cache = get_cache()
    records = cache.get("cc", 4, builder)
"""

import hashlib
import logging
import threading
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import orjson
from pydantic import ValidationError

from app.core.config import get_settings
from app.core.errors import CacheIntegrityError
from app.schemas.schemas import CacheEntryHeader

logger = logging.getLogger(__name__)

Builder = Callable[[int], List[Any]]


def _encode_records(records: List[Any]) -> List[bytes]:
    return [orjson.dumps(record, option=orjson.OPT_SORT_KEYS) for record in records]


def checksum(lines: List[bytes]) -> str:
    """sha256 over the record lines joined by newlines"""
    return hashlib.sha256(b"\n".join(lines)).hexdigest()


class EnumerationCache:
    """
    Thread-safe two-level cache (memory, then JSONL files).

    Features:
    - Checksummed files, rebuilt on mismatch
    - Hit/miss/build statistics
    - Can be disabled, in which case every call rebuilds
    """

    def __init__(self, cache_dir: Path, enabled: bool = True):
        self.cache_dir = Path(cache_dir)
        self.enabled = enabled
        self._memory: Dict[Tuple[str, int], List[Any]] = {}
        self._lock = threading.Lock()
        self._stats = {
            "hits": 0,
            "loads": 0,
            "builds": 0,
            "rebuilds": 0,
        }

    def path_for(self, representation: str, n: int) -> Path:
        return self.cache_dir / f"{representation}-n{n}.jsonl"

    def get(self, representation: str, n: int, builder: Builder) -> List[Any]:
        """
        Records for (representation, n), loading or building as needed.

        Args:
            representation: cache key family (cc, tid, trees, cells)
            n: size
            builder: produces JSON-ready records when nothing usable is cached
        """
        key = (representation, n)
        with self._lock:
            if key in self._memory:
                self._stats["hits"] += 1
                return self._memory[key]

        records: Optional[List[Any]] = None
        if self.enabled and self.path_for(representation, n).exists():
            try:
                records = self.load(representation, n)
            except CacheIntegrityError as e:
                logger.warning(f"Cache file for {representation} n={n} rejected: {e}; rebuilding")
                with self._lock:
                    self._stats["rebuilds"] += 1

        if records is None:
            records = self.build(representation, n, builder)

        with self._lock:
            self._memory[key] = records
        return records

    def build(self, representation: str, n: int, builder: Builder) -> List[Any]:
        """Run the builder and persist its output"""
        logger.info(f"Building {representation} enumeration for n={n}")
        records = builder(n)
        with self._lock:
            self._stats["builds"] += 1
        if self.enabled:
            self._write(representation, n, records)
        return records

    def load(self, representation: str, n: int) -> List[Any]:
        """
        Read and verify a cache file.

        Raises:
            CacheIntegrityError: missing file, bad header or checksum mismatch
        """
        path = self.path_for(representation, n)
        try:
            lines = path.read_bytes().splitlines()
        except OSError as e:
            raise CacheIntegrityError(f"Cannot read {path}: {e}") from e
        if not lines:
            raise CacheIntegrityError(f"{path} is empty")

        try:
            header = CacheEntryHeader.model_validate(orjson.loads(lines[0]))
        except (orjson.JSONDecodeError, ValidationError) as e:
            raise CacheIntegrityError(f"{path} has an invalid header") from e

        body = lines[1:]
        if header.representation.value != representation or header.n != n:
            raise CacheIntegrityError(f"{path} holds {header.representation.value} n={header.n}")
        if header.count != len(body) or header.checksum != checksum(body):
            raise CacheIntegrityError(f"{path} failed its checksum")

        try:
            records = [orjson.loads(line) for line in body]
        except orjson.JSONDecodeError as e:
            raise CacheIntegrityError(f"{path} has an unreadable record") from e
        with self._lock:
            self._stats["loads"] += 1
        logger.info(f"Loaded {len(records)} {representation} records for n={n} from cache")
        return records

    def _write(self, representation: str, n: int, records: List[Any]) -> None:
        lines = _encode_records(records)
        header = CacheEntryHeader(
            representation=representation,
            n=n,
            count=len(lines),
            checksum=checksum(lines),
        )
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        path = self.path_for(representation, n)
        payload = b"\n".join([orjson.dumps(header.model_dump(mode="json"))] + lines) + b"\n"
        path.write_bytes(payload)
        logger.debug(f"Wrote {path}")

    def clear(self, representation: Optional[str] = None, n: Optional[int] = None) -> int:
        """
        Drop memory entries and files matching the filters.

        Returns:
            Number of files removed
        """
        with self._lock:
            for key in list(self._memory):
                if (representation is None or key[0] == representation) and (n is None or key[1] == n):
                    del self._memory[key]

        if not self.cache_dir.exists():
            return 0
        pattern = f"{representation or '*'}-n{n if n is not None else '*'}.jsonl"
        removed = 0
        for path in self.cache_dir.glob(pattern):
            path.unlink()
            removed += 1
        return removed

    def stats(self) -> Dict[str, Any]:
        with self._lock:
            return {
                "entries": len(self._memory),
                **self._stats,
            }


_caches: Dict[Tuple[str, bool], EnumerationCache] = {}


def get_cache(cache_dir: Optional[str] = None) -> EnumerationCache:
    """Shared cache per directory (defaults to the configured one)"""
    settings = get_settings()
    directory = str(cache_dir or settings.cache_dir)
    key = (directory, settings.cache_enabled)
    if key not in _caches:
        _caches[key] = EnumerationCache(Path(directory), enabled=settings.cache_enabled)
    return _caches[key]
