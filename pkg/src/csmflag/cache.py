"""On-disk cache for restriction polynomials.

Restrictions are the expensive primitive and get reused across checks and
runs.  Files are keyed by a content hash of (algorithm version, shape, I, J)
and hold the JSON polynomial form; writes go through a temp file and an
atomic rename so concurrent workers never see partial files.
"""

import hashlib
import logging
import os
import tempfile

from .polynomial import Polynomial, poly_from_json, poly_to_json

# bump when the meaning of a cached value changes
ALGORITHM_VERSION = "csmflag-restriction-1"

log = logging.getLogger(__name__)


class RestrictionCache:
    def __init__(self, directory):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    def _path(self, I, J):
        key = f"{ALGORITHM_VERSION}|{I.shape}|{I}|{J}"
        digest = hashlib.sha256(key.encode()).hexdigest()[:32]
        return os.path.join(self.directory, f"restr-{digest}.json")

    def get(self, I, J):
        path = self._path(I, J)
        try:
            with open(path, encoding="utf-8") as fh:
                return poly_from_json(fh.read())
        except FileNotFoundError:
            return None
        except (OSError, ValueError) as exc:
            # unreadable entry: report and recompute in memory
            log.warning("dropping unreadable cache entry %s: %s", path, exc)
            return None

    def put(self, I, J, poly: Polynomial):
        path = self._path(I, J)
        try:
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(poly_to_json(poly))
            os.replace(tmp, path)
        except OSError as exc:
            log.warning("cache write failed for %s: %s", path, exc)
