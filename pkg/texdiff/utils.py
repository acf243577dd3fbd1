"""General utility functions"""

import hashlib
import os
import tempfile
from collections import defaultdict
from pathlib import Path
from typing import Callable, Dict, Hashable, Iterable, List, TypeVar

import simplejson as json

K = TypeVar("K", bound=Hashable)
V = TypeVar("V")


def group_by(elements: Iterable[V], key: Callable[[V], K]) -> Dict[K, List[V]]:
    res = defaultdict(list)
    for e in elements:
        res[key(e)].append(e)

    return res


def digest_json(obj: object) -> str:
    """sha256 of the canonical json form of obj, key order does not matter"""
    text = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def write_atomically(path: Path, contents: bytes) -> None:
    """Write to a temp file in the same folder then rename it over path, so
    concurrent readers never see a partially written file"""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, temp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(contents)
        os.replace(temp_name, path)
    except BaseException:
        Path(temp_name).unlink(missing_ok=True)
        raise
