"""Instance files and generators.

Text format::

    # comment
    6 2            <- optional header "n k"
    1 2
    1 3 / 2 3      <- several faces on one line, separated by "/"

The header may also be written ``n=6 k=2`` (or just ``n=6``).  A bare first
line ``a b`` counts as a header only when ``a >= b`` and every other face has
exactly ``b`` vertices, none larger than ``a``; faces are conventionally
written in ascending order, so this never clashes with a real face.

JSON format: ``{"n": 6, "faces": [[1, 2], [1, 3]]}`` (``n`` optional).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .hypergraphs import SimplicialComplex, UniformHypergraph


class InstanceError(ValueError):
    """Malformed instance file."""


@dataclass
class Instance:
    faces: list[tuple[int, ...]]
    n: int | None = None
    name: str = ""

    @property
    def n_vertices(self) -> int:
        top = max((max(f) for f in self.faces if f), default=0)
        return self.n if self.n is not None else top

    def is_uniform(self) -> bool:
        return len({len(f) for f in self.faces}) == 1

    def hypergraph(self) -> UniformHypergraph:
        if not self.faces:
            raise InstanceError("instance has no faces")
        if not self.is_uniform():
            raise InstanceError("faces have different sizes; not a uniform hypergraph")
        try:
            return UniformHypergraph(self.faces, n=self.n_vertices)
        except ValueError as e:
            raise InstanceError(str(e)) from None

    def complex(self) -> SimplicialComplex:
        if not self.faces:
            raise InstanceError("instance has no faces")
        try:
            return SimplicialComplex(self.faces, n=self.n_vertices)
        except ValueError as e:
            raise InstanceError(str(e)) from None


_KV = re.compile(r"^\s*n\s*=\s*(\d+)(?:\s+k\s*=\s*(\d+))?\s*$")


def _ints(chunk: str, lineno: int) -> tuple[int, ...]:
    try:
        vals = tuple(int(t) for t in chunk.split())
    except ValueError:
        raise InstanceError(f"line {lineno}: expected integers, got {chunk.strip()!r}") from None
    if any(v < 1 for v in vals):
        raise InstanceError(f"line {lineno}: vertices must be positive")
    return vals


def parse_text(text: str, name: str = "") -> Instance:
    n = k = None
    rows: list[tuple[int, int, tuple[int, ...]]] = []  # (lineno, line index, face)
    first_data = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _KV.match(line)
        if m and first_data:
            n = int(m.group(1))
            k = int(m.group(2)) if m.group(2) else None
            first_data = False
            continue
        for chunk in line.split("/"):
            if chunk.strip():
                rows.append((lineno, len(rows), _ints(chunk, lineno)))
        first_data = False
    faces = [f for _, _, f in rows]
    if n is None and len(faces) >= 2 and len(faces[0]) == 2 and rows[0][0] != rows[1][0]:
        a, b = faces[0]
        rest = faces[1:]
        if a >= b and all(len(f) == b and max(f) <= a for f in rest):
            n, k, faces = a, b, rest
    if not faces:
        raise InstanceError("no faces found")
    if k is not None and any(len(f) != k for f in faces):
        raise InstanceError(f"header says k={k} but some faces have a different size")
    if n is not None and any(max(f) > n for f in faces):
        raise InstanceError(f"vertex exceeds n={n}")
    return Instance([tuple(sorted(f)) for f in faces], n, name)


def parse_json(text: str, name: str = "") -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceError(f"invalid JSON: {e}") from None
    if not isinstance(data, dict) or "faces" not in data:
        raise InstanceError('JSON instance must be an object with a "faces" list')
    faces = data["faces"]
    if not isinstance(faces, list) or not faces:
        raise InstanceError("no faces found")
    out = []
    for f in faces:
        if not isinstance(f, list) or not all(isinstance(v, int) and v >= 1 for v in f):
            raise InstanceError(f"bad face {f!r}")
        out.append(tuple(sorted(f)))
    n = data.get("n")
    if n is not None and (not isinstance(n, int) or any(max(f) > n for f in out if f)):
        raise InstanceError(f"bad vertex count n={n!r}")
    return Instance(out, n, name)


def parse_instance(text: str, fmt: str = "auto", name: str = "") -> Instance:
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "text"
    if fmt == "json":
        return parse_json(text, name)
    if fmt == "text":
        return parse_text(text, name)
    raise InstanceError(f"unknown format {fmt!r}")


def read_instance(path: str | Path, fmt: str = "auto") -> Instance:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as e:
        raise InstanceError(f"cannot read {path}: {e.strerror}") from None
    if fmt == "auto" and p.suffix == ".json":
        fmt = "json"
    return parse_instance(text, fmt, name=p.stem)


def format_text(faces: Iterable[Iterable[int]], n: int | None = None, header: bool = True) -> str:
    faces = [tuple(f) for f in faces]
    lines = []
    if header and n is not None:
        sizes = {len(f) for f in faces}
        lines.append(f"{n} {sizes.pop()}" if len(sizes) == 1 else f"n={n}")
    lines += [" ".join(map(str, f)) for f in faces]
    return "\n".join(lines) + "\n"


def format_json(faces: Iterable[Iterable[int]], n: int | None = None, **extra) -> str:
    data: dict = {}
    if n is not None:
        data["n"] = n
    data["faces"] = [list(f) for f in faces]
    data.update(extra)
    return json.dumps(data, sort_keys=False) + "\n"


def gen_bipartite(m: int, n: int) -> UniformHypergraph:
    """Edges of K_{m,n}, sides ``{1..m}`` and ``{m+1..m+n}``."""
    if m < 1 or n < 1:
        raise ValueError("both sides need at least one vertex")
    return UniformHypergraph([(i, j) for i in range(1, m + 1) for j in range(m + 1, m + n + 1)], n=m + n)
