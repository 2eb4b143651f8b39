"""Instance file I/O.

Text format (``#`` lines are comments, kept as provenance headers):

    KNAPSACK <n> <capacity>
    <weight> <profit> <multiplicity>   (n lines)

    SUBSETSUM <n> <target>
    <weight> <multiplicity>            (n lines)

Files ending in ``.json`` use an equivalent JSON object instead.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import InstanceError
from .model import Item


@dataclass(frozen=True)
class InstanceFile:
    kind: str  # "knapsack" | "subsetsum"
    items: tuple[Item, ...]  # knapsack only
    pairs: tuple[tuple[int, int], ...]  # subset sum only
    bound: int  # capacity or target
    comments: tuple[str, ...]


def load_instance(path: str | Path) -> InstanceFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc}") from exc
    if path.suffix == ".json":
        return _from_json(text, path)
    return _from_text(text, path)


def save_instance(
    path: str | Path,
    kind: str,
    rows: Sequence[Sequence[int]],
    bound: int,
    comments: Sequence[str] = (),
) -> None:
    """Write an instance; rows are (w, p, u) or (w, u) tuples."""
    path = Path(path)
    if kind not in ("knapsack", "subsetsum"):
        raise InstanceError(f"unknown kind {kind!r}")
    width = 3 if kind == "knapsack" else 2
    for row in rows:
        if len(row) != width:
            raise InstanceError(f"expected {width} fields per row, got {row!r}")
    if path.suffix == ".json":
        obj: dict = {"kind": kind, "comments": list(comments)}
        if kind == "knapsack":
            obj["capacity"] = bound
            obj["items"] = [list(r) for r in rows]
        else:
            obj["target"] = bound
            obj["pairs"] = [list(r) for r in rows]
        path.write_text(json.dumps(obj, indent=2) + "\n")
        return
    lines = [f"# {c}" for c in comments]
    header = "KNAPSACK" if kind == "knapsack" else "SUBSETSUM"
    lines.append(f"{header} {len(rows)} {bound}")
    lines.extend(" ".join(str(v) for v in row) for row in rows)
    path.write_text("\n".join(lines) + "\n")


def _from_text(text: str, path: Path) -> InstanceFile:
    comments = []
    lines = []
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            comments.append(stripped.lstrip("#").strip())
        else:
            lines.append(stripped)
    if not lines:
        raise InstanceError(f"{path}: empty instance file")
    head = lines[0].split()
    if len(head) != 3 or head[0] not in ("KNAPSACK", "SUBSETSUM"):
        raise InstanceError(f"{path}: bad header line {lines[0]!r}")
    try:
        n, bound = int(head[1]), int(head[2])
    except ValueError as exc:
        raise InstanceError(f"{path}: bad header numbers") from exc
    if len(lines) - 1 != n:
        raise InstanceError(
            f"{path}: header declares {n} rows, found {len(lines) - 1}"
        )
    rows = []
    width = 3 if head[0] == "KNAPSACK" else 2
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != width:
            raise InstanceError(f"{path}: bad row {ln!r}")
        try:
            rows.append(tuple(int(v) for v in parts))
        except ValueError as exc:
            raise InstanceError(f"{path}: bad row {ln!r}") from exc
    return _build(head[0].lower(), rows, bound, comments, path)


def _from_json(text: str, path: Path) -> InstanceFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}: invalid JSON: {exc}") from exc
    kind = obj.get("kind")
    if kind == "knapsack":
        rows = obj.get("items", [])
        bound = obj.get("capacity")
    elif kind == "subsetsum":
        rows = obj.get("pairs", [])
        bound = obj.get("target")
    else:
        raise InstanceError(f"{path}: unknown kind {kind!r}")
    if not isinstance(bound, int):
        raise InstanceError(f"{path}: missing or non-integer bound")
    comments = [str(c) for c in obj.get("comments", [])]
    try:
        rows = [tuple(int(v) for v in r) for r in rows]
    except (TypeError, ValueError) as exc:
        raise InstanceError(f"{path}: bad rows") from exc
    return _build(kind, rows, bound, comments, path)


def _build(kind: str, rows, bound: int, comments, path: Path) -> InstanceFile:
    if kind == "knapsack":
        try:
            items = tuple(Item(w, p, u) for w, p, u in rows)
        except (InstanceError, ValueError) as exc:
            raise InstanceError(f"{path}: {exc}") from exc
        return InstanceFile(kind, items, (), bound, tuple(comments))
    pairs = []
    for row in rows:
        if len(row) != 2:
            raise InstanceError(f"{path}: subset-sum rows need 2 fields")
        pairs.append((row[0], row[1]))
    return InstanceFile(kind, (), tuple(pairs), bound, tuple(comments))
