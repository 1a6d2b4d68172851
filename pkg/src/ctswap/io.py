"""JSON instance, sequence and certificate files."""

from __future__ import annotations

import json
import os
from typing import Any

from .core import Instance, InvalidInstanceError, SwapSequence, normalize_sequence


def _require_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInstanceError(f"{where}: expected an integer, got {value!r}")
    return value


def instance_from_dict(data: dict, surjective: bool = True) -> Instance:
    """Validate a decoded instance document and build an :class:`Instance`.

    Error messages carry the offending field path, e.g. ``f0[3]``.
    """
    if not isinstance(data, dict):
        raise InvalidInstanceError("top level: expected a JSON object")
    for key in ("colors", "vertices", "edges", "f0", "ft"):
        if key not in data:
            raise InvalidInstanceError(f"{key}: missing field")
    c = _require_int(data["colors"], "colors")
    n = _require_int(data["vertices"], "vertices")
    if c < 1:
        raise InvalidInstanceError("colors: must be at least 1")
    if n < 0:
        raise InvalidInstanceError("vertices: must be nonnegative")

    edges = data["edges"]
    if not isinstance(edges, list):
        raise InvalidInstanceError("edges: expected a list")
    for i, e in enumerate(edges):
        if not isinstance(e, list) or len(e) != 2:
            raise InvalidInstanceError(f"edges[{i}]: expected [u, v]")
        for j, x in enumerate(e):
            _require_int(x, f"edges[{i}][{j}]")

    for name in ("f0", "ft"):
        arr = data[name]
        if not isinstance(arr, list):
            raise InvalidInstanceError(f"{name}: expected a list")
        if len(arr) != n:
            raise InvalidInstanceError(f"{name}: length {len(arr)} != vertices {n}")
        for v, x in enumerate(arr):
            _require_int(x, f"{name}[{v}]")
            if not 1 <= x <= c:
                raise InvalidInstanceError(f"{name}[{v}]: color {x} outside 1..{c}")

    budget = data.get("budget")
    if budget is not None:
        _require_int(budget, "budget")
        if budget < 0:
            raise InvalidInstanceError("budget: must be nonnegative")

    return Instance.build(n, edges, data["f0"], data["ft"], c=c, budget=budget,
                          surjective=surjective)


def instance_to_dict(inst: Instance) -> dict:
    return {
        "colors": inst.c,
        "vertices": inst.n,
        "edges": [list(e) for e in inst.graph.edges],
        "f0": list(inst.f0.colors),
        "ft": list(inst.ft.colors),
        "budget": inst.budget,
    }


def load_instance(path: str | os.PathLike, surjective: bool = True) -> Instance:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidInstanceError(f"malformed JSON: {exc}") from None
    return instance_from_dict(data, surjective=surjective)


def save_instance(inst: Instance, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(instance_to_dict(inst), fh)
        fh.write("\n")


def sequence_from_dict(data: dict) -> SwapSequence:
    if not isinstance(data, dict) or not isinstance(data.get("swaps"), list):
        raise InvalidInstanceError("swaps: expected a list of [u, v] pairs")
    for i, e in enumerate(data["swaps"]):
        if not isinstance(e, list) or len(e) != 2:
            raise InvalidInstanceError(f"swaps[{i}]: expected [u, v]")
        for j, x in enumerate(e):
            _require_int(x, f"swaps[{i}][{j}]")
    return normalize_sequence(data["swaps"])


def load_sequence(path: str | os.PathLike) -> SwapSequence:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidInstanceError(f"malformed JSON: {exc}") from None
    return sequence_from_dict(data)


def sequence_to_dict(swaps) -> dict:
    return {"swaps": [list(e) for e in swaps]}
