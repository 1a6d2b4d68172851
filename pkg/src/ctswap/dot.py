"""Graphviz DOT export of instances and destination graphs."""

from __future__ import annotations

from .complete import CycleCover, DestinationGraph
from .core import Instance

_PALETTE = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "teal")


def _node_lines(f0, ft) -> list[str]:
    return [f'  {v} [label="{v}: {a}/{b}"];' for v, (a, b) in enumerate(zip(f0, ft))]


def instance_dot(inst: Instance) -> str:
    lines = ["graph instance {"] + _node_lines(inst.f0.colors, inst.ft.colors)
    lines += [f"  {u} -- {v};" for u, v in inst.graph.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def destination_dot(d: DestinationGraph, cover: CycleCover | None = None) -> str:
    """All arcs of ``d``; arcs of ``cover`` carry a ``cycle`` attribute and a color."""
    on_cycle: dict[tuple[int, int], int] = {}
    if cover is not None:
        for i, cyc in enumerate(cover.cycles):
            for j, u in enumerate(cyc):
                on_cycle[(u, cyc[(j + 1) % len(cyc)])] = i
    lines = ["digraph destination {"] + _node_lines(d.f0, d.ft)
    for u, v in d.arcs:
        i = on_cycle.get((u, v))
        if i is None:
            lines.append(f"  {u} -> {v} [style=dashed, color=gray];")
        else:
            color = _PALETTE[i % len(_PALETTE)]
            lines.append(f'  {u} -> {v} [cycle={i}, color="{color}", penwidth=2];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot(text: str, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
