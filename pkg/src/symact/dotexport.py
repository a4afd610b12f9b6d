"""Byte-stable DOT renderings of orbit categories and functional graphs."""

from __future__ import annotations

from .dynamics import FunctionalGraph, limit_cycles
from .orbit import OrbitCategory

_CYCLE_COLORS = (
    "lightblue",
    "palegreen",
    "lightsalmon",
    "gold",
    "plum",
    "khaki",
    "lightpink",
    "aquamarine",
)


def _brace(values: tuple[int, ...]) -> str:
    return "{" + ",".join(str(v) for v in values) + "}"


def orbit_category_dot(cat: OrbitCategory) -> str:
    """Objects as boxes, labeled edges counting morphisms; empty homs omitted."""
    lines = ["digraph orbit_category {", "  rankdir=LR;", "  node [shape=box];"]
    for i, obj in enumerate(cat.objects):
        label = f"N={_brace(obj.submonoid.elements)} H={_brace(obj.subgroup)}"
        lines.append(f'  o{i} [label="{label}"];')
    for i in range(len(cat.objects)):
        for j in range(len(cat.objects)):
            count = len(cat.homs[i][j])
            if count:
                lines.append(f'  o{i} -> o{j} [label="{count}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def functional_graph_dot(fg: FunctionalGraph) -> str:
    """States and steps; cycle states are filled, one color per cycle."""
    cycles, _ = limit_cycles(fg)
    fill: dict[int, str] = {}
    for index, cycle in enumerate(cycles):
        color = _CYCLE_COLORS[index % len(_CYCLE_COLORS)]
        for state in cycle:
            fill[state] = color
    lines = ["digraph functional_graph {", "  node [shape=circle];"]
    for state in range(fg.size):
        if state in fill:
            lines.append(f'  s{state} [style=filled fillcolor={fill[state]}];')
        else:
            lines.append(f"  s{state};")
    for state in range(fg.size):
        lines.append(f"  s{state} -> s{fg.step[state]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
