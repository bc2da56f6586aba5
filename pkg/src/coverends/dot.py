"""DOT export of balls and subgraphs with component coloring.

Vertex names are the canonical key words, so exports are stable across
runs; vertices are filled by connected component (palette cycling).
"""

from __future__ import annotations

from .graphs import Ball, Subgraph, as_subgraph, components

# colorbrewer Set3-ish palette, cycled by component index
PALETTE = (
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
)


def _quote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def dot_graph(g: Ball | Subgraph, title: str = "ball") -> str:
    """Render as an undirected DOT graph, colored by component."""
    sub = as_subgraph(g)
    ball = sub.ball
    comps = components(sub)
    lines = [f"graph {title} {{",
             "  node [shape=ellipse, style=filled];"]
    for v in sub.vertex_ids().tolist():
        name = ball.model.format(ball.keys[v])
        ci = comps.index_of_vertex(v)
        color = PALETTE[ci % len(PALETTE)]
        mark = ", peripheries=2" if comps.comps[ci].horizon else ""
        lines.append(
            f"  {_quote(name)} [fillcolor={_quote(color)}, "
            f"tooltip=\"dist={int(ball.dist[v])}\"{mark}];")
    for e in sub.edge_ids().tolist():
        u, v, gidx = int(ball.us[e]), int(ball.vs[e]), int(ball.gs[e])
        nu = ball.model.format(ball.keys[u])
        nv = ball.model.format(ball.keys[v])
        label = ball.model.names[gidx]
        lines.append(f"  {_quote(nu)} -- {_quote(nv)} [label={_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
