"""Independent oracles, written before the main build and kept free of
package imports: plain BFS over coordinate tuples and reduced letter
strings, brute-force subgroup enumeration, and networkx component counts.
Tests compare package output against these, never the other way around.
"""

from __future__ import annotations

import itertools

import networkx as nx

# -- free words as tuples of (gen, sign), reduced independently ------------


def reduce_pairs(seq):
    out = []
    for g, s in seq:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


def mul_pairs(a, b):
    return reduce_pairs(list(a) + list(b))


def inv_pairs(a):
    return tuple((g, -s) for g, s in reversed(a))


def brute_subgroup(gens, depth):
    """All elements expressible as products of at most ``depth`` factors
    drawn from the generators and their inverses (free-group convention)."""
    gens = [reduce_pairs(g) for g in gens]
    factors = gens + [inv_pairs(g) for g in gens]
    seen = {(): 0}
    frontier = [()]
    for _ in range(depth):
        nxt = []
        for w in frontier:
            for f in factors:
                p = mul_pairs(w, f)
                if p not in seen:
                    seen[p] = 1
                    nxt.append(p)
        frontier = nxt
    return set(seen)


def brute_abelian_subgroup(vecs, depth):
    """Same, for exponent vectors (all integer combinations with
    |coefficient| sum <= depth)."""
    dim = len(vecs[0]) if vecs else 0
    out = set()
    ranges = [range(-depth, depth + 1)] * len(vecs)
    for coeffs in itertools.product(*ranges):
        if sum(abs(c) for c in coeffs) > depth:
            continue
        v = tuple(sum(c * vec[i] for c, vec in zip(coeffs, vecs))
                  for i in range(dim))
        out.add(v)
    return out


# -- ball enumeration by plain BFS ------------------------------------------


def free_ball(rank, radius):
    """Reduced-word BFS in the free group; returns (dist dict, edge set).

    Edges are (u, v, gen) with v = u * gen, collected for every pair inside
    the ball (frontier-to-frontier included).
    """
    letters = [(g, s) for g in range(rank) for s in (1, -1)]
    dist = {(): 0}
    order = [()]
    qi = 0
    while qi < len(order):
        w = order[qi]
        qi += 1
        if dist[w] >= radius:
            continue
        for g, s in letters:
            w2 = mul_pairs(w, ((g, s),))
            if w2 not in dist:
                dist[w2] = dist[w] + 1
                order.append(w2)
    edges = set()
    for w in dist:
        for g in range(rank):
            w2 = mul_pairs(w, ((g, 1),))
            if w2 in dist:
                edges.add((w, w2, g))
    return dist, edges


def grid_ball(dim, radius):
    """L1 ball in Z^dim; returns (dist dict, edge set) with unit steps."""
    dist = {}
    for v in itertools.product(range(-radius, radius + 1), repeat=dim):
        d = sum(abs(c) for c in v)
        if d <= radius:
            dist[v] = d
    edges = set()
    for v in dist:
        for g in range(dim):
            w = v[:g] + (v[g] + 1,) + v[g + 1:]
            if w in dist:
                edges.add((v, w, g))
    return dist, edges


def component_count(vertices, edges):
    """networkx connected-component count over explicit vertex/edge sets."""
    g = nx.Graph()
    g.add_nodes_from(vertices)
    g.add_edges_from((u, v) for u, v, _ in edges)
    return nx.number_connected_components(g)


def horizon_components(dist, edges, radius, removed):
    """Components of the complement of ``removed``, split by whether they
    touch the distance-``radius`` sphere; returns (touching, trapped)."""
    keep = {v for v in dist if v not in removed}
    g = nx.Graph()
    g.add_nodes_from(keep)
    g.add_edges_from((u, v) for u, v, _ in edges if u in keep and v in keep)
    touching = trapped = 0
    for comp in nx.connected_components(g):
        if any(dist[v] == radius for v in comp):
            touching += 1
        else:
            trapped += 1
    return touching, trapped


def grid_end_counts(dim, n_max, margin):
    """Classical-ends oracle for Z^dim: per-level horizon component counts
    of ball(n) complements inside ball(n_max + margin)."""
    radius = n_max + margin
    dist, edges = grid_ball(dim, radius)
    counts = []
    for n in range(n_max + 1):
        removed = {v for v, d in dist.items() if d <= n}
        touching, _ = horizon_components(dist, edges, radius, removed)
        counts.append(touching)
    return counts


def free_end_counts(rank, n_max, margin):
    """Same for the free group of the given rank."""
    radius = n_max + margin
    dist, edges = free_ball(rank, radius)
    counts = []
    for n in range(n_max + 1):
        removed = {v for v, d in dist.items() if d <= n}
        touching, _ = horizon_components(dist, edges, radius, removed)
        counts.append(touching)
    return counts
