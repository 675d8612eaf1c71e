"""Matroid families shared by several test modules."""

from functools import lru_cache

import networkx as nx

from tropcsm.matroid import contraction, deletion, fano, graphic, non_fano, uniform


def connected_graphs(max_vertices=5):
    """Connected graphs with at least one edge, one per isomorphism class."""
    for G in nx.graph_atlas_g():
        if 1 <= G.number_of_nodes() <= max_vertices and G.number_of_edges() and \
                nx.is_connected(G):
            yield sorted(G.edges())


def base_family():
    out = [uniform(r, n) for n in range(1, 8) for r in range(n + 1)]
    out += [graphic(edges) for edges in connected_graphs()]
    out += [fano(), non_fano()]
    return out


@lru_cache(maxsize=None)
def criterion_suite():
    """Base family plus all single-element deletions and contractions, deduplicated."""
    seen, out = set(), []

    def add(M):
        if M not in seen:
            seen.add(M)
            out.append(M)

    for M in base_family():
        add(M)
        for e in range(M.n):
            add(deletion(M, [e]))
            add(contraction(M, [e]))
    return tuple(out)


K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def k4():
    return graphic(K4_EDGES)


def small_suite():
    """A quick subset for property tests."""
    return [uniform(2, 3), uniform(3, 4), uniform(2, 4), uniform(3, 5), uniform(1, 3),
            uniform(3, 3), k4(), graphic([(0, 1), (1, 2), (2, 0), (2, 3)]), fano()]
