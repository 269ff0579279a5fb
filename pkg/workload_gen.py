"""
Seeded workload generators

    gnm_sweep         build G(n, m), then sweep all nodes
    churn             interleaved inserts, deletes and queries
    amortized_stress  fresh graph from one of FAMILIES, then a query sequence
    vstar_stress      funnel chains that park processed counts just under the
                      recursion threshold before the queries that tip them

Same kind, params and seed always give the same workload.
"""

import math

import networkx as nx
import numpy as np

from errors import DomainError
from workload import Delete, Insert, Query, SweepAll, Workload

FAMILIES = (
    'path', 'cycle', 'star', 'grid', 'ladder', 'wheel',
    'complete_bipartite', 'barabasi_albert', 'random_regular', 'gnm',
)


def _rng(seed):
    return np.random.Generator(np.random.Philox(seed))


def _numbered(n, events):
    # line 1 is the header
    return Workload(n=n, events=[(i + 2, e) for i, e in enumerate(events)])


def _require(condition, message):
    if not condition:
        raise DomainError(message)


def _edge_inserts(graph, rng):
    edges = sorted((min(u, v), max(u, v)) for u, v in graph.edges())
    return [Insert(*edges[i]) for i in rng.permutation(len(edges))]


def gnm_sweep(n, m, seed=0):
    _require(n >= 1, f"n must be >= 1, got {n}")
    _require(0 <= m <= n * (n - 1) // 2, f"m={m} impossible for n={n}")
    graph = nx.gnm_random_graph(n, m, seed=seed)
    return _numbered(n, _edge_inserts(graph, _rng(seed)) + [SweepAll()])


def churn(n, ops, seed=0, m_target=None, query_frac=0.3, final_sweep=True):
    """Random edge churn around m_target edges (default 2n) with queries mixed in"""
    _require(n >= 2, f"n must be >= 2, got {n}")
    _require(ops >= 0, f"ops must be >= 0, got {ops}")
    _require(0 <= query_frac < 1, f"query_frac must be in [0, 1), got {query_frac}")
    max_edges = n * (n - 1) // 2
    m_target = min(2 * n if m_target is None else m_target, max_edges)
    rng = _rng(seed)

    edges = []
    index = {}
    events = []
    for _ in range(ops):
        r = rng.random()
        if r < query_frac:
            events.append(Query(int(rng.integers(n))))
            continue

        grow = len(edges) < m_target if r < query_frac + (1 - query_frac) / 2 else not edges
        if (grow or not edges) and len(edges) < max_edges:
            while True:
                u, v = (int(x) for x in rng.integers(n, size=2))
                key = (min(u, v), max(u, v))
                if u != v and key not in index:
                    break
            index[key] = len(edges)
            edges.append(key)
            events.append(Insert(u, v))
        else:
            pos = int(rng.integers(len(edges)))
            key = edges[pos]
            last = edges.pop()
            del index[key]
            if pos < len(edges):
                edges[pos] = last
                index[last] = pos
            events.append(Delete(*key))

    if final_sweep:
        events.append(SweepAll())
    return _numbered(n, events)


def family_graph(family, n, seed=0, bipartite_side=4):
    """A graph from one of FAMILIES with node ids in [0, n)"""
    if family == 'path':
        graph = nx.path_graph(n)
    elif family == 'cycle':
        graph = nx.cycle_graph(n)
    elif family == 'star':
        graph = nx.star_graph(n - 1)
    elif family == 'grid':
        rows = max(1, math.isqrt(n))
        graph = nx.grid_2d_graph(rows, n // rows)
    elif family == 'ladder':
        graph = nx.ladder_graph(n // 2)
    elif family == 'wheel':
        graph = nx.wheel_graph(n)
    elif family == 'complete_bipartite':
        graph = nx.complete_bipartite_graph(min(bipartite_side, n - 1), n - min(bipartite_side, n - 1))
    elif family == 'barabasi_albert':
        graph = nx.barabasi_albert_graph(n, 3, seed=seed)
    elif family == 'random_regular':
        graph = nx.random_regular_graph(4, n, seed=seed)
    elif family == 'gnm':
        graph = nx.gnm_random_graph(n, 3 * n, seed=seed)
    else:
        raise DomainError(f"Unknown graph family '{family}' (choose from {', '.join(FAMILIES)})")
    return nx.convert_node_labels_to_integers(graph, ordering='sorted')


def amortized_stress(n, family='path', seed=0, order='random', queries=None):
    """Build a family graph, then query nodes one by one in a fixed sequence"""
    _require(n >= 6, f"n must be >= 6, got {n}")
    _require(order in ('random', 'ascending', 'descending'), f"Unknown query order '{order}'")
    rng = _rng(seed)
    graph = family_graph(family, n, seed=seed)

    if order == 'random':
        sequence = [int(v) for v in rng.permutation(n)]
    elif order == 'ascending':
        sequence = list(range(n))
    else:
        sequence = list(range(n - 1, -1, -1))
    if queries is not None:
        sequence = sequence[:queries]

    return _numbered(n, _edge_inserts(graph, rng) + [Query(v) for v in sequence])


def vstar_stress(d=2, fan_in=None, funnels=8, chains=1, n=None, seed=0, sweep=True):
    """Funnel chains aimed at the recursion threshold 6d.

    Each chain is centers c_0 -> c_1 -> ... -> c_{funnels-1}. Every center
    has fan_in leaf tails, and c_0 one extra trigger tail. Tails get the
    lowest ids so both orientation strategies point them at their center.
    Querying the ordinary tails leaves every center at fan_in processed
    in-arcs; with fan_in = 6d - 1 the trigger query then tips the whole
    chain under the deterministic policy. For d > 2 a (d+1)-clique is added
    so a static orientation reports cap d.

    With n given, as many chains as fit are laid out and the rest of the
    nodes stay isolated.
    """
    _require(d >= 2, f"d must be >= 2, got {d}")
    fan_in = 6 * d - 1 if fan_in is None else fan_in
    _require(fan_in >= 1, f"fan_in must be >= 1, got {fan_in}")
    _require(funnels >= 1, f"funnels must be >= 1, got {funnels}")
    clique = d + 1 if d > 2 else 0
    per_chain = funnels * (fan_in + 1) + 1
    if n is not None:
        chains = (n - clique) // per_chain
        _require(chains >= 1, f"n={n} too small for one chain of {per_chain} nodes")
    _require(chains >= 1, f"chains must be >= 1, got {chains}")
    total = chains * per_chain + clique
    n = total if n is None else n
    rng = _rng(seed)

    tails_per_chain = funnels * fan_in
    tail_base = 0
    trigger_base = chains * tails_per_chain
    center_base = trigger_base + chains
    clique_base = center_base + chains * funnels

    inserts = []
    ordinary_tails = []
    for c in range(chains):
        centers = [center_base + c * funnels + j for j in range(funnels)]
        inserts.extend(Insert(centers[j], centers[j + 1]) for j in range(funnels - 1))
        for j, center in enumerate(centers):
            for t in range(fan_in):
                tail = tail_base + c * tails_per_chain + j * fan_in + t
                ordinary_tails.append(tail)
                inserts.append(Insert(tail, center))
        inserts.append(Insert(trigger_base + c, centers[0]))
    for a in range(clique):
        for b in range(a + 1, clique):
            inserts.append(Insert(clique_base + a, clique_base + b))

    queries = [Query(ordinary_tails[i]) for i in rng.permutation(len(ordinary_tails))]
    queries.extend(Query(trigger_base + c) for c in range(chains))
    events = inserts + queries + ([SweepAll()] if sweep else [])
    return _numbered(n, events)


GENERATORS = {
    'gnm_sweep': gnm_sweep,
    'churn': churn,
    'amortized_stress': amortized_stress,
    'vstar_stress': vstar_stress,
}


def generate(kind, params=None, seed=0):
    """Build a workload of the given kind; params are the generator's keyword arguments"""
    generator = GENERATORS.get(kind)
    if generator is None:
        raise DomainError(f"Unknown workload kind '{kind}' (choose from {', '.join(GENERATORS)})")
    try:
        return generator(seed=seed, **(params or {}))
    except TypeError as e:
        raise DomainError(f"Bad parameters for {kind}: {e}")
