"""
Brute-force validators for tests and replay checks

Everything here is written from the definitions, without calling into the
modules it checks. Exhaustive checks are limited to desk scale.
"""

import math
from collections import Counter
from fractions import Fraction

import networkx as nx

from errors import DomainError, SizeLimit

BRUTE_FORCE_LIMIT = 12
AP_CHECK_LIMIT = 200


def verify_proper(edges, colors):
    """Edges whose endpoints are both colored with the same color.

    Args:
        edges: Iterable of (u, v) pairs
        colors: Mapping node -> color, for the colored nodes only

    Returns:
        list: conflicting (u, v) pairs; empty means proper
    """
    conflicts = []
    for u, v in edges:
        cu = colors.get(u)
        if cu is not None and cu == colors.get(v):
            conflicts.append((u, v))
    return conflicts


def _bitmask_adjacency(edges, nodes):
    nodes = sorted(set(nodes) | {x for e in edges for x in e})
    if len(nodes) > BRUTE_FORCE_LIMIT:
        raise SizeLimit(f"{len(nodes)} nodes exceeds brute-force limit of {BRUTE_FORCE_LIMIT}")
    index = {v: i for i, v in enumerate(nodes)}
    adj = [0] * len(nodes)
    for u, v in edges:
        if u == v:
            continue
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]
    return adj


def _members(mask, size):
    return [i for i in range(size) if mask >> i & 1]


def brute_degeneracy(edges, nodes=()):
    """Max over all non-empty node subsets of the minimum induced degree"""
    adj = _bitmask_adjacency(edges, nodes)
    size = len(adj)
    best = 0
    for mask in range(1, 1 << size):
        low = min((adj[i] & mask).bit_count() for i in _members(mask, size))
        best = max(best, low)
    return best


def nash_williams_lb(edges, nodes=()):
    """Arboricity as max over subsets S (|S| >= 2) of ceil(|E[S]| / (|S| - 1))"""
    adj = _bitmask_adjacency(edges, nodes)
    size = len(adj)
    best = 0
    for mask in range(1, 1 << size):
        members = _members(mask, size)
        if len(members) < 2:
            continue
        inner = sum((adj[i] & mask).bit_count() for i in members) // 2
        best = max(best, -(-inner // (len(members) - 1)))
    return best


def core_degeneracy(n, edges):
    """Exact degeneracy from networkx's k-core decomposition"""
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edges)
    return max(nx.core_number(graph).values(), default=0)


def trigger_pmf_analytic(d, threshold_mult=6):
    """P(first recursion happens at processed arc j), j = 1..t, t = ceil(threshold_mult * d).

    Evaluated as the plain product of tail probabilities times one head
    probability; no telescoping is assumed.
    """
    if d < 2:
        raise DomainError(f"d must be >= 2, got {d}")
    t = math.ceil(Fraction(threshold_mult) * d)
    pmf = []
    survive = Fraction(1)
    for j in range(1, t + 1):
        heads = Fraction(1, t + 1 - j)
        pmf.append(survive * heads)
        survive *= 1 - heads
    return pmf


def vstar_ceiling(n):
    """Certificate-size ceiling ceil(100 * log2 n) on a single query's V*"""
    return math.ceil(100 * math.log2(max(n, 2)))


def reconstruct_ap_invariant(state, graph):
    """Processed arcs are exactly the out-arcs of colored nodes.

    Rebuilds the expected set from the colored nodes and compares it with
    the per-node processed lists and the processed-arc total. Call between
    queries, when V* is empty.
    """
    if graph.n > AP_CHECK_LIMIT:
        raise SizeLimit(f"A^p reconstruction limited to {AP_CHECK_LIMIT} nodes, got {graph.n}")
    if state.epoch != graph.epoch:
        return True

    colored = {v for v in range(graph.n) if state.color_of(v) is not None}
    if state.arcs_processed != sum(graph.outdegree(v) for v in colored):
        return False

    for w in range(graph.n):
        if w in colored:
            continue
        expected = sorted(t for t in graph.in_tails(w) if t in colored)
        if sorted(state.processed_tails(w)) != expected:
            return False
    return True


def verify_recursion_tree(report, vstar):
    """Problems with the trigger arcs of one query; empty means they form
    an out-tree rooted at the queried node spanning V*."""
    problems = []
    if report.vstar_size == 0:
        if report.trigger_arcs:
            problems.append("trigger arcs recorded for an already colored node")
        return problems

    members = {v: i for i, v in enumerate(vstar)}
    if vstar[0] != report.node:
        problems.append(f"V* does not start at the queried node {report.node}")
    if len(report.trigger_arcs) != len(vstar) - 1:
        problems.append(f"{len(report.trigger_arcs)} trigger arcs for |V*| = {len(vstar)}")

    heads = Counter(head for _, head in report.trigger_arcs)
    for tail, head in report.trigger_arcs:
        if tail not in members or head not in members:
            problems.append(f"trigger arc ({tail}, {head}) leaves V*")
        elif members[tail] >= members[head]:
            problems.append(f"trigger arc ({tail}, {head}) points backwards")
    for v in vstar[1:]:
        if heads[v] != 1:
            problems.append(f"node {v} is the head of {heads[v]} trigger arcs")
    if heads[report.node]:
        problems.append("queried node is the head of a trigger arc")
    return problems


def uncolored_count_violations(state, graph, nodes=None):
    """Uncolored nodes whose processed in-arc count exceeds the threshold"""
    if state.epoch != graph.epoch:
        return []
    nodes = range(graph.n) if nodes is None else nodes
    return [w for w in nodes
            if state.color_of(w) is None and state.count_of(w) > state.threshold]


def orientation_violations(graph):
    """Nodes whose outdegree exceeds the graph's cap"""
    return [v for v in range(graph.n) if graph.outdegree(v) > graph.d_cap]
