"""
Implicit coloring on top of a low-outdegree orientation.

Colors are handed out per query. A query on an uncolored node u gathers a
set V* by walking out-arcs from u (see compute_vstar), then colors all of
V* greedily in reverse smallest-last order (see color_vstar). Colors stay
fixed until the next edge update, after which the whole state is dropped.

Per-node state is stamped with the graph epoch it belongs to and reset
lazily the first time a node is touched in a newer epoch, so an update
costs nothing here.
"""

import math
from collections import namedtuple

from degeneracy import smallest_last
from errors import DomainError, PaletteExhausted
from graph_store import Arc, MIN_CAP
from implicit_color.policies import (
    DEFAULT_THRESHOLD_MULT, build_policy, recursion_probability, threshold_for,
)
from orientation import current_cap

DEFAULT_PALETTE_MULT = 9

QueryReport = namedtuple('QueryReport', ['node', 'color', 'vstar_size', 'trigger_arcs', 'epoch'])

__all__ = [
    'ColoringState', 'QueryReport', 'amortized_bound', 'begin_epoch_if_stale',
    'build_policy', 'color_vstar', 'compute_vstar', 'query_color', 'recursion_probability',
]


class ColoringState:
    """Coloring state for one graph, valid for one epoch at a time.

    Fields are per-node arrays. A node's entries only mean something when
    epoch_tag[v] == self.epoch; use the accessors rather than the arrays.
    color 0 means uncolored.
    """

    def __init__(self, n, threshold_mult=DEFAULT_THRESHOLD_MULT, palette_mult=DEFAULT_PALETTE_MULT):
        if threshold_mult <= 1:
            raise DomainError(f"threshold_mult must be > 1, got {threshold_mult}")
        if palette_mult < threshold_mult + 3:
            raise DomainError(
                f"palette_mult must be >= threshold_mult + 3 ({threshold_mult + 3}), got {palette_mult}")

        self.n = n
        self.threshold_mult = threshold_mult
        self.palette_mult = palette_mult

        self.epoch = None
        self.d = MIN_CAP
        self.threshold = threshold_for(self.d, threshold_mult)
        self.palette_size = math.ceil(palette_mult * self.d)

        self.epoch_tag = [-1] * n
        self.color = [0] * n
        self.processed_in = [None] * n
        self.processed_count = [0] * n
        self.vstar_mark = [0] * n
        self.queried = [False] * n

        self.query_serial = 0
        self.colored_nodes = []
        self.distinct_queries = 0
        self.arcs_processed = 0
        self.recent_heads = []
        self.last_vstar = []
        self.cells_touched = 0

    def _touch(self, v):
        if self.epoch_tag[v] != self.epoch:
            self.epoch_tag[v] = self.epoch
            self.color[v] = 0
            self.processed_in[v] = []
            self.processed_count[v] = 0
            self.vstar_mark[v] = 0
            self.queried[v] = False
            self.cells_touched += 1

    def color_of(self, v):
        """Color of v this epoch, or None"""
        if self.epoch_tag[v] == self.epoch and self.color[v]:
            return self.color[v]
        return None

    def processed_tails(self, v):
        """Tails of the processed arcs into v recorded this epoch"""
        if self.epoch_tag[v] == self.epoch:
            return list(self.processed_in[v])
        return []

    def count_of(self, v):
        if self.epoch_tag[v] == self.epoch:
            return self.processed_count[v]
        return 0

    def is_settled(self, v):
        """v is in V^colored or in the V* of the running query"""
        return (self.epoch_tag[v] == self.epoch
                and (self.color[v] != 0 or self.vstar_mark[v] == self.query_serial))

    def colors(self):
        """{node: color} for every node colored this epoch"""
        return {v: self.color[v] for v in self.colored_nodes}


def begin_epoch_if_stale(state, graph):
    """Drop all coloring state if the graph changed since the last query.

    Returns True when a new epoch started. O(1): per-node data is reset on
    first touch.
    """
    if state.epoch == graph.epoch:
        return False

    state.epoch = graph.epoch
    state.d = current_cap(graph)
    state.threshold = threshold_for(state.d, state.threshold_mult)
    state.palette_size = math.ceil(state.palette_mult * state.d)
    state.colored_nodes = []
    state.distinct_queries = 0
    state.arcs_processed = 0
    state.recent_heads = []
    state.last_vstar = []
    return True


def compute_vstar(state, graph, u, policy, trigger_arcs=None):
    """Gather the nodes to color for a query on uncolored node u.

    Walks out-arcs depth first. Every arc (v, w) leaving a V* node is
    processed once; if w is not yet settled, the arc is recorded in w's
    processed list and the policy decides whether to recurse into w right
    away. Arcs that caused a recursion are appended to trigger_arcs.

    Uses an explicit stack, visiting arcs in the same order as the
    recursive formulation.
    """
    begin_epoch_if_stale(state, graph)
    if state.color_of(u) is not None:
        raise DomainError(f"node {u} is already colored in epoch {state.epoch}")

    state.query_serial += 1
    serial = state.query_serial
    threshold = state.threshold
    vstar = []
    heads_seen = []
    stack = []

    def enter(v):
        state._touch(v)
        state.vstar_mark[v] = serial
        vstar.append(v)
        stack.append((v, iter(graph.out_heads(v))))

    enter(u)
    while stack:
        v, heads = stack[-1]
        w = next(heads, None)
        if w is None:
            stack.pop()
            continue

        state.arcs_processed += 1
        if state.is_settled(w):
            continue

        state._touch(w)
        state.processed_in[w].append(v)
        state.processed_count[w] += 1
        heads_seen.append(w)
        if policy.should_recurse(state.processed_count[w], threshold):
            if trigger_arcs is not None:
                trigger_arcs.append(Arc(v, w))
            enter(w)

    state.recent_heads = heads_seen
    return vstar


def color_vstar(state, graph, vstar):
    """Color every node of vstar with the smallest free palette color.

    Nodes are colored in reverse smallest-last order of G[V*]. A node must
    avoid its colored processed in-neighbors, its colored out-neighbors and
    its V* neighbors colored earlier in this pass.

    Returns:
        dict: {node: color} in coloring order
    """
    members = set(vstar)
    induced_adj = {v: [] for v in vstar}
    induced = []
    for v in vstar:
        for w in graph.out_heads(v):
            if w in members:
                induced.append((v, w))
                induced_adj[v].append(w)
                induced_adj[w].append(v)

    ordering = smallest_last(vstar, induced)
    assignments = {}
    for x in reversed(ordering.order):
        forbidden = set()
        for t in state.processed_in[x]:
            if state.color[t]:
                forbidden.add(state.color[t])
        for w in graph.out_heads(x):
            c = state.color_of(w)
            if c:
                forbidden.add(c)
        for w in induced_adj[x]:
            if state.color[w]:
                forbidden.add(state.color[w])

        for c in range(1, state.palette_size + 1):
            if c not in forbidden:
                break
        else:
            raise PaletteExhausted(x, state.palette_size)

        state.color[x] = c
        state.colored_nodes.append(x)
        assignments[x] = c

    return assignments


def query_color(state, graph, u, policy):
    """Answer a color query for node u.

    Returns:
        QueryReport: vstar_size is 0 when u was already colored this epoch
    """
    graph.check_node(u)
    begin_epoch_if_stale(state, graph)
    state._touch(u)
    if not state.queried[u]:
        state.queried[u] = True
        state.distinct_queries += 1

    if state.color[u]:
        state.recent_heads = []
        state.last_vstar = []
        return QueryReport(node=u, color=state.color[u], vstar_size=0, trigger_arcs=[], epoch=state.epoch)

    triggers = []
    vstar = compute_vstar(state, graph, u, policy, triggers)
    color_vstar(state, graph, vstar)
    state.last_vstar = vstar
    return QueryReport(node=u, color=state.color[u], vstar_size=len(vstar),
                       trigger_arcs=triggers, epoch=state.epoch)


def amortized_bound(i, threshold, d):
    """Largest |V^colored| allowed after i distinct queries in a fresh epoch.

    Each recursion removes at least `threshold` arcs from the pool of
    processed arcs into unsettled nodes and adds at most d, while each
    query adds at most d. That caps recursions at i*d/(threshold - d).
    """
    if threshold <= d:
        raise DomainError(f"threshold {threshold} must exceed d {d}")
    return (i * threshold) // (threshold - d) + 1
