"""
Dynamic oriented graph store

Holds the node set, the undirected edge set and its current orientation.
Every other module reads the graph through this class. Orientation choices
are delegated to an orientation strategy (see orientation/).
"""

from collections import namedtuple

from errors import DuplicateEdge, InvariantViolation, MissingEdge, SelfLoop, UnknownNode

Arc = namedtuple('Arc', ['tail', 'head'])

MIN_CAP = 2


class OrientedGraph:
    """Simple undirected graph on nodes 0..n-1 with one orientation per edge.

    Out-lists and in-lists keep arcs in insertion order. Removal is a
    swap-remove, with each arc remembering its slot in both lists, so
    insert, delete and lookup are O(1) expected.
    """

    def __init__(self, n, strategy=None):
        if n < 0:
            raise UnknownNode(n, 0)
        self.n = n
        self.epoch = 0
        self.d_cap = MIN_CAP
        self._out = [[] for _ in range(n)]
        self._in = [[] for _ in range(n)]
        # (tail, head) -> [index in _out[tail], index in _in[head]]
        self._slot = {}

        if strategy is None:
            from orientation import build_strategy
            strategy = build_strategy('amortized')
        self.strategy = strategy

    def __repr__(self):
        return f"OrientedGraph(n={self.n}, m={len(self._slot)}, d_cap={self.d_cap}, epoch={self.epoch})"

    # --- queries -----------------------------------------------------------

    def check_node(self, v):
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise UnknownNode(v, self.n)

    def has_edge(self, u, v):
        return (u, v) in self._slot or (v, u) in self._slot

    def arc_between(self, u, v):
        """Return the arc currently representing edge {u, v}, or None"""
        if (u, v) in self._slot:
            return Arc(u, v)
        if (v, u) in self._slot:
            return Arc(v, u)
        return None

    def out_arcs(self, v):
        self.check_node(v)
        return [Arc(v, w) for w in self._out[v]]

    def in_arcs(self, v):
        self.check_node(v)
        return [Arc(u, v) for u in self._in[v]]

    def out_heads(self, v):
        """Heads of v's out-arcs, live list. Callers must not mutate it."""
        return self._out[v]

    def in_tails(self, v):
        """Tails of v's in-arcs, live list. Callers must not mutate it."""
        return self._in[v]

    def outdegree(self, v):
        return len(self._out[v])

    def max_outdegree(self):
        return max((len(heads) for heads in self._out), default=0)

    def edge_count(self):
        return len(self._slot)

    def edges(self):
        """All arcs, in no particular order"""
        return [Arc(t, h) for (t, h) in self._slot]

    def undirected_edges(self):
        """All edges as (min, max) pairs, sorted"""
        return sorted((min(t, h), max(t, h)) for (t, h) in self._slot)

    # --- updates -----------------------------------------------------------

    def insert_edge(self, u, v):
        """Insert edge {u, v}; returns the arcs whose direction was set or changed.

        The first entry is the new arc in its final orientation; any further
        entries are existing arcs the strategy flipped, in their new
        direction.
        """
        self.check_node(u)
        self.check_node(v)
        if u == v:
            raise SelfLoop(u)
        if self.has_edge(u, v):
            raise DuplicateEdge(u, v)

        flips = self.strategy.on_insert(self, u, v)
        self.epoch += 1
        return flips

    def delete_edge(self, u, v):
        self.check_node(u)
        self.check_node(v)
        if not self.has_edge(u, v):
            raise MissingEdge(u, v)

        self.strategy.on_delete(self, u, v)
        self.epoch += 1

    # --- low-level arc plumbing used by orientation strategies --------------

    def add_arc(self, tail, head):
        self._slot[(tail, head)] = [len(self._out[tail]), len(self._in[head])]
        self._out[tail].append(head)
        self._in[head].append(tail)
        return Arc(tail, head)

    def remove_arc(self, tail, head):
        out_idx, in_idx = self._slot.pop((tail, head))

        heads = self._out[tail]
        last = heads.pop()
        if out_idx < len(heads):
            heads[out_idx] = last
            self._slot[(tail, last)][0] = out_idx

        tails = self._in[head]
        last = tails.pop()
        if in_idx < len(tails):
            tails[in_idx] = last
            self._slot[(last, head)][1] = in_idx

    def remove_edge(self, u, v):
        arc = self.arc_between(u, v)
        self.remove_arc(arc.tail, arc.head)
        return arc

    def flip_arc(self, tail, head):
        """Reverse tail->head into head->tail; returns the new arc"""
        self.remove_arc(tail, head)
        return self.add_arc(head, tail)

    def reorient(self, arcs):
        """Apply a full orientation given as arcs; returns the arcs that flipped"""
        flipped = []
        for tail, head in arcs:
            if (head, tail) in self._slot:
                flipped.append(self.flip_arc(head, tail))
        return flipped

    # --- invariant scans ----------------------------------------------------

    def check_consistency(self):
        """Full scan: out/in lists agree and no node exceeds d_cap"""
        for v in range(self.n):
            if len(self._out[v]) > self.d_cap:
                raise InvariantViolation(
                    f"node {v} has outdegree {len(self._out[v])} > d_cap {self.d_cap}")
            for w in self._out[v]:
                if v not in self._in[w]:
                    raise InvariantViolation(f"arc ({v}, {w}) missing from in-list of {w}")
        in_total = sum(len(tails) for tails in self._in)
        if in_total != len(self._slot) or sum(len(h) for h in self._out) != len(self._slot):
            raise InvariantViolation("arc lists and slot index disagree on edge count")
