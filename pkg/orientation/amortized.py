"""
Amortized flip strategy

New arcs leave the endpoint with the smaller outdegree. A node that goes
over the cap has all of its out-arcs flipped inward, and any head pushed
over the cap is reset the same way. A cascade that runs past its flip
budget, or every rebuild_interval deletions, falls back to a full
smallest-last rebuild which also re-measures the degeneracy estimate.
Deletions also rebuild as soon as the cap exceeds cap_bound() of the
current degeneracy.
"""

import math
from collections import deque

from degeneracy import graph_degeneracy_order
from orientation import BaseOrientationStrategy
from graph_store import MIN_CAP

MIN_FLIP_BUDGET = 64


class AmortizedFlipStrategy(BaseOrientationStrategy):

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.estimate = 0
        self.deletions = 0
        self.cascade_flips = 0

    def cap_for(self, degeneracy):
        self.estimate = degeneracy
        return max(MIN_CAP, math.floor(self.cap_multiplier * degeneracy))

    def on_insert(self, g, u, v):
        du, dv = g.outdegree(u), g.outdegree(v)
        if du < dv or (du == dv and u < v):
            tail, head = u, v
        else:
            tail, head = v, u
        g.add_arc(tail, head)

        if g.outdegree(tail) <= g.d_cap:
            return [g.arc_between(u, v)]

        # edge key -> arc before this update
        before = {}
        budget = max(MIN_FLIP_BUDGET, 4 * g.edge_count())
        if not self._reset_cascade(g, tail, budget, before):
            for a in g.edges():
                before.setdefault((min(a), max(a)), a)
            self.rebuild(g)
            self.deletions = 0

        new_key = (min(u, v), max(u, v))
        changed = [g.arc_between(u, v)]
        for key, old in before.items():
            if key == new_key:
                continue
            now = g.arc_between(*key)
            if now != old:
                changed.append(now)
        return changed

    def _reset_cascade(self, g, start, budget, before):
        """Flip out-arcs of overflowing nodes until none is left. False if over budget."""
        queue = deque([start])
        flips = 0
        while queue:
            x = queue.popleft()
            if g.outdegree(x) <= g.d_cap:
                continue
            for w in list(g.out_heads(x)):
                before.setdefault((min(x, w), max(x, w)), (x, w))
                g.flip_arc(x, w)
                flips += 1
                if g.outdegree(w) > g.d_cap:
                    queue.append(w)
            if flips > budget:
                self.cascade_flips += flips
                return False
        self.cascade_flips += flips
        return True

    def cap_bound(self, degeneracy):
        """Largest cap allowed for a graph of the given degeneracy"""
        return self.cap_multiplier * degeneracy + MIN_CAP

    def on_delete(self, g, u, v):
        g.remove_edge(u, v)
        self.deletions += 1
        if g.d_cap <= MIN_CAP and self.deletions < self.rebuild_interval:
            return

        # degeneracy drops by at most one per deletion, so re-measure every time
        ordering = graph_degeneracy_order(g)
        if self.deletions >= self.rebuild_interval or g.d_cap > self.cap_bound(ordering.degeneracy):
            self.rebuild(g, ordering)
            self.deletions = 0
