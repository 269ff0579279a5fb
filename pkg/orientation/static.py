"""
Static recompute strategy

Full smallest-last reorientation after every update. O(n + m) per update,
and the cap always equals max(2, exact degeneracy).
"""

from orientation import BaseOrientationStrategy


class StaticRecomputeStrategy(BaseOrientationStrategy):

    def on_insert(self, g, u, v):
        g.add_arc(min(u, v), max(u, v))
        flipped, _ = self.rebuild(g)
        new_arc = g.arc_between(u, v)
        return [new_arc] + [a for a in flipped if {a.tail, a.head} != {u, v}]

    def on_delete(self, g, u, v):
        g.remove_edge(u, v)
        self.rebuild(g)
