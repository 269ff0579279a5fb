"""
Random vertex partitioning

Nodes are hashed into k parts. Each part runs its own orientation and
implicit-coloring stack over the subgraph it induces, and part i hands out
colors from its own range [i*width + 1, (i+1)*width]. Edges between parts
can never conflict, so only same-part edges reach an instance.
"""

import hashlib
import math
from collections import namedtuple

from errors import DomainError
from graph_store import OrientedGraph
from implicit_color import ColoringState, DEFAULT_PALETTE_MULT, query_color
from implicit_color.policies import DEFAULT_THRESHOLD_MULT, build_policy
from orientation import DEFAULT_CAP_MULTIPLIER, DEFAULT_REBUILD_INTERVAL, build_strategy, current_cap

PartInstance = namedtuple('PartInstance', ['graph', 'state', 'nodes', 'local_of'])

GlobalAnswer = namedtuple('GlobalAnswer', ['node', 'color', 'part', 'width', 'report', 'd'])


def choose_k(alpha_estimate, n):
    """Number of parts: max(1, ceil(alpha / ceil(log2 n)))"""
    if alpha_estimate < 1:
        raise DomainError(f"alpha_estimate must be >= 1, got {alpha_estimate}")
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    return max(1, math.ceil(alpha_estimate / math.ceil(math.log2(n))))


def mix64(node, seed):
    """Seeded 64-bit hash of a node id"""
    digest = hashlib.blake2b(node.to_bytes(8, 'little'), digest_size=8,
                             key=(seed & 0xFFFFFFFFFFFFFFFF).to_bytes(8, 'little'))
    return int.from_bytes(digest.digest(), 'little')


def global_color(part, local_color, width):
    return part * width + local_color


class PartitionedColorer:
    """k independent coloring stacks behind one global graph.

    With k == 1 the single instance owns the global graph and the wrapper
    is the identity.
    """

    def __init__(self, n, k=1, seed=0, policy='det', orientation='amortized',
                 cap_multiplier=DEFAULT_CAP_MULTIPLIER, rebuild_interval=DEFAULT_REBUILD_INTERVAL,
                 threshold_mult=DEFAULT_THRESHOLD_MULT, palette_mult=DEFAULT_PALETTE_MULT):
        if k < 1:
            raise DomainError(f"k must be >= 1, got {k}")
        self.n = n
        self.k = k
        self.seed = seed
        self.policy = build_policy(policy, seed)

        def new_strategy():
            return build_strategy(orientation, cap_multiplier=cap_multiplier,
                                  rebuild_interval=rebuild_interval)

        self.part_of = [mix64(v, seed) % k for v in range(n)] if k > 1 else [0] * n

        self.instances = []
        for part in range(k):
            nodes = [v for v in range(n) if self.part_of[v] == part]
            local_of = {v: i for i, v in enumerate(nodes)}
            graph = OrientedGraph(len(nodes), strategy=new_strategy())
            state = ColoringState(len(nodes), threshold_mult=threshold_mult, palette_mult=palette_mult)
            self.instances.append(PartInstance(graph, state, nodes, local_of))

        if k == 1:
            self.graph = self.instances[0].graph
        else:
            self.graph = OrientedGraph(n, strategy=build_strategy('amortized'))

        self._width_epoch = None
        self._width = None

    @classmethod
    def from_alpha(cls, n, alpha_estimate, **kwargs):
        return cls(n, k=choose_k(alpha_estimate, n), **kwargs)

    def route_update(self, op, u, v):
        """Apply an insert or delete to the global graph and to u's part if v shares it"""
        if op not in ('insert', 'delete'):
            raise DomainError(f"Unknown update '{op}'")
        apply = OrientedGraph.insert_edge if op == 'insert' else OrientedGraph.delete_edge

        if self.k == 1:
            apply(self.graph, u, v)
            return

        apply(self.graph, u, v)
        part = self.part_of[u]
        if part == self.part_of[v]:
            inst = self.instances[part]
            apply(inst.graph, inst.local_of[u], inst.local_of[v])

    def range_width(self):
        """Colors per part, sized by the largest part cap of the current epoch"""
        if self._width_epoch != self.graph.epoch:
            self._width = max(math.ceil(inst.state.palette_mult * current_cap(inst.graph))
                              for inst in self.instances)
            self._width_epoch = self.graph.epoch
        return self._width

    def query(self, u):
        """Full answer for node u: global color plus the local query report"""
        self.graph.check_node(u)
        part = self.part_of[u]
        inst = self.instances[part]
        width = self.range_width()
        report = query_color(inst.state, inst.graph, inst.local_of[u], self.policy)
        return GlobalAnswer(node=u, color=global_color(part, report.color, width), part=part,
                            width=width, report=report, d=inst.state.d)

    def query_color_global(self, u):
        return self.query(u).color

    def edges(self):
        return self.graph.undirected_edges()

    def instance_of(self, u):
        return self.instances[self.part_of[u]]

    def colors(self):
        """{global node: global color} for everything colored in the current epoch"""
        width = self.range_width()
        result = {}
        for part, inst in enumerate(self.instances):
            if inst.state.epoch != inst.graph.epoch:
                continue
            for local, c in inst.state.colors().items():
                result[inst.nodes[local]] = global_color(part, c, width)
        return result
