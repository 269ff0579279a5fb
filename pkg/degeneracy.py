"""
Smallest-last (Matula-Beck) vertex ordering

Used to color each recursively gathered node set, to rebuild orientations,
and as the exact degeneracy measure for the static orientation strategy.
"""

import heapq
from collections import defaultdict, namedtuple

from errors import DomainError
from graph_store import Arc

DegeneracyOrder = namedtuple('DegeneracyOrder', ['order', 'degeneracy'])


def smallest_last(nodes, edges):
    """Repeatedly remove a minimum-degree node.

    Args:
        nodes: Iterable of node ids
        edges: Iterable of (u, v) pairs with both endpoints in nodes

    Returns:
        DegeneracyOrder: removal order and the largest minimum degree seen.
        Every node has at most `degeneracy` neighbors later in the order.

    Buckets are keyed by current degree. Each bucket is a heap so that ties
    go to the smallest node id; entries left behind by a degree decrease are
    skipped when popped.
    """
    adj = {v: set() for v in nodes}
    for u, v in edges:
        if u not in adj or v not in adj:
            raise DomainError(f"edge ({u}, {v}) has an endpoint outside the node set")
        adj[u].add(v)
        adj[v].add(u)

    degree = {v: len(nbrs) for v, nbrs in adj.items()}
    buckets = defaultdict(list)
    for v, deg in degree.items():
        buckets[deg].append(v)
    for heap in buckets.values():
        heapq.heapify(heap)

    removed = set()
    order = []
    degeneracy = 0
    low = 0
    for _ in range(len(adj)):
        while True:
            heap = buckets[low]
            while heap and (heap[0] in removed or degree[heap[0]] != low):
                heapq.heappop(heap)
            if heap:
                break
            low += 1

        v = heapq.heappop(heap)
        degeneracy = max(degeneracy, low)
        removed.add(v)
        order.append(v)
        for w in adj[v]:
            if w not in removed:
                degree[w] -= 1
                heapq.heappush(buckets[degree[w]], w)
        low = max(0, low - 1)

    return DegeneracyOrder(order=order, degeneracy=degeneracy)


def orient_by_order(order, edges):
    """Orient every edge from the earlier to the later node of a removal order.

    The result is acyclic and each node's outdegree is its number of later
    neighbors, so at most the order's degeneracy.
    """
    if isinstance(order, DegeneracyOrder):
        order = order.order
    position = {v: i for i, v in enumerate(order)}
    arcs = []
    for u, v in edges:
        if u not in position or v not in position:
            raise DomainError(f"edge ({u}, {v}) has an endpoint outside the order")
        arcs.append(Arc(u, v) if position[u] < position[v] else Arc(v, u))
    return arcs


def graph_degeneracy_order(graph):
    """Smallest-last order of a whole OrientedGraph"""
    return smallest_last(range(graph.n), graph.undirected_edges())
