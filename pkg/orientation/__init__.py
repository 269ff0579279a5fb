"""
Orientation strategies for tinyColor

Keeps every node's outdegree at most d_cap while edges come and go. The
coloring layer only relies on that contract, so any strategy here can
stand in for a worst-case polylog orientation algorithm.

Strategies are auto-discovered from .py files in this package.
Naming convention:
  - StaticRecomputeStrategy -> registry key 'StaticRecompute' (CLI 'static')
  - AmortizedFlipStrategy   -> registry key 'AmortizedFlip'   (CLI 'amortized')
"""

import importlib
import pkgutil
import os
import sys
from abc import ABC, abstractmethod
from collections import namedtuple
from fractions import Fraction

from degeneracy import graph_degeneracy_order, orient_by_order
from errors import DomainError
from graph_store import MIN_CAP

OrientationStrategy = namedtuple('OrientationStrategy', ['kind', 'cap_multiplier', 'rebuild_interval'])

DEFAULT_CAP_MULTIPLIER = 4
DEFAULT_REBUILD_INTERVAL = 32

CLI_NAMES = {
    'static': 'StaticRecompute',
    'amortized': 'AmortizedFlip',
}


class BaseOrientationStrategy(ABC):
    """Base class for orientation strategies.

    One instance belongs to one OrientedGraph. on_insert must add the new
    arc itself, on_delete must remove it.
    """

    def __init__(self, cap_multiplier=DEFAULT_CAP_MULTIPLIER, rebuild_interval=DEFAULT_REBUILD_INTERVAL):
        cap_multiplier = Fraction(cap_multiplier)
        if cap_multiplier < 2:
            raise DomainError(f"cap_multiplier must be >= 2, got {cap_multiplier}")
        if rebuild_interval < 1:
            raise DomainError(f"rebuild_interval must be >= 1, got {rebuild_interval}")
        self.cap_multiplier = cap_multiplier
        self.rebuild_interval = rebuild_interval
        self.rebuilds = 0

    @property
    def config(self):
        return OrientationStrategy(kind=type(self).__name__.replace('Strategy', ''),
                                   cap_multiplier=self.cap_multiplier,
                                   rebuild_interval=self.rebuild_interval)

    @abstractmethod
    def on_insert(self, g, u, v):
        """Orient new edge {u, v}. Returns the new arc followed by flipped arcs."""

    @abstractmethod
    def on_delete(self, g, u, v):
        """Remove edge {u, v} and restore the cap contract."""

    def cap_for(self, degeneracy):
        return max(MIN_CAP, degeneracy)

    def rebuild(self, g, ordering=None):
        """Matula-Beck reorientation of the whole graph.

        Returns (flipped arcs, degeneracy). Sets g.d_cap from cap_for().
        A smallest-last ordering of g already at hand can be passed in.
        """
        if ordering is None:
            ordering = graph_degeneracy_order(g)
        flipped = g.reorient(orient_by_order(ordering, g.undirected_edges()))
        g.d_cap = self.cap_for(ordering.degeneracy)
        self.rebuilds += 1
        return flipped, ordering.degeneracy


def current_cap(g):
    """The outdegree bound d the coloring layer may rely on, never below 2"""
    return max(MIN_CAP, g.d_cap)


def _discover_strategies():
    """Build a registry of strategy classes from the files in this package"""
    registry = {}
    package_dir = os.path.dirname(__file__)

    for _, module_name, _ in pkgutil.iter_modules([package_dir]):
        if module_name.startswith('__'):
            continue
        module = importlib.import_module(f".{module_name}", package=__name__)
        for attr_name in dir(module):
            attr = getattr(module, attr_name)
            if (isinstance(attr, type)
                    and issubclass(attr, BaseOrientationStrategy)
                    and attr is not BaseOrientationStrategy):
                registry[attr_name.replace('Strategy', '')] = attr

    return registry


STRATEGIES = _discover_strategies()

_this_module = sys.modules[__name__]
for _cls in STRATEGIES.values():
    setattr(_this_module, _cls.__name__, _cls)


def build_strategy(kind='amortized', cap_multiplier=DEFAULT_CAP_MULTIPLIER,
                   rebuild_interval=DEFAULT_REBUILD_INTERVAL):
    """Instantiate a strategy by CLI name ('static', 'amortized') or registry key"""
    key = CLI_NAMES.get(kind, kind)
    cls = STRATEGIES.get(key)
    if cls is None:
        raise DomainError(f"Unknown orientation strategy '{kind}'")
    return cls(cap_multiplier=cap_multiplier, rebuild_interval=rebuild_interval)
