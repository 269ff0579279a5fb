"""
Recursion policies for V* computation.

Each policy answers one question: after an arc raised a node's processed
in-arc count to count_after, do we recurse into that node now? All of them
recurse for certain once count_after reaches the threshold, which is what
keeps uncolored nodes at or below the threshold.
"""

import math
from abc import ABC, abstractmethod
from collections import namedtuple

import numpy as np

from errors import DomainError

RecursionPolicy = namedtuple('RecursionPolicy', ['kind', 'rng_seed'])

DEFAULT_THRESHOLD_MULT = 6
COIN_BLOCK = 4096


def threshold_for(d, threshold_mult=DEFAULT_THRESHOLD_MULT):
    """Processed in-arc count at which recursion is certain"""
    return math.ceil(threshold_mult * d)


def recursion_probability(count_after, d, threshold_mult=DEFAULT_THRESHOLD_MULT):
    """Heads probability min{1/(t + 1 - count_after), 1} with t = threshold_for(d)"""
    if d < 2:
        raise DomainError(f"d must be >= 2, got {d}")
    threshold = threshold_for(d, threshold_mult)
    if not 1 <= count_after <= threshold:
        raise DomainError(f"count_after must be in [1, {threshold}], got {count_after}")
    return min(1.0 / (threshold + 1 - count_after), 1.0)


class CoinSource:
    """Seeded uniform [0, 1) draws from a counter-based Philox generator.

    Draws are taken from blocks so a scalar coin costs a list index, and the
    sequence only depends on the seed and the number of draws made.
    """

    def __init__(self, seed):
        self.seed = seed
        self._gen = np.random.Generator(np.random.Philox(seed))
        self._block = []
        self._pos = 0
        self.draws = 0

    def draw(self):
        if self._pos == len(self._block):
            self._block = self._gen.random(COIN_BLOCK).tolist()
            self._pos = 0
        value = self._block[self._pos]
        self._pos += 1
        self.draws += 1
        return value

    def block(self, shape):
        """A fresh array of draws, for vectorised experiments"""
        self.draws += int(np.prod(shape))
        return self._gen.random(shape)


class BasePolicy(ABC):
    kind = None

    def __init__(self, seed=0):
        self.seed = seed

    @property
    def config(self):
        return RecursionPolicy(kind=self.kind, rng_seed=self.seed)

    @property
    def randomized(self):
        return self.kind != 'det'

    @abstractmethod
    def should_recurse(self, count_after, threshold):
        """Decide recursion for a node whose processed count just became count_after"""


class DeterministicPolicy(BasePolicy):
    """Recurse exactly when the processed count reaches the threshold"""
    kind = 'det'

    def should_recurse(self, count_after, threshold):
        return count_after >= threshold


class RandomizedPolicy(BasePolicy):
    """Recurse with probability 1/(threshold + 1 - count_after).

    The probability climbs as more in-arcs get processed, and is 1 at the
    threshold. Forced decisions consume no coin.
    """
    kind = 'rand'

    def __init__(self, seed=0):
        super().__init__(seed)
        self.coins = CoinSource(seed)

    def should_recurse(self, count_after, threshold):
        remaining = threshold + 1 - count_after
        if remaining <= 1:
            return True
        return self.coins.draw() < 1.0 / remaining


class UniformPolicy(BasePolicy):
    """Recurse with fixed probability 1/threshold, certain at the threshold.

    Baseline for V* size experiments; ignores how urgent the node is.
    """
    kind = 'uniform'

    def __init__(self, seed=0):
        super().__init__(seed)
        self.coins = CoinSource(seed)

    def should_recurse(self, count_after, threshold):
        if count_after >= threshold:
            return True
        return self.coins.draw() < 1.0 / threshold


POLICIES = {cls.kind: cls for cls in (DeterministicPolicy, RandomizedPolicy, UniformPolicy)}


def build_policy(kind='det', seed=0):
    cls = POLICIES.get(kind)
    if cls is None:
        raise DomainError(f"Unknown recursion policy '{kind}' (choose from {', '.join(POLICIES)})")
    return cls(seed)
