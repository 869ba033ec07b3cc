"""Shared test helpers: independent oracles and hypothesis strategies.

The oracle functions here deliberately avoid the package's kernel code
paths.  Leaf actions are rebuilt by recursion on subtrees, group closures
by plain breadth-first multiplication, so an error in the iterative kernels
cannot hide behind itself.
"""

import random

from hypothesis import settings, strategies as st

from sylow2.permgroup import Permutation
from sylow2.portrait import Portrait

settings.register_profile("suite", max_examples=60, derandomize=True)
settings.load_profile("suite")


def portrait_from_mask(k: int, mask: int) -> Portrait:
    size = (1 << k) - 1
    return Portrait(k, bytes((mask >> i) & 1 for i in range(size)))


def portraits(k: int):
    """Hypothesis strategy for depth-k portraits."""
    size = (1 << k) - 1
    return st.integers(min_value=0, max_value=(1 << size) - 1).map(
        lambda m: portrait_from_mask(k, m)
    )


def random_portrait(rng: random.Random, k: int) -> Portrait:
    size = (1 << k) - 1
    return Portrait(k, bytes(rng.getrandbits(1) for _ in range(size)))


def oracle_leaf_images(levels):
    """Leaf action computed by recursion on subtrees.

    ``levels`` is a list of per-level bit lists.  A word b.rest maps to
    (b XOR root label).(left-or-right section applied to rest), which is a
    different route to the same permutation than the kernels' level sweep.
    """
    k = len(levels)
    n = 1 << k
    if k == 1:
        return [1, 0] if levels[0][0] else [0, 1]
    left = oracle_leaf_images(
        [levels[l + 1][: 1 << l] for l in range(k - 1)]
    )
    right = oracle_leaf_images(
        [levels[l + 1][1 << l :] for l in range(k - 1)]
    )
    root = levels[0][0]
    half = n // 2
    out = []
    for x in range(n):
        b, rest = divmod(x, half)
        sub = left[rest] if b == 0 else right[rest]
        out.append(((b ^ root) * half) + sub)
    return out


def oracle_leaf_permutation(g: Portrait) -> Permutation:
    levels = [list(g.level_bits(l)) for l in range(g.depth)]
    return Permutation(tuple(oracle_leaf_images(levels)))


def bruteforce_closure(gens, cap=100_000):
    """All products of the generators as a set of image tuples."""
    degree = gens[0].degree if gens else 1
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = tuple(map(a.__getitem__, g.images))
                if c not in seen:
                    if len(seen) >= cap:
                        raise ValueError("closure cap exceeded")
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen
