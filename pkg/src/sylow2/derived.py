"""Commutator and Frattini membership by level parities.

The commutator subgroup of the full wreath power B is cut out by "every
level has an even label count"; for the even subgroup G the bottom level
additionally splits into two halves that must each be even.  Reducing the
level counts mod 2 gives the abelianization onto k copies of C2, which is
also what makes the Frattini quotient elementary abelian of rank k.

All predicates here are pure label arithmetic; the oracle-side suites in
the tests rebuild the same subgroups from generator squares and commutators
and compare elementwise.
"""

from __future__ import annotations

from sylow2.portrait import Portrait, compose, level_index
from sylow2.wreath import all_portraits, in_G

DEFAULT_SEED = 1729


def in_derived_B(g: Portrait) -> bool:
    """Even label count on every level."""
    return all(level_index(g, l) % 2 == 0 for l in range(g.depth))


def in_derived_G(g: Portrait) -> bool:
    """Even count on levels above the last, even count in each bottom half.

    The root level is included in the evenness requirement; at depth >= 2
    a single root label already fails.
    """
    if g.depth < 2:
        raise ValueError("the G criterion needs depth >= 2")
    if any(level_index(g, l) % 2 for l in range(g.depth - 1)):
        return False
    last = g.level_bits(g.depth - 1)
    half = len(last) // 2
    return sum(last[:half]) % 2 == 0 and sum(last[half:]) % 2 == 0


def abelianization_B(g: Portrait) -> tuple[int, ...]:
    """Level parities as a length-k vector over F2, root first."""
    return tuple(level_index(g, l) % 2 for l in range(g.depth))


def abelianization_G(g: Portrait) -> tuple[int, ...]:
    """Level parities with the bottom coordinate taken on the first half.

    Defined on G only; there both halves have equal parity, which is what
    makes the map a homomorphism.
    """
    if not in_G(g):
        raise ValueError("element is not in G")
    k = g.depth
    upper = tuple(level_index(g, l) % 2 for l in range(k - 1))
    last = g.level_bits(k - 1)
    return upper + (sum(last[: len(last) // 2]) % 2,)


def format_parity_vector(v) -> str:
    """Bit string, coordinate 0 first."""
    return "".join(str(b) for b in v)


def in_frattini_G(g: Portrait) -> bool:
    """Frattini membership for G, which coincides with the derived
    criterion (squares generate nothing beyond the commutators here)."""
    if not in_G(g):
        raise ValueError("element is not in G")
    return in_derived_G(g)


def squares_in_derived_check(k: int, samples: int = 10_000,
                             seed: int = DEFAULT_SEED) -> bool:
    """Check that squares land in the derived subgroup.

    Exhaustive over all depth-k portraits for k <= 3; sampled otherwise.
    Covers both statements: g**2 passes the B criterion for every g, and
    the G criterion for every g in G.
    """
    if k <= 3:
        population = all_portraits(k)
    else:
        population = _random_portraits(k, samples, seed)
    for g in population:
        sq = compose(g, g)
        if not in_derived_B(sq):
            return False
        if in_G(g) and not in_derived_G(sq):
            return False
    return True


def _random_portraits(k, count, seed):
    import random

    rng = random.Random(seed)
    size = (1 << k) - 1
    for _ in range(count):
        yield Portrait(k, bytes(rng.getrandbits(1) for _ in range(size)))
