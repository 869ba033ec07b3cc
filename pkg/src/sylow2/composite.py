"""Sylow 2-subgroups of S_n and A_n for arbitrary n.

Writing n as a sum of distinct powers of 2 splits 1..n into contiguous
blocks, one tree per block, largest first.  The symmetric-group Sylow
subgroup is the direct product of the per-block wreath powers; the
alternating-group one is its even part, cut out by the parity congruence on
the bottom-level label counts (an index-2 subgroup whenever there is
anything to pair).

Minimal generating sets are built the way the congruence suggests: every
generator of a non-largest block is paired with the fixed odd generator of
the largest block, and the remaining generators of the largest block are
emitted alone.  Odd n is handled by building for n-1 and letting the extra
point sit still.

The element type for the even part is a tuple of portraits, one per block
(None for a 1-point block); ``embed`` turns such a tuple into a permutation
of 1..n via the leaf numbering of each block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from sylow2 import permgroup
from sylow2.permgroup import Permutation
from sylow2.portrait import Portrait, identity, leaf_permutation, level_index
from sylow2.wreath import alpha, gen_set_B, gen_set_G


@dataclass(frozen=True)
class BinaryDecomposition:
    """n as a sum of 2**e over strictly increasing exponents e."""

    n: int
    exponents: tuple[int, ...]


@dataclass(frozen=True)
class Block:
    exponent: int
    offset: int  # 0-based start of the block inside 1..n

    @property
    def size(self) -> int:
        return 1 << self.exponent


@dataclass(frozen=True)
class BlockLayout:
    """Contiguous blocks covering 1..n, ordered by decreasing exponent."""

    n: int
    blocks: tuple[Block, ...]


@dataclass(frozen=True)
class SubdirectElement:
    """One portrait per block (None on 1-point blocks), largest first."""

    layout: BlockLayout
    parts: tuple[Portrait | None, ...]

    def __post_init__(self):
        if len(self.parts) != len(self.layout.blocks):
            raise ValueError("part count does not match the block layout")
        for part, block in zip(self.parts, self.layout.blocks):
            if block.exponent == 0:
                if part is not None:
                    raise ValueError("1-point blocks carry no portrait")
            elif part is None or part.depth != block.exponent:
                raise ValueError(
                    f"block of size {block.size} needs a depth-{block.exponent} "
                    "portrait"
                )


def decompose(n: int) -> BinaryDecomposition:
    """Binary expansion with ascending exponents."""
    if n < 1:
        raise ValueError("n must be positive")
    return BinaryDecomposition(n, tuple(i for i in range(n.bit_length()) if n >> i & 1))


def block_layout(n: int) -> BlockLayout:
    blocks = []
    offset = 0
    for e in reversed(decompose(n).exponents):
        blocks.append(Block(e, offset))
        offset += 1 << e
    return BlockLayout(n, tuple(blocks))


def embed(element: SubdirectElement) -> Permutation:
    """Block-diagonal permutation of 1..n induced by the part portraits."""
    images = list(range(element.layout.n))
    for part, block in zip(element.parts, element.layout.blocks):
        if part is None:
            continue
        for i, v in enumerate(leaf_permutation(part).images):
            images[block.offset + i] = block.offset + v
    return Permutation(tuple(images))


def check_congruence(element: SubdirectElement) -> bool:
    """Parity congruence: the bottom-level label counts sum to 0 mod 2."""
    total = 0
    for part in element.parts:
        if part is not None:
            total += level_index(part, part.depth - 1)
    return total % 2 == 0


def two_part_of_factorial(n: int) -> int:
    """Exponent of 2 in n!, summed the slow way (independent of s2)."""
    e = 0
    power = 2
    while power <= n:
        e += n // power
        power *= 2
    return e


def order_syl2_S(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return 1 << (n - n.bit_count())


def order_syl2_A(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    if n < 2:
        return 1
    return 1 << (n - n.bit_count() - 1)


def rank_syl2_S(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    if n % 2 == 1:
        n -= 1
    if n == 0:
        return 0
    return sum(decompose(n).exponents)


def rank_syl2_A(n: int) -> int:
    """Minimal generating set size; odd n reduces to n-1 first."""
    if n < 1:
        raise ValueError("n must be positive")
    if n < 4:
        return 0
    if n % 2 == 1:
        n -= 1
    exps = decompose(n).exponents
    if len(exps) == 1:
        return exps[0]
    return sum(exps) - 1


def _identity_parts(layout: BlockLayout) -> list[Portrait | None]:
    return [None if b.exponent == 0 else identity(b.exponent) for b in layout.blocks]


def _odd_structure(k: int, j: int) -> Portrait:
    """Generator j of a size-2**k block in odd form: its own label plus the
    bottom-left label (just the bottom-left one when j is the last level)."""
    bits = bytearray((1 << k) - 1)
    bits[(1 << j) - 1] = 1
    bits[(1 << (k - 1)) - 1] = 1
    return Portrait(k, bytes(bits))


def build_tuples_S(n: int) -> list[SubdirectElement]:
    """Per-block single-label generators of the full (symmetric) product."""
    if n < 2:
        raise ValueError("n must be >= 2")
    layout = block_layout(n)
    out = []
    for bi, block in enumerate(layout.blocks):
        for g in gen_set_B(block.exponent) if block.exponent else []:
            parts = _identity_parts(layout)
            parts[bi] = g
            out.append(SubdirectElement(layout, tuple(parts)))
    return out


def build_gens_S(n: int) -> list[Permutation]:
    return [embed(t) for t in build_tuples_S(n)]


def build_tuples_A(n: int) -> list[SubdirectElement]:
    """Minimal generating tuples for the even part; empty below n = 4."""
    if n < 4:
        return []
    if n % 2 == 1:
        lifted = block_layout(n)
        return [
            SubdirectElement(lifted, t.parts + (None,)) for t in build_tuples_A(n - 1)
        ]
    layout = block_layout(n)
    exps = decompose(n).exponents
    if len(exps) == 1:
        return [
            SubdirectElement(layout, (g,)) for g in gen_set_G(exps[0])
        ]
    big_k = layout.blocks[0].exponent
    pair_with = alpha(big_k, big_k - 1)
    out = []
    for bi, block in enumerate(layout.blocks[1:], start=1):
        for j in range(block.exponent):
            parts = _identity_parts(layout)
            parts[bi] = _odd_structure(block.exponent, j)
            parts[0] = pair_with
            out.append(SubdirectElement(layout, tuple(parts)))
    for j in range(big_k - 1):
        parts = _identity_parts(layout)
        parts[0] = alpha(big_k, j)
        out.append(SubdirectElement(layout, tuple(parts)))
    return out


def build_gens_A(n: int) -> list[Permutation]:
    return [embed(t) for t in build_tuples_A(n)]


def iso_4k2(sigma: Permutation) -> Permutation:
    """Extend a permutation of 1..4k to 4k+2 points, appending the swap of
    the two new points exactly when sigma is odd.  The result is always
    even, and on a Sylow 2-subgroup of S_4k the map is an isomorphism onto
    the corresponding subgroup of A_4k+2."""
    n = sigma.degree
    if n % 4 != 0 or n == 0:
        raise ValueError(f"degree {n} is not a positive multiple of 4")
    tail = (n + 1, n) if sigma.sign() < 0 else (n, n + 1)
    return Permutation(sigma.images + tail)


def fixed_points_odd(n: int) -> int:
    """The point that every constructed generator leaves fixed for odd n."""
    if n % 2 == 0:
        raise ValueError("n must be odd")
    for g in build_gens_S(n) + build_gens_A(n):
        if g.apply(n - 1) != n - 1:
            raise AssertionError(f"generator {g} moves point {n}")
    return n


def count_sylow2_of_S(r: int) -> int:
    """Number of Sylow 2-subgroups of the symmetric group on 2**r points:
    the full factorial divided by the self-normalizing subgroup order."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return math.factorial(1 << r) // (1 << ((1 << r) - 1))


def boxtimes_order(orders, grouping=None) -> int:
    """Order of an even-subdirect combination of groups.

    ``grouping`` is a nested tuple of factor indices; every tuple node with
    at least two children takes one index-2 (halving) step, so the
    operation is deliberately not associative.  None means one flat node
    over all factors.
    """
    orders = list(orders)
    if not orders:
        raise ValueError("empty order list")
    if grouping is None:
        grouping = tuple(range(len(orders)))
    used: list[int] = []

    def value(node):
        if isinstance(node, int):
            used.append(node)
            return orders[node]
        children = list(node)
        if not children:
            raise ValueError("empty grouping node")
        total = math.prod(value(c) for c in children)
        if len(children) == 1:
            return total
        if total % 2:
            raise ValueError("cannot halve an odd product")
        return total // 2

    result = value(grouping)
    if sorted(used) != list(range(len(orders))):
        raise ValueError("grouping must use every factor exactly once")
    return result


def oracle_group_A(n: int) -> permgroup.PermGroup:
    gens = build_gens_A(n)
    return permgroup.PermGroup(n, gens)


def oracle_group_S(n: int) -> permgroup.PermGroup:
    gens = build_gens_S(n)
    return permgroup.PermGroup(n, gens)


def verification_record(n: int, kind: str = "A") -> dict:
    """Oracle-vs-formula record for one n, in the stable report schema."""
    if kind not in ("A", "S"):
        raise ValueError(f"kind must be A or S, not {kind!r}")
    if kind == "A":
        expected_order = order_syl2_A(n)
        expected_rank = rank_syl2_A(n)
        gens = build_gens_A(n)
    else:
        expected_order = order_syl2_S(n)
        expected_rank = rank_syl2_S(n)
        gens = build_gens_S(n) if n >= 2 else []
    group = permgroup.PermGroup(n, gens)
    oracle_order = group.order
    oracle_rank = permgroup.rank_of_2group(group) if group.is_2group() else -1
    all_even = all(g.sign() == 1 for g in gens)
    fixed = sorted(
        p + 1 for p in range(n) if all(g.apply(p) == p for g in gens)
    )
    ok = (
        oracle_order == expected_order
        and oracle_rank == expected_rank
        and (kind == "S" or all_even)
        and (n % 2 == 0 or n in fixed)
    )
    return {
        "n": n,
        "decomposition": list(decompose(n).exponents),
        "expected_order_log2": expected_order.bit_length() - 1,
        "oracle_order_log2": oracle_order.bit_length() - 1,
        "expected_rank": expected_rank,
        "oracle_rank": oracle_rank,
        "all_even": all_even,
        "fixed_points": fixed,
        "pass": ok,
    }
