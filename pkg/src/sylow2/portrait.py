"""Automorphisms of the depth-k rooted binary tree as labeled portraits.

A portrait assigns one bit to every internal vertex of the tree; bit 1 at a
vertex means the automorphism swaps the two subtrees hanging there.  Levels
are 0-based with the root alone on level 0, so a depth-k portrait has levels
0..k-1 and acts on the 2**k leaves of level k.

Text format (bit-exact, stable): the levels root-down joined by "/", e.g.
"0/00/1001" for the depth-3 automorphism with labels at the first and last
positions of the bottom level.  Bit j of a level string is the label of the
level's (j+1)-th vertex counted left to right.

Leaves are numbered 1 + sum(b_i * 2**(k-i)) from the path bits b_1..b_k, so
the leftmost leaf is 1 and a root label alone swaps the front and back
halves of 1..2**k.  All composition is left action: (g*h)(w) = g(h(w)).
Portraits are immutable values; every operation here is a pure function.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from sylow2.kernels import compose_labels, invert_labels, leaf_images
from sylow2.permgroup import Permutation


@dataclass(frozen=True)
class Vertex:
    """Tree vertex: 0-based level, 1-based position within the level."""

    level: int
    position: int

    def __post_init__(self):
        if self.level < 0:
            raise ValueError("level must be >= 0")
        if not 1 <= self.position <= 1 << self.level:
            raise ValueError(
                f"position {self.position} outside 1..{1 << self.level} "
                f"on level {self.level}"
            )

    def path(self) -> tuple[int, ...]:
        """Root-to-vertex branch bits (0 = left subtree)."""
        j = self.position - 1
        return tuple((j >> (self.level - 1 - i)) & 1 for i in range(self.level))


@dataclass(frozen=True)
class Portrait:
    """Label table of a depth-k tree automorphism.

    ``bits`` holds the 2**k - 1 labels in heap order (level l occupies
    indices 2**l - 1 .. 2**(l+1) - 2).
    """

    depth: int
    bits: bytes

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("depth must be >= 1 (the depth-0 tree is empty)")
        if len(self.bits) != (1 << self.depth) - 1:
            raise ValueError(
                f"depth {self.depth} needs {(1 << self.depth) - 1} labels, "
                f"got {len(self.bits)}"
            )
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("labels must be 0 or 1")

    def label(self, v: Vertex) -> int:
        if v.level >= self.depth:
            raise ValueError(f"level {v.level} outside depth-{self.depth} portrait")
        return self.bits[(1 << v.level) - 1 + v.position - 1]

    def level_bits(self, l: int) -> tuple[int, ...]:
        if not 0 <= l < self.depth:
            raise ValueError(f"level {l} outside 0..{self.depth - 1}")
        start = (1 << l) - 1
        return tuple(self.bits[start : start + (1 << l)])

    def active_vertices(self) -> list[Vertex]:
        """Vertices carrying label 1, in level order."""
        out = []
        for l in range(self.depth):
            start = (1 << l) - 1
            for j in range(1 << l):
                if self.bits[start + j]:
                    out.append(Vertex(l, j + 1))
        return out

    def is_identity(self) -> bool:
        return not any(self.bits)

    def __mul__(self, other: Portrait) -> Portrait:
        return compose(self, other)

    def inverse(self) -> Portrait:
        return inverse(self)

    def __str__(self) -> str:
        return format_portrait(self)

    def __repr__(self) -> str:
        return f"Portrait({format_portrait(self)!r})"


def from_levels(levels) -> Portrait:
    """Build a portrait from per-level bit sequences (level 0 first)."""
    levels = [tuple(level) for level in levels]
    for l, level in enumerate(levels):
        if len(level) != 1 << l:
            raise ValueError(f"level {l} must have {1 << l} bits, got {len(level)}")
    flat = bytes(b for level in levels for b in level)
    return Portrait(len(levels), flat)


def identity(k: int) -> Portrait:
    """The trivial automorphism of the depth-k tree."""
    if k < 1:
        raise ValueError("depth must be >= 1 (the depth-0 tree is empty)")
    return Portrait(k, bytes((1 << k) - 1))


def compose(g: Portrait, h: Portrait) -> Portrait:
    """Product g*h, h applied first: (g*h)(w) = g(h(w)).

    The label of the product at v is label_h(v) XOR label_g(h(v)).
    """
    if g.depth != h.depth:
        raise ValueError(f"depth mismatch: {g.depth} != {h.depth}")
    return Portrait(g.depth, compose_labels(g.depth, g.bits, h.bits))


def inverse(g: Portrait) -> Portrait:
    """Inverse automorphism: label at v is g's label at g^-1(v)."""
    return Portrait(g.depth, invert_labels(g.depth, g.bits))


def vertex_image(g: Portrait, v: Vertex) -> Vertex:
    """Image of a vertex, walking the path and flipping branch bits where
    the label at the already-traversed original prefix is set."""
    if v.level >= g.depth:
        raise ValueError(f"vertex level {v.level} outside depth-{g.depth} portrait")
    pos = 0  # 0-based position of the image prefix, per level
    orig = 0  # 0-based position of the original prefix
    for i, b in enumerate(v.path()):
        flip = g.bits[(1 << i) - 1 + orig]
        pos = 2 * pos + (b ^ flip)
        orig = 2 * orig + b
    return Vertex(v.level, pos + 1)


def leaf_permutation(g: Portrait) -> Permutation:
    """Action on the leaves 1..2**k (0-based internally)."""
    return Permutation(leaf_images(g.depth, g.bits))


def level_index(g: Portrait, l: int) -> int:
    """Number of active labels on level l."""
    return sum(g.level_bits(l))


def section(g: Portrait, v: Vertex) -> Portrait:
    """Portrait of the subtree rooted at v, carrying g's labels there.

    The root section is g itself; for v below the root the result has
    depth g.depth - v.level.
    """
    if v.level >= g.depth:
        raise ValueError(f"vertex level {v.level} outside depth-{g.depth} portrait")
    if v.level == 0:
        return g
    sub_depth = g.depth - v.level
    out = bytearray()
    j = v.position - 1
    for l in range(sub_depth):
        start = (1 << (v.level + l)) - 1 + (j << l)
        out.extend(g.bits[start : start + (1 << l)])
    return Portrait(sub_depth, bytes(out))


def distance(g: Portrait) -> int:
    """Maximal tree distance between two active vertices (0 if fewer than
    two are active)."""
    active = g.active_vertices()
    best = 0
    for a in range(len(active)):
        la, ja = active[a].level, active[a].position - 1
        for b in range(a + 1, len(active)):
            lb, jb = active[b].level, active[b].position - 1
            lc = min(la, lb)
            pa, pb = ja >> (la - lc), jb >> (lb - lc)
            # climb to the lowest common ancestor
            common = lc
            while pa != pb:
                pa >>= 1
                pb >>= 1
                common -= 1
            d = (la - common) + (lb - common)
            if d > best:
                best = d
    return best


def leaf_cycle_type(g: Portrait) -> Counter:
    """Cycle type of the leaf action, fixed points included."""
    return leaf_permutation(g).cycle_type()


def parse_portrait(text: str) -> Portrait:
    """Parse the "b/bb/bbbb" level format; inverse of format_portrait."""
    if not text:
        raise ValueError("empty portrait text")
    levels = text.split("/")
    for l, level in enumerate(levels):
        if len(level) != 1 << l:
            raise ValueError(
                f"level {l} must have {1 << l} bits, got {len(level)!r}"
            )
        if set(level) - {"0", "1"}:
            raise ValueError(f"invalid characters in level {level!r}")
    return Portrait(len(levels), bytes(int(c) for level in levels for c in level))


def format_portrait(g: Portrait) -> str:
    return "/".join(
        "".join(str(b) for b in g.level_bits(l)) for l in range(g.depth)
    )
