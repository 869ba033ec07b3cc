"""Acceptance criteria, one test per criterion.

Each test prints one pass/fail line (visible with ``pytest -s``) and
enforces the stated exactness and runtime budget.  Budgets are wall-clock
upper bounds; the suite is far below them on either kernel backend.
"""

import random
import time
from collections import Counter

from sylow2 import composite, derived, wreath
from sylow2.composite import (
    build_gens_A,
    build_gens_S,
    iso_4k2,
    order_syl2_A,
    order_syl2_S,
    rank_syl2_A,
)
from sylow2.permgroup import (
    PermGroup,
    derived_subgroup,
    frattini_of_2group,
    parse_cycles,
    rank_of_2group,
)
from sylow2.portrait import Portrait, compose, leaf_permutation, level_index
from sylow2.wreath import all_portraits, gen_set_G, in_G, leaf_group

A14_GENS = [
    "(11,12)(13,14)",
    "(9,11)(10,12)",
    "(7,8)(9,10)",
    "(1,5)(2,6)(3,7)(4,8)",
    "(1,3)(2,4)",
]
A28_GENS = [
    "(25,27)(26,28)",
    "(23,24)(25,26)",
    "(17,21)(18,22)(19,23)(20,24)",
    "(17,19)(18,20)",
    "(15,16)(17,18)",
    "(1,9)(2,10)(3,11)(4,12)(5,13)(6,14)(7,15)(8,16)",
    "(1,5)(2,6)(3,7)(4,8)",
    "(1,3)(2,4)",
]


class budget:
    """Record elapsed time and enforce the stated wall-clock bound."""

    def __init__(self, seconds):
        self.limit = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc == (None, None, None):
            assert self.elapsed < self.limit, (
                f"took {self.elapsed:.2f}s, budget {self.limit}s"
            )
        return False


def report(number, text):
    print(f"[PASS] criterion {number:2d}: {text}")


def test_criterion_01_orders_of_G_k():
    with budget(5) as b:
        for k, expected in ((2, 4), (3, 64), (4, 16384)):
            group = leaf_group(gen_set_G(k))
            assert group.order == expected == 1 << ((1 << k) - 2)
    report(1, f"oracle orders of the even tree groups are 4, 64, 16384 "
              f"({b.elapsed:.2f}s)")


def test_criterion_02_a14_reproduction():
    with budget(5) as b:
        published = PermGroup(14, [parse_cycles(t, 14) for t in A14_GENS])
        assert published.order == 2**10
        assert rank_of_2group(published) == 5
        built = PermGroup(14, build_gens_A(14))
        assert built.order == 2**10
        assert rank_of_2group(built) == 5
    report(2, f"degree-14 published generators and our construction both "
              f"give order 2^10, rank 5 ({b.elapsed:.2f}s)")


def test_criterion_03_a28_reproduction():
    with budget(30) as b:
        published = PermGroup(28, [parse_cycles(t, 28) for t in A28_GENS])
        assert published.order == 2**24
        assert rank_of_2group(published) == 8
        built = PermGroup(28, build_gens_A(28))
        assert built.order == 2**24
        assert rank_of_2group(built) == 8
    report(3, f"degree-28 published generators and our construction both "
              f"give order 2^24, rank 8 ({b.elapsed:.2f}s)")


def test_criterion_04_commutator_criterion():
    by_predicate_b = {
        leaf_permutation(g).images
        for g in all_portraits(3)
        if derived.in_derived_B(g)
    }
    oracle_b = {
        e.images
        for e in derived_subgroup(leaf_group(wreath.gen_set_B(3))).elements(200)
    }
    assert by_predicate_b == oracle_b and len(oracle_b) == 16
    by_predicate_g = {
        leaf_permutation(g).images
        for g in all_portraits(3)
        if in_G(g) and derived.in_derived_G(g)
    }
    oracle_g = {
        e.images
        for e in derived_subgroup(leaf_group(gen_set_G(3))).elements(200)
    }
    assert by_predicate_g == oracle_g and len(oracle_g) == 8
    report(4, "even-index criteria match the oracle derived subgroups "
              "elementwise (16 and 8 elements)")


def test_criterion_05_squares():
    violations = 0
    for g in all_portraits(3):
        if not derived.in_derived_B(compose(g, g)):
            violations += 1
    rng = random.Random(505)
    for _ in range(10_000):
        g = Portrait(6, bytes(rng.getrandbits(1) for _ in range(63)))
        if not derived.in_derived_B(compose(g, g)):
            violations += 1
    assert violations == 0
    report(5, "all 128 depth-3 squares and 10^4 random depth-6 squares have "
              "even indexes everywhere")


def test_criterion_06_frattini_quotient():
    for k in (2, 3, 4):
        group = leaf_group(gen_set_G(k))
        phi = frattini_of_2group(group)
        assert group.order // phi.order == 1 << k
    report(6, "Frattini quotients have order 2^k for k = 2, 3, 4")


def test_criterion_07_sign_law():
    violations = 0
    for k in (1, 2, 3):
        for g in all_portraits(k):
            expected = -1 if level_index(g, k - 1) % 2 else 1
            if leaf_permutation(g).sign() != expected:
                violations += 1
    rng = random.Random(707)
    for _ in range(10_000):
        g = Portrait(8, bytes(rng.getrandbits(1) for _ in range(255)))
        expected = -1 if level_index(g, 7) % 2 else 1
        if leaf_permutation(g).sign() != expected:
            violations += 1
    assert violations == 0
    report(7, "leaf sign equals bottom-level index parity, exhaustively to "
              "depth 3 and on 10^4 random depth-8 portraits")


def test_criterion_08_isomorphism():
    source = PermGroup(4, build_gens_S(4))
    elements = source.elements(10)
    assert len(elements) == 8
    images = [iso_4k2(e) for e in elements]
    assert len({p.images for p in images}) == 8  # injective
    for a in elements:
        for b in elements:
            assert iso_4k2(a * b) == iso_4k2(a) * iso_4k2(b)
    image_group = PermGroup(6, [iso_4k2(g) for g in source.generators])
    assert image_group.order == order_syl2_A(6)
    stats = Counter(e.order() for e in image_group.elements(10))
    assert dict(stats) == {1: 1, 2: 5, 4: 2}
    report(8, "the degree-4 to degree-6 map is a bijective homomorphism on "
              "all 64 pairs; image order statistics {1:1, 2:5, 4:2}")


def test_criterion_09_rank_sweep():
    with budget(120) as b:
        for n in (6, 8, 12, 14, 16, 20, 24, 28):
            gens = build_gens_A(n)
            assert rank_of_2group(PermGroup(n, gens)) == len(gens) == rank_syl2_A(n)
    report(9, f"oracle ranks match the closed formula at n = 6, 8, 12, 14, "
              f"16, 20, 24, 28 ({b.elapsed:.2f}s)")


def test_criterion_10_order_ratios():
    for n in range(2, 65):
        if n % 2 == 1:
            assert order_syl2_A(n) == order_syl2_A(n - 1)
        if n % 4 == 3 and n >= 7:  # degenerate below 7: both sides trivial
            assert order_syl2_A(n) == 2 * order_syl2_A(n - 2)
        if n % 2 == 0 and n >= 4:
            v = (n & -n).bit_length() - 1
            assert order_syl2_A(n) == order_syl2_S(n - 1) * 2 ** (v - 1)
    for n in range(4, 17):
        assert PermGroup(n, build_gens_A(n)).order == order_syl2_A(n)
        assert PermGroup(n, build_gens_S(n)).order == order_syl2_S(n)
    report(10, "neighbor order ratios hold from the formulas for n <= 64 "
               "and against the oracle for n <= 16")


def test_criterion_11_non_closure():
    t_elements = [g for g in all_portraits(3) if wreath.is_type_T(g)]
    c_elements = [g for g in all_portraits(3) if wreath.is_type_C(g)]
    violations = 0
    for t1 in t_elements:
        for t2 in t_elements:
            if wreath.is_type_T(compose(t1, t2)):
                violations += 1
    for c in c_elements:
        if wreath.is_type_C(compose(c, c)):
            violations += 1
    assert violations == 0
    report(11, "no product of two odd-half elements stays odd-half; no "
               "square of a combined element stays combined")


def test_criterion_12_diagonal_bases():
    for k, expected in ((2, 2), (3, 16)):
        candidates = sum(1 for _ in wreath._diagonal_candidates("B", k))
        generating = wreath.enumerate_diagonal_bases("B", k)
        assert candidates == len(generating) == expected
        assert expected == wreath.count_diagonal_bases("B", k)
    # the even-side count at depth 3 is fixed by exhaustive enumeration and
    # recorded as the closed form (the published formula is inconsistent and
    # is documented, not asserted)
    enumerated = len(wreath.enumerate_diagonal_bases("G", 3))
    assert enumerated == wreath.count_diagonal_bases("G", 3) == 8
    report(12, "every diagonal candidate generates; counts 2 and 16 for the "
               "full groups at depths 2, 3, and 8 recorded for the even "
               "group at depth 3")


def test_criterion_13_commutator_width():
    with budget(10) as b:
        members = list(all_portraits(3))
        targets = {g.bits for g in members if derived.in_derived_B(g)}
        assert len(targets) == 16
        found = set()
        for a in members:
            ab_left = a
            a_inv = a.inverse()
            for b_ in members:
                comm = compose(compose(ab_left, b_), compose(a_inv, b_.inverse()))
                found.add(comm.bits)
        assert targets <= found
        assert all(derived.in_derived_B(Portrait(3, bits)) for bits in found)
    report(13, f"all 16 derived elements of the depth-3 full group are "
               f"single commutators, 128x128 exhaustive ({b.elapsed:.2f}s)")
