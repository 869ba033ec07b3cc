"""Claim registry, verification reports and the self-test suite.

A claim is an identifier plus a parameter dict that fully determines two
computations: the expected value (from a closed formula or a recorded
source) and the computed value (from the oracle or an exhaustive run).
Reports serialize both, so re-reading a report and re-running its claims
must reproduce the computed values bit for bit.

Report records carry: claim id, params, expected value, provenance tag,
computed value, pass flag and wall time.  Record lists are always sorted by
claim id, so report ordering is canonical no matter how the claims ran.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass

from sylow2 import composite, derived, permgroup, wreath
from sylow2.portrait import (
    Portrait,
    compose,
    distance,
    format_portrait,
    identity,
    inverse,
    leaf_cycle_type,
    leaf_permutation,
    level_index,
    parse_portrait,
)

DEFAULT_SEED = 1729
ORACLE_LIMIT = 32  # no oracle work above this many points


@dataclass
class VerificationReport:
    claim: str
    params: dict
    expected: object
    provenance: str
    computed: object
    passed: bool
    wall_time_s: float


def _random_portrait(rng, k):
    size = (1 << k) - 1
    return Portrait(k, bytes(rng.getrandbits(1) for _ in range(size)))


def _random_g_element(rng, k):
    g = _random_portrait(rng, k)
    if level_index(g, k - 1) % 2 == 0:
        return g
    bits = bytearray(g.bits)
    bits[(1 << (k - 1)) - 1] ^= 1  # fix the bottom parity
    return Portrait(k, bytes(bits))


# --------------------------------------------------------------------------
# claim registry
# --------------------------------------------------------------------------

def _composite_group(params):
    n, kind = params["n"], params["kind"]
    if kind == "A":
        gens = composite.build_gens_A(n)
    else:
        gens = composite.build_gens_S(n) if n >= 2 else []
    return permgroup.PermGroup(n, gens), gens


def _expected_order_log2(params):
    n, kind = params["n"], params["kind"]
    order = composite.order_syl2_A(n) if kind == "A" else composite.order_syl2_S(n)
    return order.bit_length() - 1


def _claim_order_log2(params):
    group, _ = _composite_group(params)
    return group.order.bit_length() - 1


def _claim_legendre(params):
    n, kind = params["n"], params["kind"]
    e = composite.two_part_of_factorial(n)
    if kind == "A" and n >= 2:
        e -= 1
    return e


def _claim_rank(params):
    group, _ = _composite_group(params)
    return permgroup.rank_of_2group(group)


def _claim_all_even(params):
    _, gens = _composite_group(params)
    return all(g.sign() == 1 for g in gens)


def _claim_fixed_point(params):
    group, _ = _composite_group(params)
    n = params["n"]
    return n if group.orbit(n - 1) == {n - 1} else None


def _claim_neighbor_ratios(params):
    n = params["n"]
    ok = True
    if n % 2 == 1 and n >= 3:
        ok &= composite.order_syl2_A(n) == composite.order_syl2_A(n - 1)
        ok &= composite.order_syl2_S(n) == composite.order_syl2_S(n - 1)
    if n % 4 == 3 and n >= 7:  # at n = 3 both sides are trivial groups
        ok &= composite.order_syl2_A(n) == 2 * composite.order_syl2_A(n - 2)
    if n % 2 == 0 and n >= 4:
        v = (n & -n).bit_length() - 1
        ok &= (
            composite.order_syl2_A(n) // composite.order_syl2_S(n - 1)
            == 1 << (v - 1)
        )
    return bool(ok)


def _claim_enumeration_even(params):
    group, _ = _composite_group(params)
    elements = group.elements(4096)
    return len(elements) == group.order and all(g.sign() == 1 for g in elements)


def _tree_gens(params):
    k, kind = params["k"], params["kind"]
    return wreath.gen_set_G(k) if kind == "G" else wreath.gen_set_B(k)


def _tree_group(params):
    return wreath.leaf_group(_tree_gens(params))


def _claim_tree_order_log2(params):
    return _tree_group(params).order.bit_length() - 1


def _claim_tree_rank(params):
    return permgroup.rank_of_2group(_tree_group(params))


def _claim_frattini_quotient_log2(params):
    group = _tree_group(params)
    phi = permgroup.frattini_of_2group(group)
    return (group.order // phi.order).bit_length() - 1


def _claim_derived_order_log2(params):
    return permgroup.derived_subgroup(_tree_group(params)).order.bit_length() - 1


def _claim_w_count(params):
    k = params["k"]
    return sum(1 for g in wreath.all_portraits(k) if wreath.in_W(g))


def _claim_derived_match(params):
    k, kind = params["k"], params["kind"]
    member = derived.in_derived_G if kind == "G" else derived.in_derived_B
    group = _tree_group(params)
    sub = permgroup.derived_subgroup(group)
    by_predicate = {
        leaf_permutation(g).images
        for g in wreath.all_portraits(k)
        if (kind == "B" or wreath.in_G(g)) and member(g)
    }
    by_oracle = {g.images for g in sub.elements(4096)}
    return by_predicate == by_oracle


def _claim_sign_law_sample(params):
    rng = random.Random(params["seed"])
    violations = 0
    k = params["k"]
    for _ in range(params["samples"]):
        g = _random_portrait(rng, k)
        expect = -1 if level_index(g, k - 1) % 2 else 1
        if leaf_permutation(g).sign() != expect:
            violations += 1
    return violations


_EXPECTED = {
    "composite/order-log2": lambda p: (_expected_order_log2(p), "formula"),
    "composite/legendre-cross-check": lambda p: (_expected_order_log2(p), "formula"),
    "composite/rank": lambda p: (
        composite.rank_syl2_A(p["n"]) if p["kind"] == "A"
        else composite.rank_syl2_S(p["n"]),
        "formula",
    ),
    "composite/all-even": lambda p: (True, "formula"),
    "composite/fixed-point": lambda p: (p["n"], "formula"),
    "composite/neighbor-ratios": lambda p: (True, "formula"),
    "composite/enumeration-even": lambda p: (True, "derived"),
    "tree/order-log2": lambda p: (
        (1 << p["k"]) - (1 if p["kind"] == "B" else 2),
        "formula",
    ),
    "tree/rank": lambda p: (p["k"], "formula"),
    "tree/frattini-quotient-log2": lambda p: (p["k"], "formula"),
    "tree/derived-order-log2": lambda p: (
        (1 << p["k"]) - 1 - p["k"] if p["kind"] == "B"
        else (1 << p["k"]) - 2 - p["k"],
        "derived",
    ),
    "tree/w-count": lambda p: (1 << ((1 << (p["k"] - 1)) - 1), "formula"),
    "tree/derived-matches-predicate": lambda p: (True, "derived"),
    "tree/sign-law-violations": lambda p: (0, "formula"),
}

_COMPUTE = {
    "composite/order-log2": _claim_order_log2,
    "composite/legendre-cross-check": _claim_legendre,
    "composite/rank": _claim_rank,
    "composite/all-even": _claim_all_even,
    "composite/fixed-point": _claim_fixed_point,
    "composite/neighbor-ratios": _claim_neighbor_ratios,
    "composite/enumeration-even": _claim_enumeration_even,
    "tree/order-log2": _claim_tree_order_log2,
    "tree/rank": _claim_tree_rank,
    "tree/frattini-quotient-log2": _claim_frattini_quotient_log2,
    "tree/derived-order-log2": _claim_derived_order_log2,
    "tree/w-count": _claim_w_count,
    "tree/derived-matches-predicate": _claim_derived_match,
    "tree/sign-law-violations": _claim_sign_law_sample,
}


def plan_claims(kind: str, target: int, level: str, seed: int) -> list[tuple[str, dict]]:
    """Choose the claims to run for one verification target."""
    plan = []
    if kind in ("A", "S"):
        n = target
        base = {"kind": kind, "n": n}
        plan.append(("composite/legendre-cross-check", base))
        plan.append(("composite/neighbor-ratios", base))
        if n <= ORACLE_LIMIT:
            plan.append(("composite/order-log2", base))
            plan.append(("composite/rank", base))
            if kind == "A":
                plan.append(("composite/all-even", base))
            if n % 2 == 1:
                plan.append(("composite/fixed-point", base))
            if level == "full":
                if kind == "A" and composite.order_syl2_A(n) <= 4096:
                    plan.append(("composite/enumeration-even", base))
                exps = composite.decompose(n).exponents
                if kind == "A" and len(exps) == 1 and exps[0] >= 2:
                    k = exps[0]
                    tree = {"kind": "G", "k": k}
                    plan.append(("tree/frattini-quotient-log2", tree))
                    plan.append(("tree/derived-order-log2", tree))
    elif kind in ("B", "G"):
        k = target
        if k > 5:
            raise ValueError("tree verification is capped at depth 5")
        base = {"kind": kind, "k": k}
        plan.append(("tree/order-log2", base))
        plan.append(("tree/rank", base))
        plan.append(
            ("tree/sign-law-violations", dict(base, seed=seed, samples=2000))
        )
        if kind == "G":
            plan.append(("tree/frattini-quotient-log2", base))
            plan.append(("tree/derived-order-log2", base))
            if level == "full" and k <= 4:
                plan.append(("tree/w-count", base))
        if level == "full" and k <= 3:
            plan.append(("tree/derived-matches-predicate", base))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return sorted(plan, key=lambda item: item[0])


def run_claim(claim: str, params: dict) -> VerificationReport:
    expected, provenance = _EXPECTED[claim](params)
    start = time.perf_counter()
    computed = _COMPUTE[claim](params)
    elapsed = time.perf_counter() - start
    return VerificationReport(
        claim=claim,
        params=dict(params),
        expected=expected,
        provenance=provenance,
        computed=computed,
        passed=computed == expected,
        wall_time_s=round(elapsed, 6),
    )


def run_verification(kind: str, target: int, level: str = "quick",
                     seed: int = DEFAULT_SEED) -> list[VerificationReport]:
    return [run_claim(c, p) for c, p in plan_claims(kind, target, level, seed)]


def recompute(record: dict):
    """Re-run one serialized claim record; returns the fresh computed value."""
    return _COMPUTE[record["claim"]](record["params"])


def report_to_json(kind, target, level, seed, records) -> dict:
    doc = {
        "kind": kind,
        "target": target,
        "level": level,
        "seed": seed,
        "pass": all(r.passed for r in records),
        "claims": [asdict(r) for r in records],
    }
    if kind in ("A", "S") and target <= ORACLE_LIMIT:
        doc["summary"] = composite.verification_record(target, kind)
    return doc


def write_report(path, doc):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def read_report(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


# --------------------------------------------------------------------------
# self test
# --------------------------------------------------------------------------

def _bruteforce_closure(gens, cap):
    """Set of all products of the generators, by plain breadth search."""
    if not gens:
        return {()}
    frontier = set(g.images for g in gens)
    seen = set(frontier)
    seen.add(tuple(range(gens[0].degree)))
    while frontier:
        nxt = set()
        for a in frontier:
            for g in gens:
                c = permgroup.Permutation(a) * g
                if c.images not in seen:
                    if len(seen) >= cap:
                        raise ValueError("closure cap exceeded")
                    seen.add(c.images)
                    nxt.add(c.images)
        frontier = nxt
    return seen


def _check_parse_roundtrip(rng):
    for k in range(1, 4):
        for g in wreath.all_portraits(k):
            if parse_portrait(format_portrait(g)) != g:
                return False
    for _ in range(50):
        g = _random_portrait(rng, 8)
        if parse_portrait(format_portrait(g)) != g:
            return False
    return True


def _check_group_laws(rng):
    for _ in range(100):
        k = rng.randrange(2, 9)
        g = _random_portrait(rng, k)
        h = _random_portrait(rng, k)
        if compose(g, inverse(g)) != identity(k):
            return False
        if compose(inverse(g), g) != identity(k):
            return False
        if compose(identity(k), h) != h or compose(h, identity(k)) != h:
            return False
    return True


def _check_associativity(rng):
    for _ in range(100):
        k = rng.randrange(2, 9)
        a, b, c = (_random_portrait(rng, k) for _ in range(3))
        if compose(compose(a, b), c) != compose(a, compose(b, c)):
            return False
    return True


def _check_leaf_homomorphism(rng):
    for g in wreath.all_portraits(2):
        for h in wreath.all_portraits(2):
            if leaf_permutation(compose(g, h)) != leaf_permutation(g) * leaf_permutation(h):
                return False
    for _ in range(100):
        k = rng.randrange(2, 9)
        g, h = _random_portrait(rng, k), _random_portrait(rng, k)
        if leaf_permutation(compose(g, h)) != leaf_permutation(g) * leaf_permutation(h):
            return False
    return True


def _check_sign_law(rng):
    for k in range(1, 4):
        for g in wreath.all_portraits(k):
            expect = -1 if level_index(g, k - 1) % 2 else 1
            if leaf_permutation(g).sign() != expect:
                return False
    for _ in range(200):
        g = _random_portrait(rng, 8)
        expect = -1 if level_index(g, 7) % 2 else 1
        if leaf_permutation(g).sign() != expect:
            return False
    return True


def _check_single_label_cycle_type(rng):
    for k in range(1, 7):
        for l in range(k):
            for j in range(1 << l):
                bits = bytearray((1 << k) - 1)
                bits[(1 << l) - 1 + j] = 1
                ct = leaf_cycle_type(Portrait(k, bytes(bits)))
                want = {2: 1 << (k - l - 1)}
                fixed = (1 << k) - (1 << (k - l))
                if fixed:
                    want[1] = fixed
                if dict(ct) != want:
                    return False
    return True


def _check_distance_isometry(rng):
    for _ in range(200):
        k = rng.randrange(2, 7)
        level = rng.randrange(1, k)
        g_bits = bytearray((1 << k) - 1)
        start = (1 << level) - 1
        for j in range(1 << level):
            g_bits[start + j] = rng.getrandbits(1)
        g = Portrait(k, bytes(g_bits))
        a_bits = bytearray((1 << k) - 1)
        for i in range((1 << level) - 1):
            a_bits[i] = rng.getrandbits(1)
        a = Portrait(k, bytes(a_bits))
        conj = compose(a, compose(g, inverse(a)))
        if distance(conj) != distance(g):
            return False
    return True


def _check_in_g_flat_vs_recursive(rng):
    for g in wreath.all_portraits(3):
        if wreath.in_G(g) != wreath.in_G_recursive(g):
            return False
    for _ in range(100):
        k = rng.randrange(2, 9)
        g = _random_portrait(rng, k)
        if wreath.in_G(g) != wreath.in_G_recursive(g):
            return False
    return True


def _check_in_g_even_sign(rng):
    for k in (2, 3):
        for g in wreath.all_portraits(k):
            if wreath.in_G(g) != (leaf_permutation(g).sign() == 1):
                return False
    return True


def _check_non_closure(rng):
    t_elements = [g for g in wreath.all_portraits(3) if wreath.is_type_T(g)]
    c_elements = [g for g in wreath.all_portraits(3) if wreath.is_type_C(g)]
    for t1 in t_elements:
        for t2 in t_elements:
            if wreath.is_type_C(compose(t1, t2)):
                return False
    for c in c_elements:
        if wreath.is_type_C(compose(c, c)):
            return False
    return True


def _check_w_census(rng):
    for k in (2, 3, 4):
        count = sum(1 for g in wreath.all_portraits(k) if wreath.in_W(g))
        if count != wreath.order_formula(wreath.GroupKind("W", k)):
            return False
    return True


def _check_abelianization(rng):
    for g in wreath.all_portraits(3):
        for h in (wreath.tau(3), wreath.alpha(3, 1)):
            lhs = derived.abelianization_B(compose(g, h))
            rhs = tuple(
                a ^ b
                for a, b in zip(
                    derived.abelianization_B(g), derived.abelianization_B(h)
                )
            )
            if lhs != rhs:
                return False
    for _ in range(100):
        k = rng.randrange(2, 9)
        g = _random_g_element(rng, k)
        h = _random_g_element(rng, k)
        lhs = derived.abelianization_G(compose(g, h))
        rhs = tuple(
            a ^ b
            for a, b in zip(derived.abelianization_G(g), derived.abelianization_G(h))
        )
        if lhs != rhs:
            return False
    return True


def _check_squares(rng):
    return derived.squares_in_derived_check(3) and derived.squares_in_derived_check(
        6, samples=500, seed=rng.randrange(1 << 30)
    )


def _check_derived_oracle_k3(rng):
    return _claim_derived_match({"kind": "G", "k": 3}) and _claim_derived_match(
        {"kind": "B", "k": 3}
    )


def _check_order_vs_closure(rng):
    cases = [
        ["(1,2,3,4)", "(1,2)"],
        ["(1,3)(2,4)", "(1,2)(3,4)"],
        ["(1,2,3,4)", "(1,3)"],
        ["(1,2)", "(3,4)"],
    ]
    for texts in cases:
        gens = [permgroup.parse_cycles(t, 4) for t in texts]
        group = permgroup.PermGroup(4, gens)
        if group.order != len(_bruteforce_closure(gens, 512)):
            return False
    b3 = wreath.leaf_group(wreath.gen_set_B(3))
    return b3.order == len(_bruteforce_closure(
        [leaf_permutation(g) for g in wreath.gen_set_B(3)], 512))


def _check_congruence_multiplicative(rng):
    for _ in range(100):
        n = rng.randrange(2, 21)
        layout = composite.block_layout(n)
        parts1, parts2 = [], []
        for block in layout.blocks:
            if block.exponent == 0:
                parts1.append(None)
                parts2.append(None)
            else:
                parts1.append(_random_portrait(rng, block.exponent))
                parts2.append(_random_portrait(rng, block.exponent))
        e1 = composite.SubdirectElement(layout, tuple(parts1))
        e2 = composite.SubdirectElement(layout, tuple(parts2))
        prod = composite.SubdirectElement(
            layout,
            tuple(
                None if a is None else compose(a, b)
                for a, b in zip(parts1, parts2)
            ),
        )
        if composite.check_congruence(prod) != (
            composite.check_congruence(e1) == composite.check_congruence(e2)
        ):
            return False
    return True


def _check_neighbor_ratios(rng):
    return all(_claim_neighbor_ratios({"n": n}) for n in range(3, 65))


SELFTEST_CHECKS = [
    ("portrait/parse-format-roundtrip", _check_parse_roundtrip),
    ("portrait/group-laws", _check_group_laws),
    ("portrait/associativity", _check_associativity),
    ("portrait/leaf-homomorphism", _check_leaf_homomorphism),
    ("portrait/sign-law", _check_sign_law),
    ("portrait/single-label-cycle-type", _check_single_label_cycle_type),
    ("portrait/distance-isometry", _check_distance_isometry),
    ("wreath/in-G-flat-vs-recursive", _check_in_g_flat_vs_recursive),
    ("wreath/in-G-equals-even-sign", _check_in_g_even_sign),
    ("wreath/non-closure-of-T-and-C", _check_non_closure),
    ("wreath/W-census", _check_w_census),
    ("derived/abelianization-homomorphism", _check_abelianization),
    ("derived/squares-in-derived", _check_squares),
    ("derived/derived-oracle-equality-k3", _check_derived_oracle_k3),
    ("permgroup/order-vs-bruteforce-closure", _check_order_vs_closure),
    ("composite/congruence-multiplicative", _check_congruence_multiplicative),
    ("composite/neighbor-ratios", _check_neighbor_ratios),
]


def run_selftest(seed: int = DEFAULT_SEED, out=print) -> bool:
    """Run every named invariant check; report one line per check."""
    all_ok = True
    for name, check in SELFTEST_CHECKS:
        rng = random.Random(seed)
        ok = check(rng)
        out(f"{'ok  ' if ok else 'FAIL'} {name}")
        if not ok:
            all_ok = False
    return all_ok
