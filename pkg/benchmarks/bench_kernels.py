#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the four hot paths: portrait composition, leaf expansion,
permutation products and a full stabilizer-chain build (the degree-28
alternating-side group, order 2**24).

Run: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from sylow2 import _kernels_py as pure

try:
    from sylow2 import _ckernels as compiled
except ImportError:
    compiled = None


def timed(fn, repeat):
    start = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - start) / repeat


def bench_kernel_ops(repeat):
    rng = random.Random(8)
    k = 8
    a = bytes(rng.getrandbits(1) for _ in range((1 << k) - 1))
    b = bytes(rng.getrandbits(1) for _ in range((1 << k) - 1))
    p = list(range(28))
    rng.shuffle(p)
    p = tuple(p)
    q = tuple(reversed(range(28)))
    rows = []
    for label, mod in backends():
        rows.append(
            (
                label,
                timed(lambda: mod.compose_labels(k, a, b), repeat) * 1e6,
                timed(lambda: mod.leaf_images(k, a), repeat) * 1e6,
                timed(lambda: mod.mult_perm(p, q), repeat) * 1e6,
            )
        )
    print(f"{'backend':10} {'compose k=8':>14} {'leaves k=8':>14} {'mult n=28':>14}")
    for label, c, l, m in rows:
        print(f"{label:10} {c:>11.2f} us {l:>11.2f} us {m:>11.2f} us")


def bench_chain():
    # full order + rank computation for the degree-28 group, per backend
    import importlib

    import sylow2.kernels as kernels_module

    results = []
    for label, mod in backends():
        kernels_module.mult_perm = mod.mult_perm
        kernels_module.inv_perm = mod.inv_perm
        kernels_module.compose_labels = mod.compose_labels
        kernels_module.invert_labels = mod.invert_labels
        kernels_module.leaf_images = mod.leaf_images
        for name in ("sylow2.permgroup", "sylow2.portrait", "sylow2.wreath",
                     "sylow2.composite"):
            importlib.reload(importlib.import_module(name))
        from sylow2 import composite, permgroup

        start = time.perf_counter()
        group = permgroup.PermGroup(28, composite.build_gens_A(28))
        order = group.order
        rank = permgroup.rank_of_2group(group)
        elapsed = time.perf_counter() - start
        assert order == 1 << 24 and rank == 8
        results.append((label, elapsed))
    print(f"\n{'backend':10} {'chain+rank n=28':>18}")
    for label, elapsed in results:
        print(f"{label:10} {elapsed * 1e3:>14.1f} ms")


def backends():
    out = [("python", pure)]
    if compiled is not None:
        out.append(("c", compiled))
    else:
        print("note: compiled kernels not built; timing the fallback only")
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5000)
    args = parser.parse_args()
    bench_kernel_ops(args.repeat)
    bench_chain()


if __name__ == "__main__":
    main()
