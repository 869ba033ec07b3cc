"""Backend equivalence: compiled and pure kernels must agree bit for bit."""

import random

import pytest

from sylow2 import _kernels_py as pure
from sylow2 import kernels

compiled = pytest.importorskip(
    "sylow2._ckernels", reason="compiled kernels not built"
)


def random_labels(rng, k):
    return bytes(rng.getrandbits(1) for _ in range((1 << k) - 1))


def random_perm(rng, n):
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def test_backend_is_reported():
    assert kernels.BACKEND in ("c", "python")


@pytest.mark.parametrize("k", range(1, 9))
def test_label_kernels_agree(k):
    rng = random.Random(k)
    for _ in range(200):
        a, b = random_labels(rng, k), random_labels(rng, k)
        assert compiled.compose_labels(k, a, b) == pure.compose_labels(k, a, b)
        assert compiled.invert_labels(k, a) == pure.invert_labels(k, a)
        assert compiled.leaf_images(k, a) == pure.leaf_images(k, a)


def test_label_kernels_agree_exhaustive_k2():
    masks = range(8)
    for ma in masks:
        a = bytes((ma >> i) & 1 for i in range(3))
        assert compiled.invert_labels(2, a) == pure.invert_labels(2, a)
        assert compiled.leaf_images(2, a) == pure.leaf_images(2, a)
        for mb in masks:
            b = bytes((mb >> i) & 1 for i in range(3))
            assert compiled.compose_labels(2, a, b) == pure.compose_labels(2, a, b)


@pytest.mark.parametrize("n", [1, 2, 7, 28, 64, 256])
def test_perm_kernels_agree(n):
    rng = random.Random(n)
    for _ in range(200):
        p, q = random_perm(rng, n), random_perm(rng, n)
        assert compiled.mult_perm(p, q) == pure.mult_perm(p, q)
        assert compiled.inv_perm(p) == pure.inv_perm(p)
