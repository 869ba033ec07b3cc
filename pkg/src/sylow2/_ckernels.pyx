# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernels.

Cython twin of ``sylow2._kernels_py`` -- same five functions, same
conventions (heap-ordered 0/1 label bytes, 0-based image tuples, left
action).  See the pure module for the full contract.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize, PyBytes_AS_STRING
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from cpython.ref cimport Py_INCREF
from libc.stdlib cimport malloc, free


def compose_labels(int k, bytes g, bytes h):
    """Label table of the product g.h (h applied first)."""
    cdef Py_ssize_t size = len(h)
    cdef const unsigned char *gp = <const unsigned char *> PyBytes_AS_STRING(g)
    cdef const unsigned char *hp = <const unsigned char *> PyBytes_AS_STRING(h)
    cdef bytes out = PyBytes_FromStringAndSize(NULL, size)
    cdef unsigned char *op = <unsigned char *> PyBytes_AS_STRING(out)
    cdef Py_ssize_t width = 1, base = 0, j, t
    cdef int l
    cdef unsigned char hb
    cdef Py_ssize_t *img = <Py_ssize_t *> malloc((size + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *nxt = <Py_ssize_t *> malloc((size + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *tmp
    if img == NULL or nxt == NULL:
        free(img)
        free(nxt)
        raise MemoryError()
    img[0] = 0
    for l in range(k):
        for j in range(width):
            op[base + j] = hp[base + j] ^ gp[base + img[j]]
        if l + 1 < k:
            for j in range(width):
                hb = hp[base + j]
                t = 2 * img[j]
                nxt[2 * j] = t + hb
                nxt[2 * j + 1] = t + (1 ^ hb)
            tmp = img
            img = nxt
            nxt = tmp
        base += width
        width <<= 1
    free(img)
    free(nxt)
    return out


def invert_labels(int k, bytes g):
    """Label table of the inverse automorphism."""
    cdef Py_ssize_t size = len(g)
    cdef const unsigned char *gp = <const unsigned char *> PyBytes_AS_STRING(g)
    cdef bytes out = PyBytes_FromStringAndSize(NULL, size)
    cdef unsigned char *op = <unsigned char *> PyBytes_AS_STRING(out)
    cdef Py_ssize_t width = 1, base = 0, j, t
    cdef int l
    cdef unsigned char gb
    cdef Py_ssize_t *img = <Py_ssize_t *> malloc((size + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *inv = <Py_ssize_t *> malloc((size + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *nxt = <Py_ssize_t *> malloc((size + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *tmp
    if img == NULL or inv == NULL or nxt == NULL:
        free(img)
        free(inv)
        free(nxt)
        raise MemoryError()
    img[0] = 0
    for l in range(k):
        for j in range(width):
            inv[img[j]] = j
        for j in range(width):
            op[base + j] = gp[base + inv[j]]
        if l + 1 < k:
            for j in range(width):
                gb = gp[base + j]
                t = 2 * img[j]
                nxt[2 * j] = t + gb
                nxt[2 * j + 1] = t + (1 ^ gb)
            tmp = img
            img = nxt
            nxt = tmp
        base += width
        width <<= 1
    free(img)
    free(inv)
    free(nxt)
    return out


def leaf_images(int k, bytes g):
    """Action on the 2**k leaves as a tuple of 0-based images."""
    cdef Py_ssize_t leaves = (<Py_ssize_t> 1) << k
    cdef const unsigned char *gp = <const unsigned char *> PyBytes_AS_STRING(g)
    cdef Py_ssize_t width = 1, base = 0, j, t
    cdef int l
    cdef unsigned char gb
    cdef Py_ssize_t *img = <Py_ssize_t *> malloc(leaves * sizeof(Py_ssize_t))
    cdef Py_ssize_t *nxt = <Py_ssize_t *> malloc(leaves * sizeof(Py_ssize_t))
    cdef Py_ssize_t *tmp
    if img == NULL or nxt == NULL:
        free(img)
        free(nxt)
        raise MemoryError()
    img[0] = 0
    for l in range(k):
        for j in range(width):
            gb = gp[base + j]
            t = 2 * img[j]
            nxt[2 * j] = t + gb
            nxt[2 * j + 1] = t + (1 ^ gb)
        tmp = img
        img = nxt
        nxt = tmp
        base += width
        width <<= 1
    out = PyTuple_New(leaves)
    for j in range(leaves):
        item = img[j]
        Py_INCREF(item)
        PyTuple_SET_ITEM(out, j, item)
    free(img)
    free(nxt)
    return out


def mult_perm(tuple p, tuple q):
    """Left-action product: (p.q)(x) = p(q(x))."""
    cdef Py_ssize_t n = len(q)
    cdef Py_ssize_t i
    out = PyTuple_New(n)
    for i in range(n):
        item = p[<Py_ssize_t> q[i]]
        Py_INCREF(item)
        PyTuple_SET_ITEM(out, i, item)
    return out


def inv_perm(tuple p):
    """Inverse permutation."""
    cdef Py_ssize_t n = len(p)
    cdef Py_ssize_t i
    out = PyTuple_New(n)
    for i in range(n):
        item = i
        Py_INCREF(item)
        PyTuple_SET_ITEM(out, <Py_ssize_t> p[i], item)
    return out
