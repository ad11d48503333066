# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse term kernels; same contract as ``_pykernels``."""

from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from cpython.ref cimport Py_INCREF
from libc.stdlib cimport malloc, free

IMPLEMENTATION = "cython"


cdef long* _unpack(list keys, Py_ssize_t arity) except NULL:
    cdef Py_ssize_t n = len(keys), i, j
    cdef long* buf = <long*> malloc((n * arity + 1) * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        key = <tuple> keys[i]
        for j in range(arity):
            buf[i * arity + j] = key[j]
    return buf


cdef inline tuple _pack(long* src, Py_ssize_t arity):
    cdef tuple t = PyTuple_New(arity)
    cdef Py_ssize_t j
    cdef object v
    for j in range(arity):
        v = src[j]
        Py_INCREF(v)
        PyTuple_SET_ITEM(t, j, v)
    return t


def add_terms(dict a, dict b, sign=1):
    cdef dict out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + sign * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def mul_terms(dict a, dict b):
    if len(a) < len(b):
        a, b = b, a
    if not a or not b:
        return {}
    cdef list ka = list(a.keys()), kb = list(b.keys())
    cdef list ca = list(a.values()), cb = list(b.values())
    cdef Py_ssize_t arity = len(<tuple> ka[0])
    cdef Py_ssize_t na = len(ka), nb = len(kb), i, j, t
    cdef long* ea = _unpack(ka, arity)
    cdef long* eb
    cdef long* tmp
    cdef dict out = {}
    try:
        eb = _unpack(kb, arity)
        tmp = <long*> malloc((arity + 1) * sizeof(long))
        try:
            for i in range(na):
                ci = ca[i]
                for j in range(nb):
                    for t in range(arity):
                        tmp[t] = ea[i * arity + t] + eb[j * arity + t]
                    key = _pack(tmp, arity)
                    prev = out.get(key)
                    if prev is None:
                        out[key] = ci * cb[j]
                    else:
                        out[key] = prev + ci * cb[j]
        finally:
            free(eb)
            free(tmp)
    finally:
        free(ea)
    return {e: c for e, c in out.items() if c}


def scale_terms(dict a, c):
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def scale_exponents(dict a, long factor):
    cdef dict out = {}
    cdef Py_ssize_t j, arity
    cdef object v, t
    for e, c in a.items():
        arity = len(<tuple> e)
        t = PyTuple_New(arity)
        for j in range(arity):
            v = (<long> e[j]) * factor
            Py_INCREF(v)
            PyTuple_SET_ITEM(t, j, v)
        out[t] = c
    return out


def reduce_exponent_mod(dict a, Py_ssize_t pos, long modulus):
    cdef dict out = {}
    cdef long x
    for e, c in a.items():
        x = e[pos]
        if 0 <= x < modulus:
            r = e
        else:
            x = x % modulus
            if x < 0:
                x += modulus
            r = e[:pos] + (x,) + e[pos + 1:]
        prev = out.get(r)
        out[r] = c if prev is None else prev + c
    return {e: c for e, c in out.items() if c}
