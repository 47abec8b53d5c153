# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the loops in ``_pykernels``; identical signatures and results."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def nilpotency_indices(const int[:, ::1] mul, int zero):
    cdef Py_ssize_t n = mul.shape[0]
    out_arr = np.zeros(n, dtype=np.int32)
    seen_arr = np.zeros(n, dtype=np.int32)
    cdef int[::1] out = out_arr
    cdef int[::1] seen = seen_arr
    cdef int x, p, k
    with nogil:
        for x in range(n):
            p = x
            k = 1
            while True:
                if p == zero:
                    out[x] = k
                    break
                if seen[p] == x + 1:
                    break
                seen[p] = x + 1
                p = mul[p, x]
                k += 1
    return out_arr


def unit_inverses(const int[:, ::1] mul, int one):
    cdef Py_ssize_t n = mul.shape[0]
    inv_arr = np.full(n, -1, dtype=np.int32)
    cdef int[::1] inv = inv_arr
    cdef int x, y
    with nogil:
        for x in range(n):
            for y in range(n):
                if mul[x, y] == one and mul[y, x] == one:
                    inv[x] = y
                    break
    return inv_arr


def jacobson_mask(const int[:, ::1] mul, const int[::1] one_minus,
                  const unsigned char[::1] is_unit, bint two_sided):
    cdef Py_ssize_t n = mul.shape[0]
    out_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr
    cdef int x, r, s, rx
    cdef bint ok
    with nogil:
        for x in range(n):
            ok = True
            for r in range(n):
                if not is_unit[one_minus[mul[r, x]]]:
                    ok = False
                    break
            if ok and two_sided:
                for r in range(n):
                    rx = mul[r, x]
                    for s in range(n):
                        if not is_unit[one_minus[mul[rx, s]]]:
                            ok = False
                            break
                    if not ok:
                        break
            out[x] = ok
    return out_arr


def two_sided_products(const int[:, ::1] mul, gens):
    cdef Py_ssize_t n = mul.shape[0]
    out_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr
    cdef int[::1] g_arr = np.asarray(list(gens), dtype=np.int32)
    cdef Py_ssize_t gi
    cdef int g, r, s, rg
    with nogil:
        for gi in range(g_arr.shape[0]):
            g = g_arr[gi]
            for r in range(n):
                rg = mul[r, g]
                for s in range(n):
                    out[mul[rg, s]] = 1
    return out_arr


def subgroup_closure(const int[:, ::1] add, seeds):
    cdef Py_ssize_t n = add.shape[0]
    member_arr = np.zeros(n, dtype=np.uint8)
    elems_arr = np.zeros(n, dtype=np.int32)
    cdef unsigned char[::1] member = member_arr
    cdef int[::1] elems = elems_arr
    cdef const unsigned char[::1] seed = np.ascontiguousarray(seeds, dtype=np.uint8)
    cdef Py_ssize_t count = 1, base, i
    cdef int g, t, y
    member[0] = 1
    elems[0] = 0
    with nogil:
        for g in range(n):
            if not seed[g] or member[g]:
                continue
            base = count
            t = g
            while not member[t]:
                for i in range(base):
                    y = add[elems[i], t]
                    if not member[y]:
                        member[y] = 1
                        elems[count] = y
                        count += 1
                t = add[t, g]
    return member_arr


def decompose_search(const int[:, ::1] add, const int[::1] neg, const int[:, ::1] mul,
                     xs, idem, target, bint weak, bint strong):
    cdef const int[::1] xv = np.ascontiguousarray(xs, dtype=np.int32)
    cdef const int[::1] ev = np.ascontiguousarray(idem, dtype=np.int32)
    cdef const unsigned char[::1] tv = np.ascontiguousarray(target, dtype=np.uint8)
    cdef Py_ssize_t nx = xv.shape[0], ne = ev.shape[0], i, j
    e_arr = np.full(nx, -1, dtype=np.int32)
    s_arr = np.zeros(nx, dtype=np.int8)
    cdef int[::1] e_out = e_arr
    cdef signed char[::1] s_out = s_arr
    cdef int x, e, w
    with nogil:
        for i in range(nx):
            x = xv[i]
            for j in range(ne):
                e = ev[j]
                w = add[x, neg[e]]
                if tv[w] and (not strong or mul[e, w] == mul[w, e]):
                    e_out[i] = e
                    s_out[i] = 1
                    break
                if weak:
                    w = add[x, e]
                    if tv[w] and (not strong or mul[e, w] == mul[w, e]):
                        e_out[i] = e
                        s_out[i] = -1
                        break
    return e_arr, s_arr
