# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled chamber/alcove reduction; same contract as ``_kernels_py``."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def reflect_batch(points, simple_roots, theta, comarks, long shifted_level):
    if shifted_level == 0:
        raise ValueError("shifted level must be positive (affine) or negative (finite)")
    cdef cnp.int64_t[:, ::1] pts = np.ascontiguousarray(points, dtype=np.int64)
    cdef cnp.int64_t[:, ::1] roots = np.ascontiguousarray(simple_roots, dtype=np.int64)
    cdef cnp.int64_t[::1] th = np.ascontiguousarray(theta, dtype=np.int64)
    cdef cnp.int64_t[::1] com = np.ascontiguousarray(comarks, dtype=np.int64)
    cdef Py_ssize_t n = pts.shape[0], r = pts.shape[1]
    out_arr = np.array(pts, dtype=np.int64, copy=True)
    signs_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[:, ::1] out = out_arr
    cdef cnp.int64_t[::1] signs = signs_arr
    cdef bint affine = shifted_level >= 0
    cdef Py_ssize_t p, i, j
    cdef long sign
    cdef cnp.int64_t xi, x0
    cdef bint moved
    for p in range(n):
        sign = 1
        while True:
            moved = False
            for i in range(r):
                xi = out[p, i]
                if xi < 0:
                    for j in range(r):
                        out[p, j] -= xi * roots[i, j]
                    sign = -sign
                    moved = True
                    break
                if xi == 0:
                    sign = 0
                    break
            if sign == 0:
                break
            if moved:
                continue
            if affine:
                x0 = shifted_level
                for j in range(r):
                    x0 -= com[j] * out[p, j]
                if x0 == 0:
                    sign = 0
                    break
                if x0 < 0:
                    for j in range(r):
                        out[p, j] += x0 * th[j]
                    sign = -sign
                    continue
            break
        signs[p] = sign
    return out_arr, signs_arr
