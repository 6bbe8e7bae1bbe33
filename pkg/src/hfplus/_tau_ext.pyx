# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled tau kernels. Same contract as ``hfplus._tau_py``.

Callers guarantee every intermediate fits in a signed 64-bit integer.
"""

cimport cython
from cpython.array cimport array, clone

BACKEND = "cython"

cdef array _LONGS = array("q")


@cython.cdivision(True)
cdef inline long long _floordiv(long long x, long long y) nogil:
    # C division truncates toward zero; step down for mixed signs
    cdef long long q = x // y
    if (x % y != 0) and ((x < 0) != (y < 0)):
        q -= 1
    return q


def tau_values(long long e0, a, b, long long bound):
    cdef Py_ssize_t m = len(a), i
    cdef array aa = array("q", a)
    cdef array bb = array("q", b)
    cdef long long[:] av = aa
    cdef long long[:] bv = bb
    cdef array out = clone(_LONGS, bound + 1, zero=True)
    cdef long long[:] ov = out
    cdef long long j, d, t = 0
    with nogil:
        for j in range(bound):
            d = 1 - j * e0
            for i in range(m):
                d += _floordiv(-j * bv[i], av[i])
            t += d
            ov[j + 1] = t
    return out.tolist()


def extrema(values):
    cdef array vv = array("q", values)
    cdef long long[:] v = vv
    cdef Py_ssize_t n = len(vv), s, e
    cdef long long cur, left, right
    cdef bint has_left, has_right
    vals, starts, ends = [], [], []
    if n == 0:
        return vals, starts, ends
    # walk plateau runs, remembering the previous run value
    s = 0
    has_left = False
    left = 0
    while s < n:
        cur = v[s]
        e = s
        while e + 1 < n and v[e + 1] == cur:
            e += 1
        has_right = e + 1 < n
        right = v[e + 1] if has_right else 0
        if (((not has_left) or left > cur) and ((not has_right) or right > cur)) or (
            has_left and left < cur and has_right and right < cur
        ):
            vals.append(cur)
            starts.append(s)
            ends.append(e)
        has_left = True
        left = cur
        s = e + 1
    return vals, starts, ends
