# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Exhaustive minimum-weight search over a linear code.

Walks every codeword with a reflected mixed-radix Gray sequence, so each
step changes a single basis coefficient by one and the running codeword is
updated with one table-lookup row addition.
"""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"


def min_weight(unsigned short[:, :, ::1] up, unsigned short[:, :, ::1] down,
               unsigned short[:, ::1] add, long q):
    """Minimum Hamming weight over all nonzero codewords.

    up[j][c] is the row to add when the j-th coefficient steps from value
    c to c + 1; down[j][c] undoes that step.  add is the (q, q) index
    addition table of the field.
    """
    cdef Py_ssize_t k = up.shape[0]
    cdef Py_ssize_t n = up.shape[2]
    cdef Py_ssize_t i, pos
    cdef long j, w, best
    cdef long *a = <long *> malloc(k * sizeof(long))
    cdef long *f = <long *> malloc((k + 1) * sizeof(long))
    cdef long *o = <long *> malloc(k * sizeof(long))
    cdef unsigned short *cur = <unsigned short *> malloc(n * sizeof(unsigned short))
    if a == NULL or f == NULL or o == NULL or cur == NULL:
        free(a); free(f); free(o); free(cur)
        raise MemoryError()

    for j in range(k):
        a[j] = 0
        f[j] = j
        o[j] = 1
    f[k] = k
    for i in range(n):
        cur[i] = 0

    best = n + 1
    try:
        while True:
            j = f[0]
            f[0] = 0
            if j == k:
                break
            if o[j] == 1:
                for i in range(n):
                    cur[i] = add[cur[i], up[j, a[j], i]]
                a[j] += 1
            else:
                a[j] -= 1
                for i in range(n):
                    cur[i] = add[cur[i], down[j, a[j], i]]
            if a[j] == 0 or a[j] == q - 1:
                o[j] = -o[j]
                f[j] = f[j + 1]
                f[j + 1] = j + 1
            w = 0
            for i in range(n):
                if cur[i] != 0:
                    w += 1
            if w < best:
                best = w
                if best <= 1:
                    break
    finally:
        free(a); free(f); free(o); free(cur)
    return best
