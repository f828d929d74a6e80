# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled dense row reduction mod p.

Semantics must match ``hochcat._gfcore_py.rref_mod_p`` exactly: same pivot
order, same fully reduced output.  p is a prime below 2^31, so products of
two residues fit comfortably in a 64-bit signed integer.
"""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid; a is nonzero mod p
    cdef long long g = a % p, x = 1, x1 = 0, g1 = p, q, t
    while g1:
        q = g // g1
        g, g1 = g1, g - q * g1
        x, x1 = x1, x - q * x1
    x %= p
    if x < 0:
        x += p
    return x


def rref_mod_p(entries, Py_ssize_t nrows, Py_ssize_t ncols, long long p):
    """Reduced row echelon form of a dense row-major matrix over GF(p).

    Same contract as the pure-Python kernel: returns (pivot_cols, rref_entries)
    with only the nonzero rows kept.
    """
    cdef Py_ssize_t n = nrows * ncols
    cdef long long *a
    cdef Py_ssize_t i, j, c, r, piv, base, pbase
    cdef long long inv, f, v
    if n == 0 or nrows == 0 or ncols == 0:
        return [], []
    a = <long long *> malloc(n * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    try:
        i = 0
        for v in entries:
            a[i] = v
            i += 1
        pivots = []
        r = 0
        for c in range(ncols):
            piv = -1
            for i in range(r, nrows):
                if a[i * ncols + c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                base = r * ncols
                pbase = piv * ncols
                for j in range(ncols):
                    v = a[base + j]
                    a[base + j] = a[pbase + j]
                    a[pbase + j] = v
            pbase = r * ncols
            inv = _inv_mod(a[pbase + c], p)
            if inv != 1:
                for j in range(c, ncols):
                    if a[pbase + j] != 0:
                        a[pbase + j] = a[pbase + j] * inv % p
            for i in range(nrows):
                if i != r and a[i * ncols + c] != 0:
                    base = i * ncols
                    f = a[base + c]
                    for j in range(c, ncols):
                        v = a[pbase + j]
                        if v != 0:
                            a[base + j] = (a[base + j] - f * v) % p
                            if a[base + j] < 0:
                                a[base + j] += p
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        flat = [0] * (r * ncols)
        for i in range(r * ncols):
            flat[i] = a[i]
        return pivots, flat
    finally:
        free(a)
