# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled brute-force partial sums; same contract as ``_pykernels``."""

from libc.math cimport sqrt


cdef inline double complex _ipow(double complex d, int k) nogil:
    cdef double complex r = 1.0
    cdef int i
    for i in range(k):
        r = r * d
    return r


cdef inline double _cabs(double complex z) nogil:
    return sqrt(z.real * z.real + z.imag * z.imag)


def euler_partial(long n_terms, long window, outer_table, int q, outer_shift, inner_tables, inner_ps, inner_shift):
    cdef int r = len(inner_tables)
    cdef double complex z[3]
    cdef double complex tab[3][64]
    cdef int Ns[3]
    cdef int ps[3]
    cdef double complex otab[64]
    cdef int N = len(outer_table)
    cdef double complex b = complex(outer_shift)
    cdef double complex c = complex(inner_shift)
    cdef double complex total = 0, acc_avg = 0, acc_mean = 0, f, d
    cdef double max_f = 0.0, af
    cdef long n, start = n_terms - window
    cdef int j
    if r > 3 or N > 64 or any(len(t) > 64 for t in inner_tables):
        raise ValueError("kernel supports depth <= 3 and root orders <= 64")
    for j in range(N):
        otab[j] = outer_table[j]
    for j in range(r):
        z[j] = 0
        Ns[j] = len(inner_tables[j])
        ps[j] = inner_ps[j]
        for n in range(Ns[j]):
            tab[j][n] = inner_tables[j][n]
    with nogil:
        for n in range(1, n_terms + 1):
            d = n + c
            for j in range(r):
                z[j] = z[j] + tab[j][n % Ns[j]] / _ipow(d, ps[j])
            f = otab[n % N] / _ipow(n + b, q)
            for j in range(r):
                f = f * z[j]
            total = total + f
            if n > start:
                acc_avg = acc_avg + total
                acc_mean = acc_mean + f
                af = _cabs(f)
                if af > max_f:
                    max_f = af
    return complex(acc_avg / window), max_f, _cabs(acc_mean) / window


def mpl_partial(long n_terms, long window, tables, ks, shift):
    cdef int r = len(tables)
    cdef double complex z[4]
    cdef double complex tab[3][64]
    cdef int Ns[3]
    cdef int kk[3]
    cdef double complex a = complex(shift)
    cdef double complex acc_avg = 0, acc_mean = 0, f = 0, d, t
    cdef double max_f = 0.0, af
    cdef long n, start = n_terms - window
    cdef int j
    if r > 3 or any(len(t) > 64 for t in tables):
        raise ValueError("kernel supports depth <= 3 and root orders <= 64")
    z[0] = 1
    for j in range(r):
        z[j + 1] = 0
        Ns[j] = len(tables[j])
        kk[j] = ks[j]
        for n in range(Ns[j]):
            tab[j][n] = tables[j][n]
    with nogil:
        for n in range(1, n_terms + 1):
            d = n + a
            for j in range(r, 0, -1):
                t = tab[j - 1][n % Ns[j - 1]] / _ipow(d, kk[j - 1]) * z[j - 1]
                if j == r:
                    f = t
                z[j] = z[j] + t
            if n > start:
                acc_avg = acc_avg + z[r]
                acc_mean = acc_mean + f
                af = _cabs(f)
                if af > max_f:
                    max_f = af
    return complex(acc_avg / window), max_f, _cabs(acc_mean) / window
