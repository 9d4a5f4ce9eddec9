"""Pure-Python brute-force partial sums (reference for the compiled kernels).

Both kernels return ``(averaged_partial_sum, max|f|, |mean f|)`` where the
average and the two summand statistics are taken over the last ``window``
indices ``n <= n_terms``.  Root powers are read from one-period tables so no
rounding drift accumulates in ``x**n``.
"""


def euler_partial(n_terms, window, outer_table, q, outer_shift, inner_tables, inner_ps, inner_shift):
    r = len(inner_tables)
    z = [0j] * r
    N = len(outer_table)
    Ns = [len(t) for t in inner_tables]
    b = complex(outer_shift)
    c = complex(inner_shift)
    total = 0j
    acc_avg = 0j
    acc_mean = 0j
    max_f = 0.0
    start = n_terms - window
    for n in range(1, n_terms + 1):
        d = n + c
        for j in range(r):
            z[j] += inner_tables[j][n % Ns[j]] / d ** inner_ps[j]
        f = outer_table[n % N] / (n + b) ** q
        for j in range(r):
            f *= z[j]
        total += f
        if n > start:
            acc_avg += total
            acc_mean += f
            af = abs(f)
            if af > max_f:
                max_f = af
    return acc_avg / window, max_f, abs(acc_mean) / window


def mpl_partial(n_terms, window, tables, ks, shift):
    r = len(tables)
    z = [0j] * (r + 1)
    z[0] = 1 + 0j
    Ns = [len(t) for t in tables]
    a = complex(shift)
    acc_avg = 0j
    acc_mean = 0j
    max_f = 0.0
    start = n_terms - window
    for n in range(1, n_terms + 1):
        d = n + a
        f = 0j
        for j in range(r, 0, -1):
            t = tables[j - 1][n % Ns[j - 1]] / d ** ks[j - 1] * z[j - 1]
            if j == r:
                f = t
            z[j] += t
        if n > start:
            acc_avg += z[r]
            acc_mean += f
            af = abs(f)
            if af > max_f:
                max_f = af
    return acc_avg / window, max_f, abs(acc_mean) / window
