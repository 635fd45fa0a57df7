"""Independent evaluation of the tetrahedral index and the figure-eight sum.

Series are dicts from doubled exponent to integer coefficient, truncated at a
doubled order N.
"""
import sys


def inv_poch(n, N):
    """Coefficients of 1/(q)_n at doubled exponents below N."""
    c = [0] * max(N, 0)
    if not c:
        return c
    c[0] = 1
    for i in range(1, n + 1):
        step = 2 * i
        for j in range(step, N):
            c[j] += c[j - step]
    return c


def mul(a, b, N):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            if ea + eb < N:
                out[ea + eb] = out.get(ea + eb, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def tet_index(m, e, N):
    """I_Delta(m, e) from its defining sum, below doubled order N."""
    res = {}
    n = max(0, -e)
    while True:
        lead = n * (n + 1) - (2 * n + e) * m
        if lead < N:
            a = {k: v for k, v in enumerate(inv_poch(n, N - lead)) if v}
            b = {k: v for k, v in enumerate(inv_poch(n + e, N - lead)) if v}
            for k, v in mul(a, b, N - lead).items():
                res[lead + k] = res.get(lead + k, 0) + (-1) ** n * v
        elif n >= m:
            break
        n += 1
    return {k: v for k, v in res.items() if v}


def fig8(x, twice_y, N, K=12):
    """sum_k I_Delta(k - x, k) I_Delta(k + 2y, k - x + 2y) below doubled order N."""
    tot = {}
    for k in range(-K, K + 1):
        a = tet_index(k - x, k, N)
        if not a:
            continue
        b = tet_index(k + twice_y, k - x + twice_y, N)
        for e, c in mul(a, b, N).items():
            tot[e] = tot.get(e, 0) + c
    return {k: v for k, v in sorted(tot.items()) if v}


if __name__ == "__main__":
    x, ty, order = int(sys.argv[1]), int(sys.argv[2]), int(sys.argv[3])
    print(sorted(fig8(x, ty, 2 * order).items()))
