"""Independent reference values for the frozen test constants.

Nothing here shares code with the C++ library. The decomposition errors use
Parseval on the trigonometric coefficients instead of quadrature.
"""
import math

import mpmath
import numpy as np

mpmath.mp.dps = 40


def mu():
    return mpmath.sqrt(96) / mpmath.pi ** 2


def moebius_table(n):
    mu_ = np.ones(n + 1, dtype=np.int64)
    is_comp = np.zeros(n + 1, dtype=bool)
    for p in range(2, n + 1):
        if is_comp[p]:
            continue
        is_comp[2 * p :: p] = True
        mu_[p::p] *= -1
        mu_[p * p :: p * p] = 0
    return mu_


def cos_block(n):
    g = np.zeros((n, n))
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            d = math.gcd(i, j)
            a, b = i // d, j // d
            if a % 2 and b % 2:
                g[i - 1, j - 1] = g[j - 1, i - 1] = 1.0 / (3 * a * a * b * b)
    return g


def decomposition_error(L, n_max=400001):
    # Coefficient of c_n in the truncated series is (1/n^2) * sum_{l | n, l <= L odd} mu(l).
    mob = moebius_table(L)
    s = np.zeros(n_max + 1)
    for l in range(1, L + 1, 2):
        if mob[l]:
            s[l::2 * l] += mob[l]
    n = np.arange(n_max + 1, dtype=float)
    odd = np.arange(3, n_max + 1, 2)
    return math.sqrt(float(np.sum((s[odd] / n[odd] ** 2) ** 2)))


if __name__ == "__main__":
    print("mu =", mpmath.nstr(mu(), 30))
    print("pi^4/64 - 1 =", mpmath.nstr(mpmath.pi ** 4 / 64 - 1, 30))
    print("5/2 - prod_{p<=1e5} =", mpmath.nstr(2.5 - mpmath.fprod(
        (1 + mpmath.mpf(1) / p ** 2) / (1 - mpmath.mpf(1) / p ** 2)
        for p in range(2, 100001) if all(p % q for q in range(2, int(p ** 0.5) + 1))), 12))
    for n in (1, 16, 1024):
        w = np.linalg.eigvalsh(cos_block(n))
        print(f"raw cos block N={n}: lambda_min = {w[0]!r}, lambda_max = {w[-1]!r}")
    for L in (9, 19, 49, 99):
        print(f"decomposition L={L}: l2 error = {decomposition_error(L)!r}")
