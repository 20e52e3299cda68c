"""Independent high-precision oracle for the truncated prime sums.

Run: python3 tests/oracles/constants_oracle.py
Values printed here are frozen into tests/test_analytic_constants.cpp.
"""
import numpy as np
import mpmath as mp

mp.mp.dps = 30


def primes_upto(n):
    s = np.ones(n + 1, dtype=bool)
    s[:2] = False
    for p in range(2, int(n ** 0.5) + 1):
        if s[p]:
            s[p * p :: p] = False
    return np.nonzero(s)[0]


def lam(p):
    return 1 if p % 4 == 3 else 0


def sums(limit, x):
    ps = primes_upto(limit)
    m = mp.mpf(0)
    c = mp.mpf(0)
    l2 = mp.mpf(0)
    s1 = mp.mpf(0)
    s2 = mp.mpf(0)
    logp = mp.mpf(0)
    x = mp.mpf(x)
    for p in ps:
        p = int(p)
        l = lam(p)
        lg = mp.log(1 - mp.mpf(1) / p)
        m += mp.mpf(l) / p
        c += lg + mp.mpf(2 * l) / p
        l2 += mp.mpf(l) / p ** 2
        s1 += lg / 2 + mp.mpf(l) / (p + x * l)
        s2 += mp.mpf(l) / (p + l * x) ** 2
        logp += x / 2 * lg + mp.log(1 + x * l / p)
    return dict(
        M=m - mp.log(mp.log(limit)) / 2,
        C=mp.euler + c,
        L2=l2,
        S1=s1,
        S2=s2,
        P=mp.exp(logp),
    )


def f_and_h2(limit, x):
    d = sums(limit, x)
    t = mp.mpf(x) / 2 + 1
    G = mp.gamma(t)
    G1 = mp.diff(mp.gamma, t)
    G2 = mp.diff(mp.gamma, t, 2)
    S1, S2 = d["S1"], d["S2"]
    f = (S1 ** 2 - S2) / G - G2 / (4 * G ** 2) - G1 * S1 / G ** 2 + G1 ** 2 / (2 * G ** 3)
    return d, f, f * d["P"], d["P"] / G


if __name__ == "__main__":
    for limit in (10 ** 4, 10 ** 5):
        d, f, h2, h = f_and_h2(limit, mp.mpf(1) / 3)
        print("limit", limit)
        for k, v in d.items():
            print("  ", k, mp.nstr(v, 17))
        print("   f(1/3)", mp.nstr(f, 17))
        print("   h''(1/3)", mp.nstr(h2, 17))
        print("   h(1/3)", mp.nstr(h, 17))
    print("gamma(7/6)", mp.nstr(mp.gamma(mp.mpf(7) / 6), 17))
    print("digamma(7/6)", mp.nstr(mp.digamma(mp.mpf(7) / 6), 17))
    print("trigamma(7/6)", mp.nstr(mp.psi(1, mp.mpf(7) / 6), 17))
    print("digamma(0.3)", mp.nstr(mp.digamma(mp.mpf("0.3")), 17))
    print("trigamma(0.3)", mp.nstr(mp.psi(1, mp.mpf("0.3")), 17))
    print("gamma(0.3)", mp.nstr(mp.gamma(mp.mpf("0.3")), 17))
    print("gamma(2.2)", mp.nstr(mp.gamma(mp.mpf("2.2")), 17))
