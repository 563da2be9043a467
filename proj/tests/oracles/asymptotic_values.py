"""Reference values for the asymptotics tests, computed independently with mpmath.

I and J come from their integral definitions after u = sin^2(theta); J' by
numerical differentiation. Run: python3 asymptotic_values.py
"""
import mpmath as mp

mp.mp.dps = 30


def I(z):
    if z == 0:
        return mp.mpf(0)
    f = lambda th: mp.sin(th) ** 2 / mp.expm1(z * mp.sin(th) ** 2)
    return -1 + 2 * z / mp.pi * mp.quad(f, [0, mp.pi / 2])


def J(z):
    if z == 0:
        return 1 - mp.log(2)
    f = lambda th: (mp.sin(th) ** 2 - th * mp.sin(th) * mp.cos(th)) / mp.expm1(z * mp.sin(th) ** 2)
    return 2 * z / mp.pi * mp.quad(f, [0, mp.pi / 2])


def Jp(z):
    return mp.diff(J, z) if z > 0 else mp.mpf(-1) / 8


def lnS(y):
    return mp.log(mp.sinh(y) / y) if y != 0 else mp.mpf(0)


def k(y):
    return mp.coth(y) - 1 / y if y != 0 else mp.mpf(0)


def bracket1():
    # sum_{m>=1} 1/((m+1) sqrt m) - pi: direct terms to M, then Euler-Maclaurin.
    M = 2000
    f = lambda m: 1 / ((m + 1) * mp.sqrt(m))
    head = mp.fsum(f(m) for m in range(1, M))
    tail = 2 * mp.atan(1 / mp.sqrt(M)) + f(M) / 2
    for j in range(1, 6):
        tail -= mp.bernoulli(2 * j) / mp.factorial(2 * j) * mp.diff(f, M, 2 * j - 1)
    return head + tail - mp.pi


def phi(t):
    g = lambda x: 2 * (J(8 * x) - (1 - mp.log(2))) - 2 * I(8 * x) + lnS(4 * x)
    return -t + mp.quad(g, [0, t]) / t


def psi(t):
    z = 8 * t
    outer = (3 * t - mp.mpf(3) / 2 * t ** 2 - 2 * t * I(z) - I(z) ** 2 / 2 + I(z)
             - lnS(4 * t) / 2 - (J(z) - (1 - mp.log(2))))
    g = lambda x: (-I(8 * x) ** 2 / (4 * x) + I(8 * x) / x
                   + (4 * x + 2 * I(8 * x)) * (4 * Jp(8 * x) + k(4 * x)))
    return outer + mp.quad(g, [0, t])


if __name__ == "__main__":
    print("bracket(1) =", mp.nstr(bracket1(), 25))
    mp.mp.dps = 20
    print("Phi(1) =", mp.nstr(phi(mp.mpf(1)), 18))
    print("Psi(1) =", mp.nstr(psi(mp.mpf(1)), 18))
