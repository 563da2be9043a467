"""Reference values for I, J and their derivatives from the original
u-integrals, evaluated with mpmath tanh-sinh quadrature at 60 digits.
Regenerate the frozen constants in tests/unit/test_special.cpp with this."""

import mpmath as mp

mp.mp.dps = 60


def kern(z, u):
    return z * u / mp.expm1(z * u)


def I(z):
    return -1 + mp.quad(lambda u: mp.sqrt(u / (1 - u)) * kern(z, u) / u, [0, 1]) / mp.pi


def J(z):
    w = lambda u: mp.sqrt(u / (1 - u)) - mp.atan(mp.sqrt(u / (1 - u)))
    return mp.quad(lambda u: w(u) * kern(z, u) / u, [0, 1]) / mp.pi


if __name__ == "__main__":
    for z in ["0.5", "1", "3", "10", "45"]:
        z = mp.mpf(z)
        print("I", mp.nstr(z, 5), mp.nstr(I(z), 40))
        print("J", mp.nstr(z, 5), mp.nstr(J(z), 40))
        print("I'", mp.nstr(z, 5), mp.nstr(mp.diff(I, z), 40))
        print("J'", mp.nstr(z, 5), mp.nstr(mp.diff(J, z), 40))
