"""Reference equilibrium data at (tau, t) = (1/2, 1) with mpmath at 50 digits.

b solves the endpoint normalization (1/2pi) int_0^b sqrt(w/(b-w)) V'(w) dw = 1
directly; q and q' come from the Cauchy integral of sqrt(w/(w-b)) V'(w) on a
circle about b/2 (not the ellipse or the real-axis form used by the library).
Regenerate the frozen constants in tests/unit/test_equilibrium.cpp with this."""

import mpmath as mp

mp.mp.dps = 50

TAU = mp.mpf(1) / 2
T = mp.mpf(1)


def k(x):
    return mp.coth(x) - 1 / x if x != 0 else mp.mpf(0)


def v_prime(w):
    return 1 - TAU * k(T * w)


def normalization(b):
    f = lambda th: 2 * b * mp.sin(th) ** 2 * v_prime(b * mp.sin(th) ** 2)
    return mp.quad(f, [0, mp.pi / 2]) / (2 * mp.pi)


def cauchy(b, z, power):
    radius = b / 2 + mp.mpf("0.7")
    assert radius < abs(1j * mp.pi / T - b / 2)

    def g(th):
        w = b / 2 + radius * mp.expj(th)
        dw = 1j * radius * mp.expj(th)
        return mp.sqrt(w / (w - b)) * v_prime(w) / (w - z) ** power * dw

    return (mp.quad(g, mp.linspace(0, 2 * mp.pi, 9)) / (2j * mp.pi)).real


def J(z):
    w = lambda u: mp.sqrt(u / (1 - u)) - mp.atan(mp.sqrt(u / (1 - u)))
    return mp.quad(lambda u: w(u) * z / mp.expm1(z * u), [0, 1]) / mp.pi


if __name__ == "__main__":
    b = mp.findroot(lambda x: normalization(x) - 1, mp.mpf(6))
    q0 = cauchy(b, 0, 1)
    qb = cauchy(b, b, 1)
    qbp = cauchy(b, b, 2)
    l = (4 * (1 - mp.log(2)) - b / 2 * (1 - TAU) - b + 2 * mp.log(b) + 2 * TAU / T * (J(2 * b * T) - 1 + mp.log(2))
         + TAU / T * mp.log(mp.sinh(T * b) / (T * b)))
    v = 3 / (4 * b * q0) - qbp / (4 * qb**2) + mp.mpf(47) / (12 * b * qb)
    for name, x in [("b", b), ("q0", q0), ("qb", qb), ("qb_prime", qbp), ("l", l), ("v", v)]:
        print(name, mp.nstr(x, 40))
