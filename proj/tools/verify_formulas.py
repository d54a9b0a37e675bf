#!/usr/bin/env python3
"""Scratch verification of method formulas against mpmath (not part of the build)."""
import mpmath as mp

mp.mp.dps = 40

def M(a, b, z):
    return mp.hyp1f1(a, b, z) / mp.gamma(b)

def F(a, b, c, z):
    return mp.hyp2f1(a, b, c, z) / mp.gamma(c)

print("=== Buchholz b=2a closed form candidates ===")
a, z = mp.mpf("0.3"), mp.mpc("0.7", "0.2")
ref = M(a, 2 * a, z)
# paper as printed: Gamma(a+1/2)*Gamma(2a)*e^z*(iz/4)^-(a-1/2)*J_{a-1/2}(iz/2)
c1 = mp.gamma(a + mp.mpf(1) / 2) * mp.gamma(2 * a) * mp.e**z * (mp.mpc(0, 1) * z / 4) ** (-(a - mp.mpf(1) / 2)) * mp.besselj(a - mp.mpf(1) / 2, mp.mpc(0, 1) * z / 2)
# candidate: e^{z/2} variant, divided by Gamma(2a) (regularized), x Gamma(a+1/2)
c2 = mp.gamma(a + mp.mpf(1) / 2) * mp.e**(z / 2) * (mp.mpc(0, 1) * z / 4) ** (-(a - mp.mpf(1) / 2)) * mp.besselj(a - mp.mpf(1) / 2, mp.mpc(0, 1) * z / 2) / mp.gamma(2 * a)
print("ref M(a;2a;z)      =", mp.nstr(ref, 20))
print("paper-as-printed   =", mp.nstr(c1, 20), " ratio", mp.nstr(c1 / ref, 12))
print("ez2/Gamma(2a) form =", mp.nstr(c2, 20), " ratio", mp.nstr(c2 / ref, 12))

print()
print("=== Buchholz2 D_j expansion (main branch) ===")
def buchholz(a, b, z, nterms=80):
    D = [mp.mpf(1), mp.mpf(0), b / 2]
    w = mp.sqrt(z * (2 * b - 4 * a))
    s = mp.mpf(0)
    for j in range(nterms):
        if j >= 3:
            D.append(((j - 2 + b) * D[j - 2] + (2 * a - b) * D[j - 3]) / j)
        dj = D[j] if j < 3 else D[-1]
        s += dj * z**j * mp.besselj(b - 1 + j, w) / w ** (b - 1 + j)
    return mp.e**(z / 2) * 2 ** (b - 1) * s

for (a, b, z) in [(-60, 1, 10), (2, 3, mp.mpc(1, 1)), (mp.mpc(1, 2), mp.mpc(2.5, -1), mp.mpc(-3, 0.5))]:
    got = buchholz(mp.mpf(a) if not isinstance(a, mp.mpc) else a, mp.mpf(b) if not isinstance(b, mp.mpc) else b, mp.mpc(z))
    ref = M(a, b, z)
    print(f"a={a}, b={b}, z={z}: relerr = {mp.nstr(abs(got-ref)/abs(ref), 5)}")

print()
print("=== Asymptotic (asym3) ===")
def asym(a, b, z, nmax=60):
    s1 = mp.mpf(0)
    t = mp.mpf(1)
    for j in range(nmax):
        s1 += t
        t *= (b - a + j) * (1 - a + j) / ((j + 1) * z)
    s2 = mp.mpf(0)
    t = mp.mpf(1)
    for j in range(nmax):
        s2 += t
        t *= (a + j) * (1 + a - b + j) / ((j + 1) * (-z))
    sign = 1 if mp.arg(z) > -mp.pi / 2 else -1
    pref1 = mp.e**z * z ** (a - b) / mp.gamma(a)
    pref2 = mp.e**(sign * mp.pi * mp.mpc(0, 1) * a) * z ** (-a) / mp.gamma(b - a)
    return pref1 * s1 + pref2 * s2

for (a, b, z) in [(1, 2, 600), (1e-3, 1, 700), (2, 3.5, mp.mpc(0, 500)), (2, 3.5, mp.mpc(-300, -300)), (1.5, 2.5, mp.mpc(-500, 1e-8)), (1.5, 2.5, mp.mpc(-500, -1e-8)), (1.5, 2.5, -500)]:
    got = asym(mp.mpf(a), mp.mpf(b), mp.mpc(z))
    ref = M(a, b, z)
    print(f"a={a}, b={b}, z={z}: relerr = {mp.nstr(abs(got-ref)/abs(ref), 5)}")

print()
print("=== Buhring continuation d_j recursion ===")
def buhring(a, b, c, z, z0=mp.mpf(1)/2, nterms=200):
    def series(u):  # u is 'upsilon': a or b
        d = [mp.mpf(0), mp.mpf(1)]  # d[-1], d[0] shifted by one
        s = mp.mpf(0)
        term_pow = mp.mpf(1)
        zz = z - z0
        for j in range(nterms):
            if j >= 1:
                dj = (j + u - 1) / (j * (j + 2 * u - a - b)) * (
                    ((j + u) * (1 - 2 * z0) + (a + b + 1) * z0 - c) * d[-1]
                    + z0 * (1 - z0) * (j + u - 2) * d[-2]
                )
                d.append(dj)
            s += d[j + 1] * zz ** (-j)
        return s
    t1 = mp.gamma(b - a) * mp.rgamma(b) * mp.rgamma(c - a) * (z0 - z) ** (-a) * series(a)
    t2 = mp.gamma(a - b) * mp.rgamma(a) * mp.rgamma(c - b) * (z0 - z) ** (-b) * series(b)
    return t1 + t2

for (a, b, c, z) in [(1, mp.mpf("0.9"), 2, mp.expjpi(mp.mpf(1)/3)), (-1, mp.mpf("0.9"), 2, mp.expjpi(-mp.mpf(1)/3)), (mp.mpf("0.3"), mp.mpf("1.7"), mp.mpf("2.2"), mp.mpc(2, 2))]:
    got = buhring(mp.mpf(a) if not isinstance(a, mp.mpc) else a, b, mp.mpf(c) if not isinstance(c,(mp.mpc,)) else c, z)
    ref = F(a, b, c, z)
    print(f"case ({a},{b},{c},{mp.nstr(mp.mpc(z),8)}): relerr = {mp.nstr(abs(got-ref)/abs(ref), 5)}")

print()
print("=== Michel-Stoitsov Taylor-about-z0 (re-derived recurrence) ===")
def taylor_z0(a, b, c, z, z0, nterms=300):
    q = [F(a, b, c, z0), a * b * F(a + 1, b + 1, c + 1, z0)]
    s = q[0] + q[1] * (z - z0)
    for n in range(nterms):
        qn2 = ((n * (2 * z0 - 1) - c + (a + b + 1) * z0) * q[n + 1] + (n + a) * (n + b) / (n + 1) * q[n]) / (z0 * (1 - z0) * (n + 2))
        q.append(qn2)
        s += qn2 * (z - z0) ** (n + 2)
    return s

for (a, b, c, z) in [(4, mp.mpf("1.1"), 2, mp.mpc("0.5", "0.856")), (1, 1, 4, mp.expjpi(mp.mpf(1)/3)), (mp.mpf(2)/3, 1, mp.mpf(4)/3, mp.expjpi(mp.mpf(1)/3))]:
    z = mp.mpc(z)
    z0 = mp.mpf("0.9") * z / abs(z) if abs(z) <= 1 else mp.mpf("1.1") * z / abs(z)
    got = taylor_z0(mp.mpf(a) if not isinstance(a, mp.mpc) else a, mp.mpf(b), mp.mpf(c) if not isinstance(c, mp.mpc) else c, z, z0)
    ref = F(a, b, c, z)
    print(f"case ({a},{b},{c},{mp.nstr(z,8)}): relerr = {mp.nstr(abs(got-ref)/abs(ref), 5)}")

print()
print("=== Gauss-Jacobi prefactors (2^{1-c} check) ===")
# F(a,b;c;0) must equal 1/Gamma(c). Weighted sum with f=1 gives 2^{c-1}B(c-b,b).
b, c = mp.mpf("1.3"), mp.mpf("2.9")
mu0 = 2 ** (c - 1) * mp.beta(c - b, b)
print("2^{1-c} * mu0 / (G(b)G(c-b)) =", mp.nstr(2 ** (1 - c) * mu0 / (mp.gamma(b) * mp.gamma(c - b)), 20), " vs 1/Gamma(c) =", mp.nstr(1 / mp.gamma(c), 20))

print()
print("=== treq1..treq5 sanity (regularized) ===")
def treq1(a,b,c,z):
    w = 1/(1-z)
    lhs = mp.sinpi(b - a)/mp.pi * F(a,b,c,z)
    rhs = (1-z)**(-a)/(mp.gamma(b)*mp.gamma(c-a)) * F(a, c-b, a-b+1, w) + (1-z)**(-b)/(mp.gamma(a)*mp.gamma(c-b)) * F(b, c-a, b-a+1, w)
    return lhs, rhs
def treq3(a,b,c,z):
    w = 1-z
    lhs = mp.sinpi(c-a-b)/mp.pi * F(a,b,c,z)
    rhs = 1/(mp.gamma(c-a)*mp.gamma(c-b)) * F(a, b, a+b-c+1, w) + (1-z)**(c-a-b)/(mp.gamma(a)*mp.gamma(b)) * F(c-a, c-b, c-a-b+1, w)
    return lhs, rhs
def treq4(a,b,c,z):
    w = 1-1/z
    lhs = mp.sinpi(c-a-b)/mp.pi * F(a,b,c,z)
    rhs = z**(-a)/(mp.gamma(c-a)*mp.gamma(c-b)) * F(a, a-c+1, a+b-c+1, w) + z**(a-c)*(1-z)**(c-a-b)/(mp.gamma(a)*mp.gamma(b)) * F(c-a, 1-a, c-a-b+1, w)
    return lhs, rhs
def treq5(a,b,c,z):
    w = 1/z
    lhs = mp.sinpi(b-a)/mp.pi * F(a,b,c,z)
    rhs = (-z)**(-a)/(mp.gamma(b)*mp.gamma(c-a)) * F(a, a-c+1, a-b+1, w) + (-z)**(-b)/(mp.gamma(a)*mp.gamma(c-b)) * F(b-c+1, b, b-a+1, w)
    return lhs, rhs

a, b, c = mp.mpf("0.3"), mp.mpf("1.45"), mp.mpf("2.2")
for name, fn, z in [("treq1", treq1, mp.mpc(-4, 1)), ("treq3", treq3, mp.mpc("0.8", "0.1")),
                    ("treq4", treq4, mp.mpc(3, 2)), ("treq5", treq5, mp.mpc(-5, 2)),
                    ("treq4b", treq4, mp.mpc(3, -2)), ("treq5b", treq5, mp.mpc(-5, -2))]:
    lhs, rhs = fn(a, b, c, z)
    print(f"{name} z={mp.nstr(z,6)}: |lhs-rhs|/|lhs| = {mp.nstr(abs(lhs-rhs)/abs(lhs), 5)}")

print()
print("=== N_mesh reference values for F cases 9/13/14 representability ===")
for (a,b,c,z) in [(100,200,350,mp.mpc(0,1)), (500,-500,500,mp.mpf("0.75")), (500,500,500,mp.mpf("0.75")), (-1000,-2000,mp.mpf("-4000.1"),mp.mpf("-0.5"))]:
    v2 = mp.hyp2f1(a,b,c,z)
    print(f"2F1({a},{b},{c},{mp.nstr(mp.mpc(z),4)}) = {mp.nstr(v2, 10)}  log10|F_reg| = {mp.nstr(mp.log10(abs(v2/mp.gamma(c))), 6)}")
