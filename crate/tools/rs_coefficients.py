"""Generate Taylor coefficients (in z = p - 1/2) of the Riemann-Siegel
correction functions C0..C4 and print them as Rust constant arrays.

Psi(p) = cos(2*pi*(p^2 - p - 1/16)) / cos(2*pi*p) = -cos(2*pi*z^2 - 5*pi/8) / cos(2*pi*z)
"""
import mpmath as mp

mp.mp.dps = 120
TERMS = 110


def series_cos_poly(a2, a0, n):
    # coefficients of cos(a2*z^2 + a0) up to z^(n-1)
    out = [mp.mpf(0)] * n
    # cos(a0 + w) = cos a0 cos w - sin a0 sin w, w = a2 z^2
    for k in range(0, n // 2 + 1):
        if 2 * k >= n:
            break
        term = (a2 ** k) / mp.factorial(k)
        # d^k/dw^k cos(a0 + w) at w = 0 = cos(a0 + k*pi/2)
        out[2 * k] = term * mp.cos(a0 + k * mp.pi / 2)
    return out


def series_cos_lin(a1, n):
    out = [mp.mpf(0)] * n
    for k in range(0, n, 2):
        out[k] = (-1) ** (k // 2) * a1 ** k / mp.factorial(k)
    return out


num = [-c for c in series_cos_poly(2 * mp.pi, -5 * mp.pi / 8, TERMS)]
den = series_cos_lin(2 * mp.pi, TERMS)
psi = [mp.mpf(0)] * TERMS
for k in range(TERMS):
    acc = num[k]
    for j in range(1, k + 1):
        acc -= den[j] * psi[k - j]
    psi[k] = acc / den[0]


def deriv(c, m):
    # m-th derivative of the series
    return [c[k + m] * mp.factorial(k + m) / mp.factorial(k) for k in range(len(c) - m)]


def comb(pairs):
    n = min(len(deriv(psi, m)) for _, m in pairs)
    out = [mp.mpf(0)] * n
    for w, m in pairs:
        d = deriv(psi, m)
        for k in range(n):
            out[k] += w * d[k]
    return out


pi = mp.pi
ORDERS = 7


def rs_d_coefficients(orders):
    # d[n][k] recursion on the critical line (sigma = 1/2)
    d = {(0, 0): mp.mpf(1)}
    get = lambda n, k: d.get((n, k), mp.mpf(0))
    for n in range(1, orders):
        for k in range(0, 3 * n // 2 + 1):
            m = 3 * n - 2 * k
            if m != 0:
                d[(n, k)] = -(m + 1) * get(n - 1, k - 2) + get(n - 1, k) / (4 * m)
            else:
                acc = mp.mpf(0)
                for r in range(0, k):
                    acc -= (-1) ** (k - r) * get(n, r) * mp.factorial(2 * k - 2 * r) / mp.factorial(k - r)
                d[(n, k)] = acc
    return get


dget = rs_d_coefficients(ORDERS)
C = []
for k in range(ORDERS):
    pairs = []
    for j in range(0, 3 * k // 4 + 1):
        order = 3 * k - 4 * j
        w = (-1) ** (k + j) * dget(k, 2 * j) / mp.mpf(2) ** (3 * k - 2 * j) / pi ** (2 * (k - j))
        pairs.append((w, order))
    C.append(comb(pairs))


def psi_direct(z):
    return -mp.cos(2 * pi * z**2 - 5 * pi / 8) / mp.cos(2 * pi * z)


# sanity: series vs direct at z = 0.37, 0.5
for z in [mp.mpf("0.1"), mp.mpf("0.37"), mp.mpf("0.5")]:
    s = sum(psi[k] * z**k for k in range(TERMS))
    assert abs(s - psi_direct(z)) < mp.mpf("1e-30"), (z, s, psi_direct(z))

print("// Generated by tools/rs_coefficients.py; do not edit by hand.")
print("#![allow(clippy::excessive_precision)]")
print("//")
print("// Taylor coefficients in z = p - 1/2 of the Riemann-Siegel correction terms C_k(p).")
print()
for idx, c in enumerate(C):
    kept = list(c)
    while kept and abs(kept[-1]) * mp.mpf(0.5) ** (len(kept) - 1) < mp.mpf("1e-20"):
        kept.pop()
    print(f"const C{idx}: [f64; {len(kept)}] = [")
    for v in kept:
        s = mp.nstr(v, 18, min_fixed=-1, max_fixed=1) if v != 0 else "0.0"
        if "e" not in s and "." not in s:
            s += ".0"
        print(f"    {s},")
    print("];")
    print()
print("pub(crate) const RS_CORRECTIONS: [&[f64]; %d] = [%s];" % (len(C), ", ".join(f"&C{i}" for i in range(len(C)))))
