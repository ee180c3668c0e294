"""Independent brute-force solves for frozen separatrix test values.

Plain-Python truncated polynomial arithmetic over Fractions. Each unknown
coefficient is fixed by evaluating the invariance residual at two trial
values (it is affine in the unknown). Gamma_a is solved directly on Y_a,
without blow-ups.
"""
from fractions import Fraction as F


def mul(p, q, n):
    r = [F(0)] * n
    for i, a in enumerate(p[:n]):
        if a:
            for j, b in enumerate(q[: n - i]):
                r[i + j] += a * b
    return r


def add(*ps):
    n = max(len(p) for p in ps)
    r = [F(0)] * n
    for p in ps:
        for i, a in enumerate(p):
            r[i] += a
    return r


def scale(p, c):
    return [c * a for a in p]


def deriv(p):
    return [i * p[i] for i in range(1, len(p))] + [F(0)]


def field_on_curve(terms, s, n):
    """sum c x^i y^j with y = s(x), mod x^n."""
    out = [F(0)] * n
    pw = [[F(1)] + [F(0)] * (n - 1)]
    for _ in range(max(j for _, j, _ in terms)):
        pw.append(mul(pw[-1], s, n))
    for i, j, c in terms:
        if i < n:
            out = add(out, [F(0)] * i + scale(pw[j], c)[: n - i])
    return out[:n]


def solve(A, B, order, start):
    s = [F(0)] * (order + 4)
    for k in range(start, order):
        vals = []
        for trial in (F(0), F(1)):
            s[k] = trial
            n = k + 4
            res = add(field_on_curve(B, s[:n], n), scale(mul(deriv(s[:n]), field_on_curve(A, s[:n], n), n), -1))
            vals.append(res)
        # first degree where the residual depends on s_k
        d = next(i for i in range(len(vals[0])) if vals[0][i] != vals[1][i])
        s[k] = -vals[0][d] / (vals[1][d] - vals[0][d])
    return s[start:order]


# Y_a with a = x^2: A = y^2 + x^4, B = -x y + x^5 + x y^2
gamma = solve([(0, 2, 1), (4, 0, 1)], [(1, 1, -1), (5, 0, 1), (1, 2, 1)], 12, 2)
print("Gamma_a (a = x^2), coefficients of x^2..x^11:", [str(c) for c in gamma])

# xi_alpha, alpha = z^2: A = z^2, B = -w - z w + w^3 - w^5 + ... + z^2
B = [(0, 1, -1), (1, 1, -1), (2, 0, 1)] + [(0, 3 + 2 * k, (-1) ** k) for k in range(10)]
weak = solve([(2, 0, 1)], B, 16, 1)
print("xi weak separatrix (alpha = z^2), z^1..z^15:", [str(c) for c in weak])

# xi_{delta alpha}, alpha = z^2, delta = 1/10
B = [(0, 1, -1), (1, 1, -1), (2, 0, F(1, 10))] + [(0, 3 + 2 * k, (-1) ** k) for k in range(10)]
weak = solve([(2, 0, 1)], B, 12, 1)
print("xi weak separatrix (alpha = z^2/10), z^1..z^11:", [str(c) for c in weak])
