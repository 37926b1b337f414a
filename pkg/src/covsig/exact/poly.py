"""Univariate polynomials over the rationals, coefficient lists in ascending order.

Only what the root-isolation and jump-extraction code needs: ring arithmetic,
exact division, gcd / square-free part, Sturm chains and sign-variation
counting.  The gcd delegates to sympy's dense-polynomial kernel, which avoids
the coefficient blowup of a naive Euclidean remainder sequence on the large
determinant polynomials that show up in covering computations.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from sympy import QQ
from sympy.polys.euclidtools import dup_inner_gcd
from sympy.polys.specialpolys import cyclotomic_poly


def trim(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def degree(p):
    return len(p) - 1  # -1 for the zero polynomial


def is_zero(p):
    return not p


def add(p, q):
    n = max(len(p), len(q))
    return trim([
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
        for i in range(n)
    ])


def neg(p):
    return [-c for c in p]


def sub(p, q):
    return add(p, neg(q))


def mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def scale(p, c):
    c = Fraction(c)
    if c == 0:
        return []
    return [c * a for a in p]


def eval_at(p, x):
    """Horner evaluation; works for any scalar supporting * and +."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p):
    return [i * c for i, c in enumerate(p)][1:]


def divmod_poly(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = list(p)
    quot = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    inv = 1 / q[-1]
    while len(p) >= len(q) and p:
        k = len(p) - len(q)
        c = p[-1] * inv
        quot[k] = c
        for i, b in enumerate(q):
            p[k + i] -= c * b
        p = trim(p[:-1])
    return trim(quot), p


def div_exact(p, q):
    quot, rem = divmod_poly(p, q)
    if rem:
        raise ValueError("inexact polynomial division")
    return quot


def divides(q, p):
    if not p:
        return True
    if not q:
        return False
    return not divmod_poly(p, q)[1]


def _to_dup(p):
    return [QQ(c.numerator, c.denominator) for c in reversed(p)]


def _from_dup(d):
    # int() strips gmpy2 ground types; Fraction keeps whatever it is given,
    # and mixed Fraction/mpz arithmetic breaks downstream
    return trim([Fraction(int(c.numerator), int(c.denominator)) for c in reversed(d)])


def gcd(p, q):
    """Monic gcd over Q (via sympy's dense kernel)."""
    p, q = trim(list(map(Fraction, p))), trim(list(map(Fraction, q)))
    if not p:
        return monic(q)
    if not q:
        return monic(p)
    h, _, _ = dup_inner_gcd(_to_dup(p), _to_dup(q), QQ)
    return monic(_from_dup(h))


def monic(p):
    if not p:
        return []
    inv = 1 / p[-1]
    return [c * inv for c in p]


def square_free_part(p):
    if degree(p) < 1:
        return monic(p)
    return monic(div_exact(p, gcd(p, derivative(p))))


def content_primitive(p):
    """Return (content, primitive integer coefficient list)."""
    if not p:
        return Fraction(0), []
    from math import lcm

    den = lcm(*[c.denominator for c in p]) if len(p) > 1 else p[0].denominator
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = int_gcd(g, abs(c))
    if ints[-1] < 0:
        g = -g
    return Fraction(g, den), [c // g for c in ints]


def cyclotomic(n):
    """Coefficients of the n-th cyclotomic polynomial, ascending Fractions."""
    cs = cyclotomic_poly(n, polys=True).all_coeffs()
    return [Fraction(int(c)) for c in reversed(cs)]


def cauchy_root_bound(p):
    """All real roots of p lie in (-b, b)."""
    p = trim(p)
    if degree(p) < 1:
        return Fraction(1)
    lead = abs(p[-1])
    return 1 + max(abs(c) for c in p[:-1]) / lead


def sturm_chain(p):
    """Sturm chain of the square-free part of p.

    Remainders are normalized to primitive integer vectors; this keeps the
    coefficients from exploding without changing any sign variation count.
    """
    p = square_free_part(p)
    if degree(p) < 1:
        return [p] if p else []
    chain = [p, derivative(p)]
    while degree(chain[-1]) >= 1:
        rem = divmod_poly(chain[-2], chain[-1])[1]
        if not rem:
            break
        _, prim = content_primitive(rem)
        sign = 1 if (rem[-1] > 0) == (prim[-1] > 0) else -1
        chain.append([Fraction(-sign * c) for c in prim])
    if chain[-1] == []:
        chain.pop()
    return chain


def _sign(x):
    return (x > 0) - (x < 0)


def sign_variations_at(chain, x):
    """Sign variations of the chain at the point x (+/- infinity allowed)."""
    signs = []
    for p in chain:
        if x == "inf":
            s = _sign(p[-1]) if p else 0
        elif x == "-inf":
            s = _sign(p[-1]) * (1 if (degree(p) % 2 == 0) else -1) if p else 0
        else:
            s = _sign(eval_at(p, x))
        if s != 0:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain, lo, hi):
    """Number of distinct real roots in (lo, hi]; endpoints may be +/-"inf"."""
    return sign_variations_at(chain, lo) - sign_variations_at(chain, hi)
