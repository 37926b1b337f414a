"""Integer kernels for the hot paths: determinant polynomials and signatures.

Everything here works on plain Python ints (entries of scaled integer Seifert
matrices), which keeps the inner loops free of Fraction normalization.  The
congruence-based signature routine is fraction-free Bareiss elimination on a
hermitian Gaussian-integer matrix; it returns None when it hits a Schur
complement with an all-zero diagonal, and the caller falls back to the slower
fully general rational elimination.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix


def bareiss_det(rows) -> int:
    """Exact determinant of a square integer matrix."""
    m = [[int(x) for x in row] for row in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k]), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        p = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            mi, mk = m[i], m[k]
            for j in range(k + 1, n):
                mi[j] = (p * mi[j] - mik * mk[j]) // prev
        prev = p
    return sign * m[-1][-1]


def _transpose_scaled(rows, c):
    n = len(rows)
    return [[c * rows[j][i] for j in range(n)] for i in range(n)]


def _newton_interp(xs, ys):
    """Ascending Fraction coefficients of the interpolating polynomial."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]  # divided differences, in place
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - k])
    # expand the Newton form
    poly = [Fraction(0)] * n
    acc = [Fraction(1)]  # product (x - x_0)...(x - x_{k-1})
    for k in range(n):
        for i, a in enumerate(acc):
            poly[i] += coef[k] * a
        nxt = [Fraction(0)] * (len(acc) + 1)
        for i, a in enumerate(acc):
            nxt[i] -= xs[k] * a
            nxt[i + 1] += a
        acc = nxt
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def pencil_det_poly(p_rows, eps: int):
    """Ascending coefficients of D(w) = det(w*P - eps*P^T) for integer P.

    When P is nonsingular D is recovered from the characteristic polynomial of
    the integer matrix adj(P) * eps*P^T, which is much faster than expanding
    the determinant symbolically; otherwise D is rebuilt by evaluating integer
    determinants at degree+1 points and interpolating.
    """
    n = len(p_rows)
    if n == 0:
        return [Fraction(1)]
    p_rows = [[int(x) for x in row] for row in p_rows]
    det = bareiss_det(p_rows)
    if det != 0:
        dmP = DomainMatrix([[QQ(x) for x in row] for row in p_rows], (n, n), QQ)
        dmQ = DomainMatrix(
            [[QQ(x) for x in row] for row in _transpose_scaled(p_rows, eps)],
            (n, n), QQ,
        )
        A = (dmP.inv() * dmQ) * QQ(det)  # = adj(P) * eps*P^T, integer entries
        cp = A.convert_to(ZZ).charpoly()  # descending, monic
        delta = Fraction(det)
        out = [Fraction(0)] * (n + 1)
        for k, c in enumerate(cp):  # c is the coefficient of lambda^(n-k)
            out[n - k] = int(c) * delta ** (1 - k)
        while out and out[-1] == 0:
            out.pop()
        return out
    # singular P: shift w = z + c so that Q = eps*P^T - c*P is nonsingular,
    # recover det(z*P - Q) from the characteristic polynomial of adj(Q)*P,
    # then shift back.  Fails only for identically singular pencils.
    q = _transpose_scaled(p_rows, eps)
    for c in (1, -1, 2, -2, 3, -3):
        qm = [[q[i][j] - c * p_rows[i][j] for j in range(n)] for i in range(n)]
        dq = bareiss_det(qm)
        if dq:
            break
    else:
        xs = list(range(n + 1))
        ys = []
        for x in xs:
            m = [[x * p_rows[i][j] - q[i][j] for j in range(n)] for i in range(n)]
            ys.append(bareiss_det(m))
        return _newton_interp([Fraction(x) for x in xs], ys)
    dmQ = DomainMatrix([[QQ(x) for x in row] for row in qm], (n, n), QQ)
    dmP = DomainMatrix([[QQ(x) for x in row] for row in p_rows], (n, n), QQ)
    B = (dmQ.inv() * dmP) * QQ(dq)  # = adj(Q) * P, integer entries
    cp = B.convert_to(ZZ).charpoly()
    # det(z*P - Q) = det(-Q) * sum_k cp[k] * dq^(-k) * z^k
    delta = Fraction(dq)
    lead = Fraction((-1) ** n * dq)
    in_z = [lead * int(cp[k]) * delta ** (-k) for k in range(n + 1)]
    # substitute z = w - c by binomial expansion
    from math import comb

    out = [Fraction(0)] * (n + 1)
    for k, a in enumerate(in_z):
        if a == 0:
            continue
        for j in range(k + 1):
            out[j] += a * comb(k, j) * Fraction(-c) ** (k - j)
    while out and out[-1] == 0:
        out.pop()
    return out


def herm_pencil(p_rows, eps: int, u: int, v: int):
    """Hermitian Gaussian-integer matrix G with sigma(pencil at t=u/v) = sign(u)*sigma(G).

    The pencil is (w*P - eps*P^T)/(w - 1) for eps=+1 and i times that for
    eps=-1, evaluated at w = (1+it)/(1-it); clearing the positive real factors
    leaves G below.  Entries are (re, im) int pairs.  Requires v > 0, u != 0.
    """
    n = len(p_rows)
    s = [[p_rows[i][j] + p_rows[j][i] for j in range(n)] for i in range(n)]
    k = [[p_rows[i][j] - p_rows[j][i] for j in range(n)] for i in range(n)]
    if eps == 1:
        return [[(u * s[i][j], -v * k[i][j]) for j in range(n)] for i in range(n)]
    return [[(v * s[i][j], u * k[i][j]) for j in range(n)] for i in range(n)]


def herm_pencil_at_pi(p_rows, eps: int):
    """The pencil matrix at w = -1, as (re, im) int pairs."""
    n = len(p_rows)
    if eps == 1:
        return [
            [(p_rows[i][j] + p_rows[j][i], 0) for j in range(n)]
            for i in range(n)
        ]
    return [
        [(0, p_rows[i][j] - p_rows[j][i]) for j in range(n)]
        for i in range(n)
    ]


def herm_sig_fast(m):
    """Signature of a hermitian matrix of (re, im) int pairs, or None.

    Fraction-free symmetric Bareiss elimination with diagonal pivoting; the
    pivots are the leading principal minors of the symmetrically permuted
    matrix, so the signature is the running sign agreement count (Jacobi).
    Returns None when some nonzero Schur complement has an all-zero diagonal;
    the caller must then use the general rational routine.
    """
    n = len(m)
    m = [[(int(a), int(b)) for a, b in row] for row in m]
    sig = 0
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][i][0] != 0), None)
        if piv is None:
            for i in range(k, n):
                for j in range(k, n):
                    if m[i][j] != (0, 0):
                        return None
            return sig
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            for row in m:
                row[k], row[piv] = row[piv], row[k]
        d = m[k][k][0]
        sig += 1 if (d > 0) == (prev > 0) else -1
        for i in range(k + 1, n):
            ar, ai = m[i][k]
            mi = m[i]
            for j in range(i, n):
                br, bi = m[k][j]
                cr, ci = mi[j]
                re = (d * cr - (ar * br - ai * bi)) // prev
                im = (d * ci - (ar * bi + ai * br)) // prev
                mi[j] = (re, im)
                if j != i:
                    m[j][i] = (re, -im)
        prev = d
    return sig
