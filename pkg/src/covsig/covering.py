"""Seifert matrices of branched cyclic covering links.

Given the block data (A, B, C, eps) of a two-component link whose first
component is unknotted in the relevant sense, the d-fold covering link has a
Seifert matrix assembled from d x d blocks A_kl, each a rational function of
Gamma = (A - eps*A^T)^(-1) A, and then expanded by parallel copies with the
multiplicities coming from the pattern's circulant solve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPrimePower, NotRationalHomologySphere, SingularMatrix
from .exact import RatMatrix, block_matrix, mat_inverse
from .pattern import fold, solve_multiplicities
from .seifert import SeifertData, SignTuple, parallel_copies


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class CoveringSpec:
    """Degree d = p^a of the cyclic cover, plus the target vector r_l."""

    p: int
    a: int = 1
    target: tuple = None  # type: ignore[assignment]

    def __post_init__(self):
        if not _is_prime(self.p):
            raise NotPrimePower(f"{self.p} is not prime")
        if self.a < 1:
            raise NotPrimePower("exponent a must be positive")
        if self.target is None:
            object.__setattr__(
                self, "target", (1,) + (0,) * (self.d - 1)
            )
        else:
            target = tuple(int(t) for t in self.target)
            if len(target) != self.d:
                raise ValueError("target length must equal d")
            object.__setattr__(self, "target", target)

    @property
    def d(self) -> int:
        return self.p ** self.a


@dataclass(frozen=True)
class CoveringMatrix:
    """Result of the transfer: raw blocks, expanded matrix, and multiplicities."""

    blocks_A: tuple  # d x d tuple-of-tuples of RatMatrix
    expanded_P: RatMatrix
    s: int
    multiplicities: tuple  # the integers s*x_k


def gamma(A: RatMatrix, epsilon: int) -> RatMatrix:
    """Gamma = (A - eps*A^T)^(-1) A; note Gamma - I = (A - eps*A^T)^(-1) eps*A^T."""
    return mat_inverse(A - A.transpose().scale(epsilon)) @ A


def covering_blocks(sd: SeifertData, spec: CoveringSpec):
    """The d x d array of blocks A_kl of the covering Seifert matrix.

    With G = Gamma, H = G - I, and D = G^d - H^d (a presentation matrix of the
    cover's middle homology, so it must be invertible):

        A_kk = C - eps*B^T (G^(d-1) - H^(d-1)) D^(-1) (A - eps*A^T)^(-1) B
        A_kl = eps*B^T G^(j-1) H^(d-j-1) D^(-1) (A - eps*A^T)^(-1) B,
               j = (k - l) mod d, for k != l.

    All the G/H factors are polynomials in G, so their order is immaterial.
    """
    d = spec.d
    eps = sd.epsilon
    G = gamma(sd.A, eps)
    n = G.nrows
    H = G - RatMatrix.identity(n)
    gpow = [RatMatrix.identity(n)]
    hpow = [RatMatrix.identity(n)]
    for _ in range(d):
        gpow.append(gpow[-1] @ G)
        hpow.append(hpow[-1] @ H)
    try:
        den_inv = mat_inverse(gpow[d] - hpow[d])
    except SingularMatrix:
        raise NotRationalHomologySphere(
            "G^d - (G-I)^d is singular: the cover is not a rational homology sphere"
        ) from None
    skew_inv = mat_inverse(sd.A - sd.A.transpose().scale(eps))
    ebt = sd.B.transpose().scale(eps)
    tail = den_inv @ skew_inv @ sd.B
    diag = sd.C - ebt @ ((gpow[d - 1] - hpow[d - 1]) @ tail)
    blocks = []
    for k in range(d):
        row = []
        for l in range(d):
            if k == l:
                row.append(diag)
            else:
                j = (k - l) % d
                row.append(ebt @ (gpow[j - 1] @ hpow[d - j - 1] @ tail))
        blocks.append(tuple(row))
    return tuple(blocks)


def covering_matrix(blocks, x, s: int, epsilon: int) -> RatMatrix:
    """Expand the block array by the integer multiplicities s*x_k.

    The diagonal block (k, k) becomes parallel copies of A_kk with |s*x_k|
    strands oriented by sign(s*x_k); the off-diagonal block (k, l) is tiled
    |s*x_k| x |s*x_l| times with the product of the strand signs.  Components
    with s*x_k = 0 are dropped.
    """
    mults = [int(Fraction(xi) * s) for xi in x]
    if any(Fraction(xi) * s != m for xi, m in zip(x, mults)):
        raise ValueError("s does not clear the denominators of x")
    keep = [k for k, m in enumerate(mults) if m != 0]
    grid = []
    for k in keep:
        mk = mults[k]
        sk = 1 if mk > 0 else -1
        row = []
        for l in keep:
            ml = mults[l]
            sl = 1 if ml > 0 else -1
            if k == l:
                row.append(
                    parallel_copies(blocks[k][k], SignTuple((sk,) * abs(mk)), epsilon)
                )
            else:
                tile = blocks[k][l].scale(sk * sl)
                row.append(
                    block_matrix([[tile] * abs(ml) for _ in range(abs(mk))])
                )
        grid.append(row)
    if not grid:
        return RatMatrix.zeros(0)
    return block_matrix(grid)


def build_covering(sd: SeifertData, coeffs: dict, spec: CoveringSpec) -> CoveringMatrix:
    """Full transfer: fold the pattern, solve multiplicities, expand blocks."""
    row = fold(coeffs, spec.d)
    x, s = solve_multiplicities(row, spec.target)
    blocks = covering_blocks(sd, spec)
    expanded = covering_matrix(blocks, x, s, sd.epsilon)
    return CoveringMatrix(
        blocks_A=blocks,
        expanded_P=expanded,
        s=s,
        multiplicities=tuple(int(xi * s) for xi in x),
    )


def ltm_family(V: RatMatrix, m: int, epsilon: int = 1):
    """SeifertData and pattern coefficients of the L(T, m) construction.

    T is the knot with Seifert matrix V; the satellite pattern has
    coefficients {0: m, 1: 1-m}.  The obstruction arguments need m outside
    {0, 1}; those values are still accepted and give boundary patterns.
    """
    vt = V.transpose().scale(epsilon)
    ac = block_matrix([[V, V], [vt, vt]])
    b = block_matrix([[V, V], [vt, V]])
    coeffs = {n: v for n, v in ((0, m), (1, 1 - m)) if v}
    return SeifertData(A=ac, B=b, C=ac, epsilon=epsilon), coeffs


def ltm_y_oracle(m: int, p: int):
    """Closed-form scaling factors y_0..y_(p-1) for the L(T, m) cover.

    The covering knot's jump function is sum_k delta_V(y_k * theta) with
    a = (m-1)/m:
        y_0 = -(1 - a^(p-1)) / (m (1 - a^p)),
        y_k = a^(k-1) / (m^2 (1 - a^p))    for 1 <= k <= p-1.
    """
    if m <= 1:
        raise ValueError("closed form needs m > 1")
    a = Fraction(m - 1, m)
    denom = m * (1 - a ** p)
    ys = [-(1 - a ** (p - 1)) / denom]
    for k in range(1, p):
        ys.append(a ** (k - 1) / (m * denom))
    return ys


def p3_y_oracle(c20: int, c21: int, m: int):
    """Closed-form (y_0, y_1, y_2) for degree-3 covers of the two-pattern family.

    y_i = (a_i m + b_i) / (3m^2 - 3m + 1) with
        a_0 = 3c20 + 3c21 - 2,  b_0 = 1 - c20 - 2c21,
        a_1 = 1 - 3c20,         b_1 = 2c20 + c21 - 1,
        a_2 = 1 - 3c21,         b_2 = c21 - c20.

    The b_2 value is fixed by direct solution of the 3x3 circulant system
    (the tests cross-check it against solve_multiplicities differences).
    """
    den = 3 * m * m - 3 * m + 1
    table = [
        (3 * c20 + 3 * c21 - 2, 1 - c20 - 2 * c21),
        (1 - 3 * c20, 2 * c20 + c21 - 1),
        (1 - 3 * c21, c21 - c20),
    ]
    return [Fraction(a * m + b, den) for a, b in table]
