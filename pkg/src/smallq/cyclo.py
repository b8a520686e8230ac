"""Exact arithmetic in cyclotomic fields Q(zeta_N), and exact dense linear
algebra over them.

Coefficients are `fractions.Fraction`; there is no floating point anywhere.
Elements are residues modulo the N-th cyclotomic polynomial, kept in
canonical (reduced) form, so equality is coefficient-wise.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class CycloZeroDivision(ZeroDivisionError):
    """Attempt to invert zero in a cyclotomic field."""


def _poly_trim(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_divmod_exact_int(num, den):
    # den monic-leading integer polynomial; exact division over Z
    num = list(num)
    den = _poly_trim(list(den))
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c % lead != 0:
            raise ArithmeticError("inexact integer polynomial division")
        q[k] = c // lead
        if q[k]:
            for j, dj in enumerate(den):
                num[k + j] -= q[k] * dj
    if any(num):
        raise ArithmeticError("nonzero remainder in exact division")
    return q


_CYCLO_CACHE = {1: [-1, 1]}


def cyclotomic_polynomial(n):
    """The n-th cyclotomic polynomial as an integer coefficient list
    (low degree first), computed by dividing x^n - 1 by the cyclotomic
    polynomials of the proper divisors of n."""
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    res = _poly_divmod_exact_int(num, den)
    _CYCLO_CACHE[n] = res
    return res


class FieldCtx:
    """The cyclotomic field Q(zeta_N) with a distinguished primitive N-th
    root of unity `gen` (the class of x)."""

    def __init__(self, order):
        if order < 1:
            raise ValueError("order must be a positive integer")
        self.order = order
        self.modulus = tuple(cyclotomic_polynomial(order))
        self.degree = len(self.modulus) - 1
        self._power_cache = {}

    def __repr__(self):
        return "FieldCtx(order=%d, degree=%d)" % (self.order, self.degree)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and other.order == self.order

    def __hash__(self):
        return hash(("FieldCtx", self.order))

    def _reduce(self, coeffs):
        # coeffs: list of Fractions, any length -> canonical tuple
        c = [Fraction(x) for x in coeffs]
        d = self.degree
        for k in range(len(c) - 1, d - 1, -1):
            top = c[k]
            if top:
                for j in range(d + 1):
                    c[k - d + j] -= top * self.modulus[j]
        c = c[:d]
        c += [Fraction(0)] * (d - len(c))
        return tuple(c)

    def element(self, coeffs):
        return CycloElem(self, self._reduce(coeffs))

    def zero(self):
        return self.element([])

    def one(self):
        return self.element([1])

    def from_rational(self, q):
        return self.element([Fraction(q)])

    @property
    def gen(self):
        return self.zeta_power(1)

    def zeta_power(self, k):
        """gen**k for any integer k (reduced mod N)."""
        k = k % self.order
        if k not in self._power_cache:
            self._power_cache[k] = self.element([0] * k + [1])
        return self._power_cache[k]


def zeta_rational_power(ctx, delta, q):
    """zeta^q := gen^(2*delta*q) in a context built with N = 2*delta*l.

    q is an exact rational whose denominator must divide 2*delta.
    """
    e = Fraction(q) * 2 * delta
    if e.denominator != 1:
        raise ValueError(
            "exponent %s has denominator not dividing 2*%d" % (q, delta))
    return ctx.zeta_power(int(e))


class CycloElem:
    """An element of a FieldCtx, in canonical reduced form."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs  # tuple of Fractions, length ctx.degree

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.from_rational(other)
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.order, self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.from_rational(other)
        return CycloElem(self.ctx, tuple(a + b for a, b in
                                         zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.ctx, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.from_rational(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + self.ctx.from_rational(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloElem(self.ctx, tuple(a * q for a in self.coeffs))
        out = [Fraction(0)] * (2 * self.ctx.degree - 1 if self.ctx.degree else 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return CycloElem(self.ctx, self.ctx._reduce(out))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm
        modulo the cyclotomic polynomial."""
        if self.is_zero():
            raise CycloZeroDivision("inverse of zero")
        # extended gcd over Q[x]: r0 = modulus, r1 = self
        r0 = [Fraction(c) for c in self.ctx.modulus]
        r1 = _poly_trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while True:
            # r1 nonzero; divide r0 by r1
            q, r = _qpoly_divmod(r0, r1)
            r = _poly_trim(r)
            if not r:
                break
            s0, s1 = s1, _qpoly_sub(s0, _poly_mul(q, s1))
            r0, r1 = r1, r
        # r1 is the gcd, a nonzero constant (modulus irreducible)
        c = r1[-1] if len(r1) == 1 else None
        if c is None:
            raise ArithmeticError("modulus not coprime to element")
        inv = [x / c for x in s1]
        return self.ctx.element(inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * Fraction(1, 1) / self.ctx.from_rational(other)
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ctx.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def as_power_of_generator(self):
        """Return k with self == gen**k, or None.  Scans 0..N-1 (N small)."""
        for k in range(self.ctx.order):
            if self == self.ctx.zeta_power(k):
                return k
        return None

    def as_rational(self):
        """Return the element as a Fraction if it is rational, else None."""
        if all(c == 0 for c in self.coeffs[1:]):
            return self.coeffs[0]
        return None

    def __repr__(self):
        return "CycloElem(N=%d, %s)" % (self.ctx.order, list(self.coeffs))


def _qpoly_divmod(a, b):
    a = [Fraction(x) for x in a]
    b = _poly_trim([Fraction(x) for x in b])
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    return q, a


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for j, bj in enumerate(b):
        a[j] -= bj
    return _poly_trim(a)


class CycloMatrix:
    """A rectangular matrix of CycloElem entries over a common FieldCtx."""

    def __init__(self, ctx, rows, ncols=None):
        self.ctx = ctx
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, ctx, nrows, ncols):
        z = ctx.zero()
        return cls(ctx, [[z] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, ctx, n):
        m = cls.zeros(ctx, n, n)
        one = ctx.one()
        for i in range(n):
            m.rows[i][i] = one
        return m

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def __setitem__(self, ij, v):
        self.rows[ij[0]][ij[1]] = v

    def __eq__(self, other):
        return (isinstance(other, CycloMatrix) and self.rows == other.rows)

    def copy(self):
        return CycloMatrix(self.ctx, self.rows)

    def transpose(self):
        return CycloMatrix(self.ctx,
                           [[self.rows[i][j] for i in range(self.nrows)]
                            for j in range(self.ncols)], ncols=self.nrows)

    def __add__(self, other):
        return CycloMatrix(self.ctx,
                           [[a + b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return CycloMatrix(self.ctx,
                           [[a - b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self.rows, other.rows)])

    def scale(self, c):
        return CycloMatrix(self.ctx, [[c * a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, CycloMatrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            z = self.ctx.zero()
            out = []
            bt = other.transpose().rows
            for ra in self.rows:
                row = []
                for cb in bt:
                    s = z
                    for a, b in zip(ra, cb):
                        if a and b:
                            s = s + a * b
                    row.append(s)
                out.append(row)
            return CycloMatrix(self.ctx, out, ncols=other.ncols)
        return self.scale(other)

    def matvec(self, v):
        z = self.ctx.zero()
        out = []
        for r in self.rows:
            s = z
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return out

    def is_zero(self):
        return all(a.is_zero() for r in self.rows for a in r)

    def submatrix(self, rows, cols):
        return CycloMatrix(self.ctx,
                           [[self.rows[i][j] for j in cols] for i in rows],
                           ncols=len(cols))


def _echelon(m):
    """Row echelon form by exact Gaussian elimination.

    Returns (reduced rows, pivot column list)."""
    rows = [list(r) for r in m.rows]
    pivots = []
    r = 0
    for c in range(m.ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank_nullspace(m):
    """Exact rank and a basis of the (right) nullspace of m.

    Returns (rank, basis) where basis is a list of coefficient vectors
    (lists of CycloElem) with m . v = 0; rank + len(basis) == m.ncols.
    """
    rows, pivots = _echelon(m)
    rank = len(pivots)
    pivset = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivset]
    one = m.ctx.one()
    zero = m.ctx.zero()
    basis = []
    for fc in free:
        v = [zero] * m.ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return rank, basis


def pivot_columns(m):
    """Greedy (leftmost) independent columns of m."""
    _, pivots = _echelon(m)
    return pivots


def solve(m, b):
    """Solve m x = b for square invertible m (b a vector)."""
    if m.nrows != m.ncols:
        raise ValueError("solve needs a square matrix")
    aug = CycloMatrix(m.ctx, [row + [bv] for row, bv in zip(m.rows, b)])
    rows, pivots = _echelon(aug)
    if pivots != list(range(m.ncols)):
        raise ArithmeticError("singular matrix in solve")
    return [rows[i][m.ncols] for i in range(m.ncols)]


def inverse(m):
    """Inverse of a square invertible matrix."""
    n = m.nrows
    aug = CycloMatrix(m.ctx, [row + CycloMatrix.identity(m.ctx, n).rows[i]
                              for i, row in enumerate(m.rows)])
    rows, pivots = _echelon(aug)
    if pivots != list(range(n)):
        raise ArithmeticError("singular matrix in inverse")
    return CycloMatrix(m.ctx, [rows[i][n:] for i in range(n)])
