"""Cartan data, root-of-unity numerology, weight lattices and alcoves.

Conventions.  A Cartan datum is a finite index set I with a symmetric
bilinear form i.j on Z[I] such that i.i is even positive and
2 i.j / i.i is a nonpositive integer for i != j.  Y = Z[I] carries the
coweights, X = Hom(Y, Z) the weights; X is written in the basis of
fundamental weights omega_i, so <i, lambda> is just the i-th coordinate.
The embedding Y -> X sends i to i' with <j, i'> = 2 j.i / j.j.

The root of unity: l is a positive even-or-odd integer parameter,
ell = l / gcd(l, 2), and the ambient cyclotomic field has order
N = 2 * delta * l where delta = det(<i, j'>).  The distinguished
generator zetap of that field satisfies zeta = zetap^(2*delta), and
fractional powers zeta^q make sense whenever 2*delta*q is integral.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclo import FieldCtx, zeta_rational_power


class CartanError(ValueError):
    """Invalid Cartan datum or root-of-unity parameter."""


@dataclass(frozen=True)
class Weight:
    """An element of X tensor Q in fundamental-weight coordinates."""

    coords: tuple

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Weight(tuple(-a for a in self.coords))

    def scale(self, c):
        c = Fraction(c)
        return Weight(tuple(c * a for a in self.coords))

    def is_integral(self):
        return all(a.denominator == 1 for a in self.coords)

    def __repr__(self):
        return "Weight(%s)" % (tuple(str(c) for c in self.coords),)


def weight(coords):
    return Weight(tuple(Fraction(c) for c in coords))


def _det_fraction(rows):
    rows = [[Fraction(x) for x in r] for r in rows]
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        piv = None
        for r in range(c, n):
            if rows[r][c]:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for r in range(c + 1, n):
            f = rows[r][c] * inv
            if f:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return det


def _mat_inverse_fraction(rows):
    n = len(rows)
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
           for i, r in enumerate(rows)]
    for c in range(n):
        piv = None
        for r in range(c, n):
            if aug[r][c]:
                piv = r
                break
        if piv is None:
            raise CartanError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


class CartanDatum:
    """A validated Cartan datum (I, .)."""

    def __init__(self, form):
        self.form = tuple(tuple(int(x) for x in r) for r in form)
        self.n = len(self.form)
        n = self.n
        if n == 0:
            raise CartanError("empty Cartan datum")
        for r in self.form:
            if len(r) != n:
                raise CartanError("form matrix is not square")
        for i in range(n):
            for j in range(n):
                if self.form[i][j] != self.form[j][i]:
                    raise CartanError("form matrix is not symmetric")
        for i in range(n):
            if self.form[i][i] <= 0 or self.form[i][i] % 2 != 0:
                raise CartanError("i.i must be even and positive")
        self.d_i = tuple(self.form[i][i] // 2 for i in range(n))
        self.cartan = []
        for i in range(n):
            row = []
            for j in range(n):
                num = 2 * self.form[i][j]
                if num % self.form[i][i] != 0:
                    raise CartanError("2 i.j / i.i is not an integer")
                a = num // self.form[i][i]
                if i != j and a > 0:
                    raise CartanError("off-diagonal Cartan entries must be <= 0")
                row.append(a)
            self.cartan.append(tuple(row))
        self.cartan = tuple(self.cartan)
        # positive definiteness: leading principal minors
        for k in range(1, n + 1):
            minor = _det_fraction([r[:k] for r in self.form[:k]])
            if minor <= 0:
                raise CartanError("form is not positive definite")
        self.d = max(self.d_i)
        if self.d not in (1, 2, 3):
            raise CartanError("max(d_i) must be 1, 2 or 3")
        self.delta = int(_det_fraction(self.cartan))
        if not self._connected():
            warnings.warn("Cartan datum is reducible", stacklevel=3)

    def _connected(self):
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(self.n):
                if j not in seen and self.form[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self.n


def validate_cartan(form):
    return CartanDatum(form)


def _column_hnf(mat):
    """Column-style Hermite normal form of an integer matrix, returned
    together with the unimodular column transform U (mat . U = hnf)."""
    m = [list(r) for r in mat]
    nr = len(m)
    nc = len(m[0]) if m else 0
    u = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def colop_sub(dst, src, f):
        for r in range(nr):
            m[r][dst] -= f * m[r][src]
        for r in range(nc):
            u[r][dst] -= f * u[r][src]

    def colswap(a, b):
        for r in range(nr):
            m[r][a], m[r][b] = m[r][b], m[r][a]
        for r in range(nc):
            u[r][a], u[r][b] = u[r][b], u[r][a]

    def colneg(a):
        for r in range(nr):
            m[r][a] = -m[r][a]
        for r in range(nc):
            u[r][a] = -u[r][a]

    pc = 0
    for row in range(nr):
        # gcd-reduce columns pc.. on this row
        while True:
            nz = [c for c in range(pc, nc) if m[row][c] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda c: abs(m[row][c]))
            c0 = nz[0]
            for c in nz[1:]:
                f = m[row][c] // m[row][c0]
                if f:
                    colop_sub(c, c0, f)
        nz = [c for c in range(pc, nc) if m[row][c] != 0]
        if not nz:
            continue
        c0 = nz[0]
        if c0 != pc:
            colswap(pc, c0)
        if m[row][pc] < 0:
            colneg(pc)
        # reduce earlier columns against the pivot
        for c in range(pc):
            f = m[row][c] // m[row][pc]
            if f:
                colop_sub(c, pc, f)
        pc += 1
        if pc == nc:
            break
    return m, u


def integer_kernel(mat):
    """Z-basis of {x in Z^k : mat . x = 0}, as a list of column vectors."""
    h, u = _column_hnf(mat)
    nr = len(h)
    nc = len(h[0]) if h else 0
    out = []
    for c in range(nc):
        if all(h[r][c] == 0 for r in range(nr)):
            out.append([u[r][c] for r in range(nc)])
    return out


def _lattice_canonical(cols):
    """Canonicalize a list of integer basis columns via column HNF."""
    n = len(cols[0])
    mat = [[col[r] for col in cols] for r in range(n)]
    h, _ = _column_hnf(mat)
    return [[h[r][c] for r in range(n)] for c in range(len(cols))]


class CartanContext:
    """All root-of-unity numerology attached to a Cartan datum and l."""

    def __init__(self, datum, l):
        if not isinstance(datum, CartanDatum):
            datum = CartanDatum(datum)
        self.datum = datum
        n = datum.n
        self.n = n
        if l < 1:
            raise CartanError("l must be a positive integer")
        self.l = l
        self.ell = l // gcd(l, 2)
        self.ell_i = tuple(self.ell // gcd(self.ell, di) for di in datum.d_i)
        for i, elli in enumerate(self.ell_i):
            if elli <= 1:
                raise CartanError("ell_i must exceed 1 (i=%d)" % i)
            for j in range(n):
                if i != j and elli <= -datum.cartan[i][j] + 1:
                    raise CartanError(
                        "ell_i must exceed -<i,j'>+1 (i=%d, j=%d)" % (i, j))
        for i, elli in enumerate(self.ell_i):
            if elli <= 3:
                warnings.warn("ell_i <= 3 (i=%d); some module-theoretic "
                              "statements need ell_i > 3" % i, stacklevel=3)
        self.delta = datum.delta
        self.N = 2 * self.delta * l
        self.field = FieldCtx(self.N)
        self.zfield = FieldCtx(l)
        # gram matrix of the fundamental weights under the extended form
        cinv = _mat_inverse_fraction(datum.cartan)
        f = datum.form
        self.omega_gram = tuple(
            tuple(sum(cinv[a][i] * Fraction(f[a][b]) * cinv[b][j]
                      for a in range(n) for b in range(n))
                  for j in range(n))
            for i in range(n))
        self.rho = weight([1] * n)
        self.rho_ell = weight([e - 1 for e in self.ell_i])
        self._build_roots()
        self._build_lattices()
        self._cache = {}

    # ---- weights and pairings -------------------------------------------

    def simple_root(self, i):
        """i' as an element of X (column i of the <.,.> matrix)."""
        return weight([self.datum.cartan[j][i] for j in range(self.n)])

    def coweight_to_weight(self, nu):
        """The image of nu in Y under Y -> X."""
        w = weight([0] * self.n)
        for i, c in enumerate(nu):
            if c:
                w = w + self.simple_root(i).scale(c)
        return w

    def pair(self, nu, lam):
        """<nu, lambda> for nu in Y (integer coords), lambda in X x Q."""
        return sum(Fraction(a) * b for a, b in zip(nu, lam.coords))

    def dot(self, lam, mu):
        """lambda . mu, the extended form on X tensor Q."""
        return sum(a * self.omega_gram[i][j] * b
                   for i, a in enumerate(lam.coords)
                   for j, b in enumerate(mu.coords))

    def dot_y(self, nu, mu):
        """nu . mu on Y."""
        return sum(a * self.datum.form[i][j] * b
                   for i, a in enumerate(nu)
                   for j, b in enumerate(mu))

    def zeta(self, q):
        """zeta^q in the ambient field, q rational with 2*delta*q integral."""
        return zeta_rational_power(self.field, self.delta, Fraction(q))

    def zeta_exponent(self, q):
        """The exponent pair (k, N) with zeta^q == zetap^k."""
        e = Fraction(q) * 2 * self.delta
        if e.denominator != 1:
            raise CartanError("denominator of %s does not divide 2*delta" % q)
        return int(e) % self.N, self.N

    def zeta_small(self, k):
        """zeta^k in the order-l field, k an integer."""
        return self.zfield.zeta_power(int(k))

    def bracket(self, a):
        """[a] = 1 - zeta^(-2a), for integral a, in the order-l field."""
        return self.zfield.one() - self.zfield.zeta_power(-2 * int(a))

    # ---- roots -----------------------------------------------------------

    def _build_roots(self):
        n = self.n
        cartan = self.datum.cartan
        seed = [(tuple(self.simple_root(i).coords),
                 tuple(int(k == i) for k in range(n)),
                 self.datum.d_i[i]) for i in range(n)]
        seen = {}
        stack = list(seed)
        for a, b, d in seed:
            seen[(a, b)] = d
        while stack:
            alpha, beta, d = stack.pop()
            for i in range(n):
                pa = sum(Fraction(int(k == i)) * c
                         for k, c in enumerate(alpha))  # <i, alpha>
                new_a = tuple(c - pa * cartan[j][i]
                              for j, c in enumerate(alpha))
                pb = sum(b * cartan[j][i] for j, b in enumerate(beta))
                new_b = tuple(b - pb * int(j == i)
                              for j, b in enumerate(beta))
                key = (new_a, new_b)
                if key in seen:
                    if seen[key] != d:
                        raise CartanError("inconsistent root length in orbit")
                    continue
                seen[key] = d
                stack.append((new_a, new_b, d))
        cinv = _mat_inverse_fraction(cartan)
        pos = []
        for (a, b), d in seen.items():
            coeffs = [sum(Fraction(cinv[i][j]) * a[j] for j in range(n))
                      for i in range(n)]
            if all(c >= 0 for c in coeffs):
                if any(c.denominator != 1 for c in coeffs):
                    raise CartanError("non-integral root coefficients")
                # length consistency: alpha.alpha == 2 d under the
                # (W-invariant) extended form on X
                if 2 * d != self.dot(weight(a), weight(a)):
                    raise CartanError("root length mismatch")
                pos.append((weight(a), b, d,
                            tuple(int(c) for c in coeffs)))
        pos.sort(key=lambda t: (sum(t[3]), t[3]))
        self.positive_roots = tuple(p[0] for p in pos)
        self.positive_coroots = tuple(p[1] for p in pos)
        self.root_d = tuple(p[2] for p in pos)
        self.root_simple_coeffs = tuple(p[3] for p in pos)
        self.ell_alpha = tuple(self.ell // gcd(self.ell, d)
                               for d in self.root_d)
        # highest coroot gamma0 (dominance checked), and beta0, the coroot
        # attached to the highest root
        def dominates(u, v):
            return all(a >= b for a, b in zip(u, v))
        g0 = max(self.positive_coroots, key=lambda b: (sum(b), b))
        for b in self.positive_coroots:
            if not dominates(g0, b):
                raise CartanError("no highest coroot")
        self.gamma0 = g0
        hi = max(range(len(pos)), key=lambda k: (sum(pos[k][3]), pos[k][3]))
        for k in range(len(pos)):
            if not dominates(pos[hi][3], pos[k][3]):
                raise CartanError("no highest root")
        self.highest_root = self.positive_roots[hi]
        self.beta0 = self.positive_coroots[hi]
        self.ell_beta0 = self.ell // gcd(self.ell, self.root_d[hi])
        self.h = 1 + int(self.pair(self.beta0, self.rho))
        self.dim_g = self.n + 2 * len(self.positive_roots)

    def rho_half_sum(self):
        s = weight([0] * self.n)
        for a in self.positive_roots:
            s = s + a
        return s.scale(Fraction(1, 2))

    def rho_ell_half_sum(self):
        s = weight([0] * self.n)
        for a, la in zip(self.positive_roots, self.ell_alpha):
            s = s + a.scale(la - 1)
        return s.scale(Fraction(1, 2))

    # ---- lattices --------------------------------------------------------

    def _build_lattices(self):
        n = self.n
        # Y_ell = {lambda in X : lambda . mu in ell Z for all mu in X}
        den = 1
        for r in self.omega_gram:
            for x in r:
                den = den * x.denominator // gcd(den, x.denominator)
        p = [[int(x * den) for x in r] for r in self.omega_gram]
        m = den * self.ell
        aug = [row + [-m * int(j == i) for j in range(n)]
               for i, row in enumerate(p)]
        ker = integer_kernel(aug)
        cols = [v[:n] for v in ker]
        if len(cols) != n:
            raise CartanError("Y_ell does not have full rank")
        cols = _lattice_canonical(cols)
        self.Y_ell_basis = tuple(weight(c) for c in cols)
        ddx = abs(_det_fraction([[Fraction(c.coords[r]) for c in
                                  self.Y_ell_basis] for r in range(n)]))
        if ddx.denominator != 1:
            raise CartanError("bad Y_ell determinant")
        self.dd_X = int(ddx)
        # X_ell = {mu in X x Q : mu . Y_ell in ell Z} = ell (G_yb)^{-1} Z^n
        gyb = [[sum(Fraction(yb.coords[a]) * self.omega_gram[a][b]
                    for a in range(n)) for b in range(n)]
               for yb in self.Y_ell_basis]
        ginv = _mat_inverse_fraction(gyb)
        cols = [[self.ell * ginv[r][c] for r in range(n)] for c in range(n)]
        den = 1
        for col in cols:
            for x in col:
                den = den * x.denominator // gcd(den, x.denominator)
        icols = _lattice_canonical([[int(x * den) for x in col]
                                    for col in cols])
        self.X_ell_basis = tuple(
            weight([Fraction(x, den) for x in col]) for col in icols)
        dxl = abs(_det_fraction([[c.coords[r] for c in self.X_ell_basis]
                                 for r in range(n)]))
        q = ddx / dxl
        if q.denominator != 1:
            raise CartanError("bad lattice index")
        self.dd_X_ell = int(q)
        self._xell_inv = _mat_inverse_fraction(
            [[self.X_ell_basis[c].coords[r] for c in range(n)]
             for r in range(n)])
        self._yell_inv = _mat_inverse_fraction(
            [[self.Y_ell_basis[c].coords[r] for c in range(n)]
             for r in range(n)])

    def in_X(self, lam):
        return lam.is_integral()

    def _coords_in(self, lam, inv):
        return [sum(inv[r][c] * lam.coords[c] for c in range(self.n))
                for r in range(self.n)]

    def in_X_ell(self, lam):
        return all(c.denominator == 1
                   for c in self._coords_in(lam, self._xell_inv))

    def in_Y_ell(self, lam):
        return all(c.denominator == 1
                   for c in self._coords_in(lam, self._yell_inv))

    def heisenberg_rank(self, g):
        """dd_X_ell ** g (an exact integer), g the genus >= 0."""
        if g < 0:
            raise CartanError("genus must be nonnegative")
        return self.dd_X_ell ** g

    # ---- alcove and the quadratic function ------------------------------

    def first_alcove(self):
        """Integral weights in the first open alcove (may be empty)."""
        if all(e == self.ell for e in self.ell_i):
            wall, bound = self.gamma0, self.ell
        else:
            wall, bound = self.beta0, self.ell_beta0
        if any(c < 1 for c in wall):
            raise CartanError("alcove wall is degenerate")
        out = []
        # search box: 0 < <i, lambda + rho> and <wall, lambda + rho> < bound
        # implies each coordinate of lambda + rho is at most bound
        from itertools import product
        for cs in product(range(1, bound + 1), repeat=self.n):
            lr = weight(cs)  # lambda + rho
            if self.pair(wall, lr) < bound:
                out.append(lr - self.rho)
        out.sort(key=lambda w: w.coords)
        return out

    def n_function(self, lam):
        """n(lambda) = (1/2) lambda.lambda - lambda.rho_ell."""
        return Fraction(1, 2) * self.dot(lam, lam) - self.dot(lam, self.rho_ell)


def build_context(datum, l):
    return CartanContext(datum, l)
