"""Weight modules over the small quantum group: Vermas built on the
graded quotient-word basis, simples as quotients by the radical of the
contravariant form, tensor products, duals, and multiplicities of the
trivial module.

A WeightModule stores, per weight lambda in X, an ordered list of basis
labels, and the matrices of theta_i (lowering, lambda -> lambda - i')
and epsilon_i (raising, lambda -> lambda + i').  The grading group
element K_nu acts implicitly by the scalar zeta^<nu, lambda>.  All
scalars appearing in the defining relations are integer powers of zeta,
so the matrices live over the order-l cyclotomic field.
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import Weight, weight, CartanError
from .cyclo import CycloMatrix, rank_nullspace, pivot_columns, inverse
from .shuffle import u_minus_basis, gram_radical


def _as_int(x):
    x = Fraction(x)
    if x.denominator != 1:
        raise CartanError("expected an integral scalar exponent")
    return int(x)


class WeightModule:

    def __init__(self, ctx, spaces, theta, epsilon, highest=None):
        self.ctx = ctx
        self.spaces = spaces        # Weight -> ordered list of labels
        self.theta = theta          # i -> {Weight w: matrix w -> w - i'}
        self.epsilon = epsilon      # i -> {Weight w: matrix w -> w + i'}
        self.highest = highest

    def dim_at(self, w):
        labels = self.spaces.get(w)
        return len(labels) if labels else 0

    @property
    def dim(self):
        return sum(len(v) for v in self.spaces.values())

    def weights(self):
        return sorted(self.spaces, key=lambda w: w.coords)

    def character(self):
        return [(w, self.dim_at(w)) for w in self.weights()]

    def theta_mat(self, i, w):
        m = self.theta[i].get(w)
        if m is None:
            tgt = w - self.ctx.simple_root(i)
            m = CycloMatrix.zeros(self.ctx.zfield, self.dim_at(tgt),
                                  self.dim_at(w))
        return m

    def epsilon_mat(self, i, w):
        m = self.epsilon[i].get(w)
        if m is None:
            tgt = w + self.ctx.simple_root(i)
            m = CycloMatrix.zeros(self.ctx.zfield, self.dim_at(tgt),
                                  self.dim_at(w))
        return m


def _require_integral(ctx, lam):
    if not lam.is_integral():
        raise CartanError("highest weight must lie in X")


def _nu_weight(ctx, lam, nu):
    return lam - ctx.coweight_to_weight(nu)


def verma(ctx, lam):
    """The Verma module with highest weight lam in X.

    Basis: the quotient words of the graded dual-free-algebra basis, one
    group per weight lam - nu'.  theta_i acts by prepending the letter i
    and re-expanding; epsilon_i is forced by
    epsilon_i theta_j - zeta^(i.j) theta_j epsilon_i = delta_ij (1 - Ktilde_i^-2).
    """
    _require_integral(ctx, lam)
    gb = u_minus_basis(ctx)
    zf = ctx.zfield
    nus = sorted(gb.dims(), key=lambda nu: (sum(nu), nu))
    wt_of = {nu: _nu_weight(ctx, lam, nu) for nu in nus}
    spaces = {wt_of[nu]: list(gb.quotient_words[nu]) for nu in nus}
    n = ctx.n
    form = ctx.datum.form
    theta = {i: {} for i in range(n)}
    epsilon = {i: {} for i in range(n)}
    dims = gb.dims()

    def enu(nu, i, sgn):
        return tuple(c + sgn * int(k == i) for k, c in enumerate(nu))

    for nu in nus:
        words = gb.quotient_words[nu]
        for i in range(n):
            tgt = enu(nu, i, +1)
            if dims.get(tgt):
                cols = [gb.express((i,) + b) for b in words]
                theta[i][wt_of[nu]] = CycloMatrix(
                    zf, [[cols[c][r] for c in range(len(words))]
                         for r in range(dims[tgt])],
                    ncols=len(words))

    # epsilon, by increasing degree; on the highest weight vector it is 0
    for nu in nus:
        if sum(nu) == 0:
            continue
        words = gb.quotient_words[nu]
        for i in range(n):
            tgt = enu(nu, i, -1)
            tgt_dim = dims.get(tgt, 0)
            if tgt_dim == 0:
                continue
            cols = []
            for b in words:
                j = b[0]
                src = enu(nu, j, -1)  # weight of b[1:]
                coeffs = gb.express(b[1:])
                col = [zf.zero()] * tgt_dim
                # term zeta^(i.j) theta_j epsilon_i, applied to b[1:]
                eps_src = epsilon[i].get(wt_of[src])
                if eps_src is not None:
                    v = eps_src.matvec(coeffs)
                    mid = enu(src, i, -1)
                    th = theta[j].get(wt_of[mid])
                    if th is not None:
                        tw = zf.zeta_power(form[i][j])
                        for r, x in enumerate(th.matvec(v)):
                            col[r] = col[r] + tw * x
                if i == j:
                    # delta_ij (1 - zeta^(-2 i'. mu)) on b[1:]
                    mu = wt_of[src]
                    e = -2 * ctx.datum.d_i[i] * mu.coords[i]
                    if Fraction(e).denominator != 1:
                        raise CartanError("non-integral K-scalar")
                    sc = zf.one() - zf.zeta_power(int(e))
                    for r, x in enumerate(coeffs):
                        col[r] = col[r] + sc * x
                cols.append(col)
            epsilon[i][wt_of[nu]] = CycloMatrix(
                zf, [[cols[c][r] for c in range(len(words))]
                     for r in range(tgt_dim)], ncols=len(words))

    return WeightModule(ctx, spaces, theta, epsilon, highest=lam)


def contravariant_gram(ctx, m):
    """The contravariant form on a Verma-type module whose labels are
    words, via the anti-automorphism swapping theta_i and epsilon_i.

    Returns Weight -> Gram matrix.
    """
    if m.highest is None:
        raise ValueError("module has no highest weight vector")
    grams = {}
    for w in m.weights():
        words = m.spaces[w]
        size = len(words)
        rows = []
        for x in words:
            row = []
            for yi in range(size):
                vec = [m.ctx.zfield.zero()] * size
                vec[yi] = m.ctx.zfield.one()
                cur_w = w
                for letter in x:
                    em = m.epsilon_mat(letter, cur_w)
                    vec = em.matvec(vec)
                    cur_w = cur_w + m.ctx.simple_root(letter)
                    if not vec:
                        break
                if cur_w == m.highest and vec:
                    row.append(vec[0])
                else:
                    row.append(m.ctx.zfield.zero())
            rows.append(row)
        grams[w] = CycloMatrix(m.ctx.zfield, rows, ncols=size)
    return grams


def simple(ctx, lam):
    """The simple module L(lam): the Verma modulo the per-weight radical
    of the contravariant form."""
    _require_integral(ctx, lam)
    key = ("simple", lam.coords)
    if key in ctx._cache:
        return ctx._cache[key]
    vm = verma(ctx, lam)
    grams = contravariant_gram(ctx, vm)
    zf = ctx.zfield
    pivots = {}
    proj = {}
    for w in vm.weights():
        g = grams[w]
        p = pivot_columns(g)
        pivots[w] = p
        if p:
            gpp = g.submatrix(p, p)
            gprows = g.submatrix(p, list(range(g.ncols)))
            proj[w] = inverse(gpp) * gprows
    spaces = {w: [vm.spaces[w][k] for k in pivots[w]]
              for w in vm.weights() if pivots[w]}
    theta = {i: {} for i in range(ctx.n)}
    epsilon = {i: {} for i in range(ctx.n)}
    for w in spaces:
        for i in range(ctx.n):
            tw = w - ctx.simple_root(i)
            if tw in spaces:
                full = vm.theta_mat(i, w)
                sub = full.submatrix(list(range(full.nrows)), pivots[w])
                theta[i][w] = proj[tw] * sub
            ew = w + ctx.simple_root(i)
            if ew in spaces:
                full = vm.epsilon_mat(i, w)
                sub = full.submatrix(list(range(full.nrows)), pivots[w])
                epsilon[i][w] = proj[ew] * sub
    out = WeightModule(ctx, spaces, theta, epsilon, highest=lam)
    ctx._cache[key] = out
    return out


def tensor(ctx, a, b, check=True):
    """a (x) b with theta_i(x (x) y) = theta_i x (x) y
    + zeta^(-i'.wt(x)) x (x) theta_i y, and likewise for epsilon_i."""
    zf = ctx.zfield
    spaces = {}
    index = {}
    for wa in a.weights():
        for wb in b.weights():
            w = wa + wb
            lab = spaces.setdefault(w, [])
            for ia in range(a.dim_at(wa)):
                for ib in range(b.dim_at(wb)):
                    index[(wa, wb, ia, ib)] = (w, len(lab))
                    lab.append((wa, wb, ia, ib))
    theta = {i: {} for i in range(ctx.n)}
    epsilon = {i: {} for i in range(ctx.n)}
    for i in range(ctx.n):
        ip = ctx.simple_root(i)
        di = ctx.datum.d_i[i]
        for w, labels in spaces.items():
            for kind in ("theta", "epsilon"):
                sgn = -1 if kind == "theta" else +1
                tw = w + ip.scale(sgn)
                if tw not in spaces:
                    continue
                tgt = spaces[tw]
                mat = [[zf.zero()] * len(labels) for _ in range(len(tgt))]
                for c, (wa, wb, ia, ib) in enumerate(labels):
                    ma = (a.theta_mat(i, wa) if kind == "theta"
                          else a.epsilon_mat(i, wa))
                    nwa = wa + ip.scale(sgn)
                    for ra in range(ma.nrows):
                        v = ma[ra, ia]
                        if v:
                            r = index[(nwa, wb, ra, ib)][1]
                            mat[r][c] = mat[r][c] + v
                    mb = (b.theta_mat(i, wb) if kind == "theta"
                          else b.epsilon_mat(i, wb))
                    e = -di * wa.coords[i]
                    if Fraction(e).denominator != 1:
                        raise CartanError("non-integral tensor twist")
                    twist = zf.zeta_power(int(e))
                    nwb = wb + ip.scale(sgn)
                    for rb in range(mb.nrows):
                        v = mb[rb, ib]
                        if v:
                            r = index[(wa, nwb, ia, rb)][1]
                            mat[r][c] = mat[r][c] + twist * v
                dct = theta if kind == "theta" else epsilon
                dct[i][w] = CycloMatrix(zf, mat, ncols=len(labels))
    out = WeightModule(ctx, spaces, theta, epsilon)
    if check:
        ok, msg = check_relation_a(out)
        if not ok:
            raise ArithmeticError("tensor relation failure: %s" % msg)
    return out


def dual(ctx, m, variant="check"):
    """Dual weight module, with (M^dual)_lambda = (M_{-lambda})^*.

    variant 'check': transposed actions.  variant 'star': actions twisted
    through the antipode theta_i -> -theta_i Ktilde_i."""
    if variant not in ("check", "star"):
        raise ValueError("unknown dual variant %r" % variant)
    zf = ctx.zfield
    spaces = {-w: list(m.spaces[w]) for w in m.spaces}
    theta = {i: {} for i in range(ctx.n)}
    epsilon = {i: {} for i in range(ctx.n)}
    for i in range(ctx.n):
        ip = ctx.simple_root(i)
        di = ctx.datum.d_i[i]
        for w in spaces:
            src = -w + ip
            if (w - ip) in spaces:
                mat = m.theta_mat(i, src).transpose()
                if variant == "star":
                    e = _as_int(di * (ip - w).coords[i])
                    mat = mat.scale(-zf.zeta_power(e))
                theta[i][w] = mat
            src = -w - ip
            if (w + ip) in spaces:
                mat = m.epsilon_mat(i, src).transpose()
                if variant == "star":
                    e = _as_int(-di * (w + ip).coords[i])
                    mat = mat.scale(-zf.zeta_power(e))
                epsilon[i][w] = mat
    return WeightModule(ctx, spaces, theta, epsilon)


def trivial_isotypic(ctx, m):
    """(inv_dim, coinv_dim, mts_dim, inv_basis) at the zero weight.

    mts_dim is the rank of the composite  invariants -> M_0 -> coinvariants,
    the multiplicity of the trivial module as a direct summand."""
    zf = ctx.zfield
    w0 = weight([0] * ctx.n)
    d0 = m.dim_at(w0)
    if d0 == 0:
        return 0, 0, 0, []
    stacked = []
    for i in range(ctx.n):
        stacked.extend(m.theta_mat(i, w0).rows)
        stacked.extend(m.epsilon_mat(i, w0).rows)
    if stacked:
        _, inv_basis = rank_nullspace(CycloMatrix(zf, stacked, ncols=d0))
    else:
        inv_basis = [[zf.one() if r == c else zf.zero() for r in range(d0)]
                     for c in range(d0)]
    image_cols = []
    for i in range(ctx.n):
        ip = ctx.simple_root(i)
        th = m.theta_mat(i, ip)
        for c in range(th.ncols):
            image_cols.append([th[r, c] for r in range(d0)])
        ep = m.epsilon_mat(i, -ip)
        for c in range(ep.ncols):
            image_cols.append([ep[r, c] for r in range(d0)])
    if image_cols:
        s = CycloMatrix(zf, [[col[r] for col in image_cols]
                             for r in range(d0)], ncols=len(image_cols))
        rank_s, _ = rank_nullspace(s)
    else:
        rank_s = 0
    coinv = d0 - rank_s
    both = [[col[r] for col in image_cols] + [v[r] for v in inv_basis]
            for r in range(d0)]
    if image_cols or inv_basis:
        rank_both, _ = rank_nullspace(
            CycloMatrix(zf, both, ncols=len(image_cols) + len(inv_basis)))
    else:
        rank_both = 0
    mts = rank_both - rank_s
    return len(inv_basis), coinv, mts, inv_basis


def conformal_block_dim(ctx, lams, check=False):
    """Multiplicity of the trivial summand in the left-associated tensor
    product of the simple modules with the given highest weights."""
    import warnings
    alcove = None
    try:
        alcove = set(w.coords for w in ctx.first_alcove())
    except CartanError:
        pass
    mods = []
    for lam in lams:
        if alcove is not None and tuple(lam.coords) not in alcove:
            warnings.warn("highest weight outside the first alcove",
                          stacklevel=2)
        mods.append(simple(ctx, lam))
    if not mods:
        return 1
    acc = mods[0]
    for nxt in mods[1:]:
        acc = tensor(ctx, acc, nxt, check=check)
    return trivial_isotypic(ctx, acc)[2]


def lusztig_view(ctx, m):
    """Divided-power-free generators E_i = (zeta_i / (1 - zeta_i^-2))
    epsilon_i Ktilde_i, F_i = theta_i, plus the K_i scalars."""
    zf = ctx.zfield
    out = {"E": {}, "F": {}, "K": {}}
    for i in range(ctx.n):
        di = ctx.datum.d_i[i]
        pref = zf.zeta_power(di) * (zf.one() - zf.zeta_power(-2 * di)).inverse()
        out["E"][i] = {}
        out["F"][i] = dict(m.theta[i])
        out["K"][i] = {}
        for w in m.weights():
            e = di * w.coords[i]
            if Fraction(e).denominator != 1:
                raise CartanError("non-integral K-scalar")
            out["E"][i][w] = m.epsilon_mat(i, w).scale(
                pref * zf.zeta_power(int(e)))
            kexp = Fraction(w.coords[i])
            if kexp.denominator != 1:
                raise CartanError("non-integral K-scalar")
            out["K"][i][w] = zf.zeta_power(int(kexp))
    return out


# ---- structural checks ---------------------------------------------------

def check_relation_a(m):
    """epsilon_i theta_j - zeta^(i.j) theta_j epsilon_i
    = delta_ij [<i, lambda>]_i  on every weight space.  Returns (ok, msg)."""
    ctx = m.ctx
    zf = ctx.zfield
    for w in m.weights():
        d = m.dim_at(w)
        for i in range(ctx.n):
            for j in range(ctx.n):
                jp = ctx.simple_root(j)
                ip = ctx.simple_root(i)
                lhs = (m.epsilon_mat(i, w - jp) * m.theta_mat(j, w)) - \
                    (m.theta_mat(j, w + ip) * m.epsilon_mat(i, w)).scale(
                        zf.zeta_power(ctx.datum.form[i][j]))
                if i == j:
                    e = ctx.datum.d_i[i] * w.coords[i]
                    if Fraction(e).denominator != 1:
                        return False, "non-integral pairing at %r" % (w,)
                    sc = zf.one() - zf.zeta_power(-2 * int(e))
                    rhs = CycloMatrix.identity(zf, d).scale(sc)
                else:
                    rhs = CycloMatrix.zeros(zf, d, d)
                if not (lhs - rhs).is_zero():
                    return False, "relation (a) fails at %r i=%d j=%d" % (
                        w, i, j)
    return True, ""


def check_relation_a_right(m):
    """The right-module counterpart of relation (a), satisfied by the
    transposed-action dual: theta_j epsilon_i - zeta^(i.j) epsilon_i theta_j
    = delta_ij [-<i, lambda>]_i.  Returns (ok, msg)."""
    ctx = m.ctx
    zf = ctx.zfield
    for w in m.weights():
        d = m.dim_at(w)
        for i in range(ctx.n):
            for j in range(ctx.n):
                ip = ctx.simple_root(i)
                lhs = (m.theta_mat(j, w + ip) * m.epsilon_mat(i, w)) - \
                    (m.epsilon_mat(i, w - ctx.simple_root(j)) *
                     m.theta_mat(j, w)).scale(
                        zf.zeta_power(ctx.datum.form[i][j]))
                if i == j:
                    e = ctx.datum.d_i[i] * w.coords[i]
                    if Fraction(e).denominator != 1:
                        return False, "non-integral pairing at %r" % (w,)
                    sc = zf.one() - zf.zeta_power(2 * int(e))
                    rhs = CycloMatrix.identity(zf, d).scale(sc)
                else:
                    rhs = CycloMatrix.zeros(zf, d, d)
                if not (lhs - rhs).is_zero():
                    return False, "right relation fails at %r i=%d j=%d" % (
                        w, i, j)
    return True, ""


def _word_operator(m, word, kind, w):
    """The operator of theta_word (or epsilon_word) on the weight space w."""
    op = CycloMatrix.identity(m.ctx.zfield, m.dim_at(w))
    cur = w
    for letter in reversed(word):
        if kind == "theta":
            op = m.theta_mat(letter, cur) * op
            cur = cur - m.ctx.simple_root(letter)
        else:
            op = m.epsilon_mat(letter, cur) * op
            cur = cur + m.ctx.simple_root(letter)
    return op


def check_radical_relations(m, max_degree=5):
    """Radical elements of the twisted free algebra (in theta's, and in
    epsilon's) act as zero, checked up to the given total degree."""
    ctx = m.ctx
    for deg in range(2, max_degree + 1):
        for nu in _compositions(ctx.n, deg):
            gd = gram_radical(ctx, nu)
            if not gd.radical:
                continue
            for vec in gd.radical:
                for kind in ("theta", "epsilon"):
                    for w in m.weights():
                        acc = None
                        for word, c in zip(gd.words, vec):
                            if c.is_zero():
                                continue
                            term = _word_operator(m, word, kind, w).scale(c)
                            acc = term if acc is None else acc + term
                        if acc is not None and not acc.is_zero():
                            return False, ("radical element at %r acts "
                                           "nontrivially (%s)" % (nu, kind))
    return True, ""


def _compositions(n, total):
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(n - 1, total - first):
            yield (first,) + rest


def irreducible_certificate(ctx, m):
    """True iff no weight space other than the highest one contains a
    joint kernel vector of all epsilon_i (no proper highest weight
    vector, hence no proper submodule for modules generated in top
    degree)."""
    zf = ctx.zfield
    for w in m.weights():
        if m.highest is not None and w == m.highest:
            continue
        stacked = []
        for i in range(ctx.n):
            stacked.extend(m.epsilon_mat(i, w).rows)
        d = m.dim_at(w)
        if not stacked:
            if d:
                return False
            continue
        _, null = rank_nullspace(CycloMatrix(zf, stacked, ncols=d))
        if null:
            return False
    return True
