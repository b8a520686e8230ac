"""The twisted free algebra on generators theta_i, its coproduct, the
bilinear form on it, and the graded quotient by the radical.

Words are tuples of letters (indices into I).  The weight of a word is
its letter-count vector, an element of N[I].  The twisted product on the
tensor square is (x1 (x) x2)(y1 (x) y2) = zeta^(nu.mu) x1 y1 (x) x2 y2
for x2 of weight nu and y1 of weight mu; the coproduct r is the algebra
map sending theta_i to 1 (x) theta_i + theta_i (x) 1.  The form is
determined by (1,1) = 1, (theta_i, theta_j) = delta_ij and
(x, y y') = (r(x), y (x) y'), and is computed by peeling the last letter
of the right argument.

All form values are Z-linear combinations of powers of zeta (the order-l
root), so the recursion runs over integer vectors indexed by exponents
mod l and only converts to field elements at the boundary.
"""

from __future__ import annotations

from .cyclo import CycloMatrix, _echelon


def word_weight(ctx, w):
    nu = [0] * ctx.n
    for a in w:
        nu[a] += 1
    return tuple(nu)


def multiset_permutations(nu):
    """All words of weight nu in lexicographic order."""
    total = sum(nu)
    if total == 0:
        yield ()
        return
    counts = list(nu)
    for a in range(len(counts)):
        if counts[a]:
            counts[a] -= 1
            for rest in multiset_permutations(tuple(counts)):
                yield (a,) + rest
            counts[a] += 1


def coproduct_r(ctx, x):
    """r applied to a linear combination of words.

    x: dict word -> CycloElem (order-l field).  Returns a dict
    (left word, right word) -> CycloElem.
    """
    zf = ctx.zfield
    out = {}
    form = ctx.datum.form
    for w, c in x.items():
        # terms: (left, right, twist exponent); a letter sent to the left
        # factor crosses the right part accumulated so far
        terms = [((), (), 0)]
        for a in w:
            nxt = []
            for u, v, e in terms:
                cross = sum(form[b][a] for b in v)
                nxt.append((u + (a,), v, e + cross))
                nxt.append((u, v + (a,), e))
            terms = nxt
        for u, v, e in terms:
            key = (u, v)
            val = c * zf.zeta_power(e)
            out[key] = out[key] + val if key in out else val
    return {k: v for k, v in out.items() if not v.is_zero()}


def _form_cache(ctx):
    return ctx._cache.setdefault("shuffle_form", {})


def _form_raw(ctx, w1, w2):
    """Form value as an integer vector of coefficients of zeta^k, k mod l."""
    memo = _form_cache(ctx)
    key = (w1, w2)
    hit = memo.get(key)
    if hit is not None:
        return hit
    l = ctx.l
    if not w2:
        res = tuple([1] + [0] * (l - 1)) if not w1 else (0,) * l
        memo[key] = res
        return res
    j = w2[-1]
    y = w2[:-1]
    form = ctx.datum.form
    acc = [0] * l
    for p in range(len(w1)):
        if w1[p] == j:
            e = sum(form[j][w1[q]] for q in range(p + 1, len(w1))) % l
            sub = _form_raw(ctx, w1[:p] + w1[p + 1:], y)
            for k in range(l):
                if sub[k]:
                    acc[(k + e) % l] += sub[k]
    res = tuple(acc)
    memo[key] = res
    return res


def shuffle_form(ctx, w1, w2):
    """(w1, w2) as an element of the order-l cyclotomic field."""
    if word_weight(ctx, w1) != word_weight(ctx, w2):
        return ctx.zfield.zero()
    raw = _form_raw(ctx, w1, w2)
    out = ctx.zfield.zero()
    for k, c in enumerate(raw):
        if c:
            out = out + ctx.zfield.zeta_power(k) * c
    return out


class GramData:
    """The form on the full word basis of one weight component.

    words:          all words of the weight, lexicographic
    gram:           the symmetric Gram matrix over the order-l field
    rank:           its exact rank (= dim of the quotient component)
    radical:        basis vectors of the radical, in word coordinates
    quotient_words: greedy lexicographic pivot words; the Gram submatrix
                    on these is invertible
    """

    def __init__(self, nu, words, gram, rank, radical, quotient_words):
        self.nu = nu
        self.words = words
        self.gram = gram
        self.rank = rank
        self.radical = radical
        self.quotient_words = quotient_words


def gram_radical(ctx, nu):
    """Brute-force Gram data at weight nu over all words of that weight."""
    key = ("gram_radical", tuple(nu))
    if key in ctx._cache:
        return ctx._cache[key]
    words = list(multiset_permutations(tuple(nu)))
    zf = ctx.zfield
    gram = CycloMatrix(zf, [[shuffle_form(ctx, a, b) for b in words]
                            for a in words])
    rows, pivots = _echelon(gram)
    rank = len(pivots)
    pivset = set(pivots)
    free = [c for c in range(len(words)) if c not in pivset]
    one, zero = zf.one(), zf.zero()
    radical = []
    for fc in free:
        v = [zero] * len(words)
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        radical.append(v)
    data = GramData(tuple(nu), words, gram, rank, radical,
                    [words[p] for p in pivots])
    ctx._cache[key] = data
    return data


class GradedBasis:
    """Word bases of the graded quotient of the free algebra by the
    radical of the form, one weight component at a time.

    The quotient is generated in degree one, so each component is spanned
    by theta_i times the chosen basis of the component one step down;
    ranks are computed on that spanning set rather than on the full
    (combinatorially large) word basis.
    """

    def __init__(self, ctx, max_degree=64):
        self.ctx = ctx
        zf = ctx.zfield
        zero_nu = (0,) * ctx.n
        self.quotient_words = {zero_nu: [()]}
        self._solvers = {}
        degree = 1
        while True:
            if degree > max_degree:
                raise RuntimeError("graded basis does not terminate "
                                   "below degree %d" % max_degree)
            shell = {}
            for nu_prev, words_prev in list(self.quotient_words.items()):
                if sum(nu_prev) != degree - 1 or not words_prev:
                    continue
                for i in range(ctx.n):
                    nu = tuple(c + int(k == i)
                               for k, c in enumerate(nu_prev))
                    cand = shell.setdefault(nu, set())
                    for b in words_prev:
                        cand.add((i,) + b)
            alive = False
            for nu in sorted(shell):
                cand = sorted(shell[nu])
                gram = CycloMatrix(zf, [[shuffle_form(ctx, a, b)
                                         for b in cand] for a in cand])
                rows, pivots = _echelon(gram)
                if pivots:
                    alive = True
                    self.quotient_words[nu] = [cand[p] for p in pivots]
            if not alive:
                break
            degree += 1

    def dims(self):
        return {nu: len(ws) for nu, ws in sorted(self.quotient_words.items())
                if ws}

    @property
    def total_dim(self):
        return sum(len(ws) for ws in self.quotient_words.values())

    def _solver(self, nu):
        from .cyclo import inverse
        if nu not in self._solvers:
            q = self.quotient_words[nu]
            g = CycloMatrix(self.ctx.zfield,
                            [[shuffle_form(self.ctx, a, b) for b in q]
                             for a in q])
            self._solvers[nu] = inverse(g)
        return self._solvers[nu]

    def express(self, word):
        """Coordinates of a word over the quotient basis of its weight.

        Solves against the invertible Gram submatrix: the class of the
        word is determined by its pairings with the basis words.
        """
        nu = word_weight(self.ctx, word)
        q = self.quotient_words.get(nu)
        if not q:
            return []
        ginv = self._solver(nu)
        v = [shuffle_form(self.ctx, a, word) for a in q]
        return ginv.matvec(v)


def u_minus_basis(ctx, max_degree=64):
    """The graded basis of the quotient algebra, cached on the context."""
    key = "u_minus_basis"
    if key not in ctx._cache:
        ctx._cache[key] = GradedBasis(ctx, max_degree=max_degree)
    return ctx._cache[key]
