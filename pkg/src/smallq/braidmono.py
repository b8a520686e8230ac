"""Scalar monodromy representations of the braid groupoid of coloured
configurations on the disc, their defining relations, factorization
identities, and the genus-g admissibility condition on colourings.

Objects are colour words (orderings of a multiset of letters of I read
off along the positive real axis); generators are the half twists of
adjacent points and the loop of the point nearest the origin around the
origin.  All representations considered here are rank one, so a
generator acts by a single root of unity depending on the source object.

Flavours:
  'J'    half twist(+/-) on colours a, b  ->  zeta^(-/+ a.b)
         inner loop on colour a           ->  zeta^(2 mu . a)
  'Sign' half twist on equal colours -> -1, otherwise +1; loop -> +1
  'I'    the pointwise product of the two
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import CartanError, weight
from .shuffle import multiset_permutations


@dataclass(frozen=True)
class ColouredConfig:
    """A colour word together with increasing positive base points."""

    colours: tuple
    points: tuple

    @classmethod
    def standard(cls, colours):
        colours = tuple(colours)
        return cls(colours, tuple(Fraction(k + 1) for k in
                                  range(len(colours))))

    def __post_init__(self):
        if list(self.points) != sorted(self.points) or \
                len(set(self.points)) != len(self.points):
            raise ValueError("base points must be strictly increasing")
        if self.points and self.points[0] <= 0:
            raise ValueError("base points must be positive")
        if len(self.points) != len(self.colours):
            raise ValueError("colour word and base points disagree")


def _swap(obj, k):
    o = list(obj)
    o[k], o[k + 1] = o[k + 1], o[k]
    return tuple(o)


class GroupoidPresentation:
    """Objects, generators and relations of the coloured braid groupoid
    on the disc for a fixed colour multiset nu."""

    def __init__(self, ctx, nu):
        self.ctx = ctx
        self.nu = tuple(nu)
        self.size = sum(nu)
        self.objects = list(multiset_permutations(self.nu))

    def generators(self):
        out = []
        for obj in self.objects:
            if obj:
                out.append(("loop", obj))
            for k in range(self.size - 1):
                out.append(("twist", obj, k, +1))
                out.append(("twist", obj, k, -1))
        return out

    def relations(self):
        """Pairs of move words (applied left to right at a common source
        object) that must agree: inverses, far commutation, braid, and
        the type-B relation mixing the inner loop with the first twist."""
        rels = []
        n = self.size
        for obj in self.objects:
            for k in range(n - 1):
                rels.append((obj, [("twist", k, +1), ("twist", k, -1)], []))
            for k in range(n - 1):
                for k2 in range(k + 2, n - 1):
                    rels.append((obj,
                                 [("twist", k, +1), ("twist", k2, +1)],
                                 [("twist", k2, +1), ("twist", k, +1)]))
            for k in range(n - 2):
                rels.append((obj,
                             [("twist", k, +1), ("twist", k + 1, +1),
                              ("twist", k, +1)],
                             [("twist", k + 1, +1), ("twist", k, +1),
                              ("twist", k + 1, +1)]))
            if n >= 2:
                a = [("loop",), ("twist", 0, +1)] * 2
                b = [("twist", 0, +1), ("loop",)] * 2
                rels.append((obj, a, b))
        return rels


class MonodromyRep:
    """A rank-one representation: a scalar for every generator instance."""

    def __init__(self, ctx, presentation, flavour, mu, scalars):
        self.ctx = ctx
        self.presentation = presentation
        self.flavour = flavour
        self.mu = mu
        self.scalars = scalars  # generator label -> CycloElem

    def apply_move(self, obj, move):
        """Returns (scalar, target object)."""
        if move[0] == "loop":
            return self.scalars[("loop", obj)], obj
        _, k, sign = move
        return self.scalars[("twist", obj, k, sign)], _swap(obj, k)

    def evaluate(self, obj, moves):
        val = self.ctx.field.one()
        for move in moves:
            s, obj = self.apply_move(obj, move)
            val = val * s
        return val, obj


def _colour_dot(ctx, a, b):
    return ctx.datum.form[a][b]


def _mu_dot_colour(ctx, mu, a):
    # mu . a with a viewed in X through Y -> X
    return ctx.dot(mu, ctx.simple_root(a))


def standard_monodromy(ctx, nu, mu, flavour):
    """The rank-one monodromy representation of the given flavour on the
    configurations coloured by nu, with outer parameter mu in X_ell."""
    if flavour not in ("J", "Sign", "I"):
        raise ValueError("unknown flavour %r" % flavour)
    if not ctx.in_X_ell(mu):
        raise CartanError("outer parameter must lie in X_ell")
    pres = GroupoidPresentation(ctx, nu)
    f = ctx.field
    minus_one = f.zeta_power(ctx.N // 2)
    scalars = {}
    for gen in pres.generators():
        if gen[0] == "loop":
            _, obj = gen
            val = f.one()
            if flavour in ("J", "I"):
                val = ctx.zeta(2 * _mu_dot_colour(ctx, mu, obj[0]))
        else:
            _, obj, k, sign = gen
            a, b = obj[k], obj[k + 1]
            val = f.one()
            if flavour in ("J", "I"):
                val = val * ctx.zeta(-sign * _colour_dot(ctx, a, b))
            if flavour in ("Sign", "I") and a == b:
                val = val * minus_one
        scalars[gen] = val
    return MonodromyRep(ctx, pres, flavour, mu, scalars)


def verify_relations(rep):
    """Evaluate every defining relation of the presentation in the
    representation.  Returns (ok, failures)."""
    failures = []
    for obj, lhs, rhs in rep.presentation.relations():
        lv, lo = rep.evaluate(obj, lhs)
        rv, ro = rep.evaluate(obj, rhs)
        if lo != ro:
            failures.append((obj, lhs, rhs, "object mismatch"))
        elif lv != rv:
            failures.append((obj, lhs, rhs, "scalar mismatch"))
    return not failures, failures


def two_point_monodromy(ctx, mu1, mu2, colours):
    """Monodromy exponents for a configuration with inner points 0 and z
    (parameters mu1, mu2) and outer points t_j coloured by `colours`.

    Returns a dict of labelled exponent pairs (k, N)."""
    out = {"z_around_0": ctx.zeta_exponent(-2 * ctx.dot(mu1, mu2))}
    for j, a in enumerate(colours):
        out["t%d_around_0" % j] = ctx.zeta_exponent(
            2 * _mu_dot_colour(ctx, mu1, a))
        out["t%d_around_z" % j] = ctx.zeta_exponent(
            2 * _mu_dot_colour(ctx, mu2, a))
    for j1 in range(len(colours)):
        for j2 in range(j1 + 1, len(colours)):
            out["t%d_around_t%d" % (j1, j2)] = ctx.zeta_exponent(
                -2 * _colour_dot(ctx, colours[j1], colours[j2]))
    return out


def fusion_degeneration_check(ctx, mu1, mu2, colours):
    """Degenerating z to 0 multiplies the two inner loops; the result
    must be the one-point monodromy with parameter mu1 + mu2."""
    two = two_point_monodromy(ctx, mu1, mu2, colours)
    merged = mu1 + mu2
    for j, a in enumerate(colours):
        prod = (ctx.field.zeta_power(two["t%d_around_0" % j][0]) *
                ctx.field.zeta_power(two["t%d_around_z" % j][0]))
        if prod != ctx.zeta(2 * _mu_dot_colour(ctx, merged, a)):
            return False
    return True


def factorization_check(ctx, mu, nus):
    """The outer loop scalar factorizes through weight shifts: for any
    colours a and successive shifts nu_1, .., nu_k in Y,
    zeta^(2 mu.a) * prod zeta^(-2 nu_m . a) == zeta^(2 (mu - sum nu_m).a)."""
    shift = weight([0] * ctx.n)
    for nu in nus:
        shift = shift + ctx.coweight_to_weight(nu)
    for a in range(ctx.n):
        lhs = ctx.zeta(2 * _mu_dot_colour(ctx, mu, a))
        for nu in nus:
            lhs = lhs * ctx.zeta(
                -2 * _mu_dot_colour(ctx, ctx.coweight_to_weight(nu), a))
        rhs = ctx.zeta(2 * _mu_dot_colour(ctx, mu - shift, a))
        if lhs != rhs:
            return False
    return True


def tangent_loop_scalar(ctx, mu):
    """zeta^(-2 n(mu)), the monodromy of the tangential circle."""
    return ctx.zeta(-2 * ctx.n_function(mu))


def descent_check(ctx):
    """The tangential scalar is trivial on the shifts -i', which is what
    allows the local systems to descend along colour forgetting."""
    one = ctx.field.one()
    for i in range(ctx.n):
        if tangent_loop_scalar(ctx, -ctx.simple_root(i)) != one:
            return False
    return True


def admissible(ctx, mus, nu, g=0):
    """sum(mu_k) - nu' == (2 - 2g) rho_ell  modulo Y_ell."""
    if g < 0:
        raise CartanError("genus must be nonnegative")
    total = weight([0] * ctx.n)
    for mu in mus:
        if not ctx.in_X_ell(mu):
            raise CartanError("module parameters must lie in X_ell")
        total = total + mu
    t = total - ctx.coweight_to_weight(nu) - ctx.rho_ell.scale(2 - 2 * g)
    return ctx.in_Y_ell(t)
