"""Ribbon-structure scalars: braiding and balance on weight lines, the
multiplicative central charge, and its comparison with the Sugawara
central charge of the corresponding affine theory.

Everything is an exact root of unity in the ambient field of order
N = 2 * delta * l; scalars are reported as exponent pairs (k, N) with
respect to the distinguished generator zetap (zeta = zetap^(2 delta)).
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import CartanContext, CartanError


def braiding_exponent(ctx, lam, mu):
    """zeta^(lam.mu) as an exponent pair (k, N)."""
    return ctx.zeta_exponent(ctx.dot(lam, mu))


def braiding_scalar(ctx, lam, mu):
    return ctx.zeta(ctx.dot(lam, mu))


def balance_exponent(ctx, lam):
    """zeta^(n(lam)) as an exponent pair (k, N)."""
    return ctx.zeta_exponent(ctx.n_function(lam))


def balance_scalar(ctx, lam):
    return ctx.zeta(ctx.n_function(lam))


def central_charge_exponent(ctx):
    """(-1)^card(I) zeta^(-12 rho.rho) as an exponent pair (k, N)."""
    k, n = ctx.zeta_exponent(-12 * ctx.dot(ctx.rho, ctx.rho))
    if ctx.n % 2 == 1:
        k += n // 2
    return k % n, n


def central_charge(ctx):
    k, _ = central_charge_exponent(ctx)
    return ctx.field.zeta_power(k)


def strange_formula_check(ctx):
    """12 rho.rho == d * h * dim g, exactly."""
    return 12 * ctx.dot(ctx.rho, ctx.rho) == Fraction(
        ctx.datum.d * ctx.h * ctx.dim_g)


def wzw_compare(datum, kappa):
    """Compare the central charge at l = 2 d kappa with the Sugawara
    value exp(pi i (kappa - h) dim g / kappa) under zeta = exp(pi i / (d kappa)).

    Returns a dict with both exponents mod N and whether they agree.
    """
    if kappa < 1:
        raise CartanError("kappa must be a positive integer")
    d = datum.d
    ctx = CartanContext(datum, 2 * d * kappa)
    if ctx.ell != d * kappa:
        raise CartanError("unexpected ell for the affine comparison")
    lhs, n = central_charge_exponent(ctx)
    rhs = (2 * ctx.delta * d * (kappa - ctx.h) * ctx.dim_g) % n
    return {
        "modulus": n,
        "lhs_exponent": lhs,
        "rhs_exponent": rhs,
        "matches": lhs == rhs,
        "h": ctx.h,
        "dim_g": ctx.dim_g,
    }
