"""JSON-in, JSON-out command line driver.

A job is a single JSON object with the Cartan form matrix, the root
order parameter l, a command name, and command parameters.  All scalars
on the wire are exact: integers, rational strings "p/q", or exponent
pairs [k, N] meaning zetap^k in the order-N cyclotomic field.  Output
key order is fixed, so identical configs give byte-identical output.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction

from . import braidmono, cartan, repcat, ribbon, shuffle
from .cartan import CartanError


class ConfigError(ValueError):
    """Malformed job configuration (schema violation)."""


def parse_q(x):
    if isinstance(x, bool):
        raise ConfigError("expected a rational, got a boolean")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            raise ConfigError("bad rational %r" % x)
    raise ConfigError("bad rational %r" % x)


def ser_q(x):
    x = Fraction(x)
    if x.denominator == 1:
        return int(x)
    return "%d/%d" % (x.numerator, x.denominator)


def ser_weight(w):
    return [ser_q(c) for c in w.coords]


def parse_weight(ctx, x, what="weight"):
    if not isinstance(x, list) or len(x) != ctx.n:
        raise ConfigError("%s must be a list of %d rationals" % (what, ctx.n))
    return cartan.weight([parse_q(c) for c in x])


def parse_coweight(ctx, x, what="nu"):
    if (not isinstance(x, list) or len(x) != ctx.n or
            any(isinstance(c, bool) or not isinstance(c, int) for c in x)):
        raise ConfigError("%s must be a list of %d integers" % (what, ctx.n))
    return tuple(x)


def ser_elem(e):
    return [ser_q(c) for c in e.coeffs]


_ALLOWED = {
    "numerology": set(),
    "lattices": set(),
    "alcove": set(),
    "shuffle-dims": set(),
    "radical": {"nu"},
    "verma": {"weight"},
    "simple": {"weight"},
    "tensor-char": {"weights"},
    "blocks": {"weights"},
    "ribbon": {"weight", "weight2"},
    "wzw-compare": {"kappa"},
    "monodromy": {"nu", "mu", "flavour"},
    "factorization-check": {"mu", "nus"},
    "admissible": {"mus", "nu", "genus"},
    "heisenberg-rank": {"genus"},
}


def run_job(cfg, cache_dir=None):
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    base = {"matrix", "l", "cmd"}
    for k in base:
        if k not in cfg:
            raise ConfigError("missing required key %r" % k)
    cmd = cfg["cmd"]
    if cmd not in _ALLOWED:
        raise ConfigError("unknown cmd %r" % cmd)
    extra = set(cfg) - base - _ALLOWED[cmd]
    if extra:
        raise ConfigError("unknown keys for %s: %s" %
                          (cmd, ", ".join(sorted(map(str, extra)))))
    matrix = cfg["matrix"]
    if (not isinstance(matrix, list) or not matrix or
            any(not isinstance(r, list) for r in matrix) or
            any(isinstance(x, bool) or not isinstance(x, int)
                for r in matrix for x in r)):
        raise ConfigError("matrix must be a nonempty list of integer rows")
    if isinstance(cfg["l"], bool) or not isinstance(cfg["l"], int):
        raise ConfigError("l must be an integer")
    datum = cartan.validate_cartan(matrix)
    if cmd == "wzw-compare":
        kappa = cfg.get("kappa")
        if isinstance(kappa, bool) or not isinstance(kappa, int):
            raise ConfigError("kappa must be an integer")
        res = ribbon.wzw_compare(datum, kappa)
        if cfg["l"] != 2 * datum.d * kappa:
            raise CartanError("wzw-compare needs l == 2 d kappa")
        return {"cmd": cmd, "matches": res["matches"],
                "lhs_exponent": res["lhs_exponent"],
                "rhs_exponent": res["rhs_exponent"],
                "modulus": res["modulus"], "h": res["h"],
                "dim_g": res["dim_g"]}
    ctx = cartan.build_context(datum, cfg["l"])
    if cmd == "numerology":
        return {
            "cmd": cmd,
            "delta": ctx.delta,
            "N": ctx.N,
            "ell": ctx.ell,
            "ell_i": list(ctx.ell_i),
            "d": ctx.datum.d,
            "rho": ser_weight(ctx.rho),
            "rho_ell": ser_weight(ctx.rho_ell),
            "positive_roots": [ser_weight(a) for a in ctx.positive_roots],
            "positive_coroots": [list(b) for b in ctx.positive_coroots],
            "gamma0": list(ctx.gamma0),
            "beta0": list(ctx.beta0),
            "h": ctx.h,
            "dim_g": ctx.dim_g,
            "strange_formula_ok": ribbon.strange_formula_check(ctx),
        }
    if cmd == "lattices":
        return {
            "cmd": cmd,
            "Y_ell_basis": [ser_weight(b) for b in ctx.Y_ell_basis],
            "X_ell_basis": [ser_weight(b) for b in ctx.X_ell_basis],
            "dd_X": ctx.dd_X,
            "dd_X_ell": ctx.dd_X_ell,
        }
    if cmd == "alcove":
        return {"cmd": cmd,
                "alcove": [ser_weight(w) for w in ctx.first_alcove()]}
    if cmd == "shuffle-dims":
        gb = shuffle.u_minus_basis(ctx)
        dims = gb.dims()
        return {"cmd": cmd,
                "dims": [{"nu": list(nu), "dim": d}
                         for nu, d in sorted(dims.items())],
                "total": gb.total_dim}
    if cmd == "radical":
        nu = parse_coweight(ctx, cfg.get("nu"))
        gd = _cached_gram(ctx, matrix, cfg["l"], nu, cache_dir)
        return {"cmd": cmd, "nu": list(nu),
                "words": [list(w) for w in gd["words"]],
                "rank": gd["rank"],
                "quotient_words": [list(w) for w in gd["quotient_words"]],
                "radical": gd["radical"],
                "field_order": ctx.l}
    if cmd in ("verma", "simple"):
        lam = parse_weight(ctx, cfg.get("weight"))
        mod = (repcat.verma if cmd == "verma" else repcat.simple)(ctx, lam)
        return {"cmd": cmd, "weight": ser_weight(lam), "dim": mod.dim,
                "char": [{"weight": ser_weight(w), "mult": d}
                         for w, d in mod.character()]}
    if cmd == "tensor-char":
        lams = _parse_weights(ctx, cfg.get("weights"))
        mods = [repcat.simple(ctx, lam) for lam in lams]
        if not mods:
            raise ConfigError("weights must be nonempty")
        acc = mods[0]
        for nxt in mods[1:]:
            acc = repcat.tensor(ctx, acc, nxt, check=False)
        return {"cmd": cmd, "dim": acc.dim,
                "char": [{"weight": ser_weight(w), "mult": d}
                         for w, d in acc.character()]}
    if cmd == "blocks":
        lams = _parse_weights(ctx, cfg.get("weights"))
        return {"cmd": cmd,
                "dim": repcat.conformal_block_dim(ctx, lams)}
    if cmd == "ribbon":
        lam = parse_weight(ctx, cfg.get("weight"))
        out = {"cmd": cmd, "weight": ser_weight(lam),
               "balance_exponent": list(ribbon.balance_exponent(ctx, lam))}
        if "weight2" in cfg:
            mu = parse_weight(ctx, cfg["weight2"], "weight2")
            out["weight2"] = ser_weight(mu)
            out["braiding_exponent"] = list(
                ribbon.braiding_exponent(ctx, lam, mu))
        out["central_charge_exponent"] = list(
            ribbon.central_charge_exponent(ctx))
        out["modulus"] = ctx.N
        return out
    if cmd == "monodromy":
        nu = parse_coweight(ctx, cfg.get("nu"))
        mu = parse_weight(ctx, cfg.get("mu"), "mu")
        flavour = cfg.get("flavour")
        if flavour not in ("J", "Sign", "I"):
            raise ConfigError("flavour must be 'J', 'Sign' or 'I'")
        rep = braidmono.standard_monodromy(ctx, nu, mu, flavour)
        ok, fails = braidmono.verify_relations(rep)
        gens = []
        for gen in sorted(rep.scalars,
                          key=lambda g: (g[0], g[1:])):
            k = rep.scalars[gen].as_power_of_generator()
            label = ("loop@" + "".join(map(str, gen[1]))
                     if gen[0] == "loop" else
                     "twist%+d@%s:%d" % (gen[3],
                                         "".join(map(str, gen[1])), gen[2]))
            gens.append({"label": label, "exponent": [k, ctx.N]})
        return {"cmd": cmd, "flavour": flavour,
                "relations_ok": ok, "generators": gens}
    if cmd == "factorization-check":
        mu = parse_weight(ctx, cfg.get("mu"), "mu")
        nus_raw = cfg.get("nus")
        if not isinstance(nus_raw, list):
            raise ConfigError("nus must be a list of coweights")
        nus = [parse_coweight(ctx, x, "nus[%d]" % i)
               for i, x in enumerate(nus_raw)]
        return {"cmd": cmd,
                "ok": braidmono.factorization_check(ctx, mu, nus)}
    if cmd == "admissible":
        mus_raw = cfg.get("mus")
        if not isinstance(mus_raw, list):
            raise ConfigError("mus must be a list of weights")
        mus = [parse_weight(ctx, x, "mus[%d]" % i)
               for i, x in enumerate(mus_raw)]
        nu = parse_coweight(ctx, cfg.get("nu"))
        genus = cfg.get("genus", 0)
        if isinstance(genus, bool) or not isinstance(genus, int):
            raise ConfigError("genus must be an integer")
        return {"cmd": cmd,
                "admissible": braidmono.admissible(ctx, mus, nu, genus)}
    if cmd == "heisenberg-rank":
        genus = cfg.get("genus", 0)
        if isinstance(genus, bool) or not isinstance(genus, int):
            raise ConfigError("genus must be an integer")
        return {"cmd": cmd, "rank": ctx.heisenberg_rank(genus)}
    raise ConfigError("unhandled cmd %r" % cmd)


def _parse_weights(ctx, raw):
    if not isinstance(raw, list):
        raise ConfigError("weights must be a list of weight vectors")
    return [parse_weight(ctx, x, "weights[%d]" % i)
            for i, x in enumerate(raw)]


def _cached_gram(ctx, matrix, l, nu, cache_dir):
    key = None
    if cache_dir:
        blob = json.dumps({"matrix": matrix, "l": l, "nu": list(nu)},
                          sort_keys=True)
        key = os.path.join(
            cache_dir, hashlib.sha256(blob.encode()).hexdigest() + ".json")
        if os.path.exists(key):
            with open(key) as fh:
                return json.load(fh)
    gd = shuffle.gram_radical(ctx, nu)
    out = {"words": [list(w) for w in gd.words],
           "rank": gd.rank,
           "quotient_words": [list(w) for w in gd.quotient_words],
           "radical": [[ser_elem(c) for c in vec] for vec in gd.radical]}
    if key:
        os.makedirs(cache_dir, exist_ok=True)
        with open(key, "w") as fh:
            json.dump(out, fh)
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="smallq",
        description="exact small-quantum-group computations; "
                    "reads a JSON job and writes a JSON result")
    ap.add_argument("config", help="path to a JSON job file, or - for stdin")
    ap.add_argument("--cache-dir", default=None,
                    help="optional directory for cached Gram data")
    args = ap.parse_args(argv)
    try:
        if args.config == "-":
            raw = sys.stdin.read()
        else:
            with open(args.config) as fh:
                raw = fh.read()
        cfg = json.loads(raw)
    except (OSError, json.JSONDecodeError) as e:
        print(json.dumps({"error": "malformed config: %s" % e}))
        return 2
    try:
        out = run_job(cfg, cache_dir=args.cache_dir)
    except ConfigError as e:
        print(json.dumps({"error": str(e)}))
        return 2
    except (CartanError, ValueError, ArithmeticError, RuntimeError) as e:
        print(json.dumps({"error": str(e)}))
        return 1
    print(json.dumps(out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
