import random

from smallq.cartan import build_context
from smallq.shuffle import (coproduct_r, shuffle_form, gram_radical,
                            u_minus_basis, multiset_permutations,
                            word_weight)

A1 = [[2]]
A2 = [[2, -1], [-1, 2]]


def test_multiset_permutations():
    got = list(multiset_permutations((2, 1)))
    assert got == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert list(multiset_permutations((0, 0))) == [()]


def test_form_base_cases():
    ctx = build_context(A2, 10)
    zf = ctx.zfield
    assert shuffle_form(ctx, (), ()) == zf.one()
    assert shuffle_form(ctx, (0,), (0,)) == zf.one()
    assert shuffle_form(ctx, (0,), (1,)).is_zero()
    # (theta_i^2, theta_i^2) = 1 + zeta^(i.i)
    assert shuffle_form(ctx, (0, 0), (0, 0)) == \
        zf.one() + zf.zeta_power(ctx.datum.form[0][0])
    # (theta_i theta_j, theta_j theta_i) = zeta^(i.j)
    assert shuffle_form(ctx, (0, 1), (1, 0)) == zf.zeta_power(-1)
    assert shuffle_form(ctx, (0, 1), (0, 1)) == zf.one()


def test_coproduct_example():
    ctx = build_context(A2, 10)
    zf = ctx.zfield
    r = coproduct_r(ctx, {(0, 0): zf.one()})
    assert r[((), (0, 0))] == zf.one()
    assert r[((0, 0), ())] == zf.one()
    assert r[((0,), (0,))] == zf.one() + zf.zeta_power(ctx.datum.form[0][0])


def test_coproduct_is_weight_preserving():
    ctx = build_context(A2, 10)
    zf = ctx.zfield
    r = coproduct_r(ctx, {(0, 1, 0): zf.one()})
    for (u, v) in r:
        wu, wv = word_weight(ctx, u), word_weight(ctx, v)
        assert tuple(a + b for a, b in zip(wu, wv)) == (2, 1)


def test_form_symmetry_random():
    ctx = build_context(A2, 10)
    rng = random.Random(3)
    for _ in range(100):
        d = rng.randint(1, 4)
        w1 = tuple(rng.randint(0, 1) for _ in range(d))
        w2 = list(w1)
        rng.shuffle(w2)
        w2 = tuple(w2)
        assert shuffle_form(ctx, w1, w2) == shuffle_form(ctx, w2, w1)


def test_gram_a1():
    ctx = build_context(A1, 10)
    for m in range(1, 5):
        gd = gram_radical(ctx, (m,))
        assert gd.rank == 1 and not gd.radical
    gd = gram_radical(ctx, (5,))
    assert gd.rank == 0 and len(gd.radical) == 1
    assert u_minus_basis(ctx).dims() == {(0,): 1, (1,): 1, (2,): 1,
                                         (3,): 1, (4,): 1}


def test_quantum_serre_weight():
    ctx = build_context(A2, 10)
    gd = gram_radical(ctx, (2, 1))
    assert len(gd.words) == 3
    assert gd.rank == 2
    assert len(gd.radical) == 1
    assert len(gd.quotient_words) == 2
    # the radical vector pairs to zero with every word of its weight
    for vec in gd.radical:
        for w in gd.words:
            s = ctx.zfield.zero()
            for word, c in zip(gd.words, vec):
                s = s + c * shuffle_form(ctx, w, word)
            assert s.is_zero()


def test_radical_is_ideal():
    ctx = build_context(A2, 10)
    gd = gram_radical(ctx, (2, 1))
    for vec in gd.radical:
        for letter in (0, 1):
            for side in ("left", "right"):
                nu = tuple(c + int(k == letter)
                           for k, c in enumerate(gd.nu))
                prods = {}
                for word, c in zip(gd.words, vec):
                    nw = ((letter,) + word if side == "left"
                          else word + (letter,))
                    prods[nw] = prods.get(nw, ctx.zfield.zero()) + c
                for w in multiset_permutations(nu):
                    s = ctx.zfield.zero()
                    for word, c in prods.items():
                        s = s + c * shuffle_form(ctx, w, word)
                    assert s.is_zero()


def test_total_dim_a2():
    ctx = build_context(A2, 10)
    gb = u_minus_basis(ctx)
    assert gb.total_dim == 125
    dims = gb.dims()
    # graded dims are symmetric under swapping the two letters
    for (a, b), d in dims.items():
        assert dims[(b, a)] == d


def test_express_consistency():
    ctx = build_context(A2, 10)
    gb = u_minus_basis(ctx)
    # a word equals its expansion over the quotient basis, modulo radical:
    # pairings against all words of that weight agree
    word = (0, 1, 0)
    coords = gb.express(word)
    basis = gb.quotient_words[(2, 1)]
    for probe in multiset_permutations((2, 1)):
        lhs = shuffle_form(ctx, probe, word)
        rhs = ctx.zfield.zero()
        for b, c in zip(basis, coords):
            rhs = rhs + c * shuffle_form(ctx, probe, b)
        assert lhs == rhs
