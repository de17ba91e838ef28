"""Type-A Hecke algebra arithmetic and the Markov trace."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yokohecke.exactnum import LPoly
from yokohecke.hecke import (
    HeckeElem,
    ParabolicElem,
    h_mul,
    loop_factor,
    markov_tau,
    t_from_word,
    t_inverse_gen,
    tau_parabolic,
)
from yokohecke.permcomp import Composition, all_compositions, identity, length


def u2():
    return LPoly.var(1, "u", 2)


def v1():
    return LPoly.var(1, "v")


def random_elem(rng, n, terms=3, max_len=4):
    """A random sparse element: sum of random generator words with small
    integer coefficients."""
    out = HeckeElem.zero(n, 1)
    for _ in range(terms):
        word = [rng.randrange(1, n) for _ in range(rng.randrange(0, max_len + 1))]
        x = t_from_word(n, word)
        out = out + x.scale(LPoly.const(1, rng.randrange(-3, 4)))
    return out


# ---------------------------------------------------------------------------
# defining relations
# ---------------------------------------------------------------------------


def test_quadratic_relation():
    for n in (2, 3, 4):
        for i in range(1, n):
            ti = HeckeElem.gen(n, i)
            lhs = h_mul(ti, ti)
            rhs = HeckeElem.one(n).scale(u2()) + ti.scale(v1())
            assert lhs == rhs


def test_braid_relations():
    for n in (3, 4):
        for i in range(1, n - 1):
            a = t_from_word(n, (i, i + 1, i))
            b = t_from_word(n, (i + 1, i, i + 1))
            assert a == b
    t1, t3 = HeckeElem.gen(4, 1), HeckeElem.gen(4, 3)
    assert h_mul(t1, t3) == h_mul(t3, t1)


def test_generator_inverse():
    for n in (2, 3, 4):
        for i in range(1, n):
            prod = h_mul(HeckeElem.gen(n, i), t_inverse_gen(n, i))
            assert prod == HeckeElem.one(n)
            prod = h_mul(t_inverse_gen(n, i), HeckeElem.gen(n, i))
            assert prod == HeckeElem.one(n)


def test_word_products_respect_matsumoto():
    # T_w is well defined: all reduced words of w give the same product
    n = 4
    for w in itertools.permutations(range(1, n + 1)):
        w = tuple(w)
        k = length(w)
        if k > 4:
            continue
        products = set()
        for word in itertools.product(range(1, n), repeat=k):
            if t_from_word(n, word).terms.keys() == {w}:
                elem = t_from_word(n, word)
                products.add(tuple(sorted((p, c.text()) for p, c in elem.terms.items())))
        assert len(products) == 1, w


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_h_mul_associative(data):
    rng = random.Random(data.draw(st.integers(min_value=0, max_value=10**6)))
    n = data.draw(st.integers(min_value=2, max_value=4))
    x, y, z = (random_elem(rng, n) for _ in range(3))
    assert h_mul(h_mul(x, y), z) == h_mul(x, h_mul(y, z))


def test_mul_gen_matches_h_mul():
    rng = random.Random(7)
    for n in (2, 3, 4):
        for _ in range(10):
            x = random_elem(rng, n)
            i = rng.randrange(1, n)
            assert x.mul_gen(i) == h_mul(x, HeckeElem.gen(n, i))
            assert x.mul_gen_inv(i) == h_mul(x, t_inverse_gen(n, i))


def test_extend_is_algebra_map():
    rng = random.Random(11)
    for _ in range(10):
        x, y = random_elem(rng, 3), random_elem(rng, 3)
        assert h_mul(x, y).extend(5) == h_mul(x.extend(5), y.extend(5))


# ---------------------------------------------------------------------------
# the Markov trace
# ---------------------------------------------------------------------------


def test_tau_identity_powers_of_loop():
    loop = loop_factor(1)
    for n in range(1, 7):
        assert markov_tau(HeckeElem.one(n)) == loop ** (n - 1)


def test_tau_normalization_on_cycles():
    # tau_n(T_{s_1 s_2 ... s_{n-1}}) = 1: each step strips one crossing
    for n in range(2, 6):
        x = t_from_word(n, range(1, n))
        assert markov_tau(x) == LPoly.one(1)


def test_tau_trefoil_hand_expansion():
    # T_1^3 = u^2 v + (u^2 + v^2) T_1, expanded with the quadratic relation
    # twice by hand; tau_2 sends 1 -> v^{-1}(1-u^2) and T_1 -> 1
    expanded = HeckeElem.one(2).scale(u2() * v1()) + HeckeElem.gen(2, 1).scale(
        u2() + v1() * v1()
    )
    cubed = t_from_word(2, (1, 1, 1))
    assert cubed == expanded
    expected = u2() * v1() * loop_factor(1) + (u2() + v1() * v1())
    assert markov_tau(cubed) == expected
    assert expected.text() == "-1 * u^4 + 2 * u^2 + 1 * v^2"


def test_tau_is_a_trace():
    rng = random.Random(23)
    for n in (2, 3, 4):
        for _ in range(15):
            x, y = random_elem(rng, n), random_elem(rng, n)
            assert markov_tau(h_mul(x, y)) == markov_tau(h_mul(y, x))


def test_tau_markov_property_both_signs():
    # tau_{n+1}(x T_n) = tau_{n+1}(x T_n^{-1}) = tau_n(x)
    rng = random.Random(31)
    for n in (2, 3):
        for _ in range(15):
            x = random_elem(rng, n)
            up = x.extend(n + 1)
            assert markov_tau(up.mul_gen(n)) == markov_tau(x)
            assert markov_tau(up.mul_gen_inv(n)) == markov_tau(x)


def test_tau_extension_adds_loop():
    rng = random.Random(37)
    loop = loop_factor(1)
    for _ in range(10):
        x = random_elem(rng, 3)
        assert markov_tau(x.extend(4)) == loop * markov_tau(x)


def test_tau_key_product_identity():
    # tau_3(T_1^2 T_2^{-1} T_1^3 T_2 T_1) factors as tau_2(T_1^3)^2
    word = t_from_word(3, (1, 1))
    word = h_mul(word, t_inverse_gen(3, 2))
    word = h_mul(word, t_from_word(3, (1, 1, 1, 2, 1)))
    lhs = markov_tau(word)
    rhs = markov_tau(t_from_word(2, (1, 1, 1)))
    assert lhs == rhs * rhs


# ---------------------------------------------------------------------------
# the parabolic trace
# ---------------------------------------------------------------------------


def test_tau_parabolic_full_block_is_tau():
    rng = random.Random(41)
    mu = Composition((4,))
    for _ in range(8):
        x = random_elem(rng, 4)
        assert tau_parabolic(ParabolicElem(mu, x)) == markov_tau(x)


def test_tau_parabolic_rejects_outside_young():
    x = HeckeElem.gen(4, 2)  # crosses the (2,2) block boundary
    with pytest.raises(ValueError):
        ParabolicElem(Composition((2, 2)), x)


def block_word_elem(n, words, offsets):
    """Multiply generator words living in disjoint blocks into H_n."""
    out = HeckeElem.one(n)
    for word, off in zip(words, offsets):
        for i in word:
            out = out.mul_gen(i + off)
    return out


def test_tau_parabolic_product_formula():
    # on a product of block elements the trace is the product of the
    # blockwise Markov traces (each block renumbered from 1)
    rng = random.Random(43)
    for mu in all_compositions(3, 4):
        offsets = []
        acc = 0
        for p in mu.parts:
            offsets.append(acc)
            acc += p
        for _ in range(12):
            words = [
                [rng.randrange(1, p) for _ in range(rng.randrange(0, 4))] if p > 1 else []
                for p in mu.parts
            ]
            x = block_word_elem(4, words, offsets)
            lhs = tau_parabolic(ParabolicElem(mu, x))
            rhs = LPoly.one(1)
            for word, p in zip(words, mu.parts):
                if p == 0:
                    continue
                rhs = rhs * markov_tau(t_from_word(p, word))
            assert lhs == rhs, (mu, words)
