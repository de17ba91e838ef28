"""The framed deformation algebra: relations, idempotents, E-basis."""

import itertools
import random
from fractions import Fraction

from yokohecke.exactnum import LPoly, root_power
from yokohecke.permcomp import Composition, all_compositions, identity, orbit
from yokohecke.yokonuma import (
    YElem,
    e_basis_mul_basis,
    from_E_basis,
    idempotent_E,
    idempotent_Emu,
    to_E_basis,
    y_mul,
)


def all_characters(d, n):
    return [tuple(c) for c in itertools.product(range(1, d + 1), repeat=n)]


def random_yelem(rng, d, n, terms=3):
    out = YElem.zero(d, n)
    for _ in range(terms):
        x = YElem.one(d, n)
        for _ in range(rng.randrange(0, 4)):
            kind = rng.randrange(3)
            if kind == 0:
                x = x.mul_t(rng.randrange(1, n + 1), rng.randrange(d))
            elif kind == 1:
                x = x.mul_g(rng.randrange(1, n))
            else:
                x = x.mul_g_inv(rng.randrange(1, n))
        out = out + x.scale(LPoly.const(d, rng.randrange(-2, 3)))
    return out


# ---------------------------------------------------------------------------
# defining relations
# ---------------------------------------------------------------------------


def test_framing_relations():
    for d in (2, 3):
        for n in (2, 3):
            one = YElem.one(d, n)
            for j in range(1, n + 1):
                assert one.mul_t(j, d) == one  # t_j^d = 1
                for k in range(1, n + 1):
                    a = one.mul_t(j, 1).mul_t(k, 1)
                    b = one.mul_t(k, 1).mul_t(j, 1)
                    assert a == b  # t_j t_k = t_k t_j


def test_g_t_exchange():
    # g_i t_j = t_{s_i(j)} g_i
    for d in (2, 3):
        n = 3
        for i in (1, 2):
            for j in (1, 2, 3):
                g = YElem.one(d, n).mul_g(i)
                lhs = g.mul_t(j, 1)
                swapped = j if j not in (i, i + 1) else (i + 1 if j == i else i)
                rhs = YElem.one(d, n).mul_t(swapped, 1).mul_g(i)
                assert lhs == rhs, (d, i, j)


def test_braid_and_commuting_relations():
    for d in (2, 3):
        n = 4
        one = YElem.one(d, n)
        for i in (1, 2):
            a = one.mul_g(i).mul_g(i + 1).mul_g(i)
            b = one.mul_g(i + 1).mul_g(i).mul_g(i + 1)
            assert a == b
        assert one.mul_g(1).mul_g(3) == one.mul_g(3).mul_g(1)


def test_quadratic_relation():
    # g_i^2 = u^2 + v e_i g_i
    for d in (1, 2, 3):
        for n in (2, 3):
            for i in range(1, n):
                one = YElem.one(d, n)
                lhs = one.mul_g(i).mul_g(i)
                rhs = one.scale(LPoly.var(d, "u", 2)) + one.mul_e(i).mul_g(i).scale(
                    LPoly.var(d, "v")
                )
                assert lhs == rhs, (d, n, i)


def test_generator_inverse():
    for d in (2, 3):
        for n in (2, 3):
            for i in range(1, n):
                one = YElem.one(d, n)
                assert one.mul_g(i).mul_g_inv(i) == one
                assert one.mul_g_inv(i).mul_g(i) == one


def test_e_is_idempotent_and_commutes_with_g():
    for d in (1, 2, 3):
        n = 3
        one = YElem.one(d, n)
        for i in (1, 2):
            e = one.mul_e(i)
            assert e.mul_e(i) == e
            assert e.mul_g(i) == one.mul_g(i).mul_e(i)


def test_e_from_framings():
    # e_i = (1/d) sum_s t_i^s t_{i+1}^{-s}
    for d in (2, 3):
        n = 2
        acc = YElem.zero(d, n)
        for s in range(d):
            acc = acc + YElem.one(d, n).mul_t(1, s).mul_t(2, d - s)
        assert acc.scale(LPoly.const(d, Fraction(1, d))) == YElem.one(d, n).mul_e(1)


def test_d1_collapses_to_hecke():
    # at d = 1 the framings vanish and e_i = 1
    one = YElem.one(1, 3)
    assert one.mul_e(1) == one
    assert one.mul_t(2, 5) == one


def test_left_and_right_multiplication_agree():
    rng = random.Random(5)
    for d in (2, 3):
        n = 3
        for _ in range(8):
            x = random_yelem(rng, d, n)
            i = rng.randrange(1, n)
            g = YElem.one(d, n).mul_g(i)
            assert x.lmul_g(i) == y_mul(g, x)
            assert x.mul_g(i) == y_mul(x, g)
            j = rng.randrange(1, n + 1)
            t = YElem.one(d, n).mul_t(j, 1)
            assert x.lmul_t(j, 1) == y_mul(t, x)


def test_y_mul_associative():
    rng = random.Random(9)
    for d in (2, 3):
        for _ in range(6):
            x, y, z = (random_yelem(rng, d, 3) for _ in range(3))
            assert y_mul(y_mul(x, y), z) == y_mul(x, y_mul(y, z))


def test_extend_is_algebra_map():
    rng = random.Random(13)
    d = 2
    for _ in range(6):
        x, y = random_yelem(rng, d, 3), random_yelem(rng, d, 3)
        assert y_mul(x, y).extend(4) == y_mul(x.extend(4), y.extend(4))


# ---------------------------------------------------------------------------
# character idempotents
# ---------------------------------------------------------------------------


def test_idempotents_are_orthogonal_and_complete():
    for d in (2, 3):
        n = 2
        chars = all_characters(d, n)
        total = YElem.zero(d, n)
        for chi in chars:
            E = idempotent_E(d, chi)
            assert y_mul(E, E) == E
            total = total + E
        assert total == YElem.one(d, n)
        E1 = idempotent_E(d, chars[0])
        E2 = idempotent_E(d, chars[1])
        assert y_mul(E1, E2).is_zero()


def test_idempotent_framing_eigenvalue():
    # t_j acts on E_chi by the chi_j-th root of unity
    for d in (2, 3, 4):
        n = 2
        for chi in all_characters(d, n):
            E = idempotent_E(d, chi)
            for j in (1, 2):
                expected = E.scale(LPoly.monomial(d, root_power(d, chi[j - 1], 1)))
                assert E.mul_t(j, 1) == expected


def test_e_i_is_sum_of_diagonal_idempotents():
    for d in (2, 3):
        n = 2
        acc = YElem.zero(d, n)
        for chi in all_characters(d, n):
            if chi[0] == chi[1]:
                acc = acc + idempotent_E(d, chi)
        assert acc == YElem.one(d, n).mul_e(1)


def test_orbit_idempotent():
    for d in (2, 3):
        for mu in all_compositions(d, 3):
            expected = YElem.zero(d, 3)
            for chi in orbit(mu):
                expected = expected + idempotent_E(d, chi)
            assert idempotent_Emu(mu) == expected


# ---------------------------------------------------------------------------
# the E-basis
# ---------------------------------------------------------------------------


def test_e_basis_round_trip():
    rng = random.Random(17)
    for d in (2, 3):
        n = 3
        for _ in range(10):
            x = random_yelem(rng, d, n)
            assert from_E_basis(d, n, to_E_basis(x)) == x


def test_e_basis_of_identity():
    d, n = 2, 2
    eb = to_E_basis(YElem.one(d, n))
    e = identity(n)
    for chi in all_characters(d, n):
        assert eb.get((chi, e)) == LPoly.one(d)
    assert all(w == e for (_, w) in eb)


def test_e_basis_mul_matches_y_mul():
    rng = random.Random(19)
    for d in (2, 3):
        n = 3
        chars = all_characters(d, n)
        perms = [tuple(p) for p in itertools.permutations(range(1, n + 1))]
        for _ in range(25):
            chi, chi2 = rng.choice(chars), rng.choice(chars)
            w, w2 = rng.choice(perms), rng.choice(perms)
            via_table = e_basis_mul_basis(d, chi, w, chi2, w2)
            x = from_E_basis(d, n, {(chi, w): LPoly.one(d)})
            y = from_E_basis(d, n, {(chi2, w2): LPoly.one(d)})
            direct = to_E_basis(y_mul(x, y))
            via_table = {k: v for k, v in via_table.items() if not v.is_zero()}
            direct = {k: v for k, v in direct.items() if not v.is_zero()}
            assert via_table == direct, (chi, w, chi2, w2)
