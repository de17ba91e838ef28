"""The block-matrix decomposition map and its inverse."""

import itertools
import random

from yokohecke._golden import golden_checks
from yokohecke.exactnum import LPoly
from yokohecke.isomap import BlockMatrix, iota, phi, psi
from yokohecke.permcomp import all_compositions
from yokohecke.yokonuma import YElem, from_E_basis, y_mul

from test_yokonuma import all_characters, random_yelem


def all_perms(n):
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def test_psi_of_one_is_identity():
    for d in (1, 2, 3):
        for n in (1, 2, 3):
            assert psi(YElem.one(d, n)) == BlockMatrix.identity_matrix(d, n)


def test_block_shapes():
    d, n = 2, 3
    M = psi(YElem.one(d, n))
    for mu in all_compositions(d, n):
        mat = M.block(mu)
        assert len(mat) == mu.multiplicity()
        assert all(len(row) == mu.multiplicity() for row in mat)


def test_phi_psi_round_trip_full_basis():
    for d, n in ((2, 2), (3, 2), (2, 3)):
        for chi in all_characters(d, n):
            for w in all_perms(n):
                x = from_E_basis(d, n, {(chi, w): LPoly.one(d)})
                assert phi(psi(x)) == x, (d, n, chi, w)


def test_phi_psi_round_trip_random_elements():
    rng = random.Random(3)
    for d in (2, 3):
        for _ in range(10):
            x = random_yelem(rng, d, 3)
            assert phi(psi(x)) == x


def test_psi_is_linear():
    rng = random.Random(5)
    d, n = 2, 3
    for _ in range(8):
        x, y = random_yelem(rng, d, n), random_yelem(rng, d, n)
        assert psi(x + y) == psi(x) + psi(y)
        assert psi(x - y) == psi(x) - psi(y)


def test_psi_is_multiplicative_random_basis_pairs():
    rng = random.Random(7)
    for d, n in ((2, 2), (2, 3), (3, 2)):
        chars = all_characters(d, n)
        perms = all_perms(n)
        for _ in range(40):
            x = from_E_basis(d, n, {(rng.choice(chars), rng.choice(perms)): LPoly.one(d)})
            y = from_E_basis(d, n, {(rng.choice(chars), rng.choice(perms)): LPoly.one(d)})
            assert psi(y_mul(x, y)) == psi(x) * psi(y)


def test_psi_is_multiplicative_random_elements():
    rng = random.Random(11)
    for d in (2, 3):
        for _ in range(8):
            x, y = random_yelem(rng, d, 3), random_yelem(rng, d, 3)
            assert psi(y_mul(x, y)) == psi(x) * psi(y)


def test_iota_commutes_with_extension():
    rng = random.Random(13)
    for d, n in ((2, 2), (2, 3)):
        for _ in range(10):
            x = random_yelem(rng, d, n)
            assert iota(psi(x)) == psi(x.extend(n + 1)), (d, n)


def test_iota_preserves_products():
    rng = random.Random(17)
    d, n = 2, 2
    for _ in range(8):
        x, y = random_yelem(rng, d, n), random_yelem(rng, d, n)
        assert iota(psi(x) * psi(y)) == iota(psi(x)) * iota(psi(y))


def test_golden_generator_matrices():
    results = golden_checks()
    assert len(results) == 10
    for check_id, ok, detail in results:
        assert ok, (check_id, detail)
