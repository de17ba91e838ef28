"""Verification suites: randomized and exhaustive self-checks.

Each suite returns a list of ``(check_id, passed, detail)`` triples;
``detail`` holds a counterexample description when a check fails.  The
suites are deterministic for a fixed seed, and the CLI `verify` command
prints their results as ``PASS <id>`` / ``FAIL <id> : <detail>`` lines.

Suites and what they check:

* ``iso``: the block decomposition psi is a ring isomorphism -- phi
  inverts it on the full idempotent basis, it turns products into matrix
  products, and it intertwines the one-strand extension with the block
  embedding iota.  At d=2, n=4 the tabulated golden matrices are also
  compared.
* ``markov``: every basic trace is central and satisfies the Markov
  stabilization condition.
* ``schur``: the two expressions of the symmetrizing form agree on the
  whole basis.
* ``jl``: the weighted-trace specs reproduce the E-system moments, and
  the numeric 2-variable invariant of the unknot is 1.
"""

from __future__ import annotations

import cmath
import itertools
import math
import random

from ._golden import golden_checks
from .exactnum import LPoly
from .isomap import iota, phi_to_e_coeffs, psi, psi_from_e_coeffs
from .links import jl_numeric, parse_word
from .permcomp import Character, Composition, Perm
from .traces import (
    all_basic_specs,
    esystem_c,
    jl_spec,
    rho,
    symmetrizing_rho,
    symmetrizing_tilde,
)
from .yokonuma import YElem, e_basis_mul_basis, y_mul

__all__ = ["SuiteConfigError", "run_suite", "suite_names"]

_DEFAULT_SEED = 20240801

# (max d, max n) per suite; beyond these the runtime is not supported.
_LIMITS = {"iso": (3, 4), "markov": (3, 3), "schur": (3, 3), "jl": (4, 4)}


class SuiteConfigError(ValueError):
    """Raised for unknown suites or out-of-range (d, n)."""


def suite_names() -> tuple[str, ...]:
    return tuple(sorted(_LIMITS))


Check = tuple[str, bool, str]


def _all_characters(d: int, n: int) -> list[Character]:
    return [tuple(c) for c in itertools.product(range(1, d + 1), repeat=n)]


def _all_perms(n: int) -> list[Perm]:
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def _random_perm(rng: random.Random, n: int) -> Perm:
    values = list(range(1, n + 1))
    rng.shuffle(values)
    return tuple(values)


def _random_character(rng: random.Random, d: int, n: int) -> Character:
    return tuple(rng.randrange(1, d + 1) for _ in range(n))


def _random_kvec(rng: random.Random, d: int, n: int) -> tuple[int, ...]:
    return tuple(rng.randrange(d) for _ in range(n))


def _random_basis_elem(rng: random.Random, d: int, n: int) -> YElem:
    key = (_random_kvec(rng, d, n), _random_perm(rng, n))
    return YElem(d, n, {key: LPoly.one(d)})


def _random_elem(rng: random.Random, d: int, n: int, terms: int = 3) -> YElem:
    x = YElem.zero(d, n)
    for _ in range(terms):
        c = LPoly.const(d, rng.choice((-2, -1, 1, 2)))
        key = (_random_kvec(rng, d, n), _random_perm(rng, n))
        x = x + YElem(d, n, {key: c})
    return x


def suite_iso(
    d: int,
    n: int,
    pairs: int = 200,
    embed_samples: int = 40,
    seed: int = _DEFAULT_SEED,
) -> list[Check]:
    rng = random.Random(seed)
    results: list[Check] = []
    chars = _all_characters(d, n)
    perms = _all_perms(n)

    ok, detail = True, ""
    one = LPoly.one(d)
    for chi in chars:
        for w in perms:
            coeffs = {(chi, w): one}
            back = phi_to_e_coeffs(psi_from_e_coeffs(d, n, coeffs))
            back = {key: c for key, c in back.items() if not c.is_zero()}
            if back != coeffs:
                ok, detail = False, f"round trip failed on E_{chi} gt_{w}"
                break
        if not ok:
            break
    results.append((f"iso-roundtrip-d{d}-n{n}", ok, detail))

    ok, detail = True, ""
    for _ in range(pairs):
        chi, w = rng.choice(chars), rng.choice(perms)
        chi2, w2 = rng.choice(chars), rng.choice(perms)
        product = e_basis_mul_basis(d, chi, w, chi2, w2)
        lhs = psi_from_e_coeffs(d, n, product)
        rhs = psi_from_e_coeffs(d, n, {(chi, w): one}) * psi_from_e_coeffs(
            d, n, {(chi2, w2): one}
        )
        if lhs != rhs:
            ok = False
            detail = f"psi not multiplicative on E_{chi} gt_{w} * E_{chi2} gt_{w2}"
            break
    results.append((f"iso-product-d{d}-n{n}", ok, detail))

    if n <= 3:
        ok, detail = True, ""
        for _ in range(embed_samples):
            x = _random_elem(rng, d, n)
            if psi(x.extend(n + 1)) != iota(psi(x)):
                ok, detail = False, f"embedding square failed on {x!r}"
                break
        results.append((f"iso-embed-d{d}-n{n}", ok, detail))

    if (d, n) == (2, 4):
        results.extend(golden_checks())
    return results


def suite_markov(
    d: int, n: int, rounds: int = 10, seed: int = _DEFAULT_SEED
) -> list[Check]:
    rng = random.Random(seed)
    results: list[Check] = []
    for spec in all_basic_specs(d):
        mu0 = next(iter(spec.alphas))
        ok, detail = True, ""
        for _ in range(rounds):
            x = _random_basis_elem(rng, d, n)
            y = _random_basis_elem(rng, d, n)
            if rho(spec, y_mul(x, y)) != rho(spec, y_mul(y, x)):
                ok, detail = False, f"rho(xy) != rho(yx) for {x!r}, {y!r}"
                break
        results.append((f"markov-central-mu0={mu0}", ok, detail))

        ok, detail = True, ""
        for _ in range(rounds):
            x = _random_basis_elem(rng, d, n)
            value = rho(spec, x)
            up = x.extend(n + 1)
            if rho(spec, up.mul_g(n)) != value or rho(spec, up.mul_g_inv(n)) != value:
                ok, detail = False, f"stabilization failed for {x!r}"
                break
        results.append((f"markov-stab-mu0={mu0}", ok, detail))
    return results


def suite_schur(d: int, n: int, seed: int = _DEFAULT_SEED) -> list[Check]:
    results: list[Check] = []
    expected = LPoly.const(d, d**n)
    one = YElem.one(d, n)
    ok = symmetrizing_rho(one) == expected and symmetrizing_tilde(one) == expected
    results.append(
        (f"schur-identity-d{d}-n{n}", ok, "" if ok else f"value on 1 is not {d**n}")
    )

    ok, detail = True, ""
    coeff = LPoly.one(d)
    for k in itertools.product(range(d), repeat=n):
        for w in _all_perms(n):
            el = YElem(d, n, {(k, w): coeff})
            if symmetrizing_rho(el) != symmetrizing_tilde(el):
                ok, detail = False, f"forms differ on t^{k} gt_{w}"
                break
        if not ok:
            break
    results.append((f"schur-basis-d{d}-n{n}", ok, detail))
    return results


def _subsets(d: int):
    for r in range(1, d + 1):
        yield from itertools.combinations(range(1, d + 1), r)


def _set_label(subset) -> str:
    return "{" + ",".join(str(a) for a in subset) + "}"


def suite_jl(
    d: int, n: int, qz_samples: int = 5, seed: int = _DEFAULT_SEED
) -> list[Check]:
    rng = random.Random(seed)
    results: list[Check] = []
    unknot_text = " ".join(str(i) for i in range(1, n))
    for subset in _subsets(d):
        spec = jl_spec(d, subset)
        label = _set_label(subset)

        ok, detail = True, ""
        for b in range(d):
            got = rho(spec, YElem.t_elem(d, 1, 1, b))
            want = LPoly.const(d, esystem_c(d, subset, b))
            if got != want:
                ok, detail = False, f"moment b={b}: {got.text()} != {want.text()}"
                break
        results.append((f"jl-moments-S={label}", ok, detail))

        ok, detail = True, ""
        word = parse_word(unknot_text, n, d)
        for _ in range(qz_samples):
            while True:
                q = cmath.exp(2j * math.pi * rng.random()) * (0.6 + 0.8 * rng.random())
                z = cmath.exp(2j * math.pi * rng.random()) * (0.6 + 0.8 * rng.random())
                try:
                    value = jl_numeric(word, d, subset, q, z, rng.choice((1, -1)))
                except ValueError:
                    continue
                break
            if abs(value - 1) > 1e-9:
                ok, detail = False, f"unknot value {value!r} at q={q!r}, z={z!r}"
                break
        results.append((f"jl-unknot-S={label}", ok, detail))
    return results


def run_suite(suite: str, d: int, n: int, seed: int = _DEFAULT_SEED) -> list[Check]:
    """Run one named suite after validating its supported (d, n) range."""
    if suite not in _LIMITS:
        raise SuiteConfigError(f"unknown suite {suite!r}")
    max_d, max_n = _LIMITS[suite]
    if not 1 <= d <= max_d:
        raise SuiteConfigError(f"suite {suite} supports 1 <= d <= {max_d}, got {d}")
    if not 1 <= n <= max_n:
        raise SuiteConfigError(f"suite {suite} supports 1 <= n <= {max_n}, got {n}")
    if suite == "iso":
        return suite_iso(d, n, seed=seed)
    if suite == "markov":
        return suite_markov(d, n, seed=seed)
    if suite == "schur":
        return suite_schur(d, n, seed=seed)
    return suite_jl(d, n, seed=seed)
