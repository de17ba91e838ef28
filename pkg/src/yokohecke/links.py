"""Braid words, framed braid words, and link invariants.

A braid word on ``n`` strands is a sequence of tokens: crossings
``sigma_i^{+-1}`` (1 <= i <= n-1) and, for framed links, framing
generators ``t_j^k`` (1 <= j <= n, k taken mod d).  The closure of the
braid is the (framed) link whose invariants are computed here:

* ``homflypt`` sends ``sigma_i -> T_i`` into the Iwahori-Hecke algebra
  and applies the Markov trace ``markov_tau``.
* ``invariant_gamma`` sends ``sigma_i -> (gamma + (1-gamma) e_i) g_i``
  and ``t_j -> t_j`` into the Yokonuma-Hecke algebra and applies a
  Markov trace ``rho`` built from a :class:`~yokohecke.traces.TraceSpec`.
  The result is a Laurent polynomial in ``u``, ``v``, ``gamma``.
* ``jl_invariant`` / ``jl_numeric`` specialise the trace parameters to
  the E-system solution attached to a subset ``S`` of ``{1, ..., d}``,
  which recovers the classical normalised 2-variable invariants after
  the substitution ``u = sqrt(q * lam)``, ``v = (q - 1) * sqrt(lam)``,
  ``gamma = 1/sqrt(q)`` with ``lam = (z + (1 - q)/|S|) / (q z)``.

Words are plain text: whitespace-separated tokens where a nonzero
integer ``K`` means ``sigma_{|K|}^{sign K}`` and ``tJ^K`` means
``t_J^K``.  Strand count ``n`` and framing modulus ``d`` are always
explicit inputs, never inferred from the word.
"""

from __future__ import annotations

import cmath
import re
from dataclasses import dataclass

from .exactnum import LPoly
from .hecke import HeckeElem, markov_tau
from .permcomp import Composition, Perm, compose, cycles, identity, s_perm
from .traces import TraceSpec, jl_spec, rho, rho_blocks
from .yokonuma import YElem

__all__ = [
    "FramedBraidWord",
    "component_count",
    "delta_H",
    "delta_gamma",
    "homflypt",
    "invariant_contributions",
    "invariant_gamma",
    "jl_invariant",
    "jl_numeric",
    "parse_word",
    "underlying_perm",
]

# Tokens are ("sigma", i, sign) with sign in {1, -1}, or ("frame", j, k).
Token = tuple


@dataclass(frozen=True)
class FramedBraidWord:
    """A word in the framed braid group on ``n`` strands.

    ``tokens`` is a tuple of ``("sigma", i, sign)`` and
    ``("frame", j, k)`` entries.  Index ranges are checked on
    construction; framing exponents are stored as given (callers that
    know ``d`` should reduce them, as :func:`parse_word` does).

    >>> FramedBraidWord(2, (("sigma", 1, 1), ("sigma", 1, 1), ("sigma", 1, 1))).n
    2
    """

    n: int
    tokens: tuple[Token, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("strand count must be at least 1")
        for tok in self.tokens:
            if not isinstance(tok, tuple) or not tok:
                raise ValueError(f"malformed token {tok!r}")
            if tok[0] == "sigma":
                if len(tok) != 3 or tok[2] not in (1, -1):
                    raise ValueError(f"malformed token {tok!r}")
                i = tok[1]
                if not 1 <= i <= self.n - 1:
                    raise ValueError(
                        f"crossing index {i} out of range for {self.n} strands"
                    )
            elif tok[0] == "frame":
                if len(tok) != 3 or not isinstance(tok[2], int):
                    raise ValueError(f"malformed token {tok!r}")
                j = tok[1]
                if not 1 <= j <= self.n:
                    raise ValueError(
                        f"framing index {j} out of range for {self.n} strands"
                    )
            else:
                raise ValueError(f"malformed token {tok!r}")

    @property
    def is_framed(self) -> bool:
        """True if the word contains at least one framing token."""
        return any(tok[0] == "frame" for tok in self.tokens)

    def __str__(self) -> str:
        parts = []
        for tok in self.tokens:
            if tok[0] == "sigma":
                parts.append(str(tok[1] * tok[2]))
            else:
                parts.append(f"t{tok[1]}^{tok[2]}")
        return " ".join(parts)


_FRAME_RE = re.compile(r"t([0-9]+)\^([+-]?[0-9]+)$")
_SIGMA_RE = re.compile(r"[+-]?[0-9]+$")


def parse_word(text: str, n: int, d: int | None) -> FramedBraidWord:
    """Parse whitespace-separated braid tokens.

    A nonzero integer ``K`` stands for ``sigma_{|K|}^{sign K}`` and
    ``tJ^K`` for the ``J``-th framing generator to the power ``K``
    (reduced mod ``d``; trivial framings are dropped).  With ``d=None``
    framing exponents are kept as written, for callers that only want to
    reject framed words.  Raises ``ValueError`` on malformed tokens or
    out-of-range indices.

    >>> str(parse_word("1 1 -2 t3^1", 4, 2))
    '1 1 -2 t3^1'
    >>> parse_word("t1^5", 2, 3).tokens
    (('frame', 1, 2),)
    """
    if n < 1:
        raise ValueError("strand count must be at least 1")
    if d is not None and d < 1:
        raise ValueError("framing modulus must be at least 1")
    tokens: list[Token] = []
    for raw in text.split():
        m = _FRAME_RE.fullmatch(raw)
        if m is not None:
            j = int(m.group(1))
            if not 1 <= j <= n:
                raise ValueError(f"framing index {j} out of range for {n} strands")
            k = int(m.group(2)) if d is None else int(m.group(2)) % d
            if d is None or k != 0:
                tokens.append(("frame", j, k))
            continue
        if _SIGMA_RE.fullmatch(raw):
            value = int(raw)
            if value == 0:
                raise ValueError("crossing token 0 is not allowed")
            i = abs(value)
            if not 1 <= i <= n - 1:
                raise ValueError(f"crossing index {i} out of range for {n} strands")
            tokens.append(("sigma", i, 1 if value > 0 else -1))
            continue
        raise ValueError(f"malformed token {raw!r}")
    return FramedBraidWord(n, tuple(tokens))


def underlying_perm(w: FramedBraidWord) -> Perm:
    """The permutation obtained by forgetting signs and framings.

    >>> from .permcomp import cycles
    >>> beta1 = parse_word("1 1 -2 -3 -2 1 1 1 -2 -3 -2 1", 4, 1)
    >>> [c for c in cycles(underlying_perm(beta1)) if len(c) > 1]
    [(1, 2, 4)]
    """
    p = identity(w.n)
    for tok in w.tokens:
        if tok[0] == "sigma":
            p = compose(p, s_perm(w.n, tok[1]))
    return p


def component_count(w: FramedBraidWord) -> int:
    """Number of components of the closure (cycles of the permutation).

    >>> component_count(parse_word("1 1 1", 2, 1))
    1
    >>> component_count(parse_word("", 3, 1))
    3
    """
    return len(cycles(underlying_perm(w)))


def delta_H(w: FramedBraidWord, order: int = 1) -> HeckeElem:
    """Image of an unframed braid word in the Iwahori-Hecke algebra.

    Sends ``sigma_i`` to the generator ``T_i`` (and its inverse to
    ``T_i^{-1}``).  Raises ``ValueError`` if the word carries framings.

    >>> delta_H(parse_word("1 -1", 2, 1)) == HeckeElem.one(2)
    True
    """
    if w.is_framed:
        raise ValueError("framed word has no classical Hecke image")
    x = HeckeElem.one(w.n, order)
    for tok in w.tokens:
        if tok[2] > 0:
            x = x.mul_gen(tok[1])
        else:
            x = x.mul_gen_inv(tok[1])
    return x


def delta_gamma(w: FramedBraidWord, d: int) -> YElem:
    """Image of a framed braid word in the Yokonuma-Hecke algebra.

    ``sigma_i`` maps to ``(gamma + (1 - gamma) e_i) g_i`` and its inverse
    to ``(gamma^{-1} + (1 - gamma^{-1}) e_i) g_i^{-1}``; the framing
    generator ``t_j`` maps to ``t_j``.  For ``d = 1`` every ``e_i`` is 1
    and the gamma factors cancel.

    >>> x = delta_gamma(parse_word("1 -1", 3, 2), 2)
    >>> x == YElem.one(2, 3)
    True
    """
    one = LPoly.one(d)
    gamma = LPoly.var(d, "g", 1)
    gamma_inv = LPoly.var(d, "g", -1)
    x = YElem.one(d, w.n)
    for tok in w.tokens:
        if tok[0] == "frame":
            x = x.mul_t(tok[1], tok[2])
        elif tok[2] > 0:
            plain = x.mul_g(tok[1])
            fused = x.mul_e(tok[1]).mul_g(tok[1])
            x = plain.scale(gamma) + fused.scale(one - gamma)
        else:
            plain = x.mul_g_inv(tok[1])
            fused = x.mul_e(tok[1]).mul_g_inv(tok[1])
            x = plain.scale(gamma_inv) + fused.scale(one - gamma_inv)
    return x


def homflypt(w: FramedBraidWord) -> LPoly:
    """The 2-variable invariant of the closure of an unframed word.

    Composes ``delta_H`` with the Markov trace of the Hecke algebra.

    >>> print(homflypt(parse_word("1", 2, 1)).text())
    1
    >>> print(homflypt(parse_word("1 1 1", 2, 1)).text())
    -1 * u^4 + 2 * u^2 + 1 * v^2
    """
    return markov_tau(delta_H(w))


def invariant_gamma(w: FramedBraidWord, spec: TraceSpec) -> LPoly:
    """The 3-variable invariant of the closure of a framed word.

    Composes ``delta_gamma`` with the Markov trace determined by
    ``spec``; the result is a Laurent polynomial in ``u, v, gamma``
    with coefficients in the ``spec.d``-th cyclotomic field.
    """
    return rho(spec, delta_gamma(w, spec.d))


def invariant_contributions(
    w: FramedBraidWord, spec: TraceSpec
) -> dict[Composition, LPoly]:
    """Per-block summands of :func:`invariant_gamma`, keyed by composition.

    The values sum to ``invariant_gamma(w, spec)``; each is the weighted
    trace of one matrix block of the image of the word.
    """
    return rho_blocks(spec, delta_gamma(w, spec.d))


def jl_invariant(w: FramedBraidWord, d: int, S) -> LPoly:
    """Invariant attached to the E-system solution for a subset ``S``.

    Equivalent to ``invariant_gamma(w, jl_spec(d, S))``: the trace
    parameters are ``(v^{-1}(1 - u^2))^{|mu0| - 1} / |S|`` on subsets of
    ``S`` and 0 elsewhere.  For ``d = 1``, ``S = {1}`` this is the
    2-variable invariant in ``u, v`` (gamma-free).

    >>> p = jl_invariant(parse_word("1 1 1", 2, 1), 1, {1})
    >>> p.as_order(1) == homflypt(parse_word("1 1 1", 2, 1))
    True
    """
    return invariant_gamma(w, jl_spec(d, S))


def jl_numeric(
    w: FramedBraidWord,
    d: int,
    S,
    q: complex,
    z: complex,
    branch: int = 1,
) -> complex:
    """Numeric value of the normalised 2-variable invariant at ``(q, z)``.

    Evaluates :func:`jl_invariant` at ``u = sqrt(q) * sqrt(lam)``,
    ``v = (q - 1) * sqrt(lam)``, ``gamma = 1 / sqrt(q)`` where
    ``lam = (z + (1 - q)/|S|) / (q z)``.  ``branch`` (+1 or -1) selects
    the square root of ``lam`` used consistently in both ``u`` and
    ``v``; link invariants are branch-independent.  Raises
    ``ValueError`` on vanishing denominators.
    """
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    subset = sorted(set(S))
    if not subset:
        raise ValueError("subset S must be non-empty")
    q = complex(q)
    z = complex(z)
    if q == 0 or z == 0:
        raise ValueError("q and z must be nonzero")
    e_s = 1.0 / len(subset)
    lam = (z + (1 - q) * e_s) / (q * z)
    if lam == 0:
        raise ValueError("lambda vanishes at the given (q, z)")
    sqlam = branch * cmath.sqrt(lam)
    sqq = cmath.sqrt(q)
    poly = jl_invariant(w, d, S)
    return poly.eval_complex(sqq * sqlam, (q - 1) * sqlam, 1 / sqq)


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
