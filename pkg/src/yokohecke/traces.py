"""Markov traces on the tower {Y_{d,n}}_n and related linear forms.

A Markov trace is a family of linear forms rho_n : Y_{d,n} -> R with

    (M1)  rho_n(xy) = rho_n(yx),
    (M2)  rho_{n+1}(x g_n) = rho_{n+1}(x g_n^{-1}) = rho_n(x)   for x in Y_{d,n}.

The family of all such traces is a free module of rank 2^d - 1: one basis
trace per nonzero subset of the letters, encoded here by a composition
mu0 with parts in {0,1}.  Every trace decomposes through the matrix-algebra
picture as

    rho(x) = sum_mu alpha_{base(mu)} * tau^mu( Tr( psi(x)_mu ) ),

where Tr is the matrix trace of the mu-block and tau^mu the block-product
Markov trace on H^mu; a `TraceSpec` stores d and the alpha parameters.

Also here:

* `symmetrizing_rho` / `symmetrizing_tilde`: the two expressions of the
  symmetrizing form on Y_{d,n} (sum over blocks of the coefficient of the
  identity, resp. d^n times the coefficient of the identity basis element
  with all framings trivial); they agree, which is a strong cross-check of
  the decomposition.
* `esystem_c` / `jl_spec`: the trace-parameter solutions c_b of the E-system
  indexed by a nonzero subset S of letters, and the TraceSpec whose link
  invariant reproduces that classical weighted-trace construction.
* `semisimple_at`: whether the specialized Hecke algebra H_n at u^2 = q is
  semisimple (no vanishing q-integer factor).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Complex
from typing import Iterable, Mapping

from .exactnum import Cyclo, LPoly, root_power
from .hecke import loop_factor, tau_parabolic
from .isomap import psi
from .permcomp import Composition, all_comp0, identity
from .yokonuma import YElem

__all__ = [
    "TraceSpec",
    "basic_spec",
    "all_basic_specs",
    "rho",
    "rho_blocks",
    "symmetrizing_rho",
    "symmetrizing_tilde",
    "esystem_c",
    "jl_spec",
    "semisimple_at",
    "format_trace_spec",
]


@dataclass(frozen=True)
class TraceSpec:
    """Coefficients of a Markov trace on the basic-trace basis.

    `alphas` maps compositions with parts in {0,1} (the supports) to LPoly
    weights; missing keys mean weight zero.
    """

    d: int
    alphas: Mapping[Composition, LPoly]

    def __post_init__(self):
        clean = {}
        for mu0, a in self.alphas.items():
            if mu0.d != self.d:
                raise ValueError(f"support {mu0} has {mu0.d} parts, expected {self.d}")
            if any(p not in (0, 1) for p in mu0.parts) or mu0.n == 0:
                raise ValueError(f"{mu0} is not a nonzero 0/1 composition")
            if a.order != self.d:
                raise ValueError("alpha coefficients must live at cyclotomic order d")
            if not a.is_zero():
                clean[mu0] = a
        object.__setattr__(self, "alphas", clean)

    def alpha(self, mu0: Composition) -> LPoly:
        return self.alphas.get(mu0, LPoly.zero(self.d))


def basic_spec(mu0: Composition) -> TraceSpec:
    """The basic Markov trace attached to one support mu0 (alpha = 1)."""
    return TraceSpec(mu0.d, {mu0: LPoly.one(mu0.d)})


def all_basic_specs(d: int) -> list[TraceSpec]:
    """The 2^d - 1 basic traces, ascending lexicographic support order."""
    return [basic_spec(mu0) for mu0 in all_comp0(d)]


def rho_blocks(spec: TraceSpec, x: YElem) -> dict[Composition, LPoly]:
    """Per-composition contributions: alpha_{base(mu)} * tau^mu(Tr psi(x)_mu),
    for the compositions present in x's character support."""
    M = psi(x)
    out: dict[Composition, LPoly] = {}
    for mu, _ in sorted(M.blocks.items(), key=lambda kv: kv[0].parts):
        a = spec.alpha(mu.base())
        tr = M.trace_of_block(mu)
        out[mu] = tau_parabolic(tr) * a
    return out

def rho(spec: TraceSpec, x: YElem) -> LPoly:
    """The Markov trace described by `spec`, evaluated at x."""
    total = LPoly.zero(spec.d)
    for val in rho_blocks(spec, x).values():
        total = total + val
    return total


def symmetrizing_rho(x: YElem) -> LPoly:
    """The symmetrizing form through the matrix decomposition: for each block,
    the coefficient of T_identity (equivalently Tt_identity) summed along the
    diagonal, then summed over blocks."""
    M = psi(x)
    total = LPoly.zero(x.d)
    idn = identity(x.n)
    for mu, mat in M.blocks.items():
        for i in range(len(mat)):
            total = total + mat[i][i].coefficient(idn)
    return total


def symmetrizing_tilde(x: YElem) -> LPoly:
    """The same form read off directly on Y_{d,n}: d^n times the coefficient
    of the basis element with trivial framings and identity permutation."""
    c = x.coefficient((0,) * x.n, identity(x.n))
    return c.scale(Fraction(x.d) ** x.n)


# --------------------------------------------------------------------------
# E-system solutions and the weighted-trace reconstruction
# --------------------------------------------------------------------------

def _subset(S: Iterable[int], d: int) -> tuple[int, ...]:
    S = tuple(sorted(set(S)))
    if not S:
        raise ValueError("S must be a nonempty subset of the letters 1..d")
    if any(not 1 <= a <= d for a in S):
        raise ValueError(f"S={S} is not inside 1..{d}")
    return S


def esystem_c(d: int, S: Iterable[int], b: int) -> Cyclo:
    """The E-system solution attached to S: c_b = (1/|S|) sum_{a in S} xi_a^b.

    These are the power sums of the subset of d-th roots of unity indexed by
    S, normalized so that c_0 = 1.
    """
    S = _subset(S, d)
    acc = Cyclo.zero(d)
    for a in S:
        acc = acc + root_power(d, a, b)
    return acc * Fraction(1, len(S))


def jl_spec(d: int, S: Iterable[int]) -> TraceSpec:
    """The TraceSpec reproducing the weighted-trace link invariants for the
    E-system solution S: supports inside S get weight
    (v^{-1}(1-u^2))^{|mu0|-1} / |S|, others vanish."""
    S = _subset(S, d)
    sset = set(S)
    loop = loop_factor(d)
    alphas: dict[Composition, LPoly] = {}
    for mu0 in all_comp0(d):
        support = {a for a, p in enumerate(mu0.parts, start=1) if p}
        if not support <= sset:
            continue
        size = len(support)
        w = (loop ** (size - 1)).scale(Fraction(1, len(S)))
        alphas[mu0] = w
    return TraceSpec(d, alphas)


def semisimple_at(n: int, q=None) -> bool:
    """Is the specialized type-A Hecke algebra H_n at u = q semisimple?

    The criterion is prod_{m=1..n} (1 + q^2 + ... + q^{2m-2}) != 0.  q=None
    means the generic parameter (always semisimple); exact inputs (int,
    Fraction, Cyclo) are tested exactly; floats/complex within 1e-12.
    """
    if q is None or n <= 1:
        return True
    if isinstance(q, Cyclo):
        qq = q * q
        total = Cyclo.one(q.order)
        for m in range(2, n + 1):
            acc = Cyclo.zero(q.order)
            powv = Cyclo.one(q.order)
            for _ in range(m):
                acc = acc + powv
                powv = powv * qq
            total = total * acc
        return not total.is_zero()
    if isinstance(q, (int, Fraction)):
        qq = Fraction(q) ** 2
        total = Fraction(1)
        for m in range(2, n + 1):
            total *= sum(qq**k for k in range(m))
        return total != 0
    if isinstance(q, Complex):
        qq = complex(q) ** 2
        total = 1.0 + 0j
        for m in range(2, n + 1):
            total *= sum(qq**k for k in range(m))
        return abs(total) > 1e-12
    raise TypeError(f"unsupported parameter type {type(q).__name__}")


def format_trace_spec(spec: TraceSpec) -> str:
    """Serialize as one line per stored support:
    `mu0 = (b_1,...,b_d) ; alpha = <polynomial>`."""
    lines = []
    for mu0 in sorted(spec.alphas, key=lambda c: c.parts):
        lines.append(f"mu0 = {mu0} ; alpha = {spec.alphas[mu0].text()}")
    return "\n".join(lines)
