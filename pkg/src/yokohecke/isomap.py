"""The matrix-algebra decomposition of Y_{d,n}.

Y_{d,n} is isomorphic to the direct sum over compositions mu of n with d
parts of the m_mu x m_mu matrix algebras over the parabolic Hecke algebra
H^mu (the span of T_w for w preserving the letter blocks of mu), where m_mu
is the orbit size of mu.  Rows and columns are indexed by the orbit
characters chi_1, ..., chi_{m_mu} (chi_1 block-sorted), with pi_k the
minimal-length permutation taking chi_1 to chi_k.

The two directions are

    psi:  E_{chi_k} gt_w  |->  Tt_p M_{k,j}   with p = pi_k^{-1} w pi_j,
          where j is fixed by w(chi_j) = chi_k (then p preserves blocks);
    phi:  Tt_p M_{i,j}    |->  E_{chi_i} gt_{pi_i p pi_j^{-1}},

inverse to each other; on the T basis the normalization is
Tt_p = u^{-len(p)} T_p, so psi scales by u^{-len(p)} and phi by u^{+len(p)}.

`iota` is the embedding of the level-n matrix side into level n+1 induced by
adding an unframed strand: the block mu spreads over the blocks mu^[a]
(one extra strand of letter a) for a = 1..d; rows/columns re-index by
extending each character with the letter a at position n+1, and entries
conjugate by the cycle moving position n+1 down to the end of the letter-a
block, which is exactly the order-preserving relabeling of the mu-blocks
inside mu^[a] (it preserves lengths).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactnum import LPoly
from .hecke import HeckeElem, ParabolicElem, h_mul
from .permcomp import (
    Character,
    Composition,
    Perm,
    act,
    comp_of,
    compose,
    coset_reps,
    extend,
    identity,
    inverse,
    length,
    orbit,
    orbit_index,
)
from .yokonuma import YElem, from_E_basis, to_E_basis

__all__ = [
    "BlockMatrix",
    "iota",
    "phi",
    "phi_to_e_coeffs",
    "psi",
    "psi_from_e_coeffs",
]


Matrix = tuple[tuple[HeckeElem, ...], ...]


@dataclass(frozen=True)
class BlockMatrix:
    """One m_mu x m_mu matrix of H^mu elements per composition mu.

    Blocks that are entirely zero may be omitted from `blocks`; equality
    treats a missing block as zero.  Entries are HeckeElem of size n whose
    basis permutations preserve the mu-blocks (`entry` wraps them as
    ParabolicElem on demand, which re-validates).
    """

    d: int
    n: int
    blocks: dict[Composition, Matrix]

    def __post_init__(self):
        pruned = {}
        for mu, mat in self.blocks.items():
            if mu.d != self.d or mu.n != self.n:
                raise ValueError(f"block {mu} does not fit level ({self.d},{self.n})")
            m = mu.multiplicity()
            if len(mat) != m or any(len(row) != m for row in mat):
                raise ValueError(f"block {mu} must be {m}x{m}")
            if any(cell for row in mat for cell in row):
                pruned[mu] = mat
        object.__setattr__(self, "blocks", pruned)

    # -- construction helpers --------------------------------------------------

    @classmethod
    def zero(cls, d: int, n: int) -> "BlockMatrix":
        return cls(d, n, {})

    @classmethod
    def identity_matrix(cls, d: int, n: int) -> "BlockMatrix":
        out = {}
        for mu in _levels(d, n):
            m = mu.multiplicity()
            z = HeckeElem.zero(n, d)
            one = HeckeElem.one(n, d)
            out[mu] = tuple(
                tuple(one if i == j else z for j in range(m)) for i in range(m)
            )
        return cls(d, n, out)

    @classmethod
    def single_entry(
        cls, d: int, n: int, mu: Composition, i: int, j: int, value: HeckeElem
    ) -> "BlockMatrix":
        """A matrix with one (0-indexed) nonzero entry in block mu."""
        m = mu.multiplicity()
        z = HeckeElem.zero(n, d)
        mat = tuple(
            tuple(value if (r, c) == (i, j) else z for c in range(m)) for r in range(m)
        )
        return cls(d, n, {mu: mat})

    def block(self, mu: Composition) -> Matrix:
        got = self.blocks.get(mu)
        if got is not None:
            return got
        m = mu.multiplicity()
        z = HeckeElem.zero(self.n, self.d)
        return tuple(tuple(z for _ in range(m)) for _ in range(m))

    def entry(self, mu: Composition, i: int, j: int) -> ParabolicElem:
        return ParabolicElem(mu, self.block(mu)[i][j])

    # -- algebra ----------------------------------------------------------------

    def _check(self, other: "BlockMatrix") -> None:
        if self.d != other.d or self.n != other.n:
            raise ValueError("mixed block-matrix levels")

    def __add__(self, other: "BlockMatrix") -> "BlockMatrix":
        self._check(other)
        out = {}
        for mu in set(self.blocks) | set(other.blocks):
            a, b = self.block(mu), other.block(mu)
            out[mu] = tuple(
                tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
            )
        return BlockMatrix(self.d, self.n, out)

    def __sub__(self, other: "BlockMatrix") -> "BlockMatrix":
        self._check(other)
        out = {}
        for mu in set(self.blocks) | set(other.blocks):
            a, b = self.block(mu), other.block(mu)
            out[mu] = tuple(
                tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
            )
        return BlockMatrix(self.d, self.n, out)

    def __mul__(self, other: "BlockMatrix") -> "BlockMatrix":
        """Blockwise matrix product (absent blocks multiply to absent)."""
        self._check(other)
        out = {}
        for mu in set(self.blocks) & set(other.blocks):
            a, b = self.blocks[mu], other.blocks[mu]
            m = len(a)
            mat = []
            for i in range(m):
                row = []
                for j in range(m):
                    acc = HeckeElem.zero(self.n, self.d)
                    for k in range(m):
                        if a[i][k] and b[k][j]:
                            acc = acc + h_mul(a[i][k], b[k][j])
                    row.append(acc)
                mat.append(tuple(row))
            out[mu] = tuple(mat)
        return BlockMatrix(self.d, self.n, out)

    def trace_of_block(self, mu: Composition) -> ParabolicElem:
        """Sum of the diagonal entries of one block, as a ParabolicElem."""
        mat = self.block(mu)
        acc = HeckeElem.zero(self.n, self.d)
        for i in range(len(mat)):
            acc = acc + mat[i][i]
        return ParabolicElem(mu, acc)

    def is_zero(self) -> bool:
        return not self.blocks

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BlockMatrix):
            return NotImplemented
        if self.d != other.d or self.n != other.n:
            return False
        for mu in set(self.blocks) | set(other.blocks):
            if self.block(mu) != other.block(mu):
                return False
        return True

    def __hash__(self):  # pragma: no cover
        raise TypeError("BlockMatrix is unhashable")


@lru_cache(maxsize=None)
def _levels(d: int, n: int) -> tuple[Composition, ...]:
    from .permcomp import all_compositions

    return tuple(all_compositions(d, n))


def psi(x: YElem) -> BlockMatrix:
    """Decompose x into one matrix per composition.

    Each idempotent-basis coefficient c on (chi_k, w) contributes
    c * u^{-len(p)} T_p at entry (k, j) of the block comp(chi_k), where
    j is the orbit index of w^{-1}(chi_k) and p = pi_k^{-1} w pi_j.
    """
    return psi_from_e_coeffs(x.d, x.n, to_E_basis(x))


def psi_from_e_coeffs(
    d: int, n: int, eb: dict[tuple[Character, Perm], LPoly]
) -> BlockMatrix:
    """psi applied to an element given directly by idempotent-basis
    coefficients, skipping the change of basis from t-exponents."""
    cells: dict[Composition, dict[tuple[int, int], HeckeElem]] = {}
    for (chi, w), c in eb.items():
        mu = comp_of(chi, d)
        idx = orbit_index(mu)
        k = idx[chi]
        chi_j = act(inverse(w), chi)
        j = idx[chi_j]
        reps = coset_reps(mu)
        p = compose(compose(inverse(reps[k]), w), reps[j])
        coeff = c.shift(eu=-length(p))
        cell = cells.setdefault(mu, {})
        got = cell.get((k, j))
        add = HeckeElem(n, d, {p: coeff})
        cell[(k, j)] = add if got is None else got + add
    out = {}
    for mu, cell in cells.items():
        m = mu.multiplicity()
        z = HeckeElem.zero(n, d)
        out[mu] = tuple(
            tuple(cell.get((i, j), z) for j in range(m)) for i in range(m)
        )
    return BlockMatrix(d, n, out)


def phi(M: BlockMatrix) -> YElem:
    """Inverse of psi: entry (i, j) of block mu sends u^{-len(p)} T_p to the
    single idempotent-basis element E_{chi_i} gt_{pi_i p pi_j^{-1}}."""
    return from_E_basis(M.d, M.n, phi_to_e_coeffs(M))


def phi_to_e_coeffs(M: BlockMatrix) -> dict[tuple[Character, Perm], LPoly]:
    """The idempotent-basis coefficients of phi(M), without the final
    change of basis back to t-exponents."""
    d, n = M.d, M.n
    eb: dict[tuple[Character, Perm], LPoly] = {}
    for mu, mat in M.blocks.items():
        orb = orbit(mu)
        reps = coset_reps(mu)
        m = len(orb)
        for i in range(m):
            chi = orb[i]
            for j in range(m):
                entry = mat[i][j]
                if not entry:
                    continue
                ParabolicElem(mu, entry)  # validates block support
                pj_inv = inverse(reps[j])
                for p, c in entry.terms.items():
                    w = compose(compose(reps[i], p), pj_inv)
                    coeff = c.shift(eu=length(p))
                    got = eb.get((chi, w))
                    eb[(chi, w)] = coeff if got is None else got + coeff
    return eb


def iota(M: BlockMatrix) -> BlockMatrix:
    """The level-(n+1) image of a level-n matrix tuple: what psi of the
    unframed-strand extension looks like, computed purely on the matrix side.

    Block mu feeds each block mu^[a]; rows re-index by appending the letter a
    to the row character, and entries conjugate by the relabeling cycle of
    the letter-a block (length-preserving, so T-coefficients carry over).
    """
    d, n = M.d, M.n
    cells: dict[Composition, dict[tuple[int, int], HeckeElem]] = {}
    for mu, mat in M.blocks.items():
        orb = orbit(mu)
        m = len(orb)
        for a in range(1, d + 1):
            mua = mu.bump(a)
            idxa = orbit_index(mua)
            rowmap = [idxa[chi + (a,)] for chi in orb]
            # relabeling cycle: position n+1 moves down to the end of the
            # letter-a block; positions p..n shift up by one.
            p = sum(mu.parts[:a]) + 1
            cyc = tuple(range(1, p)) + tuple(range(p + 1, n + 2)) + (p,)
            cyc_inv = inverse(cyc)
            cell = cells.setdefault(mua, {})
            for i in range(m):
                for j in range(m):
                    entry = mat[i][j]
                    if not entry:
                        continue
                    terms = {}
                    for w, c in entry.terms.items():
                        w2 = compose(compose(cyc, extend(w, n + 1)), cyc_inv)
                        terms[w2] = c
                    add = HeckeElem(n + 1, d, terms)
                    key = (rowmap[i], rowmap[j])
                    got = cell.get(key)
                    cell[key] = add if got is None else got + add
    out = {}
    for mua, cell in cells.items():
        m = mua.multiplicity()
        z = HeckeElem.zero(n + 1, d)
        out[mua] = tuple(
            tuple(cell.get((i, j), z) for j in range(m)) for i in range(m)
        )
    return BlockMatrix(d, n + 1, out)
