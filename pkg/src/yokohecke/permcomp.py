"""Symmetric group combinatorics: permutations, compositions, characters.

Conventions used throughout the package:

* A permutation w of {1, ..., n} is a plain tuple in one-line notation,
  `w[i-1]` being the image of i.  Composition is (v * w)(i) = v(w(i)), so in
  a product the right factor acts first, and a braid word read left to right
  multiplies up as w1 * w2 * ... * wr.
* s_i denotes the simple transposition (i, i+1), for i in 1..n-1.
* A composition mu of n with d parts is a tuple of non-negative integers
  summing to n; it records how many strands carry each of the d letters.
* A character chi assigns to each position j in 1..n a letter in 1..d; it is
  stored as the tuple of letters.  The symmetric group acts by permuting
  positions: (w . chi)(w(j)) = chi(j).

>>> compose(s_perm(3, 1), s_perm(3, 2))   # s_1 s_2 = cycle 1->2->3->1
(2, 3, 1)
>>> reduced_word((2, 1, 4, 3))
(1, 3)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Perm",
    "Character",
    "identity",
    "s_perm",
    "compose",
    "inverse",
    "apply_perm",
    "length",
    "reduced_word",
    "from_word",
    "extend",
    "restrict",
    "cycles",
    "Composition",
    "all_compositions",
    "all_comp0",
    "comp_of",
    "chi_one",
    "orbit",
    "orbit_index",
    "min_coset_rep",
    "coset_reps",
    "act",
    "young_members",
    "in_young",
    "block_split",
]

Perm = tuple[int, ...]
Character = tuple[int, ...]


# --------------------------------------------------------------------------
# permutations
# --------------------------------------------------------------------------

def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def s_perm(n: int, i: int) -> Perm:
    """The simple transposition s_i in S_n.

    >>> s_perm(4, 2)
    (1, 3, 2, 4)
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose(v: Perm, w: Perm) -> Perm:
    """(v * w)(i) = v(w(i)): w acts first."""
    return tuple(v[x - 1] for x in w)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def apply_perm(w: Perm, i: int) -> int:
    return w[i - 1]


def length(w: Perm) -> int:
    """Coxeter length = number of inversions.

    >>> length((1, 2, 3)), length((3, 2, 1))
    (0, 3)
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def reduced_word(w: Perm) -> tuple[int, ...]:
    """The lexicographically smallest reduced word for w.

    Repeatedly strips the smallest left descent, i.e. bubble-sorts the
    one-line form of w^{-1} while recording swaps; the resulting generators
    multiply back to w left to right.

    >>> reduced_word((2, 1, 4, 3))
    (1, 3)
    >>> reduced_word((3, 1, 2))
    (2, 1)
    """
    inv = list(inverse(w))
    word: list[int] = []
    i = 0
    while i < len(inv) - 1:
        if inv[i] > inv[i + 1]:
            word.append(i + 1)
            inv[i], inv[i + 1] = inv[i + 1], inv[i]
            i = max(i - 1, 0)
        else:
            i += 1
    return tuple(word)


def from_word(n: int, word: tuple[int, ...] | list[int]) -> Perm:
    """Multiply out a word in the s_i, left to right.

    >>> from_word(4, (1, 3))
    (2, 1, 4, 3)
    """
    w = identity(n)
    for i in word:
        w = compose(w, s_perm(n, i))
    return w


def extend(w: Perm, m: int) -> Perm:
    """View w in S_m (m >= len(w)) by fixing the new points."""
    if m < len(w):
        raise ValueError("cannot extend to a smaller size")
    return w + tuple(range(len(w) + 1, m + 1))


def restrict(w: Perm, m: int) -> Perm:
    """View w in S_m (m <= len(w)); requires w to fix m+1, ..., n."""
    if any(w[i] != i + 1 for i in range(m, len(w))):
        raise ValueError(f"{w} does not fix the points above {m}")
    return w[:m]


def cycles(w: Perm) -> list[tuple[int, ...]]:
    """Cycle decomposition, including fixed points, each cycle led by its minimum.

    >>> cycles((2, 4, 3, 1))
    [(1, 2, 4), (3,)]
    """
    seen = [False] * len(w)
    out = []
    for start in range(1, len(w) + 1):
        if seen[start - 1]:
            continue
        cyc = [start]
        seen[start - 1] = True
        j = w[start - 1]
        while j != start:
            cyc.append(j)
            seen[j - 1] = True
            j = w[j - 1]
        out.append(tuple(cyc))
    return out


# --------------------------------------------------------------------------
# compositions
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Composition:
    """A d-tuple of non-negative integers summing to n (parts may be zero)."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 0 for p in self.parts):
            raise ValueError(f"negative part in {self.parts}")

    @property
    def d(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def base(self) -> "Composition":
        """Replace every nonzero part by 1.

        >>> Composition((3, 0, 1)).base()
        Composition(parts=(1, 0, 1))
        """
        return Composition(tuple(1 if p else 0 for p in self.parts))

    def bump(self, a: int) -> "Composition":
        """Add 1 to part a (1-indexed)."""
        parts = list(self.parts)
        parts[a - 1] += 1
        return Composition(tuple(parts))

    def unbump(self, a: int) -> "Composition":
        """Subtract 1 from part a (1-indexed); the part must be positive."""
        parts = list(self.parts)
        if parts[a - 1] <= 0:
            raise ValueError(f"part {a} of {self.parts} is not positive")
        parts[a - 1] -= 1
        return Composition(tuple(parts))

    def multiplicity(self) -> int:
        """Size of the character orbit: the multinomial n! / prod(mu_a!).

        >>> Composition((2, 2)).multiplicity()
        6
        """
        import math

        out = math.factorial(self.n)
        for p in self.parts:
            out //= math.factorial(p)
        return out

    def blocks(self) -> list[range]:
        """Consecutive position blocks [1..mu_1], [mu_1+1..mu_1+mu_2], ...

        Zero parts give empty ranges, kept so that block a always belongs to
        letter a.
        """
        out = []
        lo = 1
        for p in self.parts:
            out.append(range(lo, lo + p))
            lo += p
        return out

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def all_compositions(d: int, n: int) -> list[Composition]:
    """All compositions of n with d parts, ascending lexicographic order.

    >>> [c.parts for c in all_compositions(2, 2)]
    [(0, 2), (1, 1), (2, 0)]
    """
    out = []
    for cuts in itertools.combinations(range(n + d - 1), d - 1):
        ext = (-1,) + cuts + (n + d - 1,)
        out.append(Composition(tuple(ext[i + 1] - ext[i] - 1 for i in range(d))))
    return sorted(out, key=lambda c: c.parts)


def all_comp0(d: int) -> list[Composition]:
    """The 2^d - 1 nonzero compositions with parts in {0, 1}, ascending lex."""
    out = []
    for bits in itertools.product((0, 1), repeat=d):
        if any(bits):
            out.append(Composition(bits))
    return out


def comp_of(chi: Character, d: int) -> Composition:
    """Letter multiplicities of a character.

    >>> comp_of((1, 2, 1, 1), 2)
    Composition(parts=(3, 1))
    """
    counts = [0] * d
    for a in chi:
        if not 1 <= a <= d:
            raise ValueError(f"letter {a} out of range 1..{d}")
        counts[a - 1] += 1
    return Composition(tuple(counts))


# --------------------------------------------------------------------------
# characters and their orbit combinatorics
# --------------------------------------------------------------------------

def chi_one(mu: Composition) -> Character:
    """The block-sorted character: mu_1 ones, then mu_2 twos, etc.

    Its stabilizer in S_n is exactly the Young subgroup of mu.

    >>> chi_one(Composition((3, 1)))
    (1, 1, 1, 2)
    """
    out: list[int] = []
    for a, p in enumerate(mu.parts, start=1):
        out.extend([a] * p)
    return tuple(out)


@lru_cache(maxsize=None)
def _orbit_cached(parts: tuple[int, ...]) -> tuple[Character, ...]:
    mu = Composition(parts)
    first = chi_one(mu)
    rest = sorted(set(itertools.permutations(first)) - {first})
    return (first,) + tuple(rest)


def orbit(mu: Composition) -> tuple[Character, ...]:
    """All characters with letter multiplicities mu, the sorted one first,
    the others in ascending lexicographic order.

    >>> orbit(Composition((1, 1)))
    ((1, 2), (2, 1))
    """
    return _orbit_cached(mu.parts)


@lru_cache(maxsize=None)
def _orbit_index_cached(parts: tuple[int, ...]) -> dict[Character, int]:
    return {chi: k for k, chi in enumerate(_orbit_cached(parts))}


def orbit_index(mu: Composition) -> dict[Character, int]:
    """Map each orbit character to its 0-based position in `orbit(mu)`."""
    return _orbit_index_cached(mu.parts)


def act(w: Perm, chi: Character) -> Character:
    """The position action: (w . chi) has letter chi(j) at position w(j).

    >>> act((1, 3, 4, 2), (1, 1, 1, 2))
    (1, 2, 1, 1)
    """
    out = [0] * len(chi)
    for j, a in enumerate(chi):
        out[w[j] - 1] = a
    return tuple(out)


def min_coset_rep(chi: Character, d: int) -> Perm:
    """The shortest permutation sending chi_one(comp_of(chi)) to chi.

    It fills the positions of each letter in increasing order, which keeps
    every letter block order-preserved; this is the distinguished (minimal
    length) representative of the left coset pi * Stab(chi_one).

    >>> min_coset_rep((1, 2, 1, 1), 2)
    (1, 3, 4, 2)
    """
    mu = comp_of(chi, d)
    positions: dict[int, list[int]] = {a: [] for a in range(1, d + 1)}
    for j, a in enumerate(chi, start=1):
        positions[a].append(j)
    out = [0] * len(chi)
    src = 1
    for a in range(1, d + 1):
        for tgt in positions[a]:
            out[src - 1] = tgt
            src += 1
    return tuple(out)


@lru_cache(maxsize=None)
def _coset_reps_cached(parts: tuple[int, ...]) -> tuple[Perm, ...]:
    mu = Composition(parts)
    return tuple(min_coset_rep(chi, mu.d) for chi in orbit(mu))


def coset_reps(mu: Composition) -> tuple[Perm, ...]:
    """min_coset_rep for each orbit character, in orbit order (pi_1 = id first)."""
    return _coset_reps_cached(mu.parts)


# --------------------------------------------------------------------------
# Young subgroups
# --------------------------------------------------------------------------

def young_members(mu: Composition) -> frozenset[int]:
    """Generator indices i with s_i inside the Young subgroup of mu
    (everything except the block boundaries).

    >>> sorted(young_members(Composition((3, 1))))
    [1, 2]
    """
    cuts = set()
    acc = 0
    for p in mu.parts:
        acc += p
        cuts.add(acc)
    return frozenset(i for i in range(1, mu.n) if i not in cuts)


def in_young(w: Perm, mu: Composition) -> bool:
    """Does w preserve every letter block of mu?"""
    block_id = []
    for a, p in enumerate(mu.parts):
        block_id.extend([a] * p)
    return all(block_id[w[j] - 1] == block_id[j] for j in range(len(w)))


def block_split(w: Perm, mu: Composition) -> list[Perm]:
    """Split w in the Young subgroup of mu into per-block permutations,
    each renumbered to 1..mu_a (zero parts give empty tuples).

    >>> block_split((2, 1, 3, 4), Composition((3, 1)))
    [(2, 1, 3), (1,)]
    """
    if not in_young(w, mu):
        raise ValueError(f"{w} is not in the Young subgroup of {mu}")
    out = []
    for blk in mu.blocks():
        lo = blk.start
        out.append(tuple(w[j - 1] - lo + 1 for j in blk))
    return out


if __name__ == "__main__":
    import doctest

    doctest.testmod()
