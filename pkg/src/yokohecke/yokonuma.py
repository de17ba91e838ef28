"""The Yokonuma-Hecke algebra Y_{d,n} in exact arithmetic.

Y_{d,n} is generated by g_1, ..., g_{n-1} (braiding) and t_1, ..., t_n
(framing) subject to

    braid relations among the g_i,       t_i t_j = t_j t_i,    t_j^d = 1,
    g_i t_j = t_{s_i(j)} g_i,            g_i^2 = u^2 + v e_i g_i,

where e_i = (1/d) sum_s t_i^s t_{i+1}^{-s} is an idempotent.  Writing
gt_i = u^{-1} g_i (so gt_i^{-1} = gt_i - u^{-1} v e_i), the algebra is free
with basis { t^k gt_w } over k in (Z/d)^n and w in S_n, where t^k means
t_1^{k_1} ... t_n^{k_n} and gt_w comes from any reduced word of w.

Elements are stored on that basis as {(k, w): LPoly} with k a tuple of
exponents in 0..d-1 and w a one-line permutation tuple.  All generator
multiplications below are single passes over the term dict using the
commutation rule g_w t_j = t_{w(j)} g_w.

The second basis used everywhere is the idempotent basis {E_chi gt_w}: for a
character chi (tuple of letters, position j carrying the root of unity
xi_{chi_j}) the primitive idempotent is

    E_chi = prod_j ( (1/d) sum_s xi_{chi_j}^s t_j^{-s} ),

and conversion in either direction factorizes strand by strand
(`to_E_basis` / `from_E_basis`), which keeps the cost at n * d^{n+1} scalar
operations per permutation instead of d^{2n}.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .exactnum import Cyclo, LPoly, root_power
from .permcomp import (
    Character,
    Composition,
    Perm,
    comp_of,
    identity,
    orbit,
    reduced_word,
)

__all__ = [
    "YElem",
    "y_mul",
    "y_mul_gen",
    "idempotent_E",
    "idempotent_Emu",
    "to_E_basis",
    "from_E_basis",
    "e_basis_mul_basis",
]

YKey = tuple[tuple[int, ...], Perm]


class YElem:
    """An element of Y_{d,n} on the framing-tuple / permutation basis."""

    __slots__ = ("d", "n", "terms")

    def __init__(self, d: int, n: int, terms: Mapping[YKey, LPoly] | None = None):
        self.d = d
        self.n = n
        self.terms: dict[YKey, LPoly] = {}
        if terms:
            for (k, w), c in terms.items():
                if len(k) != n or len(w) != n:
                    raise ValueError(f"key {(k, w)} does not fit Y_{{{d},{n}}}")
                if not c.is_zero():
                    self.terms[(k, w)] = c

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, d: int, n: int) -> "YElem":
        return cls(d, n)

    @classmethod
    def one(cls, d: int, n: int) -> "YElem":
        return cls(d, n, {((0,) * n, identity(n)): LPoly.one(d)})

    @classmethod
    def t_elem(cls, d: int, n: int, j: int, power: int = 1) -> "YElem":
        """The framing generator t_j^power."""
        if not 1 <= j <= n:
            raise ValueError(f"framing index {j} out of range 1..{n}")
        k = [0] * n
        k[j - 1] = power % d
        return cls(d, n, {(tuple(k), identity(n)): LPoly.one(d)})

    @classmethod
    def g_elem(cls, d: int, n: int, i: int) -> "YElem":
        """The braiding generator g_i."""
        return cls.one(d, n).mul_g(i)

    @classmethod
    def e_elem(cls, d: int, n: int, i: int) -> "YElem":
        """The idempotent e_i."""
        return cls.one(d, n).mul_e(i)

    # -- linear structure ----------------------------------------------------

    def _check(self, other: "YElem") -> None:
        if self.d != other.d or self.n != other.n:
            raise ValueError("mixed Yokonuma-Hecke algebras")

    def __add__(self, other: "YElem") -> "YElem":
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            acc = out.get(key)
            out[key] = c if acc is None else acc + c
        return YElem(self.d, self.n, out)

    def __sub__(self, other: "YElem") -> "YElem":
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            acc = out.get(key)
            out[key] = -c if acc is None else acc - c
        return YElem(self.d, self.n, out)

    def __neg__(self) -> "YElem":
        return YElem(self.d, self.n, {key: -c for key, c in self.terms.items()})

    def scale(self, c: LPoly) -> "YElem":
        if c.order != self.d:
            raise ValueError("mixed coefficient orders")
        return YElem(self.d, self.n, {key: x * c for key, x in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, YElem)
            and self.d == other.d
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):  # pragma: no cover
        raise TypeError("YElem is unhashable")

    def __repr__(self) -> str:
        if not self.terms:
            return f"<YElem d={self.d} n={self.n}: 0>"
        bits = " ++ ".join(
            f"[{self.terms[key].text()}] t{key[0]} gt{key[1]}" for key in sorted(self.terms)
        )
        return f"<YElem d={self.d} n={self.n}: {bits}>"

    def coefficient(self, k: tuple[int, ...], w: Perm) -> LPoly:
        return self.terms.get((k, w), LPoly.zero(self.d))

    # -- right generator multiplications --------------------------------------

    def mul_t(self, j: int, power: int = 1) -> "YElem":
        """Right multiply by t_j^power: t^k gt_w t_j = t^{k + power.delta_{w(j)}} gt_w."""
        if not 1 <= j <= self.n:
            raise ValueError(f"framing index {j} out of range 1..{self.n}")
        out: dict[YKey, LPoly] = {}
        for (k, w), c in self.terms.items():
            pos = w[j - 1] - 1
            k2 = k[:pos] + ((k[pos] + power) % self.d,) + k[pos + 1 :]
            key = (k2, w)
            acc = out.get(key)
            out[key] = c if acc is None else acc + c
        return YElem(self.d, self.n, out)

    def mul_t_vector(self, kv: tuple[int, ...]) -> "YElem":
        """Right multiply by t^kv = t_1^{kv_1} ... t_n^{kv_n} in one pass."""
        out: dict[YKey, LPoly] = {}
        for (k, w), c in self.terms.items():
            k2 = list(k)
            for j, m in enumerate(kv):
                if m:
                    pos = w[j] - 1
                    k2[pos] = (k2[pos] + m) % self.d
            key = (tuple(k2), w)
            acc = out.get(key)
            out[key] = c if acc is None else acc + c
        return YElem(self.d, self.n, out)

    def mul_e(self, i: int) -> "YElem":
        """Right multiply by e_i = (1/d) sum_s t_i^s t_{i+1}^{-s}."""
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"idempotent index {i} out of range 1..{self.n - 1}")
        d = self.d
        frac = LPoly.const(d, Fraction(1, d))
        out: dict[YKey, LPoly] = {}
        for (k, w), c in self.terms.items():
            cc = c * frac
            p, q = w[i - 1] - 1, w[i] - 1
            for s in range(d):
                k2 = list(k)
                k2[p] = (k2[p] + s) % d
                k2[q] = (k2[q] - s) % d
                key = (tuple(k2), w)
                acc = out.get(key)
                out[key] = cc if acc is None else acc + cc
        return YElem(self.d, self.n, out)

    def mul_gtilde(self, i: int) -> "YElem":
        """Right multiply by gt_i = u^{-1} g_i:

        t^k gt_w gt_i = t^k gt_{w s_i}                      if len goes up,
                      = t^k gt_{w s_i} + u^{-1} v t^k gt_w e_i   otherwise.
        """
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"generator index {i} out of range 1..{self.n - 1}")
        d = self.d
        uv = LPoly.monomial(d, Fraction(1, d), -1, 1, 0)  # u^{-1} v / d
        out: dict[YKey, LPoly] = {}

        def add(key: YKey, c: LPoly) -> None:
            acc = out.get(key)
            out[key] = c if acc is None else acc + c

        for (k, w), c in self.terms.items():
            ws = w[: i - 1] + (w[i], w[i - 1]) + w[i + 1 :]
            add((k, ws), c)
            if w[i - 1] > w[i]:
                cc = c * uv
                p, q = w[i - 1] - 1, w[i] - 1
                for s in range(d):
                    k2 = list(k)
                    k2[p] = (k2[p] + s) % d
                    k2[q] = (k2[q] - s) % d
                    add((tuple(k2), w), cc)
        return YElem(self.d, self.n, out)

    def mul_g(self, i: int) -> "YElem":
        """Right multiply by g_i = u gt_i."""
        return self.mul_gtilde(i).scale(LPoly.var(self.d, "u"))

    def mul_g_inv(self, i: int) -> "YElem":
        """Right multiply by g_i^{-1} = u^{-2} g_i - u^{-2} v e_i."""
        a = self.mul_gtilde(i).scale(LPoly.monomial(self.d, 1, -1, 0, 0))
        b = self.mul_e(i).scale(LPoly.monomial(self.d, 1, -2, 1, 0))
        return a - b

    # -- left generator multiplications ----------------------------------------

    def lmul_t(self, j: int, power: int = 1) -> "YElem":
        """Left multiply by t_j^power: lands on strand j directly."""
        if not 1 <= j <= self.n:
            raise ValueError(f"framing index {j} out of range 1..{self.n}")
        out: dict[YKey, LPoly] = {}
        for (k, w), c in self.terms.items():
            k2 = k[: j - 1] + ((k[j - 1] + power) % self.d,) + k[j:]
            key = (k2, w)
            acc = out.get(key)
            out[key] = c if acc is None else acc + c
        return YElem(self.d, self.n, out)

    def lmul_e(self, i: int) -> "YElem":
        """Left multiply by e_i (e_i is central in the framing part, so this
        only touches strands i, i+1 of k)."""
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"idempotent index {i} out of range 1..{self.n - 1}")
        d = self.d
        frac = LPoly.const(d, Fraction(1, d))
        out: dict[YKey, LPoly] = {}
        for (k, w), c in self.terms.items():
            cc = c * frac
            for s in range(d):
                k2 = list(k)
                k2[i - 1] = (k2[i - 1] + s) % d
                k2[i] = (k2[i] - s) % d
                key = (tuple(k2), w)
                acc = out.get(key)
                out[key] = cc if acc is None else acc + cc
        return YElem(self.d, self.n, out)

    def lmul_gtilde(self, i: int) -> "YElem":
        """Left multiply by gt_i:

        gt_i t^k gt_w = t^{s_i(k)} gt_{s_i w}                        if len up,
                      = t^{s_i(k)} gt_{s_i w} + u^{-1} v e_i t^{s_i(k)} gt_w.
        """
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"generator index {i} out of range 1..{self.n - 1}")
        d = self.d
        uv = LPoly.monomial(d, Fraction(1, d), -1, 1, 0)
        out: dict[YKey, LPoly] = {}

        def add(key: YKey, c: LPoly) -> None:
            acc = out.get(key)
            out[key] = c if acc is None else acc + c

        for (k, w), c in self.terms.items():
            k2 = k[: i - 1] + (k[i], k[i - 1]) + k[i + 1 :]
            # s_i w swaps the *values* i, i+1 in the one-line form of w
            sw = tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)
            up = inverse_position(w, i) < inverse_position(w, i + 1)
            add((k2, sw), c)
            if not up:
                cc = c * uv
                for s in range(d):
                    k3 = list(k2)
                    k3[i - 1] = (k3[i - 1] + s) % d
                    k3[i] = (k3[i] - s) % d
                    add((tuple(k3), w), cc)
        return YElem(self.d, self.n, out)

    def lmul_g(self, i: int) -> "YElem":
        return self.lmul_gtilde(i).scale(LPoly.var(self.d, "u"))

    def lmul_g_inv(self, i: int) -> "YElem":
        a = self.lmul_gtilde(i).scale(LPoly.monomial(self.d, 1, -1, 0, 0))
        b = self.lmul_e(i).scale(LPoly.monomial(self.d, 1, -2, 1, 0))
        return a - b

    # -- products and embeddings ------------------------------------------------

    def __mul__(self, other: "YElem") -> "YElem":
        return y_mul(self, other)

    def extend(self, m: int) -> "YElem":
        """The image under Y_{d,n} -> Y_{d,m} (new strands unframed, untouched)."""
        if m < self.n:
            raise ValueError("cannot extend to a smaller strand count")
        padk = (0,) * (m - self.n)
        padw = tuple(range(self.n + 1, m + 1))
        return YElem(
            self.d,
            m,
            {(k + padk, w + padw): c for (k, w), c in self.terms.items()},
        )


def inverse_position(w: Perm, value: int) -> int:
    """The position that w maps to `value` (i.e. w^{-1}(value))."""
    return w.index(value) + 1


def y_mul(x: YElem, y: YElem) -> YElem:
    """Product x * y, expanding y's basis terms as t^k gt_{i_1} ... gt_{i_r}."""
    x._check(y)
    out = YElem.zero(x.d, x.n)
    for (k, w), c in y.terms.items():
        z = x.mul_t_vector(k) if any(k) else x
        for i in reduced_word(w):
            z = z.mul_gtilde(i)
        out = out + z.scale(c)
    return out


def y_mul_gen(x: YElem, gen: tuple, side: str = "right") -> YElem:
    """Multiply by a single generator token, on either side.

    Tokens: ("t", j, power), ("g", i), ("ginv", i), ("e", i).
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be left or right, not {side!r}")
    kind = gen[0]
    if kind == "t":
        _, j, power = gen
        return x.mul_t(j, power) if side == "right" else x.lmul_t(j, power)
    if kind == "g":
        _, i = gen
        return x.mul_g(i) if side == "right" else x.lmul_g(i)
    if kind == "ginv":
        _, i = gen
        return x.mul_g_inv(i) if side == "right" else x.lmul_g_inv(i)
    if kind == "e":
        _, i = gen
        return x.mul_e(i) if side == "right" else x.lmul_e(i)
    raise ValueError(f"unknown generator token {gen!r}")


# --------------------------------------------------------------------------
# the idempotent basis
# --------------------------------------------------------------------------

def to_E_basis(x: YElem) -> dict[tuple[Character, Perm], LPoly]:
    """Coefficients of x on the basis {E_chi gt_w}.

    Since t^k = sum_chi (prod_j xi_{chi_j}^{k_j}) E_chi, the coefficient on
    (chi, w) is sum_k c_{k,w} prod_j xi_{chi_j}^{k_j}; the sum factorizes and
    is evaluated one strand at a time.
    """
    d, n = x.d, x.n
    by_w: dict[Perm, dict[tuple[int, ...], LPoly]] = {}
    for (k, w), c in x.terms.items():
        by_w.setdefault(w, {})[k] = c
    out: dict[tuple[Character, Perm], LPoly] = {}
    for w, fiber in by_w.items():
        cur = fiber
        for axis in range(n):
            nxt: dict[tuple[int, ...], LPoly] = {}
            for key, c in cur.items():
                e = key[axis]
                for a in range(1, d + 1):
                    c2 = c.scale(root_power(d, a, e))
                    if c2.is_zero():
                        continue
                    key2 = key[:axis] + (a,) + key[axis + 1 :]
                    acc = nxt.get(key2)
                    nxt[key2] = c2 if acc is None else acc + c2
            cur = {k2: c2 for k2, c2 in nxt.items() if not c2.is_zero()}
        for chi, c in cur.items():
            out[(chi, w)] = c
    return out


def from_E_basis(
    d: int, n: int, coeffs: Mapping[tuple[Character, Perm], LPoly]
) -> YElem:
    """Rebuild a YElem from idempotent-basis coefficients (inverse transform:
    the coefficient of t^k in E_chi is (1/d)^n prod_j xi_{chi_j}^{-k_j})."""
    by_w: dict[Perm, dict[tuple[int, ...], LPoly]] = {}
    for (chi, w), c in coeffs.items():
        if c.is_zero():
            continue
        by_w.setdefault(w, {})[chi] = c
    inv_d = Cyclo.from_rat(d, Fraction(1, d))
    terms: dict[YKey, LPoly] = {}
    for w, fiber in by_w.items():
        cur = fiber
        for axis in range(n):
            nxt: dict[tuple[int, ...], LPoly] = {}
            for key, c in cur.items():
                a = key[axis]
                for e in range(d):
                    c2 = c.scale(root_power(d, a, -e) * inv_d)
                    if c2.is_zero():
                        continue
                    key2 = key[:axis] + (e,) + key[axis + 1 :]
                    acc = nxt.get(key2)
                    nxt[key2] = c2 if acc is None else acc + c2
            cur = {k2: c2 for k2, c2 in nxt.items() if not c2.is_zero()}
        for k, c in cur.items():
            terms[(k, w)] = c
    return YElem(d, n, terms)


def idempotent_E(d: int, chi: Character) -> YElem:
    """The primitive idempotent E_chi of the framing subalgebra."""
    n = len(chi)
    return from_E_basis(d, n, {(chi, identity(n)): LPoly.one(d)})


def idempotent_Emu(mu: Composition) -> YElem:
    """The central idempotent E_mu = sum of E_chi over the orbit of mu."""
    n = mu.n
    one = LPoly.one(mu.d)
    return from_E_basis(
        mu.d, n, {(chi, identity(n)): one for chi in orbit(mu)}
    )


def e_basis_mul_basis(
    d: int, chi: Character, w: Perm, chi2: Character, w2: Perm
) -> dict[tuple[Character, Perm], LPoly]:
    """Closed-form product of two idempotent-basis elements:

        (E_chi gt_w)(E_chi2 gt_w2) = 0 unless chi = w(chi2), and otherwise
        equals E_chi gt_w gt_w2 expanded with the scalar absorption
        E_chi gt_x e_i = [chi(t_{x(i)}) = chi(t_{x(i+1)})] E_chi gt_x.

    Used as a fast independent route for homomorphism checks; `y_mul` is the
    generic path.
    """
    from .permcomp import act

    if act(w, chi2) != chi:
        return {}
    uv = LPoly.monomial(d, 1, -1, 1, 0)  # u^{-1} v
    state: dict[Perm, LPoly] = {w: LPoly.one(d)}
    for i in reduced_word(w2):
        nxt: dict[Perm, LPoly] = {}
        for x, c in state.items():
            xs = x[: i - 1] + (x[i], x[i - 1]) + x[i + 1 :]
            acc = nxt.get(xs)
            nxt[xs] = c if acc is None else acc + c
            if x[i - 1] > x[i] and chi[x[i - 1] - 1] == chi[x[i] - 1]:
                c2 = c * uv
                acc = nxt.get(x)
                nxt[x] = c2 if acc is None else acc + c2
        state = {x: c for x, c in nxt.items() if not c.is_zero()}
    return {(chi, x): c for x, c in state.items()}
