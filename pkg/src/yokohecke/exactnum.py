"""Exact coefficient arithmetic.

Everything downstream computes over the Laurent polynomial ring

    R = Q(zeta_d)[u^{+-1}, v^{+-1}, g^{+-1}]

where zeta_d is a primitive d-th root of unity.  This module provides the
three layers of that ring:

* rationals: stdlib `fractions.Fraction` (aliased `Rat`);
* `Cyclo`: elements of the cyclotomic field Q(zeta_d), stored as coefficient
  vectors on the power basis 1, zeta, ..., zeta^{phi(d)-1} and reduced modulo
  the minimal polynomial Phi_d (*not* modulo x^d - 1, so equality of field
  elements is equality of coefficient tuples);
* `LPoly`: sparse Laurent polynomials in the three variables u, v, g with
  `Cyclo` coefficients, keyed by integer exponent triples.

The variable names match the algebraic setup they feed: u and v are the
Hecke-relation parameters (T_i^2 = u^2 + v T_i) and g is the extra framing
parameter used by the link invariants.

>>> cyclotomic_polynomial(4)
(1, 0, 1)
>>> Cyclo.zeta(4) * Cyclo.zeta(4) == Cyclo.from_rat(4, -1)
True
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

__all__ = [
    "Rat",
    "Cyclo",
    "LPoly",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_power",
]

Rat = Fraction

ExpKey = tuple[int, int, int]  # exponents of (u, v, g)


# --------------------------------------------------------------------------
# cyclotomic polynomials
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_d, ascending degree, monic.

    Computed by exact division: Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if d < 1:
        raise ValueError(f"order must be >= 1, got {d}")
    num = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            num = _exact_div(num, list(cyclotomic_polynomial(e)))
    return tuple(num)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    """Quotient of integer polynomials known to divide exactly (ascending coeffs)."""
    num = list(num)
    quot = [0] * (len(num) - len(den) + 1)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % den[-1] != 0:  # pragma: no cover - division is always exact here
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[-1]
        quot[k] = q
        for j, dj in enumerate(den):
            num[k + j] -= q * dj
    if any(num):  # pragma: no cover
        raise ArithmeticError("non-exact polynomial division")
    return quot


def euler_phi(d: int) -> int:
    """Euler's totient, read off as deg Phi_d.

    >>> [euler_phi(d) for d in range(1, 9)]
    [1, 1, 2, 2, 4, 2, 6, 4]
    """
    return len(cyclotomic_polynomial(d)) - 1


@lru_cache(maxsize=None)
def _power_rows(d: int) -> tuple[tuple[int, ...], ...]:
    """Row m = coefficients of x^m mod Phi_d on the power basis, for m < d.

    Covers every exponent produced either by zeta^s (s < d) or by products of
    two reduced elements (degree <= 2 phi(d) - 2 <= 2(d-1) - 2 < d for d >= 2;
    d = 1 has phi = 1 and only row 0 is ever used).
    """
    phi = euler_phi(d)
    top = max(d, 2 * phi - 1)
    rows: list[list[int]] = []
    for m in range(top):
        if m < phi:
            row = [0] * phi
            row[m] = 1
        else:
            # x^m = x * x^{m-1}, then fold the leading term with
            # x^phi = -(Phi_d - x^phi).
            prev = rows[m - 1]
            row = [0] + prev[:-1]
            lead = prev[-1]
            if lead:
                mono = cyclotomic_polynomial(d)
                for k in range(phi):
                    row[k] -= lead * mono[k]
        rows.append(row)
    return tuple(tuple(r) for r in rows)


# --------------------------------------------------------------------------
# cyclotomic field elements
# --------------------------------------------------------------------------

class Cyclo:
    """An element of Q(zeta_d) on the power basis 1, zeta, ..., zeta^{phi(d)-1}.

    Instances are immutable; arithmetic never mixes orders.

    >>> a = Cyclo.zeta(3)
    >>> a * a + a + Cyclo.from_rat(3, 1)   # 1 + zeta + zeta^2 = 0
    Cyclo(3, (Fraction(0, 1), Fraction(0, 1)))
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Iterable[Union[Rat, int]]):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != euler_phi(order):
            raise ValueError(
                f"need {euler_phi(order)} coefficients for order {order}, got {len(coeffs)}"
            )
        self.order = order
        self.coeffs = coeffs
        self._hash = hash((order, coeffs))

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rat(cls, order: int, r: Union[Rat, int]) -> "Cyclo":
        phi = euler_phi(order)
        return cls(order, (Fraction(r),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def zero(cls, order: int) -> "Cyclo":
        return _cyclo_zero(order)

    @classmethod
    def one(cls, order: int) -> "Cyclo":
        return _cyclo_one(order)

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "Cyclo":
        """zeta_d^power, reduced.

        >>> Cyclo.zeta(2)
        Cyclo(2, (Fraction(-1, 1),))
        >>> Cyclo.zeta(5, 7) == Cyclo.zeta(5, 2)
        True
        """
        return _zeta_pow(order, power % order)

    # -- predicates and parts ----------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_part(self) -> Rat:
        """The value as a rational; error if the element is irrational."""
        if not self.is_rational():
            raise ValueError(f"not a rational element: {self!r}")
        return self.coeffs[0]

    # -- ring operations ----------------------------------------------------

    def _check(self, other: "Cyclo") -> None:
        if self.order != other.order:
            raise ValueError(f"mixed cyclotomic orders {self.order} and {other.order}")

    def __add__(self, other: "Cyclo") -> "Cyclo":
        self._check(other)
        return Cyclo(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Cyclo") -> "Cyclo":
        self._check(other)
        return Cyclo(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Cyclo":
        return Cyclo(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other: Union["Cyclo", Rat, int]) -> "Cyclo":
        if not isinstance(other, Cyclo):
            q = Fraction(other)
            return Cyclo(self.order, tuple(a * q for a in self.coeffs))
        self._check(other)
        phi = len(self.coeffs)
        conv = [Fraction(0)] * (2 * phi - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] += a * b
        rows = _power_rows(self.order)
        out = [Fraction(0)] * phi
        for m, c in enumerate(conv):
            if c:
                for k, r in enumerate(rows[m]):
                    if r:
                        out[k] += c * r
        return Cyclo(self.order, out)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        """Field inverse, by the extended Euclidean algorithm against Phi_d.

        >>> a = Cyclo.zeta(5) + Cyclo.from_rat(5, 2)
        >>> a * a.inverse() == Cyclo.one(5)
        True
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        if self.is_rational():
            return Cyclo.from_rat(self.order, 1 / self.coeffs[0])
        mod = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        a = list(self.coeffs)
        # extended Euclid on (a, Phi): track s with s*a = r (mod Phi)
        r0, s0 = mod, [Fraction(0)]
        r1, s1 = _trim(a), [Fraction(1)]
        while True:
            if len(r1) == 1:
                inv = 1 / r1[0]
                coeffs = [c * inv for c in s1]
                break
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, _trim(r)
            if not any(r1):  # pragma: no cover - Phi_d irreducible
                raise ArithmeticError("unexpected common factor with Phi_d")
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(q, s1)))
        # reduce the cofactor mod Phi_d and repackage
        phi = euler_phi(self.order)
        rows = _power_rows(self.order)
        out = [Fraction(0)] * phi
        for m, c in enumerate(coeffs):
            if c:
                for k, r in enumerate(rows[m]):
                    if r:
                        out[k] += c * r
        return Cyclo(self.order, out)

    def __truediv__(self, other: Union["Cyclo", Rat, int]) -> "Cyclo":
        if isinstance(other, Cyclo):
            return self * other.inverse()
        return self * (1 / Fraction(other))

    # -- misc ----------------------------------------------------------------

    def eval_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Cyclo)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Cyclo({self.order}, {self.coeffs})"

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        return "(" + format_cyclo(self) + ")"


@lru_cache(maxsize=None)
def _cyclo_zero(order: int) -> Cyclo:
    return Cyclo.from_rat(order, 0)


@lru_cache(maxsize=None)
def _cyclo_one(order: int) -> Cyclo:
    return Cyclo.from_rat(order, 1)


@lru_cache(maxsize=None)
def _zeta_pow(order: int, s: int) -> Cyclo:
    phi = euler_phi(order)
    row = _power_rows(order)[s]
    return Cyclo(order, row)


def root_power(d: int, a: int, s: int) -> Cyclo:
    """xi_a^s where xi_a = zeta_d^{a-1} is the a-th of the d roots of unity.

    The letters a run through 1..d, so xi_1 = 1 always.

    >>> root_power(2, 2, 1)
    Cyclo(2, (Fraction(-1, 1),))
    >>> root_power(6, 3, 3) == Cyclo.one(6)
    True
    """
    if not 1 <= a <= d:
        raise ValueError(f"letter {a} out of range 1..{d}")
    return _zeta_pow(d, ((a - 1) * s) % d)


# small dense helpers over Fraction lists (ascending), used by Cyclo.inverse

def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and not p[-1]:
        p = p[:-1]
    return p


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    if len(a) < len(b):
        return [Fraction(0)], a
    quot = [Fraction(0)] * (len(a) - len(b) + 1)
    for k in range(len(quot) - 1, -1, -1):
        q = a[k + len(b) - 1] / b[-1]
        quot[k] = q
        if q:
            for j, bj in enumerate(b):
                a[k + j] -= q * bj
    return quot, a[: len(b) - 1] or [Fraction(0)]


# --------------------------------------------------------------------------
# sparse Laurent polynomials in u, v, g
# --------------------------------------------------------------------------

Scalar = Union[Cyclo, Rat, int]


class LPoly:
    """Sparse Laurent polynomial in u, v, g over Q(zeta_d).

    Terms are stored as a dict {(e_u, e_v, e_g): Cyclo} with no zero values.
    Instances are immutable by convention (construction prunes zeros; no
    method mutates `terms` afterwards).

    >>> p = LPoly.var(1, "u") + LPoly.var(1, "v", -1)
    >>> print((p * p).text())
    1 * u^2 + 2 * u^1 * v^-1 + 1 * v^-2
    """

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms: Mapping[ExpKey, Cyclo] | None = None):
        self.order = order
        if terms:
            self.terms: dict[ExpKey, Cyclo] = {
                k: c for k, c in terms.items() if not c.is_zero()
            }
        else:
            self.terms = {}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "LPoly":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "LPoly":
        return cls.const(order, 1)

    @classmethod
    def const(cls, order: int, c: Scalar) -> "LPoly":
        c = c if isinstance(c, Cyclo) else Cyclo.from_rat(order, c)
        return cls(order, {(0, 0, 0): c})

    @classmethod
    def var(cls, order: int, name: str, exp: int = 1) -> "LPoly":
        key = {"u": (exp, 0, 0), "v": (0, exp, 0), "g": (0, 0, exp)}[name]
        return cls(order, {key: Cyclo.one(order)})

    @classmethod
    def monomial(cls, order: int, c: Scalar, eu: int = 0, ev: int = 0, eg: int = 0) -> "LPoly":
        c = c if isinstance(c, Cyclo) else Cyclo.from_rat(order, c)
        return cls(order, {(eu, ev, eg): c})

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, eu: int, ev: int, eg: int) -> Cyclo:
        return self.terms.get((eu, ev, eg), Cyclo.zero(self.order))

    def constant_value(self) -> Cyclo:
        """The coefficient of u^0 v^0 g^0; error if other terms are present."""
        if self.terms and set(self.terms) != {(0, 0, 0)}:
            raise ValueError(f"not a constant: {self.text()}")
        return self.coefficient(0, 0, 0)

    def _check(self, other: "LPoly") -> None:
        if self.order != other.order:
            raise ValueError(f"mixed coefficient orders {self.order} and {other.order}")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "LPoly") -> "LPoly":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc = out.get(k)
            out[k] = c if acc is None else acc + c
        return LPoly(self.order, out)

    def __sub__(self, other: "LPoly") -> "LPoly":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc = out.get(k)
            out[k] = -c if acc is None else acc - c
        return LPoly(self.order, out)

    def __neg__(self) -> "LPoly":
        return LPoly(self.order, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other: "LPoly") -> "LPoly":
        self._check(other)
        out: dict[ExpKey, Cyclo] = {}
        for (a1, b1, c1), x in self.terms.items():
            for (a2, b2, c2), y in other.terms.items():
                k = (a1 + a2, b1 + b2, c1 + c2)
                p = x * y
                acc = out.get(k)
                out[k] = p if acc is None else acc + p
        return LPoly(self.order, out)

    def scale(self, c: Scalar) -> "LPoly":
        c = c if isinstance(c, Cyclo) else Cyclo.from_rat(self.order, c)
        if c.is_zero():
            return LPoly.zero(self.order)
        return LPoly(self.order, {k: x * c for k, x in self.terms.items()})

    def shift(self, eu: int = 0, ev: int = 0, eg: int = 0) -> "LPoly":
        """Multiply by the monomial u^eu v^ev g^eg."""
        return LPoly(
            self.order,
            {(a + eu, b + ev, c + eg): x for (a, b, c), x in self.terms.items()},
        )

    def __pow__(self, k: int) -> "LPoly":
        if k < 0:
            return self.monomial_inverse() ** (-k)
        out = LPoly.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def monomial_inverse(self) -> "LPoly":
        """Inverse of a single-term polynomial c * u^a v^b g^c.

        Laurent monomials are the only units we ever need to invert; anything
        with more than one term raises.
        """
        if len(self.terms) != 1:
            raise ValueError(f"not a monomial: {self.text()}")
        ((a, b, c), x), = self.terms.items()
        return LPoly(self.order, {(-a, -b, -c): x.inverse()})

    # -- conversions ---------------------------------------------------------

    def as_order(self, order: int) -> "LPoly":
        """Reinterpret in Q(zeta_order); requires all coefficients rational."""
        if order == self.order:
            return self
        out = {}
        for k, c in self.terms.items():
            out[k] = Cyclo.from_rat(order, c.rational_part())
        return LPoly(order, out)

    def eval_complex(self, u0: complex, v0: complex, g0: complex) -> complex:
        total = 0j
        for (a, b, c), x in self.terms.items():
            total += x.eval_complex() * u0**a * v0**b * g0**c
        return total

    # -- equality and text ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LPoly)
            and self.order == other.order
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.order, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"<LPoly d={self.order}: {self.text()}>"

    def text(self) -> str:
        """Canonical text form; see `format_lpoly`."""
        return format_lpoly(self)

    def machine_lines(self) -> list[str]:
        """One line per term: `e_u e_v e_g` then the phi(d) rational coefficients."""
        lines = []
        for key in sorted(self.terms, reverse=True):
            c = self.terms[key]
            lines.append(" ".join([*map(str, key), *map(str, c.coeffs)]))
        return lines


# --------------------------------------------------------------------------
# canonical text format
# --------------------------------------------------------------------------
#
# Terms are printed in descending lexicographic order of (e_u, e_v, e_g), each
# as `C * u^A * v^B * g^C` with zero-exponent factors omitted and exponents
# always written out (`u^1`, `u^-2`).  Rational coefficients are always
# printed, with their sign folded into the ` + ` / ` - ` separators;
# irrational coefficients are parenthesized sums `(r0 + r1*z + ...)` in the
# root of unity z = zeta_d.  The zero polynomial prints as `0`.

def format_cyclo(c: Cyclo) -> str:
    parts: list[tuple[str, str]] = []
    for k, r in enumerate(c.coeffs):
        if not r:
            continue
        sign = "-" if r < 0 else "+"
        mag = abs(r)
        if k == 0:
            body = str(mag)
        elif k == 1:
            body = f"{mag}*z"
        else:
            body = f"{mag}*z^{k}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_lpoly(p: LPoly) -> str:
    if not p.terms:
        return "0"
    rendered: list[tuple[str, str]] = []
    for key in sorted(p.terms, reverse=True):
        c = p.terms[key]
        mono = " * ".join(f"{s}^{e}" for s, e in zip("uvg", key) if e != 0)
        if c.is_rational():
            r = c.rational_part()
            sign = "-" if r < 0 else "+"
            coeff = str(abs(r))
        else:
            sign = "+"
            coeff = "(" + format_cyclo(c) + ")"
        rendered.append((sign, coeff + (" * " + mono if mono else "")))
    first_sign, first_body = rendered[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in rendered[1:]:
        out += f" {sign} {body}"
    return out


if __name__ == "__main__":
    import doctest

    doctest.testmod()
