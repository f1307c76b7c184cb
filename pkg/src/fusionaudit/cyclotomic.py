"""Exact arithmetic in Z[zeta_n] with rational coefficients.

Values are stored in the power basis 1, z, ..., z^(d-1) modulo the n-th
cyclotomic polynomial (d = deg Phi_n), as an integer coefficient vector
over a common positive denominator, gcd-reduced.  Canonical form is
unique, so equality is tuple comparison.  No floating point anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import List, Optional, Sequence, Tuple


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """Coefficients of Phi_n, low degree first, monic."""
    if n < 1:
        raise ValueError("n must be positive")
    # x^n - 1 divided by Phi_d for proper divisors d.
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _poly_divexact(num: List[int], den: List[int]) -> List[int]:
    # Exact division of integer polynomials, den monic up to sign.
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] // lead
        assert c * lead == num[i]
        quot[i - dd] = c
        for j in range(dd + 1):
            num[i - dd + j] -= c * den[j]
    assert all(c == 0 for c in num)
    return quot


@lru_cache(maxsize=None)
def _power_reductions(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Reduced coefficient vectors of z^k mod Phi_n, k < max(2d-1, n)."""
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    rows: List[Tuple[int, ...]] = []
    cur = [0] * d
    cur[0] = 1
    rows.append(tuple(cur))
    for _ in range(max(2 * d - 2, n - 1)):
        nxt = [0] + cur[:-1]
        top = cur[-1]
        if top:
            for j in range(d):
                nxt[j] -= top * phi[j]
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


class Cyclotomic:
    """An element of Q(zeta_n), canonical and hashable."""

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, num: Sequence[int], den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        d = len(cyclotomic_polynomial(n)) - 1
        if len(num) != d:
            raise ValueError(f"need {d} reduced coefficients for n={n}")
        if den < 0:
            num, den = [-c for c in num], -den
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = [c // g for c in num]
            den //= g
        self.n = n
        self.num = tuple(num)
        self.den = den

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(n: int) -> "Cyclotomic":
        d = len(cyclotomic_polynomial(n)) - 1
        return Cyclotomic(n, [0] * d)

    @staticmethod
    def from_rational(n: int, value) -> "Cyclotomic":
        f = Fraction(value)
        d = len(cyclotomic_polynomial(n)) - 1
        num = [0] * d
        num[0] = f.numerator
        return Cyclotomic(n, num, f.denominator)

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyclotomic":
        """zeta_n^k."""
        return Cyclotomic.from_powers(n, {k % n: 1})

    @staticmethod
    def from_powers(n: int, powers: dict) -> "Cyclotomic":
        """Sum of c_k * zeta_n^k from a {k: c_k} dict (k arbitrary ints)."""
        red = _power_reductions(n)
        d = len(red[0])
        num = [0] * d
        for k, c in powers.items():
            row = _reduce_power(n, k % n)
            for j in range(d):
                num[j] += c * row[j]
        return Cyclotomic(n, num)

    # -- promotion ----------------------------------------------------

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.n != self.n:
                raise ValueError(f"incompatible root orders {self.n} and {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.n, other)
        return NotImplemented

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        da, db = self.den, o.den
        num = [a * db + b * da for a, b in zip(self.num, o.num)]
        return Cyclotomic(self.n, num, da * db)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, [-c for c in self.num], self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        red = _power_reductions(self.n)
        d = len(self.num)
        conv = [0] * (2 * d - 1)
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(o.num):
                    if b:
                        conv[i + j] += a * b
        num = [0] * d
        for k, c in enumerate(conv):
            if c:
                row = red[k]
                for j in range(d):
                    num[j] += c * row[j]
        return Cyclotomic(self.n, num, self.den * o.den)

    __rmul__ = __mul__

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation zeta -> zeta^-1; an involutive automorphism."""
        return self.galois(self.n - 1) if self.n > 1 else self

    def galois(self, k: int) -> "Cyclotomic":
        """The automorphism zeta -> zeta^k, gcd(k, n) = 1."""
        if gcd(k, self.n) != 1:
            raise ValueError(f"zeta -> zeta^{k} is not an automorphism for n={self.n}")
        red = _power_reductions(self.n)
        d = len(self.num)
        num = [0] * d
        for i, c in enumerate(self.num):
            if c:
                row = _reduce_power(self.n, (i * k) % self.n)
                for j in range(d):
                    num[j] += c * row[j]
        return Cyclotomic(self.n, num, self.den)

    def to_order(self, m: int) -> "Cyclotomic":
        """Re-express in Q(zeta_m).  Needs self rational or n | m."""
        if m == self.n:
            return self
        r = self.as_rational()
        if r is not None:
            return Cyclotomic.from_rational(m, r)
        if m % self.n == 0:
            k = m // self.n
            lifted = Cyclotomic.from_powers(
                m, {i * k: c for i, c in enumerate(self.num) if c})
            return Cyclotomic(m, list(lifted.num), lifted.den * self.den)
        raise ValueError(f"cannot move irrational value from order {self.n} to {m}")

    # -- predicates / conversions ---------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.num)

    def as_rational(self) -> Optional[Fraction]:
        """The rational value, or None when genuinely irrational."""
        if any(c for c in self.num[1:]):
            return None
        return Fraction(self.num[0], self.den)

    def as_integer(self) -> int:
        r = self.as_rational()
        if r is None or r.denominator != 1:
            raise ValueError(f"{self} is not a rational integer")
        return r.numerator

    def is_real(self) -> bool:
        return self.conjugate() == self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(self.n, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return (self.n, self.num, self.den) == (other.n, other.num, other.den)

    def __hash__(self):
        return hash((self.n, self.num, self.den))

    # -- rendering -------------------------------------------------------

    def render(self) -> str:
        """Canonical string `a0 + a1*z + ...` with z = zeta_n."""
        parts = []
        for k, c in enumerate(self.num):
            if c == 0:
                continue
            coeff = Fraction(c, self.den)
            if k == 0:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(f"z^{k}" if k > 1 else "z")
            elif coeff == -1:
                parts.append(f"-z^{k}" if k > 1 else "-z")
            else:
                parts.append(f"{coeff}*z^{k}" if k > 1 else f"{coeff}*z")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    @staticmethod
    def parse(n: int, text: str) -> "Cyclotomic":
        """Inverse of render (round-trip exact)."""
        s = text.replace(" ", "").replace("-", "+-")
        total = Cyclotomic.zero(n)
        for term in s.split("+"):
            if not term:
                continue
            if "z" in term:
                coeff_s, _, pow_s = term.partition("z")
                k = int(pow_s[1:]) if pow_s.startswith("^") else 1
                if coeff_s in ("", "-"):
                    coeff = Fraction(coeff_s + "1")
                else:
                    coeff = Fraction(coeff_s.rstrip("*"))
            else:
                coeff, k = Fraction(term), 0
            total = total + coeff * Cyclotomic.zeta(n, k)
        return total

    def __repr__(self):
        return f"Cyclotomic({self.n}, {self.render()!r})"


def _reduce_power(n: int, k: int) -> Tuple[int, ...]:
    """Reduced coefficient vector of z^k, any 0 <= k < n."""
    return _power_reductions(n)[k]
