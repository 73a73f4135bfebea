"""Exact coefficient arithmetic: Laurent polynomials in q over Q(zeta_r).

A ``Cyc`` is an element of the cyclotomic field Q(zeta_r), stored as a
rational coefficient vector of length phi(r) reduced modulo the r-th
cyclotomic polynomial.  A ``Scalar`` is a Laurent polynomial in the
indeterminate q with ``Cyc`` coefficients, stored sparsely by exponent.
Everything is exact; q is never specialized.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Rational = int | Fraction


class MixedRootError(ValueError):
    """Combination of values living over different cyclotomic orders."""


def _poly_divmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    num = num[:]
    deg_d = len(den) - 1
    lead = den[-1]
    quot = [Fraction(0)] * max(len(num) - deg_d, 0)
    for i in range(len(num) - 1, deg_d - 1, -1):
        c = num[i] / lead
        if c:
            quot[i - deg_d] = c
            for j, d in enumerate(den):
                num[i - deg_d + j] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return quot, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the r-th cyclotomic polynomial.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(2)
    (1, 1)
    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if r < 1:
        raise ValueError(f"order must be positive, got {r}")
    num = [Fraction(-1)] + [Fraction(0)] * (r - 1) + [Fraction(1)]
    for d in range(1, r):
        if r % d == 0:
            den = [Fraction(c) for c in cyclotomic_polynomial(d)]
            num, rem = _poly_divmod(num, den)
            assert not rem
    return tuple(int(c) for c in num)


def euler_phi(r: int) -> int:
    return len(cyclotomic_polynomial(r)) - 1


@lru_cache(maxsize=None)
def _power_rows(r: int) -> tuple[tuple[int, ...], ...]:
    """Row m is the coefficient vector of x^m modulo the r-th cyclotomic polynomial."""
    phi = euler_phi(r)
    poly = cyclotomic_polynomial(r)
    rows: list[tuple[int, ...]] = []
    for m in range(phi):
        rows.append(tuple(1 if i == m else 0 for i in range(phi)))
    top = rows[-1] if phi else ()
    bound = max(2 * phi - 1, r)
    for _ in range(phi, bound + 1):
        # multiply the previous row by x and eliminate the degree-phi term
        shifted = [0] + list(top)
        carry = shifted.pop()
        top = tuple(shifted[i] - carry * poly[i] for i in range(phi))
        rows.append(top)
    return tuple(rows)


class Cyc:
    """An element of Q(zeta_r) in canonical reduced form."""

    __slots__ = ("r", "coeffs")

    def __init__(self, r: int, coeffs: tuple[Fraction, ...]):
        self.r = r
        self.coeffs = coeffs

    @staticmethod
    def from_rational(r: int, value: Rational) -> Cyc:
        phi = euler_phi(r)
        v = Fraction(value)
        return Cyc(r, (v,) + (Fraction(0),) * (phi - 1))

    @staticmethod
    def zero(r: int) -> Cyc:
        return Cyc.from_rational(r, 0)

    @staticmethod
    def one(r: int) -> Cyc:
        return Cyc.from_rational(r, 1)

    @staticmethod
    def zeta_power(r: int, k: int) -> Cyc:
        """zeta_r^k as a field element; zeta_r is the canonical generator.

        >>> Cyc.zeta_power(2, 1).coeffs
        (Fraction(-1, 1),)
        >>> Cyc.zeta_power(4, 2) == Cyc.from_rational(4, -1)
        True
        """
        row = _power_rows(r)[k % r]
        return Cyc(r, tuple(Fraction(c) for c in row))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cyc):
            return NotImplemented
        return self.r == other.r and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.r, self.coeffs))

    def _check(self, other: Cyc) -> None:
        if self.r != other.r:
            raise MixedRootError(f"cyclotomic orders differ: {self.r} vs {other.r}")

    def __add__(self, other: Cyc) -> Cyc:
        self._check(other)
        return Cyc(self.r, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Cyc) -> Cyc:
        self._check(other)
        return Cyc(self.r, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Cyc:
        return Cyc(self.r, tuple(-a for a in self.coeffs))

    def scale(self, c: Rational) -> Cyc:
        return Cyc(self.r, tuple(a * c for a in self.coeffs))

    def __mul__(self, other: Cyc) -> Cyc:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if self.is_rational():
            return other.scale(a[0]) if a[0] != 1 else other
        if other.is_rational():
            return self.scale(b[0]) if b[0] != 1 else self
        phi = len(a)
        conv = [Fraction(0)] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        rows = _power_rows(self.r)
        out = list(conv[:phi])
        for m in range(phi, 2 * phi - 1):
            cm = conv[m]
            if cm:
                row = rows[m]
                for i in range(phi):
                    if row[i]:
                        out[i] += cm * row[i]
        return Cyc(self.r, tuple(out))

    def invert(self) -> Cyc:
        """Field inverse, by extended gcd against the cyclotomic polynomial."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_r)")
        if self.is_rational():
            return Cyc.from_rational(self.r, Fraction(1) / self.coeffs[0])
        phi = euler_phi(self.r)
        r0 = [Fraction(c) for c in cyclotomic_polynomial(self.r)]
        r1 = list(self.coeffs)
        while r1 and r1[-1] == 0:
            r1.pop()
        u0: list[Fraction] = []
        u1 = [Fraction(1)]
        while True:
            quot, rem = _poly_divmod(r0, r1)
            if not rem:
                break
            prod = [Fraction(0)] * (len(quot) + len(u1) - 1)
            for i, qi in enumerate(quot):
                if qi:
                    for j, uj in enumerate(u1):
                        prod[i + j] += qi * uj
            nxt = [Fraction(0)] * max(len(u0), len(prod))
            for i, c in enumerate(u0):
                nxt[i] += c
            for i, c in enumerate(prod):
                nxt[i] -= c
            while nxt and nxt[-1] == 0:
                nxt.pop()
            r0, r1 = r1, rem
            u0, u1 = u1, nxt
        # r1 is the gcd, a nonzero constant since the modulus is irreducible
        assert len(r1) == 1
        inv = [c / r1[0] for c in u1]
        inv += [Fraction(0)] * (phi - len(inv))
        return Cyc(self.r, tuple(inv[:phi]))

    def __repr__(self) -> str:
        return f"Cyc(r={self.r}, {[str(c) for c in self.coeffs]})"


def cyclotomic_reduce(coeffs, r: int) -> Cyc:
    """Reduce a rational coefficient sequence in zeta modulo the r-th cyclotomic polynomial.

    >>> cyclotomic_reduce([0, 1], 2) == Cyc.from_rational(2, -1)
    True
    >>> cyclotomic_reduce([1, 1, 1], 3).is_zero()
    True
    """
    phi = euler_phi(r)
    rows = _power_rows(r)
    out = [Fraction(0)] * phi
    for m, c in enumerate(coeffs):
        c = Fraction(c)
        if c:
            row = rows[m % r] if m >= len(rows) else rows[m]
            for i in range(phi):
                if row[i]:
                    out[i] += c * row[i]
    return Cyc(r, tuple(out))


def cyc_invert(a: Cyc) -> Cyc:
    return a.invert()


class Scalar:
    """Sparse Laurent polynomial in q over Q(zeta_r); no zero coefficient is stored."""

    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms: dict[int, Cyc]):
        self.r = r
        self.terms = terms

    @staticmethod
    def zero(r: int) -> Scalar:
        return Scalar(r, {})

    @staticmethod
    def one(r: int) -> Scalar:
        return Scalar(r, {0: Cyc.one(r)})

    @staticmethod
    def from_rational(r: int, value: Rational) -> Scalar:
        if value == 0:
            return Scalar.zero(r)
        return Scalar(r, {0: Cyc.from_rational(r, value)})

    @staticmethod
    def from_cyc(c: Cyc) -> Scalar:
        if c.is_zero():
            return Scalar.zero(c.r)
        return Scalar(c.r, {0: c})

    @staticmethod
    def q_power(r: int, exponent: int, coeff: Rational = 1) -> Scalar:
        if coeff == 0:
            return Scalar.zero(r)
        return Scalar(r, {exponent: Cyc.from_rational(r, coeff)})

    @staticmethod
    def q_minus_q_inv(r: int) -> Scalar:
        """The distinguished constant q - q^{-1}."""
        return Scalar(r, {1: Cyc.one(r), -1: Cyc.from_rational(r, -1)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and 0 in self.terms and self.terms[0].is_one()

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.r == other.r and self.terms == other.terms

    def _check(self, other: Scalar) -> None:
        if self.r != other.r:
            raise MixedRootError(f"cyclotomic orders differ: {self.r} vs {other.r}")

    def __add__(self, other: Scalar) -> Scalar:
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return Scalar(self.r, out)

    def __sub__(self, other: Scalar) -> Scalar:
        return self + (-other)

    def __neg__(self) -> Scalar:
        return Scalar(self.r, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: Scalar) -> Scalar:
        self._check(other)
        if self.is_one():
            return other
        if other.is_one():
            return self
        out: dict[int, Cyc] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                p = c1 * c2
                if e in out:
                    s = out[e] + p
                    if s.is_zero():
                        del out[e]
                    else:
                        out[e] = s
                elif not p.is_zero():
                    out[e] = p
        return Scalar(self.r, out)

    def scale(self, c: Rational) -> Scalar:
        if c == 0:
            return Scalar.zero(self.r)
        if c == 1:
            return self
        return Scalar(self.r, {e: v.scale(c) for e, v in self.terms.items()})

    def scale_cyc(self, c: Cyc) -> Scalar:
        if c.is_zero():
            return Scalar.zero(self.r)
        if c.is_one():
            return self
        return Scalar(self.r, {e: v * c for e, v in self.terms.items()})

    def to_json(self) -> dict:
        return {
            "terms": [
                {"qexp": e, "cyc": [str(c) for c in self.terms[e].coeffs]}
                for e in sorted(self.terms)
            ]
        }

    @staticmethod
    def from_json(data: dict, r: int) -> Scalar:
        terms: dict[int, Cyc] = {}
        for item in data["terms"]:
            c = Cyc(r, tuple(Fraction(s) for s in item["cyc"]))
            if not c.is_zero():
                terms[int(item["qexp"])] = c
        return Scalar(r, terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "Scalar(0)"
        bits = []
        for e in sorted(self.terms):
            cs = "+".join(str(c) for c in self.terms[e].coeffs)
            bits.append(f"({cs})q^{e}")
        return "Scalar(" + " + ".join(bits) + ")"
