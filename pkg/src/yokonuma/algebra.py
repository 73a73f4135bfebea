"""Normal-form arithmetic on the standard basis indexed by the framed affine Weyl group.

An ``Element`` is a finite map from ``GroupIndex`` to ``Scalar``.  Products are
computed with the left multiplication rules: torus generators shift the torus
vector, the rotation composes on the left, and a simple reflection either
composes (length up) or composes plus an averaged torus correction weighted by
``(q - q^{-1})/r`` (length down).  General products fold the normal form of
the left factor, letter by letter, onto the right factor.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .scalars import Cyc, Rational, Scalar
from .weyl import (
    GroupIndex,
    WeylWord,
    _length,
    compose,
    identity,
    reduced_word_of,
    rho,
    rho_inverse,
    simple_reflection,
)


class ContextMismatchError(ValueError):
    """Operands belong to different algebra contexts."""


def index_to_json(idx: GroupIndex) -> dict:
    return {"beta": list(idx.beta), "lambda": list(idx.lam), "sigma": list(idx.sigma)}


def index_from_json(data: dict) -> GroupIndex:
    return GroupIndex(tuple(data["beta"]), tuple(data["lambda"]), tuple(data["sigma"]))


def index_sort_key(idx: GroupIndex):
    word = reduced_word_of(idx)
    return (word.k, len(word.word), word.word, idx.beta)


class Element:
    """A finite Scalar-linear combination of basis indices; zero coefficients are never stored."""

    __slots__ = ("r", "n", "cyc_order", "terms")

    def __init__(self, r: int, n: int, terms: dict[GroupIndex, Scalar], cyc_order: int | None = None):
        self.r = r
        self.n = n
        self.cyc_order = cyc_order if cyc_order is not None else r
        self.terms = terms

    def _check(self, other: Element) -> None:
        if (self.r, self.n, self.cyc_order) != (other.r, other.n, other.cyc_order):
            raise ContextMismatchError(
                f"contexts differ: (r={self.r}, n={self.n}) vs (r={other.r}, n={other.n})"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return (
            self.r == other.r
            and self.n == other.n
            and self.cyc_order == other.cyc_order
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: Element) -> Element:
        self._check(other)
        out = dict(self.terms)
        for idx, c in other.terms.items():
            _accumulate(out, idx, c)
        return Element(self.r, self.n, out, self.cyc_order)

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def __neg__(self) -> Element:
        return Element(self.r, self.n, {i: -c for i, c in self.terms.items()}, self.cyc_order)

    def scale(self, s: Scalar) -> Element:
        if s.is_zero():
            return Element(self.r, self.n, {}, self.cyc_order)
        if s.is_one():
            return self
        return Element(self.r, self.n, {i: c * s for i, c in self.terms.items()}, self.cyc_order)

    def scale_rational(self, c: Rational) -> Element:
        if c == 0:
            return Element(self.r, self.n, {}, self.cyc_order)
        return Element(self.r, self.n, {i: v.scale(c) for i, v in self.terms.items()}, self.cyc_order)

    def scale_cyc(self, c: Cyc) -> Element:
        if c.is_zero():
            return Element(self.r, self.n, {}, self.cyc_order)
        return Element(self.r, self.n, {i: v.scale_cyc(c) for i, v in self.terms.items()}, self.cyc_order)

    def __mul__(self, other: Element) -> Element:
        self._check(other)
        return Algebra(self.r, self.n, self.cyc_order).mul(self, other)

    def sorted_terms(self) -> list[tuple[GroupIndex, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: index_sort_key(kv[0]))

    def to_json(self) -> dict:
        data = {"r": self.r, "n": self.n}
        if self.cyc_order != self.r:
            data["cyc_order"] = self.cyc_order
        data["terms"] = [
            {"index": index_to_json(idx), "coeff": coeff.to_json()}
            for idx, coeff in self.sorted_terms()
        ]
        return data

    @staticmethod
    def from_json(data: dict) -> Element:
        r, n = int(data["r"]), int(data["n"])
        cyc_order = int(data.get("cyc_order", r))
        terms: dict[GroupIndex, Scalar] = {}
        for item in data["terms"]:
            coeff = Scalar.from_json(item["coeff"], cyc_order)
            if not coeff.is_zero():
                terms[index_from_json(item["index"])] = coeff
        return Element(r, n, terms, cyc_order)

    def __repr__(self) -> str:
        if not self.terms:
            return "Element(0)"
        bits = [f"{coeff!r}*T{tuple(idx)}" for idx, coeff in self.sorted_terms()]
        return "Element(" + " + ".join(bits) + ")"


def _accumulate(acc: dict[GroupIndex, Scalar], idx: GroupIndex, coeff: Scalar) -> None:
    cur = acc.get(idx)
    if cur is None:
        acc[idx] = coeff
    else:
        s = cur + coeff
        if s.is_zero():
            del acc[idx]
        else:
            acc[idx] = s


@lru_cache(maxsize=None)
def _cached_algebra(r: int, n: int, cyc_order: int) -> "Algebra":
    return Algebra(r, n, cyc_order)


class Algebra:
    """Context (r, n): multiplication rules, distinguished elements, front-end images."""

    def __init__(self, r: int, n: int, cyc_order: int | None = None):
        if r < 1 or n < 2:
            raise ValueError(f"need r >= 1 and n >= 2, got r={r}, n={n}")
        self.r = r
        self.n = n
        self.cyc_order = cyc_order if cyc_order is not None else r
        self._qdiff = Scalar.q_minus_q_inv(self.cyc_order)
        self._qdiff_over_r = self._qdiff.scale(Fraction(1, r))
        # torus shift vectors for the averaged idempotent of each reflection index
        self._e_shifts: list[tuple[tuple[int, ...], ...]] = []
        for i in range(n):
            a, b = (n - 1, 0) if i == 0 else (i - 1, i)
            self._e_shifts.append(
                tuple(
                    tuple((s if p == a else (-s if p == b else 0)) % r for p in range(n))
                    for s in range(r)
                )
            )
        self._x_images: list[Element] | None = None

    # -- constructors -------------------------------------------------

    def zero(self) -> Element:
        return Element(self.r, self.n, {}, self.cyc_order)

    def one(self) -> Element:
        return self.basis(identity(self.n))

    def element(self, terms: dict[GroupIndex, Scalar]) -> Element:
        return Element(self.r, self.n, {i: c for i, c in terms.items() if not c.is_zero()}, self.cyc_order)

    def basis(self, idx: GroupIndex) -> Element:
        beta = tuple(b % self.r for b in idx.beta)
        return Element(
            self.r, self.n, {GroupIndex(beta, idx.lam, idx.sigma): Scalar.one(self.cyc_order)}, self.cyc_order
        )

    def t(self, j: int) -> Element:
        """T_{t_j}; the index 0 is read as n."""
        j = self.n if j == 0 else j
        if not 1 <= j <= self.n:
            raise ValueError(f"torus index out of range: {j}")
        beta = tuple(1 if p == j - 1 else 0 for p in range(self.n))
        return self.torus(beta)

    def torus(self, beta: tuple[int, ...]) -> Element:
        zero = (0,) * self.n
        return self.basis(GroupIndex(tuple(b % self.r for b in beta), zero, tuple(range(1, self.n + 1))))

    def s(self, i: int) -> Element:
        return self.basis(simple_reflection(i, self.n))

    def rho_basis(self, k: int = 1) -> Element:
        acc = identity(self.n)
        step = rho(self.n) if k >= 0 else rho_inverse(self.n)
        for _ in range(abs(k)):
            acc = compose(acc, step, self.r)
        return self.basis(acc)

    def ebar(self, i: int, k: int) -> Element:
        """The averaging idempotent on the torus pair (i, k); equals one when i == k."""
        if not (1 <= i <= self.n and 1 <= k <= self.n):
            raise ValueError(f"idempotent indices out of range: ({i}, {k})")
        r = self.r
        weight = Scalar.from_rational(self.cyc_order, Fraction(1, r))
        terms: dict[GroupIndex, Scalar] = {}
        zero = (0,) * self.n
        ident = tuple(range(1, self.n + 1))
        for s in range(r):
            beta = tuple(
                ((s if p == i - 1 else 0) - (s if p == k - 1 else 0)) % r for p in range(self.n)
            )
            _accumulate(terms, GroupIndex(beta, zero, ident), weight)
        return Element(self.r, self.n, terms, self.cyc_order)

    def e(self, i: int) -> Element:
        """e_i for a reflection index 0 <= i <= n-1; e_0 pairs the last and first strands."""
        if not 0 <= i <= self.n - 1:
            raise ValueError(f"reflection index out of range: {i}")
        if i == 0:
            return self.ebar(self.n, 1)
        return self.ebar(i, i + 1)

    def ts_inverse(self, i: int) -> Element:
        """Two-sided inverse of the reflection basis element."""
        return self.s(i) - self.e(i).scale(self._qdiff)

    # -- multiplication -----------------------------------------------

    def _fold_s(self, i: int, terms: dict[GroupIndex, Scalar]) -> dict[GroupIndex, Scalar]:
        r, n = self.r, self.n
        gen = simple_reflection(i, n)
        shifts = self._e_shifts[i]
        qd = self._qdiff_over_r
        out: dict[GroupIndex, Scalar] = {}
        for idx, c in terms.items():
            new = compose(gen, idx, r)
            _accumulate(out, new, c)
            if _length(new.lam, new.sigma) < _length(idx.lam, idx.sigma):
                cc = c * qd
                beta, lam, sigma = idx
                for sh in shifts:
                    b2 = tuple((beta[p] + sh[p]) % r for p in range(n))
                    _accumulate(out, GroupIndex(b2, lam, sigma), cc)
        return out

    def _fold_rho(self, k: int, terms: dict[GroupIndex, Scalar]) -> dict[GroupIndex, Scalar]:
        if k == 0:
            return terms
        gen = rho(self.n) if k > 0 else rho_inverse(self.n)
        for _ in range(abs(k)):
            terms = {compose(gen, idx, self.r): c for idx, c in terms.items()}
        return terms

    def _fold_torus(self, beta: tuple[int, ...], terms: dict[GroupIndex, Scalar]) -> dict[GroupIndex, Scalar]:
        if not any(beta):
            return terms
        r, n = self.r, self.n
        return {
            GroupIndex(tuple((idx.beta[p] + beta[p]) % r for p in range(n)), idx.lam, idx.sigma): c
            for idx, c in terms.items()
        }

    def fold_word(self, beta: tuple[int, ...], word: WeylWord, y: Element) -> Element:
        """Left-multiply y by t^beta rho^k s_{i_1}...s_{i_m}, folding right to left."""
        terms = y.terms
        for i in reversed(word.word):
            terms = self._fold_s(i, terms)
        terms = self._fold_rho(word.k, terms)
        terms = self._fold_torus(beta, terms)
        return Element(self.r, self.n, dict(terms), self.cyc_order)

    def left_mul_gen(self, gen: str, x: Element) -> Element:
        """Left multiplication by a named generator: ``t<j>``, ``s<i>``, ``rho``, ``rho_inv``."""
        if gen == "rho":
            return Element(self.r, self.n, self._fold_rho(1, x.terms), self.cyc_order)
        if gen == "rho_inv":
            return Element(self.r, self.n, self._fold_rho(-1, x.terms), self.cyc_order)
        if gen.startswith("t"):
            j = int(gen[1:])
            j = self.n if j == 0 else j
            if not 1 <= j <= self.n:
                raise ValueError(f"torus index out of range: {j}")
            beta = tuple(1 if p == j - 1 else 0 for p in range(self.n))
            return Element(self.r, self.n, self._fold_torus(beta, x.terms), self.cyc_order)
        if gen.startswith("s"):
            i = int(gen[1:])
            if not 0 <= i <= self.n - 1:
                raise ValueError(f"reflection index out of range: {i}")
            return Element(self.r, self.n, self._fold_s(i, x.terms), self.cyc_order)
        raise ValueError(f"unknown generator name: {gen!r}")

    def right_mul_gen(self, gen: str, x: Element) -> Element:
        """Right multiplication by a named generator, mirroring the left rules."""
        r, n = self.r, self.n
        if gen in ("rho", "rho_inv"):
            g = rho(n) if gen == "rho" else rho_inverse(n)
            return Element(r, n, {compose(idx, g, r): c for idx, c in x.terms.items()}, self.cyc_order)
        if gen.startswith("t"):
            j = int(gen[1:])
            j = n if j == 0 else j
            g = GroupIndex(
                tuple(1 if p == j - 1 else 0 for p in range(n)), (0,) * n, tuple(range(1, n + 1))
            )
            return Element(r, n, {compose(idx, g, r): c for idx, c in x.terms.items()}, self.cyc_order)
        i = int(gen[1:])
        g = simple_reflection(i, n)
        shifts = self._e_shifts[i]
        qd = self._qdiff_over_r
        ident = tuple(range(1, n + 1))
        zero = (0,) * n
        out: dict[GroupIndex, Scalar] = {}
        for idx, c in x.terms.items():
            new = compose(idx, g, r)
            _accumulate(out, new, c)
            if _length(new.lam, new.sigma) < _length(idx.lam, idx.sigma):
                cc = c * qd
                for sh in shifts:
                    _accumulate(out, compose(idx, GroupIndex(sh, zero, ident), r), cc)
        return Element(r, n, out, self.cyc_order)

    def mul(self, x: Element, y: Element) -> Element:
        """Bilinear product; each left index is decomposed into its normal form and folded."""
        if (x.r, x.n, x.cyc_order) != (self.r, self.n, self.cyc_order) or (y.r, y.n, y.cyc_order) != (
            self.r,
            self.n,
            self.cyc_order,
        ):
            raise ContextMismatchError("operands do not belong to this algebra")
        out: dict[GroupIndex, Scalar] = {}
        for idx, c in x.terms.items():
            word = reduced_word_of(idx)
            folded = y.terms
            for i in reversed(word.word):
                folded = self._fold_s(i, folded)
            folded = self._fold_rho(word.k, folded)
            folded = self._fold_torus(idx.beta, folded)
            if c.is_one():
                for j, cc in folded.items():
                    _accumulate(out, j, cc)
            else:
                for j, cc in folded.items():
                    _accumulate(out, j, c * cc)
        return Element(self.r, self.n, out, self.cyc_order)

    def product(self, factors) -> Element:
        acc = self.one()
        for f in factors:
            acc = self.mul(acc, f)
        return acc

    def group_mul(self, x: Element, y: Element) -> Element:
        """Product in the group algebra of the index group (no quadratic rewriting)."""
        out: dict[GroupIndex, Scalar] = {}
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                _accumulate(out, compose(a, b, self.r), ca * cb)
        return Element(self.r, self.n, out, self.cyc_order)

    # -- the commutative front-end ------------------------------------

    def psi_assignment(self) -> dict[str, Element]:
        """Images of the framed braid-like generators inside this algebra."""
        n = self.n
        assign: dict[str, Element] = {}
        for j in range(1, n + 1):
            assign[f"t{j}"] = self.t(j)
        for i in range(1, n):
            assign[f"g{i}"] = self.s(i)
        x1 = self.one()
        for i in range(1, n):
            x1 = self.mul(x1, self.ts_inverse(i))
        x1 = self.mul(x1, self.rho_basis(1))
        assign["X1"] = x1
        x1_inv = self.rho_basis(-1)
        for i in range(n - 1, 0, -1):
            x1_inv = self.mul(x1_inv, self.s(i))
        assign["X1^-1"] = x1_inv
        return assign

    def x_element(self, j: int) -> Element:
        """Image of the j-th commuting lattice generator, built by conjugation."""
        if not 1 <= j <= self.n:
            raise ValueError(f"lattice index out of range: {j}")
        if self._x_images is None:
            self._x_images = [self.psi_assignment()["X1"]]
        while len(self._x_images) < j:
            i = len(self._x_images)
            prev = self._x_images[-1]
            self._x_images.append(self.mul(self.mul(self.s(i), prev), self.s(i)))
        return self._x_images[j - 1]


def algebra(r: int, n: int, cyc_order: int | None = None) -> Algebra:
    """Shared algebra context for (r, n); contexts are stateless apart from caches."""
    return _cached_algebra(r, n, cyc_order if cyc_order is not None else r)
