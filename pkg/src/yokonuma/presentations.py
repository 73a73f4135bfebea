"""Abstract presentations, symbolic evaluation, and the isomorphism verification suite.

A ``FormalExpression`` is a scalar-linear combination of words in generator
symbols; a ``Presentation`` is a named list of relations between such
expressions.  Relations are stored with every averaging idempotent fully
expanded (coefficients 1/r), so evaluation needs nothing beyond substitution
and kernel multiplication.  The verification entry points re-prove, at desk
scale, that the generator assignments of the two isomorphism pairs preserve
all defining relations and compose to the identity on generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .algebra import Algebra, Element, algebra
from .modified import vandermonde
from .scalars import Cyc, Scalar
from .weyl import GroupIndex, compose, enumerate_bounded, length, simple_reflection


class UnboundSymbolError(KeyError):
    """A word references a symbol missing from the assignment."""


class FormalExpression:
    """Scalar-linear combination of words in generator symbols."""

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms: dict[tuple[str, ...], Scalar]):
        self.order = order
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    @staticmethod
    def word(order: int, *symbols: str) -> FormalExpression:
        return FormalExpression(order, {tuple(symbols): Scalar.one(order)})

    @staticmethod
    def constant(order: int, value) -> FormalExpression:
        return FormalExpression(order, {(): Scalar.from_rational(order, value)})

    @staticmethod
    def zero(order: int) -> FormalExpression:
        return FormalExpression(order, {})

    def __add__(self, other: FormalExpression) -> FormalExpression:
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out[w] + c if w in out else c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return FormalExpression(self.order, out)

    def __sub__(self, other: FormalExpression) -> FormalExpression:
        return self + (-other)

    def __neg__(self) -> FormalExpression:
        return FormalExpression(self.order, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other: FormalExpression) -> FormalExpression:
        out: dict[tuple[str, ...], Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                p = c1 * c2
                s = out[w] + p if w in out else p
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        return FormalExpression(self.order, out)

    def scale(self, s: Scalar) -> FormalExpression:
        return FormalExpression(self.order, {w: c * s for w, c in self.terms.items()})

    def symbols(self) -> set[str]:
        return {sym for w in self.terms for sym in w}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalExpression):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "Expr(0)"
        return "Expr(" + " + ".join(f"{c!r}*{'.'.join(w) or '1'}" for w, c in self.terms.items()) + ")"


@dataclass(frozen=True)
class Relation:
    family: str
    note: str
    lhs: FormalExpression
    rhs: FormalExpression


@dataclass(frozen=True)
class Presentation:
    name: str
    r: int
    n: int
    generators: tuple[str, ...]
    families: tuple[str, ...]
    relations: tuple[Relation, ...]


@dataclass(frozen=True)
class ProPParameters:
    """Quadratic-relation data attached to a torus-reflection pair."""

    q_ts: Scalar
    c_ts: Element


def evaluate(alg: Algebra, expr: FormalExpression, assign: dict[str, Element]) -> Element:
    """Scalar-linear extension of word evaluation under kernel multiplication.

    Words are folded right to left so the running value is always multiplied
    by a small generator image, which is the cheap direction for the kernel.
    Expanded products share word suffixes heavily, so suffix values are cached
    for the duration of the call.
    """
    cache: dict[tuple[str, ...], Element] = {(): alg.one()}

    def eval_suffix(word: tuple[str, ...]) -> Element:
        known = cache.get(word)
        if known is not None:
            return known
        img = assign.get(word[0])
        if img is None:
            raise UnboundSymbolError(word[0])
        value = alg.mul(img, eval_suffix(word[1:]))
        cache[word] = value
        return value

    acc = alg.zero()
    for word, coeff in expr.terms.items():
        acc = acc + eval_suffix(word).scale(coeff)
    return acc


def substitute(expr: FormalExpression, mapping: dict[str, FormalExpression]) -> FormalExpression:
    """Replace every symbol by its image expression and multiply out."""
    out = FormalExpression.zero(expr.order)
    for word, coeff in expr.terms.items():
        value = FormalExpression.word(expr.order, *())
        for sym in word:
            img = mapping.get(sym)
            if img is None:
                raise UnboundSymbolError(sym)
            value = value * img
        out = out + value.scale(coeff)
    return out


# ---------------------------------------------------------------------------
# expression building blocks


def _w(order: int, *symbols: str) -> FormalExpression:
    return FormalExpression.word(order, *symbols)


def _qd(order: int) -> Scalar:
    return Scalar.q_minus_q_inv(order)


def _ebar_expr(order: int, r: int, prefix: str, i: int, k: int) -> FormalExpression:
    """The averaged idempotent on the pair (i, k) as words in nonnegative powers."""
    out = FormalExpression.zero(order)
    weight = Scalar.from_rational(order, Fraction(1, r))
    for s in range(r):
        word = (f"{prefix}{i}",) * s + (f"{prefix}{k}",) * ((r - s) % r)
        out = out + FormalExpression(order, {word: weight})
    return out


def _e_expr(order: int, r: int, n: int, prefix: str, i: int) -> FormalExpression:
    """e_i with the wrap-around convention: index 0 pairs the last and first strands."""
    if i == 0:
        return _ebar_expr(order, r, prefix, n, 1)
    return _ebar_expr(order, r, prefix, i, i + 1)


def _g_inv(order: int, r: int, n: int, i: int) -> FormalExpression:
    return _w(order, f"g{i}") - _e_expr(order, r, n, "t", i).scale(_qd(order))


def _ts_inv(order: int, r: int, n: int, i: int) -> FormalExpression:
    return _w(order, f"Ts{i}") - _e_expr(order, r, n, "t", i).scale(_qd(order))


def _prod(order: int, factors) -> FormalExpression:
    acc = FormalExpression.word(order)
    for f in factors:
        acc = acc * f
    return acc


def _skein_sum(order: int, r: int, sym_a: str, sym_b: str, with_root_factor: bool) -> FormalExpression:
    """Sum over projector-pair products F_{c1}(a) F_{c2}(b), scaled by the inverse
    square of the Vandermonde determinant and q - q^{-1}; optionally each pair
    also carries the root difference zeta^{c2} - zeta^{c1}."""
    vd = vandermonde(r)
    acc = FormalExpression.zero(order)
    for c1 in range(1, r + 1):
        for c2 in range(c1 + 1, r + 1):
            pair = FormalExpression.zero(order)
            for m1, b1 in enumerate(vd.f_coeffs[c1 - 1]):
                if b1.is_zero():
                    continue
                for m2, b2 in enumerate(vd.f_coeffs[c2 - 1]):
                    if b2.is_zero():
                        continue
                    word = (sym_a,) * m1 + (sym_b,) * m2
                    pair = pair + FormalExpression(order, {word: Scalar.from_cyc(b1 * b2)})
            if with_root_factor:
                pair = pair.scale(Scalar.from_cyc(Cyc.zeta_power(r, c2) - Cyc.zeta_power(r, c1)))
            acc = acc + pair
    dinv = vd.delta.invert()
    return acc.scale(Scalar.from_cyc(dinv * dinv) * _qd(order))


# ---------------------------------------------------------------------------
# builtin presentations


def _yokonuma(r: int, n: int) -> Presentation:
    o = r
    one = FormalExpression.constant(o, 1)
    rels: list[Relation] = []
    fams = (
        "g-commute", "g-braid", "t-commute", "g-t", "t-order",
        "g-quadratic", "x-invertible", "x-g-braid", "x-g-commute", "x-t-commute",
    )
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(Relation("g-commute", f"i={i},j={j}", _w(o, f"g{i}", f"g{j}"), _w(o, f"g{j}", f"g{i}")))
    for i in range(1, n - 1):
        rels.append(Relation(
            "g-braid", f"i={i}",
            _w(o, f"g{i}", f"g{i+1}", f"g{i}"), _w(o, f"g{i+1}", f"g{i}", f"g{i+1}"),
        ))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append(Relation("t-commute", f"i={i},j={j}", _w(o, f"t{i}", f"t{j}"), _w(o, f"t{j}", f"t{i}")))
    for i in range(1, n):
        si = simple_reflection(i, n)
        for j in range(1, n + 1):
            rels.append(Relation(
                "g-t", f"i={i},j={j}",
                _w(o, f"g{i}", f"t{j}"), _w(o, f"t{si.sigma[j-1]}", f"g{i}"),
            ))
    for i in range(1, n + 1):
        rels.append(Relation("t-order", f"i={i}", _w(o, *((f"t{i}",) * r)), one))
    for i in range(1, n):
        rels.append(Relation(
            "g-quadratic", f"i={i}",
            _w(o, f"g{i}", f"g{i}"),
            one + (_e_expr(o, r, n, "t", i) * _w(o, f"g{i}")).scale(_qd(o)),
        ))
    rels.append(Relation("x-invertible", "left", _w(o, "X1", "X1^-1"), one))
    rels.append(Relation("x-invertible", "right", _w(o, "X1^-1", "X1"), one))
    rels.append(Relation(
        "x-g-braid", "",
        _w(o, "g1", "X1", "g1", "X1"), _w(o, "X1", "g1", "X1", "g1"),
    ))
    for i in range(2, n):
        rels.append(Relation("x-g-commute", f"i={i}", _w(o, f"g{i}", "X1"), _w(o, "X1", f"g{i}")))
    for j in range(1, n + 1):
        rels.append(Relation("x-t-commute", f"j={j}", _w(o, f"t{j}", "X1"), _w(o, "X1", f"t{j}")))
    gens = tuple(f"t{j}" for j in range(1, n + 1)) + tuple(f"g{i}" for i in range(1, n)) + ("X1", "X1^-1")
    return Presentation("yokonuma", r, n, gens, fams, tuple(rels))


def _im_affine(r: int, n: int) -> Presentation:
    o = r
    one = FormalExpression.constant(o, 1)
    rels: list[Relation] = []
    fams = (
        "t-order", "t-commute", "s-t", "rho-t", "rho-s",
        "s-commute", "s-braid", "s-quadratic", "rho-invertible",
    )
    for i in range(1, n + 1):
        rels.append(Relation("t-order", f"i={i}", _w(o, *((f"t{i}",) * r)), one))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append(Relation("t-commute", f"i={i},j={j}", _w(o, f"t{i}", f"t{j}"), _w(o, f"t{j}", f"t{i}")))
    for i in range(1, n):
        si = simple_reflection(i, n)
        for j in range(1, n + 1):
            rels.append(Relation(
                "s-t", f"i={i},j={j}",
                _w(o, f"Ts{i}", f"t{j}"), _w(o, f"t{si.sigma[j-1]}", f"Ts{i}"),
            ))
    for j in range(1, n + 1):
        prev = n if j == 1 else j - 1
        rels.append(Relation("rho-t", f"j={j}", _w(o, "Trho", f"t{j}"), _w(o, f"t{prev}", "Trho")))
    for i in range(n):
        rels.append(Relation(
            "rho-s", f"i={i}",
            _w(o, "Trho", f"Ts{i}"), _w(o, f"Ts{(i - 1) % n}", "Trho"),
        ))
    for i in range(n):
        for j in range(i + 1, n):
            if (i - j) % n in (1, n - 1):
                continue
            rels.append(Relation("s-commute", f"i={i},j={j}", _w(o, f"Ts{i}", f"Ts{j}"), _w(o, f"Ts{j}", f"Ts{i}")))
    if n >= 3:
        for i in range(n):
            a, b = i, (i + 1) % n
            rels.append(Relation(
                "s-braid", f"i={i}",
                _w(o, f"Ts{a}", f"Ts{b}", f"Ts{a}"), _w(o, f"Ts{b}", f"Ts{a}", f"Ts{b}"),
            ))
    for i in range(n):
        rels.append(Relation(
            "s-quadratic", f"i={i}",
            _w(o, f"Ts{i}", f"Ts{i}"),
            one + (_e_expr(o, r, n, "t", i) * _w(o, f"Ts{i}")).scale(_qd(o)),
        ))
    rels.append(Relation("rho-invertible", "left", _w(o, "Trho", "Trho^-1"), one))
    rels.append(Relation("rho-invertible", "right", _w(o, "Trho^-1", "Trho"), one))
    gens = (
        tuple(f"t{j}" for j in range(1, n + 1))
        + tuple(f"Ts{i}" for i in range(n))
        + ("Trho", "Trho^-1")
    )
    return Presentation("im_affine", r, n, gens, fams, tuple(rels))


def _skein_family(r: int, n: int, indices, braid_pairs, commute_pairs, wrap_rho: bool, name: str) -> Presentation:
    """Common builder for the skein-type presentations.

    ``indices`` is the list of reflection indices carrying quadratic and skein
    relations; ``commute_pairs``/``braid_pairs`` are the index pairs for the
    h-h relations; ``wrap_rho`` adds the rotation generator and its relations.
    """
    o = r
    one = FormalExpression.constant(o, 1)
    rels: list[Relation] = []
    fams = ["w-order", "w-commute"]
    if wrap_rho:
        fams += ["rho-w", "rho-h"]
    fams += ["h-commute", "h-braid", "h-quadratic", "h-w-lower", "h-w-raise", "h-w-commute"]
    if wrap_rho:
        fams += ["rho-invertible"]
    for i in range(1, n + 1):
        rels.append(Relation("w-order", f"i={i}", _w(o, *((f"w{i}",) * r)), one))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append(Relation("w-commute", f"i={i},j={j}", _w(o, f"w{i}", f"w{j}"), _w(o, f"w{j}", f"w{i}")))
    if wrap_rho:
        for j in range(1, n + 1):
            prev = n if j == 1 else j - 1
            rels.append(Relation("rho-w", f"j={j}", _w(o, "hrho", f"w{j}"), _w(o, f"w{prev}", "hrho")))
        for i in range(n):
            rels.append(Relation(
                "rho-h", f"i={i}",
                _w(o, "hrho", f"hs{i}"), _w(o, f"hs{(i - 1) % n}", "hrho"),
            ))
    for (i, j) in commute_pairs:
        rels.append(Relation("h-commute", f"i={i},j={j}", _w(o, f"hs{i}", f"hs{j}"), _w(o, f"hs{j}", f"hs{i}")))
    for (a, b) in braid_pairs:
        rels.append(Relation(
            "h-braid", f"i={a},j={b}",
            _w(o, f"hs{a}", f"hs{b}", f"hs{a}"), _w(o, f"hs{b}", f"hs{a}", f"hs{b}"),
        ))
    for i in indices:
        rels.append(Relation(
            "h-quadratic", f"i={i}",
            _w(o, f"hs{i}", f"hs{i}"), one + _w(o, f"hs{i}").scale(_qd(o)),
        ))
    for i in indices:
        wa = f"w{n if i == 0 else i}"
        wb = f"w{1 if i == 0 else i + 1}"
        corr = _skein_sum(o, r, wa, wb, with_root_factor=True)
        rels.append(Relation(
            "h-w-lower", f"i={i}",
            _w(o, f"hs{i}", wa), _w(o, wb, f"hs{i}") - corr,
        ))
        rels.append(Relation(
            "h-w-raise", f"i={i}",
            _w(o, f"hs{i}", wb), _w(o, wa, f"hs{i}") + corr,
        ))
    for i in indices:
        for l in range(1, n + 1):
            if name == "modified_affine":
                if l in (i, i + 1):
                    continue
            else:
                if l % n in (i % n, (i + 1) % n):
                    continue
            rels.append(Relation(
                "h-w-commute", f"i={i},l={l}",
                _w(o, f"hs{i}", f"w{l}"), _w(o, f"w{l}", f"hs{i}"),
            ))
    if wrap_rho:
        rels.append(Relation("rho-invertible", "left", _w(o, "hrho", "hrho^-1"), one))
        rels.append(Relation("rho-invertible", "right", _w(o, "hrho^-1", "hrho"), one))
    gens = tuple(f"w{j}" for j in range(1, n + 1)) + tuple(f"hs{i}" for i in sorted(set(indices)))
    if wrap_rho:
        gens += ("hrho", "hrho^-1")
    return Presentation(name, r, n, gens, tuple(fams), tuple(rels))


def _modified_affine(r: int, n: int) -> Presentation:
    indices = list(range(1, n))
    commute = [
        (i, j) for i in range(n) for j in range(i + 1, n) if (i - j) % n not in (1, n - 1)
    ]
    braid = [(i, (i + 1) % n) for i in range(n)] if n >= 3 else []
    pres = _skein_family(r, n, indices, braid, commute, wrap_rho=True, name="modified_affine")
    # the quadratic family additionally covers every reflection index
    o = r
    one = FormalExpression.constant(o, 1)
    extra = [
        Relation("h-quadratic", "i=0", _w(o, "hs0", "hs0"), one + _w(o, "hs0").scale(_qd(o)))
    ]
    rels = tuple(list(pres.relations) + extra)
    gens = tuple(f"w{j}" for j in range(1, n + 1)) + tuple(f"hs{i}" for i in range(n)) + ("hrho", "hrho^-1")
    return Presentation(pres.name, r, n, gens, pres.families, rels)


def _h1(r: int, n: int) -> Presentation:
    o = r
    one = FormalExpression.constant(o, 1)
    rels: list[Relation] = []
    fams = ("t-order", "t-commute", "s0-t", "s-t", "s-commute", "s-braid", "s-quadratic")
    for i in range(1, n + 1):
        rels.append(Relation("t-order", f"i={i}", _w(o, *((f"t{i}",) * r)), one))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append(Relation("t-commute", f"i={i},j={j}", _w(o, f"t{i}", f"t{j}"), _w(o, f"t{j}", f"t{i}")))
    rels.append(Relation("s0-t", "j=1", _w(o, "Ts0", "t1"), _w(o, f"t{n}", "Ts0")))
    rels.append(Relation("s0-t", f"j={n}", _w(o, "Ts0", f"t{n}"), _w(o, "t1", "Ts0")))
    for k in range(2, n):
        rels.append(Relation("s0-t", f"j={k}", _w(o, "Ts0", f"t{k}"), _w(o, f"t{k}", "Ts0")))
    for i in range(1, n - 1):
        si = simple_reflection(i, n)
        for j in range(1, n + 1):
            rels.append(Relation(
                "s-t", f"i={i},j={j}",
                _w(o, f"Ts{i}", f"t{j}"), _w(o, f"t{si.sigma[j-1]}", f"Ts{i}"),
            ))
    for i in range(n - 1):
        for j in range(i + 2, n - 1):
            rels.append(Relation("s-commute", f"i={i},j={j}", _w(o, f"Ts{i}", f"Ts{j}"), _w(o, f"Ts{j}", f"Ts{i}")))
    if n >= 3:
        for i in range(n - 2):
            rels.append(Relation(
                "s-braid", f"i={i}",
                _w(o, f"Ts{i}", f"Ts{i+1}", f"Ts{i}"), _w(o, f"Ts{i+1}", f"Ts{i}", f"Ts{i+1}"),
            ))
    for i in range(n - 1):
        rels.append(Relation(
            "s-quadratic", f"i={i}",
            _w(o, f"Ts{i}", f"Ts{i}"),
            one + (_e_expr(o, r, n, "t", i) * _w(o, f"Ts{i}")).scale(_qd(o)),
        ))
    gens = tuple(f"t{j}" for j in range(1, n + 1)) + tuple(f"Ts{i}" for i in range(n - 1))
    return Presentation("h1", r, n, gens, fams, tuple(rels))


def _c1(r: int, n: int) -> Presentation:
    indices = list(range(n - 1))
    commute = [(i, j) for i in range(n - 1) for j in range(i + 2, n - 1)]
    braid = [(i, i + 1) for i in range(n - 2)] if n >= 3 else []
    return _skein_family(r, n, indices, braid, commute, wrap_rho=False, name="c1")


def _h2(r: int, n: int) -> Presentation:
    o = r
    one = FormalExpression.constant(o, 1)
    rels: list[Relation] = []
    fams = ("t-order", "t-commute", "s0-t", "s-t", "s-commute", "s-braid",
            "s0-s-commute", "s0-braid", "s-quadratic")
    for i in range(1, n + 1):
        rels.append(Relation("t-order", f"i={i}", _w(o, *((f"t{i}",) * r)), one))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append(Relation("t-commute", f"i={i},j={j}", _w(o, f"t{i}", f"t{j}"), _w(o, f"t{j}", f"t{i}")))
    rels.append(Relation("s0-t", "j=1", _w(o, "Ts0", "t1"), _w(o, f"t{n}", "Ts0")))
    rels.append(Relation("s0-t", f"j={n}", _w(o, "Ts0", f"t{n}"), _w(o, "t1", "Ts0")))
    for k in range(2, n):
        rels.append(Relation("s0-t", f"j={k}", _w(o, "Ts0", f"t{k}"), _w(o, f"t{k}", "Ts0")))
    for i in range(2, n):
        si = simple_reflection(i, n)
        for j in range(1, n + 1):
            rels.append(Relation(
                "s-t", f"i={i},j={j}",
                _w(o, f"Ts{i}", f"t{j}"), _w(o, f"t{si.sigma[j-1]}", f"Ts{i}"),
            ))
    for i in range(2, n):
        for j in range(i + 2, n):
            rels.append(Relation("s-commute", f"i={i},j={j}", _w(o, f"Ts{i}", f"Ts{j}"), _w(o, f"Ts{j}", f"Ts{i}")))
    if n >= 3:
        for i in range(2, n - 1):
            rels.append(Relation(
                "s-braid", f"i={i}",
                _w(o, f"Ts{i}", f"Ts{i+1}", f"Ts{i}"), _w(o, f"Ts{i+1}", f"Ts{i}", f"Ts{i+1}"),
            ))
    for k in range(2, n - 1):
        rels.append(Relation("s0-s-commute", f"k={k}", _w(o, "Ts0", f"Ts{k}"), _w(o, f"Ts{k}", "Ts0")))
    if n >= 3:
        rels.append(Relation(
            "s0-braid", "",
            _w(o, "Ts0", f"Ts{n-1}", "Ts0"), _w(o, f"Ts{n-1}", "Ts0", f"Ts{n-1}"),
        ))
    for i in [0] + list(range(2, n)):
        rels.append(Relation(
            "s-quadratic", f"i={i}",
            _w(o, f"Ts{i}", f"Ts{i}"),
            one + (_e_expr(o, r, n, "t", i) * _w(o, f"Ts{i}")).scale(_qd(o)),
        ))
    gens = tuple(f"t{j}" for j in range(1, n + 1)) + tuple(f"Ts{i}" for i in [0] + list(range(2, n)))
    return Presentation("h2", r, n, gens, fams, tuple(rels))


def _c2(r: int, n: int) -> Presentation:
    indices = [0] + list(range(2, n))
    commute = [(i, j) for i in range(2, n) for j in range(i + 2, n)]
    braid = [(i, i + 1) for i in range(2, n - 1)] if n >= 3 else []
    pres = _skein_family(r, n, indices, braid, commute, wrap_rho=False, name="c2")
    o = r
    rels = list(pres.relations)
    for k in range(2, n - 1):
        rels.append(Relation("h0-h-commute", f"k={k}", _w(o, "hs0", f"hs{k}"), _w(o, f"hs{k}", "hs0")))
    if n >= 3:
        rels.append(Relation(
            "h0-braid", "",
            _w(o, "hs0", f"hs{n-1}", "hs0"), _w(o, f"hs{n-1}", "hs0", f"hs{n-1}"),
        ))
    fams = tuple(pres.families) + ("h0-h-commute", "h0-braid")
    return Presentation("c2", r, n, pres.generators, fams, tuple(rels))


def _affine_hecke(r: int, n: int) -> Presentation:
    """The relation set of the extended affine Hecke algebra on the skein symbols."""
    o = r
    one = FormalExpression.constant(o, 1)
    rels: list[Relation] = []
    fams = ("h-quadratic", "h-commute", "h-braid", "rho-h", "rho-invertible")
    for i in range(n):
        rels.append(Relation(
            "h-quadratic", f"i={i}",
            _w(o, f"hs{i}", f"hs{i}"), one + _w(o, f"hs{i}").scale(_qd(o)),
        ))
    for i in range(n):
        for j in range(i + 1, n):
            if (i - j) % n in (1, n - 1):
                continue
            rels.append(Relation("h-commute", f"i={i},j={j}", _w(o, f"hs{i}", f"hs{j}"), _w(o, f"hs{j}", f"hs{i}")))
    if n >= 3:
        for i in range(n):
            a, b = i, (i + 1) % n
            rels.append(Relation(
                "h-braid", f"i={i}",
                _w(o, f"hs{a}", f"hs{b}", f"hs{a}"), _w(o, f"hs{b}", f"hs{a}", f"hs{b}"),
            ))
    for i in range(n):
        rels.append(Relation(
            "rho-h", f"i={i}",
            _w(o, "hrho", f"hs{i}"), _w(o, f"hs{(i - 1) % n}", "hrho"),
        ))
    rels.append(Relation("rho-invertible", "left", _w(o, "hrho", "hrho^-1"), one))
    rels.append(Relation("rho-invertible", "right", _w(o, "hrho^-1", "hrho"), one))
    gens = tuple(f"hs{i}" for i in range(n)) + ("hrho", "hrho^-1")
    return Presentation("affine_hecke", r, n, gens, fams, tuple(rels))


_BUILTINS = {
    "yokonuma": _yokonuma,
    "im_affine": _im_affine,
    "modified_affine": _modified_affine,
    "h1": _h1,
    "c1": _c1,
    "h2": _h2,
    "c2": _c2,
    "affine_hecke": _affine_hecke,
}


def builtin(name: str, r: int, n: int) -> Presentation:
    """Construct a named builtin presentation with all idempotent sums expanded."""
    try:
        factory = _BUILTINS[name]
    except KeyError:
        raise ValueError(f"unknown presentation name: {name!r}") from None
    return factory(r, n)


def builtin_names() -> tuple[str, ...]:
    return tuple(_BUILTINS)


# ---------------------------------------------------------------------------
# relation checking


def check_relations(alg: Algebra, pres: Presentation, assign: dict[str, Element]) -> dict:
    """Per-family pass/fail report; a family passes when every instance evaluates to zero."""
    families: dict[str, dict] = {
        fam: {"label": fam, "instances": 0, "pass": True, "diff": None} for fam in pres.families
    }
    for rel in pres.relations:
        fam = families.setdefault(
            rel.family, {"label": rel.family, "instances": 0, "pass": True, "diff": None}
        )
        fam["instances"] += 1
        diff = evaluate(alg, rel.lhs, assign) - evaluate(alg, rel.rhs, assign)
        if not diff.is_zero():
            fam["pass"] = False
            if fam["diff"] is None:
                fam["diff"] = {"note": rel.note, "element": diff.to_json()}
    results = list(families.values())
    return {
        "presentation": pres.name,
        "r": pres.r,
        "n": pres.n,
        "pass": all(f["pass"] for f in results),
        "results": results,
    }


def standard_assignment(alg: Algebra) -> dict[str, Element]:
    """The tautological images of the standard-presentation symbols."""
    assign = {f"t{j}": alg.t(j) for j in range(1, alg.n + 1)}
    for i in range(alg.n):
        assign[f"Ts{i}"] = alg.s(i)
    assign["Trho"] = alg.rho_basis(1)
    assign["Trho^-1"] = alg.rho_basis(-1)
    return assign


def merged_assignment(alg: Algebra) -> dict[str, Element]:
    """Standard symbols plus the commutative front-end images, in one table."""
    assign = standard_assignment(alg)
    assign.update(alg.psi_assignment())
    return assign


# ---------------------------------------------------------------------------
# the two generator-expression maps


def phi_expressions(r: int, n: int) -> dict[str, FormalExpression]:
    """Standard generators written as expressions in the front-end symbols."""
    o = r
    out: dict[str, FormalExpression] = {}
    for j in range(1, n + 1):
        out[f"t{j}"] = _w(o, f"t{j}")
    for i in range(1, n):
        out[f"Ts{i}"] = _w(o, f"g{i}")
    # X_n by the conjugation recursion, as one positive word
    xn_word = tuple(f"g{i}" for i in range(n - 1, 0, -1)) + ("X1",) + tuple(
        f"g{i}" for i in range(1, n)
    )
    hat_word = [f"g{i}" for i in range(n - 1, 0, -1)] + [f"g{i}" for i in range(2, n)]
    inv_chain = _prod(o, (_g_inv(o, r, n, int(s[1:])) for s in reversed(hat_word)))
    out["Ts0"] = _w(o, "X1^-1") * _w(o, *xn_word) * inv_chain
    out["Trho"] = _w(o, *tuple(f"g{i}" for i in range(n - 1, 0, -1)), "X1")
    out["Trho^-1"] = _w(o, "X1^-1") * _prod(o, (_g_inv(o, r, n, i) for i in range(1, n)))
    return out


def psi_expressions(r: int, n: int) -> dict[str, FormalExpression]:
    """Front-end generators written as expressions in the standard symbols."""
    o = r
    out: dict[str, FormalExpression] = {}
    for j in range(1, n + 1):
        out[f"t{j}"] = _w(o, f"t{j}")
    for i in range(1, n):
        out[f"g{i}"] = _w(o, f"Ts{i}")
    out["X1"] = _prod(o, (_ts_inv(o, r, n, i) for i in range(1, n))) * _w(o, "Trho")
    out["X1^-1"] = _w(o, "Trho^-1", *tuple(f"Ts{i}" for i in range(n - 1, 0, -1)))
    return out


def verify_inverse_pair(
    alg: Algebra,
    fwd: dict[str, FormalExpression] | None = None,
    back: dict[str, FormalExpression] | None = None,
) -> dict:
    """Check that the two generator maps compose to the identity on generators.

    ``fwd`` sends standard symbols to front-end expressions, ``back`` the
    reverse; both composites are evaluated inside the kernel.
    """
    fwd = fwd if fwd is not None else phi_expressions(alg.r, alg.n)
    back = back if back is not None else psi_expressions(alg.r, alg.n)
    base = standard_assignment(alg)
    results = []
    ok = True
    for name in base:
        got = evaluate(alg, substitute(fwd[name], back), base)
        good = got == base[name]
        results.append({"generator": name, "direction": "back(fwd)", "pass": good})
        ok = ok and good
    front = merged_assignment(alg)
    for name in ("X1", "X1^-1", *(f"g{i}" for i in range(1, alg.n)), *(f"t{j}" for j in range(1, alg.n + 1))):
        expr = substitute(substitute(back[name], fwd), back)
        good = evaluate(alg, expr, base) == front[name]
        results.append({"generator": name, "direction": "fwd(back)", "pass": good})
        ok = ok and good
    return {"pair": "Phi-Psi", "r": alg.r, "n": alg.n, "pass": ok, "results": results}


# ---------------------------------------------------------------------------
# group-algebra identities behind the basis theorem


def verify_idempotent_shift(r: int, n: int, length_bound: int, rho_bound: int = 1) -> dict:
    """Three group-algebra identities for moving an averaged idempotent across a
    length-neutral reflection sandwich; checked on every gated (i, j, w) triple."""
    alg = algebra(r, n)
    instances = 0
    failures = []
    e = [alg.e(i) for i in range(n)]
    refl = [simple_reflection(i, n) for i in range(n)]
    for base in enumerate_bounded(n, length_bound, rho_bound):
        ell = length(base)
        for beta in product(range(r), repeat=n):
            w = GroupIndex(beta, base.lam, base.sigma)
            bw = alg.basis(w)
            for i in range(n):
                siw = compose(refl[i], w, r)
                for j in range(n):
                    wsj = compose(w, refl[j], r)
                    if length(compose(refl[i], wsj, r)) != ell:
                        continue
                    if length(siw) != length(wsj):
                        continue
                    instances += 1
                    bsiw = alg.basis(siw)
                    bwsj = alg.basis(wsj)
                    id1 = alg.group_mul(e[i], bsiw) == alg.group_mul(e[i], bwsj)
                    id2 = alg.group_mul(bsiw, e[j]) == alg.group_mul(e[i], bwsj)
                    id3 = alg.group_mul(e[i], bw) == alg.group_mul(bw, e[j])
                    if not (id1 and id2 and id3):
                        failures.append({"i": i, "j": j, "w": {"beta": list(beta), "lambda": list(w.lam), "sigma": list(w.sigma)}})
    return {"r": r, "n": n, "instances": instances, "failures": failures, "pass": not failures}


def verify_pq_commute(r: int, n: int, length_bound: int, rho_bound: int = 1) -> dict:
    """Left and right one-letter multiplication operators commute on basis lines."""
    alg = algebra(r, n)
    gens = [f"t{j}" for j in range(1, n + 1)] + ["rho", "rho_inv"] + [f"s{i}" for i in range(n)]
    instances = 0
    failures = []
    for base in enumerate_bounded(n, length_bound, rho_bound):
        for beta in product(range(r), repeat=n):
            idx = GroupIndex(beta, base.lam, base.sigma)
            w = alg.basis(idx)
            left_images = {u: alg.left_mul_gen(u, w) for u in gens}
            right_images = {v: alg.right_mul_gen(v, w) for v in gens}
            for u in gens:
                for v in gens:
                    instances += 1
                    if alg.left_mul_gen(u, right_images[v]) != alg.right_mul_gen(v, left_images[u]):
                        failures.append({"u": u, "v": v, "w": {"beta": list(beta), "lambda": list(idx.lam), "sigma": list(idx.sigma)}})
    return {"r": r, "n": n, "instances": instances, "failures": failures, "pass": not failures}


# ---------------------------------------------------------------------------
# regression identities from the generator-map verification


def crosscheck_assignment(alg: Algebra) -> dict[str, Element]:
    """Merged assignment extended with the composite images the regression
    identities quote: formal inverses and the wrap-around reflection image."""
    assign = merged_assignment(alg)
    for i in range(1, alg.n):
        inv = alg.ts_inverse(i)
        assign[f"Ginv{i}"] = inv
        assign[f"TsInv{i}"] = inv
    assign["PhiTs0"] = evaluate(alg, phi_expressions(alg.r, alg.n)["Ts0"], assign)
    return assign


def crosscheck_identities(r: int, n: int) -> Presentation:
    """Labeled word identities that the generator maps rely on; all of them must
    evaluate to equalities under ``crosscheck_assignment``.  They exercise the
    inverse expansions, the rotation conjugations, and the wrap-around
    reflection image far more aggressively than the defining relations alone.
    Composite factors are quoted through their own symbols so each side stays
    a short word."""
    o = r
    one = FormalExpression.constant(o, 1)

    def gd(a: int, b: int) -> tuple[str, ...]:
        return tuple(f"g{i}" for i in range(a, b - 1, -1))

    def iga(a: int, b: int) -> tuple[str, ...]:
        return tuple(f"Ginv{i}" for i in range(a, b + 1))

    def igd(a: int, b: int) -> tuple[str, ...]:
        return tuple(f"Ginv{i}" for i in range(a, b - 1, -1))

    def tia(a: int, b: int) -> tuple[str, ...]:
        return tuple(f"TsInv{i}" for i in range(a, b + 1))

    xn = gd(n - 1, 1) + ("X1",) + tuple(f"g{i}" for i in range(1, n))
    inv_hat = igd(n - 1, 1) + iga(2, n - 1)
    rot = gd(n - 1, 1) + ("X1",)
    conj_form = ("X1^-1",) + gd(n - 1, 1) + iga(2, n - 1) + ("X1",)
    phi0 = ("PhiTs0",)
    x1h = tia(1, n - 1) + ("Trho",)
    tsd = tuple(f"Ts{i}" for i in range(n - 1, 0, -1))
    rels: list[Relation] = []
    fams: list[str] = []

    def add(family: str, note: str, lhs, rhs) -> None:
        if family not in fams:
            fams.append(family)
        left = lhs if isinstance(lhs, FormalExpression) else _w(o, *lhs)
        right = rhs if isinstance(rhs, FormalExpression) else _w(o, *rhs)
        rels.append(Relation(family, note, left, right))

    def img(i: int) -> tuple[str, ...]:
        return phi0 if i % n == 0 else (f"g{i % n}",)

    for i in range(n):
        add("rotation-conjugates-reflections", f"i={i}", rot + img(i), img(i - 1) + rot)
    add("wrap-reflection-defining", "",
        phi0, ("X1^-1",) + xn + inv_hat)
    add("wrap-reflection-pulled-left", "",
        phi0, ("X1^-1",) + gd(n - 1, 1) + ("X1",) + iga(2, n - 1))
    add("wrap-reflection-conjugated-form", "", phi0, conj_form)
    add("conjugation-chain-flip", "",
        gd(n - 1, 1) + iga(2, n - 1), iga(1, n - 2) + gd(n - 1, 1))
    add("rotation-wrap-twist", "",
        gd(n - 1, 1) + ("X1", "g1", "X1^-1") + iga(1, n - 1),
        ("X1^-1",) + gd(n - 1, 1) + ("X1",) + iga(2, n - 1))
    for i in range(2, n):
        add("rotation-shifts-mid-reflection", f"i={i}",
            gd(n - 1, 1) + ("X1", f"g{i}"), (f"g{i-1}",) + gd(n - 1, 1) + ("X1",))
    for j in range(2, n - 1):
        add("wrap-reflection-commutes-mid", f"j={j}",
            (f"g{j}",) + conj_form, conj_form + (f"g{j}",))
    if n >= 3:
        add("wrap-braid-low", "", ("g1",) + phi0 + ("g1",), phi0 + ("g1",) + phi0)
        add("wrap-braid-high", "",
            (f"g{n-1}",) + phi0 + (f"g{n-1}",), phi0 + (f"g{n-1}",) + phi0)
        add("wrap-braid-low-chain", "",
            ("g1", "X1^-1") + xn + inv_hat + ("g1",),
            ("g1", "X1^-1") + xn + ("Ginv1",) + igd(n - 1, 3) + ("Ginv2",) + iga(3, n - 1))
        add("wrap-braid-low-final", "",
            phi0 + ("g1",) + phi0,
            ("X1^-1",) + xn + ("Ginv1", "X1^-1", "g1", "X1") + igd(n - 1, 3) + iga(2, n - 1))
        add("wrap-braid-high-chain", "",
            (f"g{n-1}", "X1^-1") + xn + inv_hat + (f"g{n-1}",),
            ("X1^-1", f"g{n-1}") + xn + igd(n - 1, 1) + iga(2, n - 2))
        add("wrap-braid-high-final", "",
            phi0 + (f"g{n-1}",) + phi0,
            ("X1^-1", f"g{n-1}") + xn + gd(n - 2, 1) + iga(2, n - 2) + inv_hat)
        add("inverse-palindrome-flip", "",
            igd(n - 1, 1) + iga(2, n - 2), gd(n - 2, 1) + iga(2, n - 2) + inv_hat)
        add("inverse-palindrome-shift", "",
            (f"Ginv{n-1}",) + iga(1, n - 3), gd(n - 2, 1) + iga(2, n - 2) + iga(1, n - 1))
        add("inverse-palindrome-core", "",
            iga(1, n - 3), gd(n - 2, 1) + iga(2, n - 2) + iga(1, n - 2))
    add("lattice-twist-identity", "",
        ("g1", "X1^-1", "Ginv1"), ("X1^-1", "Ginv1", "X1^-1", "g1", "X1"))
    add("lattice-twist-collapse", "",
        ("Ginv1", "X1^-1", "Ginv1", "X1^-1", "g1", "X1", "g1"), ("X1^-1",))
    add("wrap-quadratic", "",
        _w(o, *(phi0 + phi0)),
        one + (_ebar_expr(o, r, "t", n, 1) * _w(o, *phi0)).scale(_qd(o)))
    add("lattice-braid-image", "",
        x1h + ("Ts1",) + x1h + ("Ts1",), ("Ts1",) + x1h + ("Ts1",) + x1h)
    add("rotation-squared-shift", "",
        ("Trho",) + tia(2, n - 1) + ("Trho", "Ts1"),
        tia(1, n - 2) + (f"Ts{n-1}", "Trho", "Trho"))
    add("inverse-chain-absorb", "",
        tia(1, n - 1) + tia(1, n - 2) + (f"Ts{n-1}",), tia(2, n - 1) + tia(1, n - 2))
    add("inverse-chain-flip", "",
        tia(1, n - 2) + tsd, tsd + tia(2, n - 1))
    for i in range(2, n):
        add("lattice-commutes-high", f"i={i}", (f"Ts{i}",) + x1h, x1h + (f"Ts{i}",))
        add("inverse-chain-step", f"i={i}",
            (f"Ts{i}",) + tia(1, n - 1), tia(1, n - 1) + (f"Ts{i-1}",))
        add("inverse-braid-step", f"i={i}",
            (f"Ts{i}", f"TsInv{i-1}", f"TsInv{i}"), (f"TsInv{i-1}", f"TsInv{i}", f"Ts{i-1}"))
    for j in range(1, n + 1):
        add("lattice-central-torus", f"j={j}", x1h + (f"t{j}",), (f"t{j}",) + x1h)
    gens = tuple(sorted({sym for rel in rels for sym in rel.lhs.symbols() | rel.rhs.symbols()}))
    return Presentation("crosscheck", r, n, gens, tuple(fams), tuple(rels))


def pro_p_parameters(alg: Algebra, beta: tuple[int, ...], i: int) -> ProPParameters:
    """The unit weight and averaged torus cocycle attached to a torus-reflection pair."""
    c_ts = alg.mul(alg.torus(beta), alg.e(i)).scale(Scalar.q_minus_q_inv(alg.cyc_order))
    return ProPParameters(q_ts=Scalar.one(alg.cyc_order), c_ts=c_ts)


def verify_pro_p_quadratic(alg: Algebra) -> dict:
    """The pro-p-style quadratic form of the basis, for every torus element and reflection."""
    from .weyl import compose

    instances = 0
    failures = []
    ident = tuple(range(1, alg.n + 1))
    zero = (0,) * alg.n
    for beta in product(range(alg.r), repeat=alg.n):
        t_idx = GroupIndex(beta, zero, ident)
        for i in range(alg.n):
            instances += 1
            ts = compose(t_idx, simple_reflection(i, alg.n), alg.r)
            x = alg.basis(ts)
            square = alg.mul(x, x)
            params = pro_p_parameters(alg, beta, i)
            rhs = alg.basis(compose(ts, ts, alg.r)) + alg.mul(params.c_ts, x)
            if square != rhs:
                failures.append({"beta": list(beta), "i": i})
    return {"r": alg.r, "n": alg.n, "instances": instances, "failures": failures, "pass": not failures}
