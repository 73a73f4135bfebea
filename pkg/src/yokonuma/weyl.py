"""Combinatorics of the extended affine Weyl group of type A and its framed version.

Elements are realized concretely in the semidirect product
``(Z/rZ)^n x Z^n  x| S_n`` as triples ``(beta, lam, sigma)``: a torus vector,
a translation vector, and a permutation in one-line notation (1-based images).
The affine simple reflections are ``s_0 .. s_{n-1}`` and ``rho`` is the
length-zero rotation; the translation lattice generators are ``X_1 .. X_n``.

Length is computed by a closed-form inversion count; its correctness contract
is equality with breadth-first search distance in the Cayley graph of the
affine Weyl group, which the test suite enforces.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import NamedTuple


class GroupIndex(NamedTuple):
    """A group element (beta, lam, sigma); the basis index of the algebra."""

    beta: tuple[int, ...]
    lam: tuple[int, ...]
    sigma: tuple[int, ...]


class WeylWord(NamedTuple):
    """A normal form rho^k s_{i_1} ... s_{i_m} for an extended affine Weyl element."""

    k: int
    word: tuple[int, ...]


def perm_inverse(sigma: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for pos, image in enumerate(sigma, start=1):
        inv[image - 1] = pos
    return tuple(inv)


def perm_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Composition a∘b acting on 1..n (b applied first)."""
    return tuple(a[b[i] - 1] for i in range(len(a)))


def perm_act(sigma: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """The place-permutation action: (sigma.v)_i = v_{sigma^{-1}(i)}."""
    inv = perm_inverse(sigma)
    return tuple(v[inv[i] - 1] for i in range(len(v)))


def identity(n: int) -> GroupIndex:
    zero = (0,) * n
    return GroupIndex(zero, zero, tuple(range(1, n + 1)))


def compose(a: GroupIndex, b: GroupIndex, r: int) -> GroupIndex:
    """Product in the semidirect product; permutations act by permuting places.

    >>> s1 = simple_reflection(1, 2)
    >>> compose(s1, s1, 1) == identity(2)
    True
    """
    n = len(a.sigma)
    if len(b.sigma) != n:
        raise ValueError(f"size mismatch: n={n} vs n={len(b.sigma)}")
    inv = perm_inverse(a.sigma)
    beta = tuple((a.beta[i] + b.beta[inv[i] - 1]) % r for i in range(n))
    lam = tuple(a.lam[i] + b.lam[inv[i] - 1] for i in range(n))
    return GroupIndex(beta, lam, perm_mul(a.sigma, b.sigma))


def inverse(a: GroupIndex, r: int) -> GroupIndex:
    # (t^b X^l s)^{-1} = t^{-s^{-1}.b} X^{-s^{-1}.l} s^{-1}, and (s^{-1}.v)_i = v_{s(i)}
    beta = tuple((-a.beta[a.sigma[i] - 1]) % r for i in range(len(a.sigma)))
    lam = tuple(-a.lam[a.sigma[i] - 1] for i in range(len(a.sigma)))
    return GroupIndex(beta, lam, perm_inverse(a.sigma))


@lru_cache(maxsize=None)
def simple_reflection(i: int, n: int) -> GroupIndex:
    """s_i for 0 <= i <= n-1; s_0 carries the translation part e_n - e_1."""
    if not 0 <= i <= n - 1:
        raise ValueError(f"reflection index out of range: {i} (n={n})")
    zero = (0,) * n
    if i == 0:
        lam = tuple(-1 if j == 0 else (1 if j == n - 1 else 0) for j in range(n))
        sigma = list(range(1, n + 1))
        sigma[0], sigma[n - 1] = sigma[n - 1], sigma[0]
        return GroupIndex(zero, lam, tuple(sigma))
    sigma = list(range(1, n + 1))
    sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
    return GroupIndex(zero, zero, tuple(sigma))


@lru_cache(maxsize=None)
def rho(n: int) -> GroupIndex:
    """The length-zero rotation: sigma(1) = n, sigma(j) = j-1, translation e_n."""
    zero = (0,) * n
    lam = tuple(0 if j < n - 1 else 1 for j in range(n))
    sigma = (n,) + tuple(range(1, n))
    return GroupIndex(zero, lam, sigma)


@lru_cache(maxsize=None)
def rho_inverse(n: int) -> GroupIndex:
    return inverse(rho(n), 1)


def torus_generator(j: int, n: int) -> GroupIndex:
    """t_j, 1 <= j <= n (t_0 is read as t_n by callers that need it)."""
    if not 1 <= j <= n:
        raise ValueError(f"torus index out of range: {j} (n={n})")
    zero = (0,) * n
    beta = tuple(1 if p == j - 1 else 0 for p in range(n))
    return GroupIndex(beta, zero, tuple(range(1, n + 1)))


def lattice_generator(j: int, n: int) -> GroupIndex:
    """X_j, 1 <= j <= n."""
    if not 1 <= j <= n:
        raise ValueError(f"lattice index out of range: {j} (n={n})")
    zero = (0,) * n
    lam = tuple(1 if p == j - 1 else 0 for p in range(n))
    return GroupIndex(zero, lam, tuple(range(1, n + 1)))


def generator(name: str, n: int) -> GroupIndex:
    """Named generator lookup: ``s0..s{n-1}``, ``rho``, ``rho_inv``, ``t1..tn``, ``X1..Xn``."""
    if name == "rho":
        return rho(n)
    if name == "rho_inv":
        return rho_inverse(n)
    if name.startswith("s") and name[1:].isdigit():
        return simple_reflection(int(name[1:]), n)
    if name.startswith("t") and name[1:].isdigit():
        return torus_generator(int(name[1:]), n)
    if name.startswith("X") and name[1:].isdigit():
        return lattice_generator(int(name[1:]), n)
    raise ValueError(f"unknown generator name: {name!r}")


@lru_cache(maxsize=None)
def _length(lam: tuple[int, ...], sigma: tuple[int, ...]) -> int:
    n = len(sigma)
    inv = perm_inverse(sigma)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            d = lam[i] - lam[j]
            if inv[i] > inv[j]:
                d += 1
            total += d if d >= 0 else -d
    return total


def length(w: GroupIndex) -> int:
    """Coxeter length of the affine-Weyl part; the torus part and rho powers add nothing.

    >>> length(rho(3))
    0
    >>> length(simple_reflection(0, 2))
    1
    """
    return _length(w.lam, w.sigma)


def rho_degree(w: GroupIndex) -> int:
    return sum(w.lam)


@lru_cache(maxsize=None)
def _rho_power(k: int, n: int) -> GroupIndex:
    acc = identity(n)
    step = rho(n) if k >= 0 else rho_inverse(n)
    for _ in range(abs(k)):
        acc = compose(acc, step, 1)
    return acc


@lru_cache(maxsize=None)
def _reduced_word(lam: tuple[int, ...], sigma: tuple[int, ...]) -> tuple[int, ...]:
    """Greedy left-descent reduced word for an affine-Weyl element (rho-degree zero)."""
    n = len(sigma)
    w = GroupIndex((0,) * n, lam, sigma)
    word: list[int] = []
    ell = _length(lam, sigma)
    while ell > 0:
        for i in range(n):
            cand = compose(simple_reflection(i, n), w, 1)
            ell_c = _length(cand.lam, cand.sigma)
            if ell_c < ell:
                word.append(i)
                w, ell = cand, ell_c
                break
        else:
            raise AssertionError("no descent found for a positive-length element")
    return tuple(word)


def reduced_word_of(w: GroupIndex) -> WeylWord:
    """Normal form rho^k s_{i_1}...s_{i_m}; the word is chosen by smallest descent.

    >>> reduced_word_of(lattice_generator(1, 2))
    WeylWord(k=1, word=(0,))
    """
    k = sum(w.lam)
    base = compose(_rho_power(-k, len(w.sigma)), GroupIndex(w.beta, w.lam, w.sigma), 1)
    return WeylWord(k, _reduced_word(base.lam, base.sigma))


def evaluate_word(beta: tuple[int, ...], word: WeylWord, n: int, r: int) -> GroupIndex:
    """Inverse of reduced_word_of: rebuild t^beta rho^k s_{i_1}...s_{i_m}."""
    acc = _rho_power(word.k, n)
    for i in word.word:
        acc = compose(acc, simple_reflection(i, n), 1)
    return GroupIndex(beta, acc.lam, acc.sigma)


@lru_cache(maxsize=None)
def all_reduced_words(lam: tuple[int, ...], sigma: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Every reduced word of an affine-Weyl element, in lexicographic order."""
    n = len(sigma)
    ell = _length(lam, sigma)
    if ell == 0:
        return ((),)
    out = []
    w = GroupIndex((0,) * n, lam, sigma)
    for i in range(n):
        cand = compose(simple_reflection(i, n), w, 1)
        if _length(cand.lam, cand.sigma) < ell:
            for tail in all_reduced_words(cand.lam, cand.sigma):
                out.append((i,) + tail)
    return tuple(out)


@lru_cache(maxsize=None)
def _bruhat_leq_aff(ylam, ysigma, wlam, wsigma) -> bool:
    ly = _length(ylam, ysigma)
    lw = _length(wlam, wsigma)
    if ly > lw:
        return False
    if (ylam, ysigma) == (wlam, wsigma):
        return True
    if ly == lw:
        return False
    n = len(ysigma)
    word = _reduced_word(wlam, wsigma)
    target = (ylam, ysigma)
    for positions in combinations(range(len(word)), ly):
        acc = identity(n)
        for p in positions:
            acc = compose(acc, simple_reflection(word[p], n), 1)
        if (acc.lam, acc.sigma) == target:
            return True
    return False


def bruhat_leq(y: GroupIndex, w: GroupIndex) -> bool:
    """Bruhat order on the extended affine Weyl group (torus parts are ignored).

    Elements with different rho-degrees are incomparable; otherwise the
    affine-Weyl parts are compared by the subword property on one reduced
    word of the larger element.
    """
    ky, kw = sum(y.lam), sum(w.lam)
    if ky != kw:
        return False
    n = len(y.sigma)
    y0 = compose(_rho_power(-ky, n), GroupIndex((0,) * n, y.lam, y.sigma), 1)
    w0 = compose(_rho_power(-kw, n), GroupIndex((0,) * n, w.lam, w.sigma), 1)
    return _bruhat_leq_aff(y0.lam, y0.sigma, w0.lam, w0.sigma)


@lru_cache(maxsize=None)
def affine_ball(n: int, radius: int) -> tuple[GroupIndex, ...]:
    """All affine-Weyl elements of length <= radius, in (length, word) order."""
    seen = {identity(n): 0}
    frontier = [identity(n)]
    for depth in range(1, radius + 1):
        nxt = []
        for w in frontier:
            for i in range(n):
                cand = compose(simple_reflection(i, n), w, 1)
                if cand not in seen:
                    seen[cand] = depth
                    nxt.append(cand)
        frontier = nxt
    elems = sorted(seen, key=lambda w: (seen[w], _reduced_word(w.lam, w.sigma)))
    return tuple(elems)


def enumerate_bounded(n: int, length_bound: int, rho_bound: int) -> list[GroupIndex]:
    """All rho^k w with |k| <= rho_bound, length(w) <= length_bound, each once.

    Ordered by k, then length, then lexicographic reduced word.

    >>> [w.sigma for w in enumerate_bounded(2, 1, 0)]
    [(1, 2), (2, 1), (2, 1)]
    """
    if n < 2:
        raise ValueError("need n >= 2")
    ball = affine_ball(n, length_bound)
    out = []
    for k in range(-rho_bound, rho_bound + 1):
        shift = _rho_power(k, n)
        for w in ball:
            out.append(compose(shift, w, 1))
    return out
