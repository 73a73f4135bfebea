"""Root-of-unity Vandermonde data and the skein-style third presentation.

The r x r Vandermonde matrix on the nodes zeta, zeta^2, ..., zeta^r gives a
determinant, an adjugate, and row polynomials F_i; scaled by the inverse
determinant, F_c evaluated on a torus generator is the spectral projector
onto its zeta^c eigenvalue.  The skein generator images live inside the
standard kernel: a reflection plus a torus correction built from projector
pairs.  Triangularity of the resulting basis against the Bruhat order is
checked degreewise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .algebra import Algebra, Element, algebra, index_to_json
from .scalars import Cyc, Scalar
from .weyl import GroupIndex, bruhat_leq, enumerate_bounded, reduced_word_of


@dataclass(frozen=True)
class VandermondeData:
    r: int
    matrix: tuple[tuple[Cyc, ...], ...]
    delta: Cyc
    adjugate: tuple[tuple[Cyc, ...], ...]
    f_coeffs: tuple[tuple[Cyc, ...], ...]


def _det(rows: tuple[tuple[Cyc, ...], ...], r: int) -> Cyc:
    m = len(rows)
    if m == 0:
        return Cyc.one(r)
    if m == 1:
        return rows[0][0]
    total = Cyc.zero(r)
    for j in range(m):
        if rows[0][j].is_zero():
            continue
        minor = tuple(tuple(row[c] for c in range(m) if c != j) for row in rows[1:])
        part = rows[0][j] * _det(minor, r)
        total = total + (part if j % 2 == 0 else -part)
    return total


@lru_cache(maxsize=None)
def vandermonde(r: int) -> VandermondeData:
    """Exact matrix, determinant, adjugate, and row polynomial coefficients.

    >>> vandermonde(2).delta == Cyc.from_rational(2, 2)
    True
    """
    if r < 1:
        raise ValueError("order must be positive")
    if r > 8:
        raise ValueError("adjugate by cofactor expansion is capped at r <= 8")
    matrix = tuple(
        tuple(Cyc.zeta_power(r, j * (i - 1)) for j in range(1, r + 1)) for i in range(1, r + 1)
    )
    delta = _det(matrix, r)
    adjugate = []
    for i in range(1, r + 1):
        row = []
        for j in range(1, r + 1):
            minor = tuple(
                tuple(matrix[p][q] for q in range(r) if q != i - 1)
                for p in range(r)
                if p != j - 1
            )
            cof = _det(minor, r)
            row.append(cof if (i + j) % 2 == 0 else -cof)
        adjugate.append(tuple(row))
    return VandermondeData(r, matrix, delta, tuple(adjugate), tuple(adjugate))


def f_eval(alg: Algebra, c: int, l: int) -> Element:
    """The row polynomial F_c evaluated on the torus generator t_l."""
    vd = vandermonde(alg.r)
    if not 1 <= c <= alg.r:
        raise ValueError(f"row index out of range: {c}")
    l = alg.n if l == 0 else l
    acc = alg.zero()
    for m, coeff in enumerate(vd.f_coeffs[c - 1]):
        if not coeff.is_zero():
            beta = tuple(m if p == l - 1 else 0 for p in range(alg.n))
            acc = acc + alg.torus(beta).scale(Scalar.from_cyc(coeff))
    return acc


def spectral_projector(alg: Algebra, c: int, l: int) -> Element:
    """Delta^{-1} F_c(t_l): the projector onto the zeta^c eigenvalue of t_l."""
    vd = vandermonde(alg.r)
    return f_eval(alg, c, l).scale_cyc(vd.delta.invert())


def skein_correction(alg: Algebra, i: int) -> Element:
    """Delta^{-2} (q - q^{-1}) sum over projector pairs on the strands of s_i."""
    vd = vandermonde(alg.r)
    l1, l2 = (alg.n, 1) if i == 0 else (i, i + 1)
    acc = alg.zero()
    for c1 in range(1, alg.r + 1):
        for c2 in range(c1 + 1, alg.r + 1):
            acc = acc + alg.mul(f_eval(alg, c1, l1), f_eval(alg, c2, l2))
    inv2 = vd.delta.invert()
    inv2 = inv2 * inv2
    return acc.scale_cyc(inv2).scale(Scalar.q_minus_q_inv(alg.cyc_order))


@lru_cache(maxsize=None)
def _psi_c_cached(r: int, n: int, cyc_order: int) -> dict[str, Element]:
    alg = algebra(r, n, cyc_order)
    assign: dict[str, Element] = {}
    for j in range(1, n + 1):
        assign[f"w{j}"] = alg.t(j)
    for i in range(n):
        assign[f"hs{i}"] = alg.s(i) + skein_correction(alg, i)
    assign["hrho"] = alg.rho_basis(1)
    assign["hrho^-1"] = alg.rho_basis(-1)
    return assign


def psi_c_assignment(alg: Algebra) -> dict[str, Element]:
    """Images of the skein presentation generators inside the standard kernel."""
    return _psi_c_cached(alg.r, alg.n, alg.cyc_order)


def verify_phi_psi_identity(alg: Algebra) -> dict:
    """Check that subtracting the correction from each skein image recovers the reflection."""
    assign = psi_c_assignment(alg)
    results = []
    ok = True
    for i in range(alg.n):
        good = assign[f"hs{i}"] - skein_correction(alg, i) == alg.s(i)
        results.append({"generator": f"hs{i}", "pass": good})
        ok = ok and good
    for j in range(1, alg.n + 1):
        good = assign[f"w{j}"] == alg.t(j)
        results.append({"generator": f"w{j}", "pass": good})
        ok = ok and good
    for name, elem in (("hrho", alg.rho_basis(1)), ("hrho^-1", alg.rho_basis(-1))):
        good = assign[name] == elem
        results.append({"generator": name, "pass": good})
        ok = ok and good
    return {"pass": ok, "results": results}


def h_basis_element(alg: Algebra, alpha: tuple[int, ...], w: GroupIndex) -> Element:
    """t^alpha times the product of skein images along the normal form of w."""
    assign = psi_c_assignment(alg)
    word = reduced_word_of(w)
    acc = alg.mul(alg.torus(alpha), alg.rho_basis(word.k))
    for i in word.word:
        acc = alg.mul(acc, assign[f"hs{i}"])
    return acc


def triangularity_check(alg: Algebra, length_bound: int, rho_bound: int = 1) -> dict:
    """Leading-term and Bruhat-lower-order check for the skein basis expansion."""
    instances = 0
    failures = []
    one = Scalar.one(alg.cyc_order)
    for w in enumerate_bounded(alg.n, length_bound, rho_bound):
        for alpha in product(range(alg.r), repeat=alg.n):
            instances += 1
            x = h_basis_element(alg, alpha, w)
            lead = GroupIndex(alpha, w.lam, w.sigma)
            bad = None
            if x.terms.get(lead) != one:
                bad = "leading coefficient is not one"
            else:
                for idx in x.terms:
                    if idx == lead:
                        continue
                    y = GroupIndex((0,) * alg.n, idx.lam, idx.sigma)
                    if (idx.lam, idx.sigma) == (w.lam, w.sigma) or not bruhat_leq(y, w):
                        bad = f"term {index_to_json(idx)} is not strictly lower"
                        break
            if bad is not None:
                failures.append(
                    {"alpha": list(alpha), "w": index_to_json(w), "reason": bad}
                )
    return {"instances": instances, "failures": failures, "pass": not failures}


def vandermonde_to_json(vd: VandermondeData) -> dict:
    def cyc_json(c: Cyc) -> list[str]:
        return [str(x) for x in c.coeffs]

    return {
        "r": vd.r,
        "matrix": [[cyc_json(c) for c in row] for row in vd.matrix],
        "delta": cyc_json(vd.delta),
        "adjugate": [[cyc_json(c) for c in row] for row in vd.adjugate],
        "f": [[cyc_json(c) for c in row] for row in vd.f_coeffs],
    }
