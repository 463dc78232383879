"""
Quantum elementary families and quantum Schubert/Grothendieck polynomials.

Families are indexed by ``(p, k)`` and vanish unless ``0 <= p <= k``:

* ``E`` -- coefficients of the characteristic polynomial of the tridiagonal
  matrix with diagonal ``x_i``, superdiagonal ``q_i`` and subdiagonal ``-1``;
* ``F`` (with ``bar``/``tilde`` variants) -- subset sums over ``I`` of size p;
* ``Ehat`` -- alternating binomial sums of ``F``;
* ``G`` -- alternating binomial sums of ``Ehat``.

The ``bar`` variant of a family is its specialization at ``q_k = 0``.

Quantization replaces a standard elementary monomial by the product of the
corresponding quantum family members.  Quantum Schubert polynomials use
``E``; quantum Grothendieck polynomials use ``Ehat``.

>>> str(quantum_grothendieck(Permutation.from_string("213")))
'(1-q1)*x1 + q1'
>>> str(quantum_e(2, 2))
'x1*x2 + q1'
"""

from __future__ import annotations

import threading
from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, List, Optional, Sequence

from .classical import (binom, elementary_coordinates, grothendieck,
                        product_of, schubert)
from .perm import Permutation
from .poly import Polynomial, q, x

_lock = threading.Lock()

ONE = Polynomial.constant(1)
ZERO = Polynomial()


def _valid(p: int, k: int) -> bool:
    return 0 <= p <= k


def _drop_qk(f: Polynomial, k: int) -> Polynomial:
    return f.specialize_q([k]) if k >= 1 else f


# ---------------------------------------------------------------------------
# E: quantum elementary polynomials

@lru_cache(maxsize=None)
def quantum_e(p: int, k: int) -> Polynomial:
    if not _valid(p, k):
        return ZERO
    if p == 0:
        return ONE
    return (quantum_e(p, k - 1) + x(k) * quantum_e(p - 1, k - 1)
            + q(k - 1) * quantum_e(p - 2, k - 2))


def gamma_matrix(k: int) -> List[List[Polynomial]]:
    """The k x k tridiagonal matrix whose characteristic data defines E."""
    mat = [[ZERO] * k for _ in range(k)]
    for i in range(k):
        mat[i][i] = x(i + 1)
        if i + 1 < k:
            mat[i][i + 1] = q(i + 1)
            mat[i + 1][i] = Polynomial.constant(-1)
    return mat


def _det(mat: List[List[Polynomial]]) -> Polynomial:
    """Leibniz expansion; only used on small matrices."""
    n = len(mat)
    total = ZERO
    for perm in permutations(range(n)):
        term = ONE
        for i, j in enumerate(perm):
            entry = mat[i][j]
            if not entry:
                term = ZERO
                break
            term = term * entry
        if term:
            inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
            total = total + (-term if inv % 2 else term)
    return total


def quantum_e_minors(p: int, k: int) -> Polynomial:
    """E via the sum of principal p x p minors (an independent route)."""
    if not _valid(p, k):
        return ZERO
    if p == 0:
        return ONE
    mat = gamma_matrix(k)
    total = ZERO
    for rows in combinations(range(k), p):
        total = total + _det([[mat[i][j] for j in rows] for i in rows])
    return total


# ---------------------------------------------------------------------------
# F, F-bar, F-tilde

@lru_cache(maxsize=None)
def _f_plain(p: int, k: int) -> Polynomial:
    if not _valid(p, k):
        return ZERO
    total = ZERO
    for subset in combinations(range(1, k + 1), p):
        members = set(subset)
        term = ONE
        for i in subset:
            term = term * (1 - x(i))
            if i + 1 not in members:
                term = term * (1 - q(i))
        total = total + term
    return total


@lru_cache(maxsize=None)
def _f_tilde(p: int, k: int) -> Polynomial:
    if not _valid(p, k):
        return ZERO
    total = ZERO
    for subset in combinations(range(1, k + 1), p):
        members = set(subset)
        term = ONE
        for i in subset:
            term = term * x(i)
            if i != 1 and i - 1 not in members:
                term = term * (1 - q(i - 1))
        total = total + term
    return total


def f_quantum(p: int, k: int, variant: str = "plain") -> Polynomial:
    if variant == "plain":
        return _f_plain(p, k)
    if variant == "bar":
        return _drop_qk(_f_plain(p, k), k)
    if variant == "tilde":
        return _f_tilde(p, k)
    raise ValueError(f"unknown variant {variant!r}")


# recurrences, kept separate from the definitions so they can be compared

@lru_cache(maxsize=None)
def f_bar_recurrence(p: int, k: int) -> Polynomial:
    if not _valid(p, k):
        return ZERO
    if p == 0:
        return ONE
    val = f_bar_recurrence(p, k - 1) + (1 - x(k)) * f_bar_recurrence(p - 1, k - 1)
    if k >= 2:
        val = val - q(k - 1) * (1 - x(k - 1)) * f_bar_recurrence(p - 1, k - 2)
    return val


def f_recurrence(p: int, k: int) -> Polynomial:
    if not _valid(p, k):
        return ZERO
    return f_bar_recurrence(p, k) - q(k) * (1 - x(k)) * f_bar_recurrence(p - 1, k - 1)


@lru_cache(maxsize=None)
def f_tilde_recurrence(p: int, k: int) -> Polynomial:
    if not _valid(p, k):
        return ZERO
    if p == 0:
        return ONE
    return (f_tilde_recurrence(p, k - 1) + x(k) * f_tilde_recurrence(p - 1, k - 1)
            - q(k - 1) * x(k) * f_tilde_recurrence(p - 1, k - 2))


def f_bar_from_tilde(p: int, k: int) -> Polynomial:
    """Rebuild F-bar from F-tilde by sending ``x^I`` to ``prod_{i not in I}(1-x_i)``."""
    if not _valid(p, k):
        return ZERO
    total = ZERO
    for xs, coeff in f_quantum(k - p, k, "tilde").split("x").items():
        if any(e > 1 for e in xs):
            raise ArithmeticError("F-tilde is expected to be square-free in x")
        term = coeff
        for i in range(1, k + 1):
            if i > len(xs) or not xs[i - 1]:
                term = term * (1 - x(i))
        total = total + term
    return total


# ---------------------------------------------------------------------------
# Ehat and E-bar

@lru_cache(maxsize=None)
def _hat_e_plain(p: int, k: int) -> Polynomial:
    if not _valid(p, k):
        return ZERO
    total = ZERO
    for i in range(p + 1):
        total = total + (-1) ** i * binom(k - i, p - i) * _f_plain(i, k)
    return total


def hat_e(p: int, k: int, variant: str = "plain") -> Polynomial:
    if variant == "plain":
        return _hat_e_plain(p, k)
    if variant == "bar":
        return _drop_qk(_hat_e_plain(p, k), k)
    raise ValueError(f"unknown variant {variant!r}")


def f_from_hat_e(p: int, k: int) -> Polynomial:
    """The inverse relation: same alternating sum with F and Ehat swapped."""
    total = ZERO
    for i in range(p + 1):
        total = total + (-1) ** i * binom(k - i, p - i) * hat_e(i, k)
    return total


@lru_cache(maxsize=None)
def e_bar_recurrence(p: int, k: int) -> Polynomial:
    if not _valid(p, k):
        return ZERO
    if p == 0:
        return ONE
    val = e_bar_recurrence(p, k - 1) + x(k) * e_bar_recurrence(p - 1, k - 1)
    if k >= 2:
        val = val + q(k - 1) * (1 - x(k - 1)) * (
            e_bar_recurrence(p - 1, k - 2) + e_bar_recurrence(p - 2, k - 2))
    return val


def hat_e_recurrence(p: int, k: int) -> Polynomial:
    """``Ehat_p^k = Ebar_p^k + q_k (1-x_k) Ebar_{p-1}^{k-1}``."""
    if not _valid(p, k):
        return ZERO
    return e_bar_recurrence(p, k) + q(k) * (1 - x(k)) * e_bar_recurrence(p - 1, k - 1)


def hat_e_recurrence_misprint(p: int, k: int) -> Polynomial:
    """Same as :func:`hat_e_recurrence` but with ``Ebar_p^{k-1}`` as first term.

    Kept only to document that this form disagrees with the definition.
    """
    if not _valid(p, k):
        return ZERO
    return e_bar_recurrence(p, k - 1) + q(k) * (1 - x(k)) * e_bar_recurrence(p - 1, k - 1)


# ---------------------------------------------------------------------------
# G and G-bar

@lru_cache(maxsize=None)
def _g_plain(p: int, k: int) -> Polynomial:
    if not _valid(p, k):
        return ZERO
    if p == 0:
        return ONE
    total = ZERO
    for i in range(p, k + 1):
        total = total + (-1) ** (i - p) * binom(i - 1, p - 1) * _hat_e_plain(i, k)
    return total


def g_quantum(p: int, k: int, variant: str = "plain") -> Polynomial:
    if variant == "plain":
        return _g_plain(p, k)
    if variant == "bar":
        return _drop_qk(_g_plain(p, k), k)
    raise ValueError(f"unknown variant {variant!r}")


def g_recurrence_from_bar(p: int, k: int) -> Polynomial:
    """``G_p^k = Gbar_p^k - q_k(1-x_k)(Gbar_p^{k-1} - Gbar_{p-1}^{k-1})`` for ``p >= 1``.

    At ``p = 0`` the right side is not 1, so ``G_0^k = 1`` is returned as is.
    """
    if p == 0 and k >= 0:
        return ONE
    gb = lambda a, b: g_quantum(a, b, "bar")  # noqa: E731
    return gb(p, k) - q(k) * (1 - x(k)) * (gb(p, k - 1) - gb(p - 1, k - 1))


@lru_cache(maxsize=None)
def g_bar_recurrence(p: int, k: int) -> Polynomial:
    if not _valid(p, k):
        return ZERO
    if p == 0:
        return ONE
    val = (1 - x(k)) * g_bar_recurrence(p, k - 1) + x(k) * g_bar_recurrence(p - 1, k - 1)
    # the q-correction starts at p = 2; at p = 1 it would involve G_0 = 1
    if k >= 2 and p >= 2:
        val = val - q(k - 1) * (1 - x(k - 1)) * (
            g_bar_recurrence(p - 1, k - 2) - g_bar_recurrence(p - 2, k - 2))
    return val


def g_difference_identity(p: int, k: int):
    """Both sides of ``G_p^k - G_{p-1}^{k-1} = (1-q_k)(1-x_k)(Gbar_p^{k-1} - Gbar_{p-1}^{k-1})``."""
    lhs = g_quantum(p, k) - g_quantum(p - 1, k - 1)
    rhs = (1 - q(k)) * (1 - x(k)) * (g_quantum(p, k - 1, "bar") - g_quantum(p - 1, k - 1, "bar"))
    return lhs, rhs


def g_one_closed_form(k: int) -> Polynomial:
    prod = 1 - q(k)
    for i in range(1, k + 1):
        prod = prod * (1 - x(i))
    return 1 - prod


# ---------------------------------------------------------------------------
# quantization maps

_QUANTUM_FAMILY = {
    "E": quantum_e,
    "e": _hat_e_plain,
    "f": _f_plain,
    "g": _g_plain,
}


def quantum_monomial(ps: Sequence[int], family: str) -> Polynomial:
    """Product ``prod_i Fam_{p_i}^i`` for ``family`` in {E, e (Ehat), f, g}."""
    return product_of(_QUANTUM_FAMILY[family], "quantum-" + family, ps)


def _quantize(f: Polynomial, basis: str, family: str, n: Optional[int]) -> Polynomial:
    coords = elementary_coordinates(f, basis, n)
    total: Dict = {}
    acc = ZERO
    for ps, c in coords.items():
        mono = quantum_monomial(ps, family)
        if c.is_constant():
            k = c.constant_term()
            for m, v in mono.items():
                total[m] = total.get(m, 0) + k * v
        else:
            acc = acc + c * mono
    return Polynomial(total) + acc


def quantize_cohomology(f: Polynomial, n: Optional[int] = None) -> Polynomial:
    """The map sending ``e_{p1...}`` to ``E_{p1...}``."""
    return _quantize(f, "e", "E", n)


def quantize_k(f: Polynomial, route: str = "e", n: Optional[int] = None) -> Polynomial:
    """The map sending ``e_{p1...}`` to ``Ehat_{p1...}``, computed via ``route``.

    Route ``f`` (resp. ``g``) expands in the ``f`` (``g``) monomial basis and
    substitutes ``F`` (``G``) products; all routes give the same map.
    """
    if route not in ("e", "f", "g"):
        raise ValueError(f"unknown route {route!r}")
    return _quantize(f, route, route, n)


_qmemo: Dict = {}


def _memo_get(key, fn):
    hit = _qmemo.get(key)
    if hit is None:
        hit = fn()
        with _lock:
            _qmemo[key] = hit
    return hit


def quantum_schubert(w: Permutation) -> Polynomial:
    return _memo_get(("qs", w), lambda: quantize_cohomology(schubert(w), max(len(w), 2)))


def quantum_grothendieck(w: Permutation, route: str = "e") -> Polynomial:
    return _memo_get(("qg", route, w),
                     lambda: quantize_k(grothendieck(w), route, max(len(w), 2)))


def ideal_generators(n: int, which: str = "qh") -> List[Polynomial]:
    if which == "qh":
        return [quantum_e(i, n) for i in range(1, n + 1)]
    if which == "qk":
        return [hat_e(i, n, "bar") for i in range(1, n + 1)]
    raise ValueError(f"unknown ideal {which!r}")


__all__ = [
    "quantum_e", "quantum_e_minors", "gamma_matrix", "f_quantum",
    "f_recurrence", "f_bar_recurrence", "f_tilde_recurrence", "f_bar_from_tilde",
    "hat_e", "f_from_hat_e", "e_bar_recurrence", "hat_e_recurrence",
    "hat_e_recurrence_misprint", "g_quantum", "g_recurrence_from_bar",
    "g_bar_recurrence", "g_difference_identity", "g_one_closed_form",
    "quantum_monomial", "quantize_cohomology", "quantize_k",
    "quantum_schubert", "quantum_grothendieck", "ideal_generators",
]
