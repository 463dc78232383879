"""
Double polynomials in two alphabets ``x`` and ``y``.

The top classes are explicit products; every other double polynomial comes
from applying divided differences (or isobaric operators) in ``x`` only, so
the ``y`` variables ride along as constants.  Unlike the single polynomials
they depend on ``n``.

>>> from .perm import longest
>>> str(double_grothendieck(longest(2), 2))
'-x1*y1 + x1 + y1'
>>> str(qd_grothendieck(longest(2), 2))
'-(1-q1)*x1*y1 + (1-q1)*x1 + (1-q1)*y1 + q1'
"""

from __future__ import annotations

import threading
from typing import Dict, Tuple

from .classical import apply_perm, dual_grothendieck, grothendieck, schubert
from .perm import Permutation, all_perms, longest
from .poly import Polynomial, x, y
from .quantum import f_quantum, quantum_e, quantum_grothendieck, quantum_schubert

ONE = Polynomial.constant(1)

_lock = threading.Lock()
_memo: Dict[Tuple[str, Permutation, int], Polynomial] = {}


def _check(w: Permutation, n: int):
    if len(w) > n:
        raise ValueError(f"{w} is not in S_{n}")


def _top(kind: str, n: int) -> Polynomial:
    out = ONE
    if kind == "grothendieck":
        for i in range(1, n):
            for j in range(1, n - i + 1):
                out = out * (x(i) + y(j) - x(i) * y(j))
    elif kind == "qschubert":
        for i in range(1, n):
            xi = x(n - i)
            out = out * sum((xi ** (i - j) * quantum_e(j, i).swap_xy()
                             for j in range(i + 1)), Polynomial())
    elif kind == "qgrothendieck":
        for i in range(1, n):
            one_minus = 1 - x(n - i)
            factor = ONE
            for j in range(1, i + 1):
                factor = factor + (-1) ** j * one_minus ** j * f_quantum(j, i).swap_xy()
            out = out * factor
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return out


def _double(kind: str, w: Permutation, n: int) -> Polynomial:
    _check(w, n)
    key = (kind, w, n)
    hit = _memo.get(key)
    if hit is None:
        op = "partial" if kind == "qschubert" else "pi"
        hit = apply_perm(w.inverse() * longest(n), _top(kind, n), op)
        with _lock:
            _memo[key] = hit
    return hit


def double_grothendieck(w: Permutation, n: int) -> Polynomial:
    return _double("grothendieck", w, n)


def qd_schubert(w: Permutation, n: int) -> Polynomial:
    """Quantum double Schubert polynomial; ``q = 0`` gives the classical one."""
    return _double("qschubert", w, n)


def qd_grothendieck(w: Permutation, n: int) -> Polynomial:
    """Quantum double Grothendieck polynomial; ``q = 0`` gives ``double_grothendieck``."""
    return _double("qgrothendieck", w, n)


def cauchy_sides(n: int, kind: str) -> Tuple[Polynomial, Polynomial]:
    """Both sides of the Cauchy identity for the top class of ``S_n``."""
    w0 = longest(n)
    if kind == "grothendieck_classical":
        lhs = double_grothendieck(w0, n)
        left, right = (lambda w: dual_grothendieck(w, n)), grothendieck
    elif kind == "qschubert":
        lhs = qd_schubert(w0, n)
        left, right = schubert, quantum_schubert
    elif kind == "qgrothendieck":
        lhs = qd_grothendieck(w0, n)
        left, right = (lambda w: dual_grothendieck(w, n)), quantum_grothendieck
    else:
        raise ValueError(f"unknown kind {kind!r}")
    rhs = Polynomial()
    for w in all_perms(n):
        rhs = rhs + left(w) * right(w * w0).swap_xy()
    return lhs, rhs


def cauchy_check(n: int, kind: str) -> bool:
    if n < 2:
        raise ValueError("need n >= 2")
    lhs, rhs = cauchy_sides(n, kind)
    return lhs == rhs


def recover_qpoly(w: Permutation, n: int, kind: str = "grothendieck") -> Polynomial:
    """Single quantum polynomial from the double one of ``w^-1``, via ``x <-> y`` and ``y = 0``."""
    builder = {"grothendieck": qd_grothendieck, "schubert": qd_schubert}[kind]
    swapped = builder(w.inverse(), n).swap_xy()
    return Polynomial({m: c for m, c in swapped.items() if not m[2]})


def pi_indicator(w: Permutation, v: Permutation) -> bool:
    """Whether ``pi_w`` sends ``G_v`` to 1."""
    return apply_perm(w, grothendieck(v), "pi") == ONE


__all__ = [
    "double_grothendieck", "qd_schubert", "qd_grothendieck", "cauchy_check",
    "cauchy_sides", "recover_qpoly", "pi_indicator",
]
