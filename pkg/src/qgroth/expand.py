"""
Expansions in the quantum Schubert and quantum Grothendieck bases, and the
structure constants read off from expansions of products.

``expand_qschubert`` peels off the part of lowest q-degree; each piece
``q^d F_d`` is expanded classically and ``q^d c 𝔖^q_w`` subtracted.
``expand_qgrothendieck`` peels off the lowest graded component (with
``deg q_i = 2``), expands it in quantum Schubert polynomials and subtracts the
matching quantum Grothendieck polynomials.  Outside the span of the basis the
second loop never ends, so it is bounded by an iteration guard.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .classical import Expansion, default_guard, expand_schubert
from .exceptions import IterationGuard
from .perm import Permutation
from .poly import Polynomial, graded_components, lowest_component, mono_degree
from .quantum import quantum_grothendieck, quantum_schubert


def _q_degree(m) -> int:
    return sum(m[1])


def _lowest_q_part(f: Polynomial) -> Polynomial:
    low = min(_q_degree(m) for m in f.monomials())
    return Polynomial({m: c for m, c in f.items() if _q_degree(m) == low})


def _sort_entries(entries):
    # stable: emission order within equal keys
    return sorted(entries, key=lambda e: max(e[0].min_degree(), 0) + e[1].length())


def _peel_qschubert(f0: Polynomial):
    """Expand a part of constant q-degree; yields ``(q-coefficient, w)``."""
    out = []
    for qs, fx in sorted(f0.split("q").items()):
        qmono = Polynomial.monomial(((), qs, ()))
        for c, w in expand_schubert(fx).entries:
            out.append((qmono * c, w))
    return out


def expand_qschubert(f: Polynomial, guard: Optional[int] = None) -> Expansion:
    if not f.family_free("y"):
        raise ValueError("expand_qschubert expects a polynomial in x and q")
    guard = default_guard(f) if guard is None else guard
    entries = []
    steps = 0
    while f:
        if steps >= guard:
            raise IterationGuard(f"expand_qschubert exceeded {guard} iterations",
                                 Expansion("qschubert", entries), f)
        steps += 1
        for c, w in _peel_qschubert(_lowest_q_part(f)):
            entries.append((c, w))
            f = f - c * quantum_schubert(w)
    return Expansion("qschubert", entries).merged()


@dataclass
class QGrothendieckExpansion(Expansion):
    """Expansion that also remembers which iteration produced each entry."""

    blocks: List[List[Tuple[Polynomial, Permutation]]] = field(default_factory=list)


def expand_qgrothendieck(f: Polynomial, guard: Optional[int] = None) -> QGrothendieckExpansion:
    if not f.family_free("y"):
        raise ValueError("expand_qgrothendieck expects a polynomial in x and q")
    guard = default_guard(f) if guard is None else guard
    entries, blocks = [], []
    steps = 0
    while f:
        if steps >= guard:
            raise IterationGuard(f"expand_qgrothendieck exceeded {guard} iterations",
                                 Expansion("qgrothendieck", entries), f)
        steps += 1
        low = lowest_component(f)
        block = expand_qschubert(low).entries
        blocks.append(block)
        for c, w in block:
            entries.append((c, w))
            f = f - c * quantum_grothendieck(w)
    merged = Expansion("qgrothendieck", entries).merged()
    return QGrothendieckExpansion("qgrothendieck", _sort_entries(merged.entries), blocks)


# ---------------------------------------------------------------------------
# structure constants

CONJECTURAL_NOTE = ("conjectural: assumes quantum Grothendieck polynomials "
                    "represent quantum K-theory Schubert classes")


@dataclass
class InvariantTable:
    u: Permutation
    v: Permutation
    values: Dict[Tuple[Permutation, Tuple[int, ...]], int]
    conjectural: bool = True
    note: str = CONJECTURAL_NOTE

    def __getitem__(self, key):
        w, d = key
        return self.values.get((w, _trim(d)), 0)

    def rows(self):
        return sorted(self.values.items(),
                      key=lambda kv: (sum(kv[0][1]), kv[0][1], kv[0][0].length(), kv[0][0]))


def _trim(d) -> Tuple[int, ...]:
    d = list(d)
    while d and d[-1] == 0:
        d.pop()
    return tuple(d)


def gw_invariants(u: Permutation, v: Permutation, guard: Optional[int] = None) -> InvariantTable:
    """Coefficients ``N_{uv}^w(d)`` of ``q^d`` in the expansion of the product."""
    prod = quantum_grothendieck(u) * quantum_grothendieck(v)
    exp = expand_qgrothendieck(prod, guard)
    values = {}
    for c, w in exp.entries:
        for m, n in c.items():
            values[(w, m[1])] = values.get((w, m[1]), 0) + n
    return InvariantTable(u, v, {k: n for k, n in values.items() if n})


@dataclass
class SignReport:
    passed: bool
    literal_passed: bool
    failures: List[Tuple[Permutation, Tuple[int, ...], int]]
    literal_failures: List[Tuple[Permutation, Tuple[int, ...], int]]
    reading: str = "graded"


def sign_alternation(table: InvariantTable, u: Optional[Permutation] = None,
                     v: Optional[Permutation] = None) -> SignReport:
    """Check ``(-1)^{e} N_{uv}^w(d) >= 0`` for each entry.

    The default (graded) reading uses ``e = 2|d| + l(w) - l(u) - l(v)``, i.e.
    the q-degree counted with ``deg q_i = 2``; the literal reading with
    ``|d|`` in place of ``2|d|`` is reported alongside.
    """
    u = table.u if u is None else u
    v = table.v if v is None else v
    base = u.length() + v.length()
    graded, literal = [], []
    for (w, d), n in table.values.items():
        if (-1) ** (2 * sum(d) + w.length() - base) * n < 0:
            graded.append((w, d, n))
        if (-1) ** (sum(d) + w.length() - base) * n < 0:
            literal.append((w, d, n))
    return SignReport(not graded, not literal, graded, literal)


__all__ = [
    "expand_qschubert", "expand_qgrothendieck", "QGrothendieckExpansion",
    "gw_invariants", "InvariantTable", "sign_alternation", "SignReport",
]
