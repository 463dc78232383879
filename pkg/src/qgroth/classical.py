"""
Classical Schubert and Grothendieck polynomials.

Divided differences ``d_i f = (f - s_i f) / (x_i - x_{i+1})`` and the isobaric
operators ``pi_i f = f + (1 - x_i) d_i f`` are computed monomial by monomial.
Schubert and Grothendieck polynomials are generated top-down from the
staircase monomial, one operator per step, and memoized.

Also here: the elementary families ``e``, ``f``, ``g``, dual Grothendieck
polynomials, classical basis expansions and coordinates in the standard
elementary monomial bases of ``L_n``.

>>> str(grothendieck(Permutation.from_string("132")))
'-x1*x2 + x1 + x2'
>>> [(str(c), str(w)) for c, w in expand_grothendieck(x(1) + x(2)).entries]
[('1', '132'), ('1', '231')]
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .exceptions import IterationGuard, NotInLn
from .perm import Permutation, all_perms, bruhat_leq, cycle, longest
from .poly import (FAMILIES, Polynomial, graded_components, lex_min_x_monomial,
                   lowest_component, x)

_lock = threading.Lock()


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero unless ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


# ---------------------------------------------------------------------------
# operators

def _dd_terms(terms, i: int, j: int):
    """Divided difference ``d_i`` acting on family slot ``j``; yields (m, c)."""
    for m, c in terms:
        exps = list(m[j])
        if len(exps) < i + 1:
            exps += [0] * (i + 1 - len(exps))
        a, b = exps[i - 1], exps[i]
        if a == b:
            continue
        if a > b:
            lo, hi, sign = b, a, 1
        else:
            lo, hi, sign = a, b, -1
        # (x^hi y^lo - x^lo y^hi)/(x - y) = sum_{t=0}^{hi-lo-1} x^{hi-1-t} y^{lo+t}
        for t in range(hi - lo):
            e = list(exps)
            e[i - 1] = hi - 1 - t
            e[i] = lo + t
            while e and e[-1] == 0:
                e.pop()
            parts = list(m)
            parts[j] = tuple(e)
            yield tuple(parts), sign * c


def divided_diff(i: int, f: Polynomial, family: str = "x") -> Polynomial:
    if i < 1:
        raise ValueError("operator index must be >= 1")
    j = FAMILIES.index(family)
    out: Dict = {}
    for m, c in _dd_terms(f.items(), i, j):
        out[m] = out.get(m, 0) + c
    return Polynomial(out)


def isobaric_diff(i: int, f: Polynomial, family: str = "x") -> Polynomial:
    d = divided_diff(i, f, family)
    var = x(i) if family == "x" else Polynomial.monomial(
        tuple(((0,) * (i - 1) + (1,)) if k == FAMILIES.index(family) else () for k in range(3)))
    return f + d - var * d


def apply_word(word: Sequence[int], f: Polynomial, kind: str = "partial",
               family: str = "x") -> Polynomial:
    """Apply ``op_{i1} op_{i2} ... op_{il}`` to ``f`` (rightmost letter first)."""
    op = {"partial": divided_diff, "pi": isobaric_diff}[kind]
    for i in reversed(list(word)):
        f = op(i, f, family)
    return f


def apply_perm(w: Permutation, f: Polynomial, kind: str = "partial",
               family: str = "x") -> Polynomial:
    """``d_w`` or ``pi_w`` via a reduced word of ``w``."""
    return apply_word(w.reduced_word(), f, kind, family)


# ---------------------------------------------------------------------------
# Schubert and Grothendieck polynomials

def staircase(n: int, family: str = "x") -> Polynomial:
    """``x1^(n-1) x2^(n-2) ... x_{n-1}``."""
    exps = tuple(range(n - 1, 0, -1))
    parts = [(), (), ()]
    parts[FAMILIES.index(family)] = exps
    return Polynomial.monomial(tuple(parts))


_memo: Dict[Tuple[str, Permutation], Polynomial] = {}


def _topdown(kind: str, w: Permutation) -> Polynomial:
    key = (kind, w)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    n = len(w)
    # iterative descent towards w0 to avoid deep recursion
    path = []
    v = w
    while (kind, v) not in _memo:
        word = v.one_line(max(n, len(v)))
        asc = next((i for i in range(1, len(word)) if word[i - 1] < word[i]), None)
        if asc is None:
            base = staircase(len(word))
            with _lock:
                _memo[(kind, v)] = base
            break
        path.append((v, asc))
        v = v.swap(asc, asc + 1)
    op = divided_diff if kind == "schubert" else isobaric_diff
    val = _memo[(kind, v)]
    for u, i in reversed(path):
        val = op(i, val)
        with _lock:
            _memo[(kind, u)] = val
    return _memo[key]


def schubert(w: Permutation) -> Polynomial:
    return _topdown("schubert", w)


def grothendieck(w: Permutation) -> Polynomial:
    return _topdown("grothendieck", w)


# ---------------------------------------------------------------------------
# elementary families

@lru_cache(maxsize=None)
def elem_e(p: int, k: int) -> Polynomial:
    if not 0 <= p <= k:
        return Polynomial()
    if p == 0:
        return Polynomial.constant(1)
    return elem_e(p, k - 1) + x(k) * elem_e(p - 1, k - 1)


@lru_cache(maxsize=None)
def elem_f(p: int, k: int) -> Polynomial:
    """``e_p(1-x1, ..., 1-xk)``."""
    if not 0 <= p <= k:
        return Polynomial()
    if p == 0:
        return Polynomial.constant(1)
    return elem_f(p, k - 1) + (1 - x(k)) * elem_f(p - 1, k - 1)


@lru_cache(maxsize=None)
def elem_g(p: int, k: int) -> Polynomial:
    if not 0 <= p <= k:
        return Polynomial()
    if p == 0:
        return Polynomial.constant(1)
    total = Polynomial()
    for i in range(p, k + 1):
        total = total + (-1) ** (i - p) * binom(i - 1, p - 1) * elem_e(i, k)
    return total


def elem_family(p: int, k: int, kind: str = "e") -> Polynomial:
    return {"e": elem_e, "f": elem_f, "g": elem_g}[kind](p, k)


def dual_grothendieck(w: Permutation, n: int) -> Polynomial:
    total = Polynomial()
    lw = w.length()
    for v in all_perms(n):
        if bruhat_leq(w, v):
            total = total + (-1) ** (v.length() - lw) * grothendieck(v)
    return total


# ---------------------------------------------------------------------------
# expansions

@dataclass
class Expansion:
    """A list of ``(coefficient, permutation)`` pairs in a named basis."""

    basis: str
    entries: List[Tuple[Polynomial, Permutation]] = field(default_factory=list)

    def to_dict(self) -> Dict[Permutation, Polynomial]:
        out: Dict[Permutation, Polynomial] = {}
        for c, w in self.entries:
            out[w] = out.get(w, Polynomial()) + c
        return {w: c for w, c in out.items() if c}

    def resum(self) -> Polynomial:
        basis_fn = basis_function(self.basis)
        total = Polynomial()
        for c, w in self.entries:
            total = total + c * basis_fn(w)
        return total

    def merged(self) -> "Expansion":
        """Combine repeated permutations, keeping first-appearance order."""
        d = self.to_dict()
        seen, entries = set(), []
        for _, w in self.entries:
            if w in d and w not in seen:
                seen.add(w)
                entries.append((d[w], w))
        return Expansion(self.basis, entries)

    def to_json(self, N: Optional[int] = None) -> dict:
        return {"basis": self.basis, "entries": [
            {"coeff": c.to_json(), "perm": w.to_string(N)} for c, w in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> "Expansion":
        return cls(data["basis"], [(Polynomial.from_json(e["coeff"]),
                                    Permutation.from_string(e["perm"]))
                                   for e in data["entries"]])

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def basis_function(name: str):
    if name == "schubert":
        return schubert
    if name == "grothendieck":
        return grothendieck
    from . import quantum
    return {"qschubert": quantum.quantum_schubert,
            "qgrothendieck": quantum.quantum_grothendieck}[name]


def _require_x_only(f: Polynomial, what: str):
    if not (f.family_free("q") and f.family_free("y")):
        raise ValueError(f"{what} expects a polynomial in x only")


def expand_schubert(f: Polynomial) -> Expansion:
    """Greedy expansion in Schubert polynomials by lex-minimal monomials."""
    _require_x_only(f, "expand_schubert")
    entries = []
    while f:
        m, c = lex_min_x_monomial(f)
        w = Permutation.from_code(m[0])
        entries.append((Polynomial.constant(c), w))
        f = f - c * schubert(w)
    return Expansion("schubert", entries)


def default_guard(f: Polynomial) -> int:
    env = os.environ.get("QGROTH_GUARD")
    if env:
        return int(env)
    return 1 + max(f.degree(), 0)


def expand_grothendieck(f: Polynomial, guard: Optional[int] = None) -> Expansion:
    """Expansion in Grothendieck polynomials, peeling lowest components."""
    _require_x_only(f, "expand_grothendieck")
    guard = default_guard(f) if guard is None else guard
    entries = []
    steps = 0
    while f:
        if steps >= guard:
            raise IterationGuard(f"expand_grothendieck exceeded {guard} iterations",
                                 Expansion("grothendieck", entries), f)
        steps += 1
        low = lowest_component(f)
        for c, w in expand_schubert(low).entries:
            entries.append((c, w))
            f = f - c * grothendieck(w)
    return Expansion("grothendieck", entries).merged()


# ---------------------------------------------------------------------------
# the staircase span L_n and its elementary monomial bases

def staircase_monomials(n: int) -> List[Tuple[int, ...]]:
    """Trimmed exponent tuples ``a`` with ``a_j <= n - j``."""
    out = []
    for a in _cartesian(*[range(n - j + 1) for j in range(1, n)]):
        a = list(a)
        while a and a[-1] == 0:
            a.pop()
        out.append(tuple(a))
    return out


def in_ln(f: Polynomial, n: int) -> bool:
    for m in f.monomials():
        xs = m[0]
        if any(e > n - j for j, e in enumerate(xs, start=1)):
            return False
    return True


def minimal_n(f: Polynomial) -> int:
    """Least ``n`` with ``f`` in ``L_n`` (in the x variables)."""
    n = 1
    for m in f.monomials():
        for j, e in enumerate(m[0], start=1):
            if e:
                n = max(n, j + e)
    return n


def elementary_indices(n: int) -> List[Tuple[int, ...]]:
    """Index tuples ``(p1, ..., p_{n-1})`` with ``0 <= p_i <= i``."""
    return [tuple(p) for p in _cartesian(*[range(i + 1) for i in range(1, n)])]


_BASIS_FAMILY = {"e": elem_e, "f": elem_f, "g": elem_g}


def _trim_index(ps: Sequence[int]) -> Tuple[int, ...]:
    ps = list(ps)
    while ps and ps[-1] == 0:
        ps.pop()
    return tuple(ps)


_prod_cache: Dict[Tuple, Polynomial] = {}


def product_of(family, tag: str, ps: Sequence[int]) -> Polynomial:
    """``prod_i family(ps[i-1], i)``, cached by prefix."""
    ps = _trim_index(ps)
    key = (tag, ps)
    hit = _prod_cache.get(key)
    if hit is not None:
        return hit
    if not ps:
        val = Polynomial.constant(1)
    else:
        val = product_of(family, tag, ps[:-1]) * family(ps[-1], len(ps))
    with _lock:
        _prod_cache[key] = val
    return val


def elementary_monomial(ps: Sequence[int], kind: str = "e") -> Polynomial:
    return product_of(_BASIS_FAMILY[kind], "classical-" + kind, ps)


_inverse_cache: Dict[Tuple[int, str], Tuple] = {}


def _inverse_matrix(n: int, kind: str):
    """Rows of the inverse of the monomial-to-basis change for ``L_n``."""
    key = (n, kind)
    if key in _inverse_cache:
        return _inverse_cache[key]
    monos = staircase_monomials(n)
    mindex = {m: r for r, m in enumerate(monos)}
    idx = elementary_indices(n)
    size = len(monos)
    # column c of A is basis element idx[c] in monomial coordinates
    rows: List[Dict[int, Fraction]] = [dict() for _ in range(size)]
    for c, ps in enumerate(idx):
        for m, coeff in elementary_monomial(ps, kind).items():
            rows[mindex[m[0]]][c] = Fraction(coeff)
    # augment with identity in columns size..2*size-1
    for r in range(size):
        rows[r][size + r] = Fraction(1)
    pivot_row_of_col = {}
    used = set()
    for c in range(size):
        cand = [r for r in range(size) if r not in used and rows[r].get(c)]
        if not cand:
            raise ArithmeticError(f"basis '{kind}' is singular at n={n}")
        r = min(cand, key=lambda t: (abs(rows[t][c]) != 1, len(rows[t])))
        used.add(r)
        piv = rows[r][c]
        if piv != 1:
            rows[r] = {k: v / piv for k, v in rows[r].items()}
        prow = rows[r]
        for t in range(size):
            if t != r and rows[t].get(c):
                factor = rows[t][c]
                row = rows[t]
                for k, v in prow.items():
                    nv = row.get(k, 0) - factor * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        pivot_row_of_col[c] = r
    inverse = []
    for c in range(size):
        row = rows[pivot_row_of_col[c]]
        inverse.append({k - size: v for k, v in row.items() if k >= size})
    result = (monos, mindex, idx, inverse)
    with _lock:
        _inverse_cache[key] = result
    return result


def elementary_coordinates(f: Polynomial, kind: str = "e",
                           n: Optional[int] = None) -> Dict[Tuple[int, ...], Polynomial]:
    """Coordinates of ``f`` in the ``kind`` standard monomial basis of ``L_n``.

    ``f`` may carry q and y variables; they are treated as scalars.  Returns
    a map from trimmed index tuples to coefficient polynomials.
    """
    if n is None:
        n = max(minimal_n(f), 2)
    if not in_ln(f, n):
        raise NotInLn(f"polynomial is not in L_{n}")
    monos, mindex, idx, inverse = _inverse_matrix(n, kind)
    by_x = f.split("x")
    vec = {mindex[xs]: coeff for xs, coeff in by_x.items()}
    out = {}
    for c, row in enumerate(inverse):
        acc = Polynomial()
        for r, v in row.items():
            if r in vec:
                if v.denominator != 1:
                    raise ArithmeticError("non-integral basis change")
                acc = acc + vec[r] * int(v)
        if acc:
            out[_trim_index(idx[c])] = acc
    return out


def unitriangular_pattern(matrix: Dict[Tuple, Dict[Tuple, int]]) -> bool:
    """True if rows/columns can be ordered so the matrix is unitriangular.

    Repeatedly removes a row with exactly one remaining nonzero entry equal
    to 1 together with that entry's column.
    """
    rows = {r: dict(cols) for r, cols in matrix.items()}
    while rows:
        pick = None
        for r, cols in rows.items():
            live = {c: v for c, v in cols.items() if v}
            if len(live) == 1 and next(iter(live.values())) == 1:
                pick = (r, next(iter(live)))
                break
        if pick is None:
            return False
        r, c = pick
        del rows[r]
        for cols in rows.values():
            cols.pop(c, None)
    return True


def grothendieck_table(n: int) -> Dict[Permutation, Polynomial]:
    return {w: grothendieck(w) for w in all_perms(n)}


__all__ = [
    "binom", "divided_diff", "isobaric_diff", "apply_word", "apply_perm",
    "staircase", "schubert", "grothendieck", "elem_e", "elem_f", "elem_g",
    "elem_family", "dual_grothendieck", "Expansion", "expand_schubert",
    "expand_grothendieck", "staircase_monomials", "in_ln", "minimal_n",
    "elementary_indices", "elementary_monomial", "elementary_coordinates",
    "unitriangular_pattern", "cycle", "longest",
]
