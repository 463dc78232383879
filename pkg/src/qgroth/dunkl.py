"""
The quantum Bruhat representation and multiplicative Dunkl elements.

Group-algebra elements are finitely supported maps from permutations to
polynomials (coefficients normally involve only q).  The generator
``[i,j]`` (``i < j``) sends ``w`` to ``w t_ij`` along an up edge of the
quantum Bruhat graph, to ``q_i...q_{j-1} w t_ij`` along a down edge, and to
zero otherwise; ``[j,i] = -[i,j]``.

Operator words are applied leftmost factor first.  The cleared Dunkl
operator ``A_k = (1-q_k)(1-X_k)`` is the word

    h_{k-1,k} ... h_{1,k} (1-[k,N]) ... (1-[k,k+2]) (1-[k,k+1])

with ``h_ij = 1 + [i,j]``; for ``k = N`` it is just the ``h`` factors.

>>> v = GroupAlgebraElement.basis(Permutation.identity())
>>> str(dunkl_cleared(1, v, 2))
'[1] - [21]'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .classical import elem_g, expand_grothendieck, grothendieck
from .exceptions import HypothesisViolation
from .perm import Permutation, all_perms, edge_type
from .poly import Polynomial, q, shifted_expand, x

ONE = Polynomial.constant(1)


class GroupAlgebraElement:
    """A finitely supported ``{Permutation: Polynomial}`` map."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Permutation, Polynomial]] = None):
        self.terms: Dict[Permutation, Polynomial] = {
            w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, w: Permutation, coeff=1) -> "GroupAlgebraElement":
        return cls({w: Polynomial.coerce(coeff)})

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Polynomial()) + c
        return GroupAlgebraElement(out)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scale(-1)

    def scale(self, c) -> "GroupAlgebraElement":
        c = Polynomial.coerce(c)
        return GroupAlgebraElement({w: v * c for w, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupAlgebraElement) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def support(self) -> List[Permutation]:
        return sorted(self.terms, key=lambda w: (w.length(), w.word))

    def to_polynomial(self) -> Polynomial:
        """Image under ``w -> G_w``."""
        total = Polynomial()
        for w, c in self.terms.items():
            total = total + c * grothendieck(w)
        return total

    @classmethod
    def from_expansion(cls, entries: Iterable[Tuple[Polynomial, Permutation]]):
        out: Dict[Permutation, Polynomial] = {}
        for c, w in entries:
            out[w] = out.get(w, Polynomial()) + c
        return cls(out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in self.support():
            c = self.terms[w]
            if c == 1:
                parts.append(f"+ [{w}]")
            elif c == -1:
                parts.append(f"- [{w}]")
            else:
                parts.append(f"+ ({c})*[{w}]")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[1:].lstrip()

    __repr__ = __str__


def _qij(i: int, j: int) -> Polynomial:
    m = ONE
    for t in range(i, j):
        m = m * q(t)
    return m


def bracket(i: int, j: int, v: GroupAlgebraElement, N: int) -> GroupAlgebraElement:
    """Apply the generator ``[i,j]`` (either order of indices)."""
    if i == j:
        raise ValueError("[i,i] is not a generator")
    sign = 1
    if i > j:
        i, j, sign = j, i, -1
    if j > N:
        raise ValueError(f"[{i},{j}] is outside S_{N}")
    out: Dict[Permutation, Polynomial] = {}
    for w, c in v.terms.items():
        kind = edge_type(w.one_line(N), i, j)
        if kind is None:
            continue
        u = w.swap(i, j)
        coeff = c if kind == "up" else c * _qij(i, j)
        out[u] = out.get(u, Polynomial()) + (coeff if sign == 1 else -coeff)
    return GroupAlgebraElement(out)


def qb_apply(word: Sequence[Tuple[str, int, int]], v: GroupAlgebraElement,
             N: int) -> GroupAlgebraElement:
    """Apply an operator word, leftmost factor first.

    Letters are ``("t", i, j)`` for ``[i,j]``, ``("h", i, j)`` for ``1+[i,j]``,
    ``("hinv", i, j)`` for ``1-[i,j]`` with ``|i-j| > 1`` (the inverse of
    ``h``), and ``("omt", i, j)`` for ``1-[i,j]`` with any indices.
    """
    for op, i, j in word:
        if op == "t":
            v = bracket(i, j, v, N)
        elif op == "h":
            v = v + bracket(i, j, v, N)
        elif op == "hinv":
            if abs(i - j) == 1:
                raise ValueError("adjacent inverse carries a denominator; use 'omt'")
            v = v - bracket(i, j, v, N)
        elif op == "omt":
            v = v - bracket(i, j, v, N)
        else:
            raise ValueError(f"unknown operator {op!r}")
    return v


def dunkl_word(k: int, N: int) -> List[Tuple[str, int, int]]:
    if not 1 <= k <= N:
        raise ValueError(f"need 1 <= k <= N, got k={k}, N={N}")
    word = [("h", i, k) for i in range(k - 1, 0, -1)]
    word += [("hinv", k, j) for j in range(N, k + 1, -1)]
    if k < N:
        word.append(("omt", k, k + 1))
    return word


def dunkl_cleared(k: int, v: GroupAlgebraElement, N: int) -> GroupAlgebraElement:
    """Apply ``A_k = (1-q_k)(1-X_k)`` on ``R[S_N]``."""
    return qb_apply(dunkl_word(k, N), v, N)


def dunkl_power(k: int, e: int, v: GroupAlgebraElement, N: int) -> GroupAlgebraElement:
    for _ in range(e):
        v = dunkl_cleared(k, v, N)
    return v


def _qfactor(i: int, N: int) -> Polynomial:
    # q_N is absent from S_N
    return ONE if i >= N else 1 - q(i)


@dataclass
class DunklResult:
    """``value = cleared_factor * F(X)(v)``."""

    value: GroupAlgebraElement
    cleared_exps: Tuple[int, ...]
    N: int

    @property
    def cleared_factor(self) -> Polynomial:
        out = ONE
        for i, d in enumerate(self.cleared_exps, start=1):
            out = out * _qfactor(i, self.N) ** d
        return out


def dunkl_evaluate(F: Polynomial, N: int,
                   v: Optional[GroupAlgebraElement] = None) -> DunklResult:
    """Evaluate ``F(X)`` on ``v`` (default ``[id]``) with denominators cleared.

    ``F`` is rewritten as ``sum_a c_a prod (1-x_i)^{a_i}``; each
    ``(1-x_i)^{a_i}`` becomes ``(1-q_i)^{D_i-a_i} A_i^{a_i}`` where ``D_i`` is
    the degree of ``F`` in ``x_i``.
    """
    if F.nvars("x") > N:
        raise ValueError(f"polynomial involves x_i with i > {N}")
    if v is None:
        v = GroupAlgebraElement.basis(Permutation.identity())
    # q_i with i >= N do not exist in S_N
    F = F.specialize_q(range(N, F.nvars("q") + 1))
    D = tuple(F.var_degree("x", i) for i in range(1, N + 1))
    total = GroupAlgebraElement()
    cache: Dict[Tuple[int, ...], GroupAlgebraElement] = {}

    def apply_exps(a):
        # A_1^{a_1} A_2^{a_2} ... applied with i ascending
        if a in cache:
            return cache[a]
        last = max((i for i, e in enumerate(a) if e), default=None)
        if last is None:
            res = v
        else:
            prev = list(a)
            prev[last] -= 1
            res = dunkl_cleared(last + 1, apply_exps(tuple(prev)), N)
        cache[a] = res
        return res

    for a, c in sorted(shifted_expand(F, N).items()):
        scale = c
        for i, (d, e) in enumerate(zip(D, a), start=1):
            if d - e:
                scale = scale * _qfactor(i, N) ** (d - e)
        total = total + apply_exps(a).scale(scale)
    return DunklResult(total, D, N)


# ---------------------------------------------------------------------------
# verification drivers

def _classical_element(f: Polynomial) -> GroupAlgebraElement:
    """Expand ``f`` (x and q) in Grothendieck polynomials, q as scalars."""
    out: Dict[Permutation, Polynomial] = {}
    for qs, fx in f.split("q").items():
        qm = Polynomial.monomial(((), qs, ()))
        for c, w in expand_grothendieck(fx).entries:
            out[w] = out.get(w, Polynomial()) + c * qm
    return GroupAlgebraElement(out)


def _check_in_sn(v: GroupAlgebraElement, n: int):
    for w in v.terms:
        if len(w) > n:
            raise HypothesisViolation(f"expansion leaves S_{n}: {w}")


def _hypothesis(w: Permutation, k: int, n: int):
    if len(w) > n:
        raise HypothesisViolation(f"{w} is not in S_{n}")
    d = w.first_descent()
    if d is not None and d <= k:
        raise HypothesisViolation(f"first descent of {w} is {d} <= k={k}")


@dataclass
class Check:
    name: str
    params: dict
    passed: bool
    lhs: object = None
    rhs: object = None


def f_numerator(p: int, k: int, literal: bool = False) -> Polynomial:
    """``(1 - q_{k-1}) f_p^k``.

    For ``p = 1`` the ``q_{k-1}`` correction is dropped: it comes from
    rewriting ``G_{p-1}`` through its q-recurrence, which does not hold at
    ``p - 1 = 0`` since ``G_0 = 1``.  ``literal=True`` keeps it anyway.
    """
    out = elem_g(p, k - 1) - elem_g(p - 1, k - 1)
    if p >= 2 or literal:
        out = out - q(k - 1) * (elem_g(p - 1, k - 2) - elem_g(p - 2, k - 2))
    return out


def verify_main(w: Permutation, p: int, k: int, n: int, literal: bool = False) -> Check:
    """``(1-q_k)(1-X_k)(G_w f_p^k) = G_w (g_p^k - g_{p-1}^{k-1})``, times ``1-q_{k-1}``."""
    if not 1 <= p <= k <= n - 1:
        raise HypothesisViolation(f"need 1 <= p <= k <= n-1, got p={p}, k={k}, n={n}")
    _hypothesis(w, k, n)
    gw = grothendieck(w)
    source = _classical_element(gw * f_numerator(p, k, literal))
    _check_in_sn(source, n)
    lhs = dunkl_cleared(k, source, n)
    rhs = _classical_element(gw * (elem_g(p, k) - elem_g(p - 1, k - 1))).scale(1 - q(k - 1))
    _check_in_sn(rhs, n)
    return Check("main", {"w": str(w), "p": p, "k": k, "n": n}, lhs == rhs, lhs, rhs)


def verify_gp_action(w: Permutation, p: int, k: int, n: int) -> Check:
    """``G_p^k(X)[w]`` corresponds to ``g_p^k G_w``."""
    from .quantum import g_quantum
    if not (0 <= p <= k <= n):
        raise HypothesisViolation(f"need 0 <= p <= k <= n, got p={p}, k={k}")
    if k == n:
        if not w.is_identity():
            raise HypothesisViolation("k = n is only covered for w = id")
    else:
        _hypothesis(w, k, n)
    res = dunkl_evaluate(g_quantum(p, k), n, GroupAlgebraElement.basis(w))
    target = _classical_element(grothendieck(w) * elem_g(p, k))
    if k == n:
        # in K(Fl_n) the classes outside S_n vanish
        target = GroupAlgebraElement({u: c for u, c in target.terms.items() if len(u) <= n})
    _check_in_sn(target, n)
    rhs = target.scale(res.cleared_factor)
    return Check("gp_action", {"w": str(w), "p": p, "k": k, "n": n},
                 res.value == rhs, res.value, rhs)


def verify_product_action(ps: Sequence[int], n: int) -> Check:
    """``G_{p_1...p_{n-1}}(X)(1) = g_{p_1...p_{n-1}}``."""
    from .classical import elementary_monomial
    from .quantum import quantum_monomial
    ps = tuple(ps)
    if len(ps) > n - 1 or any(not 0 <= p <= i for i, p in enumerate(ps, start=1)):
        raise HypothesisViolation(f"bad index tuple {ps} for n={n}")
    res = dunkl_evaluate(quantum_monomial(ps, "g"), n)
    rhs = _classical_element(elementary_monomial(ps, "g")).scale(res.cleared_factor)
    return Check("product_action", {"ps": list(ps), "n": n}, res.value == rhs, res.value, rhs)


def verify_quantmap(w: Permutation, N: int) -> Check:
    """``G^q_w(X)(1) = [w]``."""
    from .quantum import quantum_grothendieck
    res = dunkl_evaluate(quantum_grothendieck(w), N)
    rhs = GroupAlgebraElement.basis(w, res.cleared_factor)
    return Check("quantmap", {"w": str(w), "N": N}, res.value == rhs, res.value, rhs)


def main_cases(n: int):
    """All ``(w, p, k)`` satisfying the hypothesis with ``w`` in ``S_n``."""
    for k in range(1, n):
        for p in range(1, k + 1):
            for w in all_perms(n):
                d = w.first_descent()
                if d is None or d > k:
                    yield w, p, k


def verify_section5(which: str, **params) -> List[Check]:
    """Run one of the drivers over its natural range (or a single instance)."""
    n = params.get("n", 4)
    out: List[Check] = []
    if which == "main":
        if "w" in params:
            return [verify_main(params["w"], params["p"], params["k"], n)]
        for w, p, k in main_cases(n):
            if ("p" in params and params["p"] != p) or ("k" in params and params["k"] != k):
                continue
            out.append(verify_main(w, p, k, n))
    elif which == "gp_action":
        for k in range(1, n):
            for p in range(0, k + 1):
                for w in all_perms(n):
                    d = w.first_descent()
                    if d is None or d > k:
                        out.append(verify_gp_action(w, p, k, n))
        for p in range(0, n + 1):
            out.append(verify_gp_action(Permutation.identity(), p, n, n))
    elif which == "product_action":
        from .classical import elementary_indices
        for ps in elementary_indices(n):
            out.append(verify_product_action(ps, n))
    elif which == "quantmap":
        for w in all_perms(n):
            out.append(verify_quantmap(w, n))
    else:
        raise ValueError(f"unknown driver {which!r}")
    return out


# ---------------------------------------------------------------------------
# relations of the quadratic algebra in this representation

def relation_checks(N: int) -> Dict[str, bool]:
    basis = [GroupAlgebraElement.basis(w) for w in all_perms(N)]
    res = {"square_adjacent": True, "square_nonadjacent": True,
           "commute_disjoint": True, "yang_baxter": True, "antisymmetry": True}
    pairs = [(i, j) for i in range(1, N + 1) for j in range(i + 1, N + 1)]
    for v in basis:
        for i, j in pairs:
            sq = bracket(i, j, bracket(i, j, v, N), N)
            if j == i + 1:
                res["square_adjacent"] &= sq == v.scale(q(i))
            else:
                res["square_nonadjacent"] &= not sq
            res["antisymmetry"] &= bracket(j, i, v, N) == bracket(i, j, v, N).scale(-1)
            for k, l in pairs:
                if {i, j} & {k, l}:
                    continue
                res["commute_disjoint"] &= (bracket(i, j, bracket(k, l, v, N), N)
                                            == bracket(k, l, bracket(i, j, v, N), N))
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                for k in range(j + 1, N + 1):
                    total = (_pair(i, j, j, k, v, N) + _pair(j, k, k, i, v, N)
                             + _pair(k, i, i, j, v, N))
                    rev = (_pair(j, k, i, j, v, N) + _pair(k, i, j, k, v, N)
                           + _pair(i, j, k, i, v, N))
                    res["yang_baxter"] &= not total and not rev
    return res


def _pair(a, b, c, d, v, N):
    """The product ``[a,b][c,d]`` acting with the left factor first."""
    return bracket(c, d, bracket(a, b, v, N), N)


def dunkl_commute(N: int) -> bool:
    for w in all_perms(N):
        v = GroupAlgebraElement.basis(w)
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                if dunkl_cleared(i, dunkl_cleared(j, v, N), N) != \
                        dunkl_cleared(j, dunkl_cleared(i, v, N), N):
                    return False
    return True


__all__ = [
    "GroupAlgebraElement", "bracket", "qb_apply", "dunkl_word", "dunkl_cleared",
    "dunkl_evaluate", "DunklResult", "verify_main", "verify_gp_action",
    "verify_product_action", "verify_quantmap", "verify_section5", "main_cases",
    "relation_checks", "dunkl_commute", "f_numerator", "Check",
]
