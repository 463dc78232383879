"""
Chain and path formulas for products.

* ``pieri_chains`` / ``pieri_product``: k-Pieri chains in the k-Bruhat order
  with their markings; ``G_w g_p^k`` is the signed sum of ``G_end``.
* ``monk_paths``: paths ``(a_1,k),...,(a_s,k),(k,b_1),...,(k,b_t)`` in the
  quantum Bruhat graph with ``a`` and ``b`` decreasing, expanding
  ``(1-q_k)(1-x_k) G^q_w``.
* ``monk_product``: ``<``-increasing paths in the quantum k-Bruhat graph,
  expanding ``G^q_w G^q_{s_k}``.
* ``quantum_pieri_product``: the quantum analogue of the Pieri sum, compared
  against a direct expansion.

Labels ``(a, b)`` always have ``a < b`` and act on positions.  Since every
chain considered has weakly decreasing second labels, it never leaves
``S_N`` with ``N = max(len(w), k) + 1``.  We still confirm each enumeration
at one larger width.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .classical import Expansion, elem_g, expand_grothendieck, grothendieck
from .expand import expand_qgrothendieck
from .perm import Permutation, edge_type, label_precedes, simple
from .poly import Polynomial, q as qvar
from .quantum import g_quantum, quantum_grothendieck

Label = Tuple[int, int]


@dataclass(frozen=True)
class ChainRecord:
    start: Permutation
    labels: Tuple[Label, ...]
    perms: Tuple[Permutation, ...]
    directions: Tuple[str, ...]

    @property
    def end(self) -> Permutation:
        return self.perms[-1] if self.perms else self.start

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def qexp(self) -> Tuple[int, ...]:
        """Exponent vector of ``q(pi)``: each down step ``(i,j)`` adds ``q_i...q_{j-1}``."""
        exps: List[int] = []
        for (i, j), d in zip(self.labels, self.directions):
            if d == "down":
                if len(exps) < j - 1:
                    exps += [0] * (j - 1 - len(exps))
                for t in range(i - 1, j - 1):
                    exps[t] += 1
        while exps and exps[-1] == 0:
            exps.pop()
        return tuple(exps)

    @property
    def qweight(self) -> Polynomial:
        return Polynomial.monomial(((), self.qexp, ()))

    def to_json(self) -> dict:
        return {"start": self.start.to_string(), "labels": [list(l) for l in self.labels],
                "directions": list(self.directions), "qweight": list(self.qexp)}


def make_chain(start: Permutation, labels: Sequence[Label],
               quantum: bool = False) -> ChainRecord:
    """Follow ``labels`` from ``start``, checking each step is an edge.

    Without ``quantum`` every step must be a Bruhat cover (an up edge).
    """
    perms, dirs = [], []
    w = start
    for a, b in labels:
        if not a < b:
            raise ValueError(f"label {(a, b)} must have a < b")
        kind = edge_type(w.one_line(max(len(w), b)), a, b)
        if kind is None or (kind == "down" and not quantum):
            raise ValueError(f"step {(a, b)} from {w} is not a {'quantum ' if quantum else ''}"
                             "Bruhat edge")
        w = w.swap(a, b)
        perms.append(w)
        dirs.append(kind)
    return ChainRecord(start, tuple(labels), tuple(perms), tuple(dirs))


# ---------------------------------------------------------------------------
# markings

def _valid_marking(labels: Sequence[Label], marked: frozenset) -> bool:
    s = len(labels)
    for i in range(s):
        a, b = labels[i]
        if i in marked:
            if any(labels[j][0] == a for j in range(i)):
                return False
        elif i + 1 < s and not label_precedes(labels[i], labels[i + 1]):
            return False
    # the initial run with equal b and decreasing a forces marks
    for r in range(s):
        if labels[r][1] != labels[0][1]:
            break
        if r > 0 and not labels[r - 1][0] > labels[r][0]:
            break
        if r not in marked:
            return False
    return True


def marking_counts(labels: Sequence[Label]) -> Dict[int, int]:
    """Number of markings with ``p`` marked covers, for every ``p``."""
    labels = tuple(labels)
    s = len(labels)
    counts: Dict[int, int] = {}
    for p in range(s + 1):
        n = sum(1 for marked in combinations(range(s), p)
                if _valid_marking(labels, frozenset(marked)))
        if n:
            counts[p] = n
    return counts


def m_value(labels: Sequence[Label], p: int) -> int:
    return (-1) ** (len(labels) - p) * marking_counts(labels).get(p, 0)


@dataclass
class MarkingCount:
    counts: Dict[int, int]
    length: int

    def m(self, p: int) -> int:
        return (-1) ** (self.length - p) * self.counts.get(p, 0)

    @property
    def m_values(self) -> Dict[int, int]:
        return {p: self.m(p) for p in self.counts}


def is_pieri_sequence(labels: Sequence[Label]) -> bool:
    """Conditions (P1) and (P2) on a label sequence."""
    s = len(labels)
    if any(labels[i][1] < labels[i + 1][1] for i in range(s - 1)):
        return False
    for i in range(1, s - 1):
        if any(labels[j][0] == labels[i][0] for j in range(i)):
            if not label_precedes(labels[i], labels[i + 1]):
                return False
    return True


# ---------------------------------------------------------------------------
# enumeration

def _enumerate(w: Permutation, k: int, N: int, quantum: bool,
               accept) -> List[ChainRecord]:
    """All Pieri-type paths from ``w`` in (quantum) k-Bruhat order on ``S_N``.

    ``accept(labels, new)`` decides whether a step may extend a prefix.
    """
    out: List[ChainRecord] = []

    def rec(v: Permutation, labels, perms, dirs):
        out.append(ChainRecord(w, tuple(labels), tuple(perms), tuple(dirs)))
        word = v.one_line(N)
        bmax = labels[-1][1] if labels else N
        for a in range(1, k + 1):
            for b in range(k + 1, bmax + 1):
                kind = edge_type(word, a, b)
                if kind is None or (kind == "down" and not quantum):
                    continue
                if not accept(labels, (a, b)):
                    continue
                u = v.swap(a, b)
                labels.append((a, b)); perms.append(u); dirs.append(kind)
                rec(u, labels, perms, dirs)
                labels.pop(); perms.pop(); dirs.pop()

    rec(w, [], [], [])
    return out


def _pieri_accept(labels, new) -> bool:
    # (P1) is enforced by bmax; (P2) checks the previous step
    i = len(labels) - 1
    if i >= 1 and any(labels[j][0] == labels[i][0] for j in range(i)):
        return label_precedes(labels[i], new)
    return True


def _distinct_accept(labels, new) -> bool:
    return new not in labels and _pieri_accept(labels, new)


READINGS = {"literal": _pieri_accept, "distinct": _distinct_accept}


def _chains_at(w: Permutation, k: int, p: int, N: int, quantum: bool, reading: str):
    chains = _enumerate(w, k, N, quantum, READINGS[reading])
    out = []
    for ch in chains:
        mc = MarkingCount(marking_counts(ch.labels), len(ch))
        out.append((ch, mc))
    return out


def pieri_chains(w: Permutation, k: int, p: int, quantum: bool = False,
                 N: Optional[int] = None,
                 reading: str = "literal") -> List[Tuple[ChainRecord, MarkingCount]]:
    """All (quantum) k-Pieri chains from ``w`` with nonzero ``m_p``.

    Width is adaptive: the enumeration at ``N`` and ``N + 1`` must agree.
    ``reading="distinct"`` additionally forbids repeating a label; this is
    automatic for chains of covers but not for quantum paths.
    """
    if not 1 <= p <= k:
        raise ValueError(f"need 1 <= p <= k, got p={p}, k={k}")
    if N is None:
        N = max(len(w), k) + p + 1
    while True:
        here = [(c, m) for c, m in _chains_at(w, k, p, N, quantum, reading) if m.m(p)]
        wider = [(c, m) for c, m in _chains_at(w, k, p, N + 1, quantum, reading) if m.m(p)]
        if {c.labels for c, _ in here} == {c.labels for c, _ in wider}:
            return here
        N += 1


def pieri_product(w: Permutation, p: int, k: int) -> Expansion:
    """``G_w g_p^k`` as a signed sum over k-Pieri chains."""
    total: Dict[Permutation, int] = {}
    order: List[Permutation] = []
    for ch, mc in pieri_chains(w, k, p):
        if ch.end not in total:
            order.append(ch.end)
            total[ch.end] = 0
        total[ch.end] += mc.m(p)
    entries = [(Polynomial.constant(total[u]), u) for u in order if total[u]]
    entries.sort(key=lambda e: e[1].length())
    return Expansion("grothendieck", entries)


def no_cancellation(w: Permutation, k: int, p: int, quantum: bool = False,
                    reading: str = "literal") -> bool:
    """Every end permutation (and q-weight) receives contributions of one sign."""
    signs: Dict = {}
    for ch, mc in pieri_chains(w, k, p, quantum, reading=reading):
        key = (ch.end, ch.qexp)
        signs.setdefault(key, set()).add(mc.m(p) > 0)
    return all(len(s) == 1 for s in signs.values())


def pieri_oracle(w: Permutation, p: int, k: int) -> Expansion:
    return expand_grothendieck(grothendieck(w) * elem_g(p, k))


# ---------------------------------------------------------------------------
# Monk formulas

def monk_paths(w: Permutation, k: int) -> List[ChainRecord]:
    """Paths ``(a_1,k)..(a_s,k),(k,b_1)..(k,b_t)`` with a, b strictly decreasing."""
    N = max(len(w), k) + 1
    out: List[ChainRecord] = []

    def rec_b(v, labels, perms, dirs, bmax):
        out.append(ChainRecord(w, tuple(labels), tuple(perms), tuple(dirs)))
        word = v.one_line(N)
        for b in range(k + 1, bmax):
            kind = edge_type(word, k, b)
            if kind is None:
                continue
            u = v.swap(k, b)
            rec_b(u, labels + [(k, b)], perms + [u], dirs + [kind], b)

    def rec_a(v, labels, perms, dirs, amax):
        rec_b(v, labels, perms, dirs, N + 1)
        word = v.one_line(N)
        for a in range(1, amax):
            kind = edge_type(word, a, k)
            if kind is None:
                continue
            u = v.swap(a, k)
            rec_a(u, labels + [(a, k)], perms + [u], dirs + [kind], a)

    rec_a(w, [], [], [], k)
    return out


def _collect(pairs, basis: str) -> Expansion:
    total: Dict[Permutation, Polynomial] = {}
    order: List[Permutation] = []
    for c, u in pairs:
        if u not in total:
            order.append(u)
            total[u] = Polynomial()
        total[u] = total[u] + c
    entries = [(total[u], u) for u in order if total[u]]
    return Expansion(basis, entries)


def monk_x_expansion(w: Permutation, k: int) -> Expansion:
    """``(1-q_k)(1-x_k) G^q_w`` in the quantum Grothendieck basis."""
    pairs = []
    for ch in monk_paths(w, k):
        t = sum(1 for a, _ in ch.labels if a == k)
        pairs.append(((-1) ** t * ch.qweight, ch.end))
    return _collect(pairs, "qgrothendieck")


def monk_x_lhs(w: Permutation, k: int) -> Polynomial:
    from .poly import x
    return (1 - qvar(k)) * (1 - x(k)) * quantum_grothendieck(w)


def monk_sk_paths(w: Permutation, k: int) -> List[ChainRecord]:
    """Nonempty paths in the quantum k-Bruhat graph with increasing labels."""
    N = max(len(w), k) + 1
    chains = _enumerate(w, k, N, True,
                        lambda labels, new: not labels or label_precedes(labels[-1], new))
    return [c for c in chains if len(c)]


def monk_product(w: Permutation, k: int) -> Expansion:
    """``G^q_w G^q_{s_k}`` via paths, in the quantum Grothendieck basis."""
    pairs = [((-1) ** (len(ch) - 1) * ch.qweight, ch.end) for ch in monk_sk_paths(w, k)]
    return _collect(pairs, "qgrothendieck")


def monk_no_cancellation(w: Permutation, k: int) -> bool:
    signs: Dict = {}
    for ch in monk_sk_paths(w, k):
        signs.setdefault((ch.end, ch.qexp), set()).add(len(ch) % 2)
    return all(len(s) == 1 for s in signs.values())


def monk_oracle(w: Permutation, k: int) -> Expansion:
    return expand_qgrothendieck(quantum_grothendieck(w) * quantum_grothendieck(simple(k)))


# ---------------------------------------------------------------------------
# quantum Pieri sums (a conjecture; mismatches are reported, not raised)

@dataclass
class PieriVerdict:
    """Outcome of comparing the quantum Pieri sum with a direct expansion.

    ``verified`` refers to ``reading``; ``literal_verified`` always records
    the verdict when quantum paths may repeat a label.
    """

    formula: Expansion
    oracle: Expansion
    verified: bool
    no_cancellation: bool
    reading: str
    literal_verified: bool
    conjectural: bool = True


def quantum_pieri_formula(w: Permutation, p: int, k: int, reading: str = "distinct") -> Expansion:
    pairs = [(mc.m(p) * ch.qweight, ch.end)
             for ch, mc in pieri_chains(w, k, p, quantum=True, reading=reading)]
    return _collect(pairs, "qgrothendieck")


def quantum_pieri_product(w: Permutation, p: int, k: int,
                          reading: str = "distinct") -> PieriVerdict:
    formula = quantum_pieri_formula(w, p, k, reading)
    oracle = expand_qgrothendieck(quantum_grothendieck(w) * g_quantum(p, k))
    target = oracle.to_dict()
    ok = formula.to_dict() == target
    literal_ok = ok if reading == "literal" else (
        quantum_pieri_formula(w, p, k, "literal").to_dict() == target)
    return PieriVerdict(formula, oracle, ok,
                        no_cancellation(w, k, p, quantum=True, reading=reading),
                        reading, literal_ok)


__all__ = [
    "ChainRecord", "MarkingCount", "make_chain", "marking_counts", "m_value",
    "is_pieri_sequence", "pieri_chains", "pieri_product", "pieri_oracle",
    "no_cancellation", "monk_paths", "monk_x_expansion", "monk_x_lhs",
    "monk_sk_paths", "monk_product", "monk_no_cancellation", "monk_oracle",
    "quantum_pieri_product", "quantum_pieri_formula", "PieriVerdict", "READINGS",
]
