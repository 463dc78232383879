"""
Permutations in one-line notation.

A :class:`Permutation` is stored as the word ``(w(1), ..., w(N))`` with
trailing fixed points removed, so ``213`` and ``2134`` are the same element
of the infinite symmetric group.  Products compose as functions,
``(u*v)(i) = u(v(i))``, hence ``w.swap(a, b)`` (right multiplication by the
transposition ``t_ab``) exchanges the entries in positions ``a`` and ``b``.

>>> w = Permutation.from_string("2,1,3")
>>> w.length(), w.code()
(1, (1,))
>>> [str(c) for _, c in covers(w, N=3)]
['312', '231']
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _itperms
from typing import List, Optional, Sequence, Tuple


def _trim_word(word: Sequence[int]) -> Tuple[int, ...]:
    word = list(word)
    while len(word) > 1 and word[-1] == len(word):
        word.pop()
    return tuple(word) if word else (1,)


class Permutation:
    """An element of the infinite symmetric group in one-line notation."""

    __slots__ = ("_w", "_hash")

    def __init__(self, word: Sequence[int]):
        word = tuple(int(a) for a in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation word: {word}")
        self._w = _trim_word(word)
        self._hash = hash(self._w)

    @classmethod
    def identity(cls) -> "Permutation":
        return cls((1,))

    @classmethod
    def from_string(cls, text: str) -> "Permutation":
        """Parse ``"2,1,3"`` or, for words with single digits, ``"213"``."""
        text = text.strip()
        if "," in text:
            return cls([int(t) for t in text.split(",") if t.strip()])
        if not text.isdigit():
            raise ValueError(f"bad permutation {text!r}")
        return cls([int(c) for c in text])

    @classmethod
    def from_code(cls, code: Sequence[int]) -> "Permutation":
        """The unique permutation whose code is ``code``."""
        code = list(code)
        if any(c < 0 for c in code):
            raise ValueError("code entries must be nonnegative")
        n = max([i + c + 1 for i, c in enumerate(code)] + [1])
        avail = list(range(1, n + 1))
        word = []
        for i in range(n):
            c = code[i] if i < len(code) else 0
            word.append(avail.pop(c))
        return cls(word)

    # -- basic data -----------------------------------------------------
    @property
    def word(self) -> Tuple[int, ...]:
        return self._w

    def __len__(self) -> int:
        return len(self._w)

    def __call__(self, i: int) -> int:
        return self._w[i - 1] if i <= len(self._w) else i

    def one_line(self, N: Optional[int] = None) -> Tuple[int, ...]:
        """The word padded with fixed points up to length ``N``."""
        if N is None:
            return self._w
        if N < len(self._w):
            raise ValueError(f"{self} does not lie in S_{N}")
        return self._w + tuple(range(len(self._w) + 1, N + 1))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._w == other._w

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        # arbitrary total order for sorting output
        return (len(self._w), self._w) < (len(other._w), other._w)

    def __str__(self) -> str:
        if all(a < 10 for a in self._w):
            return "".join(map(str, self._w))
        return ",".join(map(str, self._w))

    def __repr__(self) -> str:
        return f"Permutation({','.join(map(str, self._w))})"

    def to_string(self, N: Optional[int] = None) -> str:
        return ",".join(map(str, self.one_line(N)))

    # -- statistics -----------------------------------------------------
    def length(self) -> int:
        w = self._w
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def code(self) -> Tuple[int, ...]:
        w = self._w
        c = [sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w))]
        while c and c[-1] == 0:
            c.pop()
        return tuple(c)

    def is_identity(self) -> bool:
        return self._w == (1,)

    def first_descent(self) -> Optional[int]:
        """Least ``i`` with ``w(i) > w(i+1)``, or ``None`` for the identity."""
        w = self._w
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                return i + 1
        return None

    def descents(self) -> List[int]:
        w = self._w
        return [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]

    # -- group operations -----------------------------------------------
    def inverse(self) -> "Permutation":
        inv = [0] * len(self._w)
        for i, a in enumerate(self._w, start=1):
            inv[a - 1] = i
        return Permutation(inv)

    def __mul__(self, other: "Permutation") -> "Permutation":
        n = max(len(self), len(other))
        return Permutation([self(other(i)) for i in range(1, n + 1)])

    def swap(self, a: int, b: int) -> "Permutation":
        """Right multiplication by the transposition ``t_ab``."""
        n = max(len(self._w), a, b)
        w = list(self.one_line(n))
        w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
        return Permutation(w)

    def embed(self, M: int) -> Tuple[int, ...]:
        """One-line word of the image under ``S_N -> S_M``."""
        return self.one_line(M)

    def reduced_word(self) -> List[int]:
        """A reduced word ``[i1, ..., il]`` with ``w = s_i1 ... s_il``.

        Built greedily by stripping the first descent from the right.
        """
        word = []
        w = self
        while True:
            d = w.first_descent()
            if d is None:
                break
            word.append(d)
            w = w.swap(d, d + 1)
        return word[::-1]


def longest(n: int) -> Permutation:
    return Permutation(range(n, 0, -1))


def simple(i: int) -> Permutation:
    return Permutation.identity().swap(i, i + 1)


def cycle(k: int, p: int) -> Permutation:
    """The Grassmannian permutation ``c[k,p]`` with descent at ``k``.

    Its Schubert polynomial is ``e_p(x1..xk)``; in one-line form it sends
    ``j -> j+1`` for ``k-p+1 <= j <= k`` and ``k+1 -> k-p+1``.
    """
    if not 0 <= p <= k:
        raise ValueError(f"need 0 <= p <= k, got p={p}, k={k}")
    w = list(range(1, k + 2))
    for j in range(k - p + 1, k + 1):
        w[j - 1] = j + 1
    w[k] = k - p + 1
    return Permutation(w)


def all_perms(n: int) -> List[Permutation]:
    """All elements of ``S_n`` sorted by length, then lexicographically."""
    perms = [Permutation(p) for p in _itperms(range(1, n + 1))]
    return sorted(perms, key=lambda w: (w.length(), w.one_line(n)))


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Bruhat order via the sorted-prefix (tableau) criterion."""
    n = max(len(u), len(v))
    a, b = u.one_line(n), v.one_line(n)
    for i in range(1, n):
        if any(s > t for s, t in zip(sorted(a[:i]), sorted(b[:i]))):
            return False
    return True


def covers(w: Permutation, k: Optional[int] = None, N: Optional[int] = None):
    """Bruhat covers ``w < w*t_ab`` inside ``S_N`` as ``[((a, b), w')]``.

    With ``k`` given, only labels with ``a <= k < b`` are kept.
    """
    N = len(w) if N is None else N
    word = w.one_line(N)
    out = []
    for a in range(1, N + 1):
        if k is not None and a > k:
            break
        lo = word[a - 1]
        for b in range(max(a, k or 0) + 1, N + 1):
            hi = word[b - 1]
            if hi < lo:
                continue
            if all(not (lo < word[c - 1] < hi) for c in range(a + 1, b)):
                out.append(((a, b), w.swap(a, b)))
    return out


@dataclass(frozen=True)
class QuantumEdge:
    source: Permutation
    target: Permutation
    label: Tuple[int, int]
    direction: str  # "up" or "down"

    @property
    def qexp(self) -> Tuple[int, ...]:
        """Exponent vector of the weight: empty for up, ``q_i...q_{j-1}`` for down."""
        if self.direction == "up":
            return ()
        i, j = self.label
        return (0,) * (i - 1) + (1,) * (j - i)


def edge_type(word: Sequence[int], i: int, j: int) -> Optional[str]:
    """Classify ``w -> w*t_ij`` in the quantum Bruhat graph (``i < j``)."""
    a, b = word[i - 1], word[j - 1]
    between = word[i:j - 1]
    if a < b:
        if all(not (a < c < b) for c in between):
            return "up"
        return None
    # down edge: length drops by 2(j-i)-1, i.e. every middle value lies in (b, a)
    if all(b < c < a for c in between):
        return "down"
    return None


def quantum_edges(w: Permutation, k: Optional[int] = None,
                  N: Optional[int] = None) -> List[QuantumEdge]:
    """All edges out of ``w`` in the quantum Bruhat graph on ``S_N``."""
    N = len(w) if N is None else N
    word = w.one_line(N)
    out = []
    for i in range(1, N + 1):
        if k is not None and i > k:
            break
        for j in range(max(i, k or 0) + 1, N + 1):
            kind = edge_type(word, i, j)
            if kind is not None:
                out.append(QuantumEdge(w, w.swap(i, j), (i, j), kind))
    return out


def label_precedes(u: Tuple[int, int], v: Tuple[int, int]) -> bool:
    """The order ``(a,b) < (c,d)`` iff ``b > d``, or ``b == d`` and ``a < c``."""
    (a, b), (c, d) = u, v
    return b > d or (b == d and a < c)
