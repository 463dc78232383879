"""
Sparse multivariate polynomials with integer coefficients.

Three families of variables are supported: ``x1, x2, ...``, ``q1, q2, ...``
and ``y1, y2, ...``.  A monomial is stored as a triple of exponent tuples
``(xs, qs, ys)`` with trailing zeros trimmed, so every monomial has exactly
one representation.  Coefficients are Python ints (arbitrary precision).

The ring is graded by ``deg(x_i) = deg(y_i) = 1`` and ``deg(q_i) = 2``.

>>> x1, x2, q1 = x(1), x(2), q(1)
>>> str((1 - x1) * (1 - x2))
'x1*x2 - x1 - x2 + 1'
>>> f = (1 - q1) * x1 + q1
>>> str(f)
'(1-q1)*x1 + q1'
>>> [(d, str(c)) for d, c in graded_components(f)]
[(1, 'x1'), (2, 'q1'), (3, '-q1*x1')]
"""

from __future__ import annotations

import ast
import re
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from .exceptions import NotDivisible

__all__ = [
    "Monomial", "Polynomial", "x", "q", "y", "const",
    "graded_components", "lowest_component", "lex_min_x_monomial",
    "exact_div", "shifted_expand", "shifted_reconstruct", "parse",
]

Exps = Tuple[int, ...]
Monomial = Tuple[Exps, Exps, Exps]

FAMILIES = ("x", "q", "y")
ONE: Monomial = ((), (), ())


def _trim(e: Iterable[int]) -> Exps:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _add(a: Exps, b: Exps) -> Exps:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    return tuple([u + v for u, v in zip(a, b)]) + a[len(b):]


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return (_add(m1[0], m2[0]), _add(m1[1], m2[1]), _add(m1[2], m2[2]))


def mono_degree(m: Monomial) -> int:
    return sum(m[0]) + 2 * sum(m[1]) + sum(m[2])


def make_monomial(xs=(), qs=(), ys=()) -> Monomial:
    return (_trim(xs), _trim(qs), _trim(ys))


def _var_monomial(family: str, i: int, e: int = 1) -> Monomial:
    if i < 1:
        raise ValueError(f"variable index must be >= 1, got {family}{i}")
    exps = (0,) * (i - 1) + (e,)
    parts = [(), (), ()]
    parts[FAMILIES.index(family)] = exps
    return tuple(parts)


def sort_key(m: Monomial):
    """Canonical order: graded degree, then x-lex, q-lex, y-lex."""
    return (mono_degree(m), m[0], m[1], m[2])


Scalar = int
PolyLike = Union["Polynomial", int]


class Polynomial:
    """An immutable element of Z[x, q, y]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        out: Dict[Monomial, int] = {}
        for m, c in (terms or {}).items():
            if c:
                m = (_trim(m[0]), _trim(m[1]), _trim(m[2]))
                out[m] = out.get(m, 0) + int(c)
        self._terms = {m: c for m, c in out.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, int]) -> "Polynomial":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- construction ---------------------------------------------------
    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw({ONE: int(c)}) if c else cls._raw({})

    @classmethod
    def monomial(cls, m: Monomial, c: int = 1) -> "Polynomial":
        m = (_trim(m[0]), _trim(m[1]), _trim(m[2]))
        return cls._raw({m: c}) if c else cls._raw({})

    @classmethod
    def coerce(cls, other: PolyLike) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return cls.constant(other)
        raise TypeError(f"cannot coerce {type(other).__name__} to Polynomial")

    # -- container protocol ---------------------------------------------
    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other: PolyLike) -> "Polynomial":
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: PolyLike) -> "Polynomial":
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) - c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    def __rsub__(self, other: PolyLike) -> "Polynomial":
        return Polynomial.coerce(other) - self

    def __mul__(self, other: PolyLike) -> "Polynomial":
        if isinstance(other, int):
            if not other:
                return Polynomial()
            return Polynomial._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return Polynomial()
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Monomial, int] = {}
        get = out.get
        for mb, cb in b.items():
            bx, bq, by = mb
            for ma, ca in a.items():
                ax, aq, ay = ma
                key = (_add(ax, bx) if bx else ax,
                       _add(aq, bq) if bq else aq,
                       _add(ay, by) if by else ay)
                out[key] = get(key, 0) + ca * cb
        return Polynomial({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- inspection -----------------------------------------------------
    def is_constant(self) -> bool:
        return all(m == ONE for m in self._terms)

    def constant_term(self) -> int:
        return self._terms.get(ONE, 0)

    def degree(self) -> int:
        """Maximum graded degree; -1 for the zero polynomial."""
        return max((mono_degree(m) for m in self._terms), default=-1)

    def min_degree(self) -> int:
        return min((mono_degree(m) for m in self._terms), default=-1)

    def family_free(self, family: str) -> bool:
        j = FAMILIES.index(family)
        return all(not m[j] for m in self._terms)

    def nvars(self, family: str) -> int:
        """Largest index of a variable of ``family`` occurring in self."""
        j = FAMILIES.index(family)
        return max((len(m[j]) for m in self._terms), default=0)

    def var_degree(self, family: str, i: int) -> int:
        j = FAMILIES.index(family)
        return max((m[j][i - 1] if len(m[j]) >= i else 0 for m in self._terms),
                   default=0)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda t: sort_key(t[0]))

    # -- transformations ------------------------------------------------
    def substitute(self, bindings: Mapping[str, PolyLike]) -> "Polynomial":
        """Simultaneously replace variables (named like ``"x1"``, ``"q2"``)."""
        return substitute(self, bindings)

    def specialize_q(self, indices: Optional[Iterable[int]] = None) -> "Polynomial":
        """Set the given q variables (all of them by default) to zero."""
        if indices is None:
            return Polynomial._raw({m: c for m, c in self._terms.items() if not m[1]})
        idx = [i - 1 for i in indices]
        out = {}
        for m, c in self._terms.items():
            qs = m[1]
            if any(i < len(qs) and qs[i] for i in idx):
                continue
            out[m] = c
        return Polynomial._raw(out)

    def swap_xy(self) -> "Polynomial":
        return Polynomial._raw({(m[2], m[1], m[0]): c for m, c in self._terms.items()})

    def map_coefficients(self, fn) -> "Polynomial":
        return Polynomial({m: fn(c) for m, c in self._terms.items()})

    def split(self, family: str = "x") -> Dict[Exps, "Polynomial"]:
        """Group terms by the exponents of ``family``.

        Returns a map ``exps -> coefficient polynomial`` free of ``family``.
        """
        j = FAMILIES.index(family)
        out: Dict[Exps, Dict[Monomial, int]] = {}
        for m, c in self._terms.items():
            rest = list(m)
            rest[j] = ()
            out.setdefault(m[j], {})[tuple(rest)] = c
        return {k: Polynomial._raw(v) for k, v in out.items()}

    # -- serialization --------------------------------------------------
    def to_json(self) -> dict:
        return {"terms": [
            {"x": list(m[0]), "q": list(m[1]), "y": list(m[2]), "c": str(c)}
            for m, c in self.sorted_terms()
        ]}

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        out: Dict[Monomial, int] = {}
        for t in data["terms"]:
            exps = [t.get(f, []) for f in FAMILIES]
            if any(e < 0 for fam in exps for e in fam):
                raise ValueError("negative exponent in polynomial JSON")
            m = make_monomial(*exps)
            out[m] = out.get(m, 0) + int(t["c"])
        return cls(out)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Polynomial({render(self)!r})"


def x(i: int) -> Polynomial:
    return Polynomial._raw({_var_monomial("x", i): 1})


def q(i: int) -> Polynomial:
    """The quantum parameter q_i; ``q(0)`` is zero by convention."""
    if i == 0:
        return Polynomial()
    return Polynomial._raw({_var_monomial("q", i): 1})


def y(i: int) -> Polynomial:
    return Polynomial._raw({_var_monomial("y", i): 1})


def const(c: int) -> Polynomial:
    return Polynomial.constant(c)


def var(name: str) -> Polynomial:
    fam, idx = _parse_var(name)
    return {"x": x, "q": q, "y": y}[fam](idx)


_VAR_RE = re.compile(r"^([xqy])(\d+)$")


def _parse_var(name: str) -> Tuple[str, int]:
    match = _VAR_RE.match(name)
    if not match or int(match.group(2)) < 1:
        raise ValueError(f"bad variable name {name!r}")
    return match.group(1), int(match.group(2))


# ---------------------------------------------------------------------------
# substitution and decompositions

def substitute(f: Polynomial, bindings: Mapping[str, PolyLike]) -> Polynomial:
    if not bindings:
        return f
    table = {}
    for name, value in bindings.items():
        fam, idx = _parse_var(name)
        table[(FAMILIES.index(fam), idx - 1)] = Polynomial.coerce(value)
    powers: Dict[Tuple[int, int, int], Polynomial] = {}

    def power(key, e):
        k = key + (e,)
        if k not in powers:
            powers[k] = table[key] ** e
        return powers[k]

    acc: Dict[Monomial, int] = {}
    result = Polynomial()
    for m, c in f.items():
        kept = [list(m[0]), list(m[1]), list(m[2])]
        factor = None
        for j in range(3):
            for i, e in enumerate(m[j]):
                if e and (j, i) in table:
                    kept[j][i] = 0
                    pw = power((j, i), e)
                    factor = pw if factor is None else factor * pw
        base = make_monomial(*kept)
        if factor is None:
            acc[base] = acc.get(base, 0) + c
        else:
            result = result + Polynomial.monomial(base, c) * factor
    return result + Polynomial(acc)


def graded_components(f: Polynomial):
    """List of ``(degree, homogeneous component)`` in increasing degree."""
    parts: Dict[int, Dict[Monomial, int]] = {}
    for m, c in f.items():
        parts.setdefault(mono_degree(m), {})[m] = c
    return [(d, Polynomial._raw(parts[d])) for d in sorted(parts)]


def lowest_component(f: Polynomial) -> Polynomial:
    comps = graded_components(f)
    return comps[0][1] if comps else Polynomial()


def lex_min_x_monomial(f: Polynomial) -> Tuple[Monomial, int]:
    """The term of ``f`` whose x-exponent vector is lexicographically smallest."""
    if not f:
        raise ValueError("zero polynomial has no smallest monomial")
    if not (f.family_free("q") and f.family_free("y")):
        raise ValueError("lex_min_x_monomial expects a polynomial in x only")
    m = min(f.monomials(), key=lambda t: t[0])
    return m, f.coefficient(m)


def _lex_key(m: Monomial):
    return m


def exact_div(f: Polynomial, d: Polynomial) -> Polynomial:
    """Return ``g`` with ``f == d * g``; raise NotDivisible otherwise.

    Uses the division algorithm for a single divisor under the lex order
    ``x1 > x2 > ... > q1 > ... > y1 > ...``; the remainder vanishes exactly
    when ``d`` divides ``f``.
    """
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    lead = max(d.monomials())
    lc = d.coefficient(lead)
    rest = d - Polynomial.monomial(lead, lc)
    remainder = dict(f._terms)
    quotient: Dict[Monomial, int] = {}
    while remainder:
        m = max(remainder)
        c = remainder[m]
        diff = []
        for j in range(3):
            a, b = m[j], lead[j]
            if len(b) > len(a) or any(b[i] > a[i] for i in range(len(b))):
                raise NotDivisible(f"{d} does not divide {f}")
            diff.append(_trim(a[i] - (b[i] if i < len(b) else 0) for i in range(len(a))))
        if c % lc:
            raise NotDivisible(f"{d} does not divide {f}")
        t = (diff[0], diff[1], diff[2])
        qc = c // lc
        quotient[t] = quotient.get(t, 0) + qc
        del remainder[m]
        for mr, cr in rest.items():
            key = _mono_mul(mr, t)
            s = remainder.get(key, 0) - cr * qc
            if s:
                remainder[key] = s
            else:
                remainder.pop(key, None)
    return Polynomial(quotient)


def shifted_expand(f: Polynomial, k: int) -> Dict[Exps, Polynomial]:
    """Coefficients ``c_a`` with ``f = sum_a c_a * prod_i (1 - x_i)^a_i``.

    Keys are exponent tuples of length ``k``; coefficients are free of x.
    """
    if f.nvars("x") > k:
        raise ValueError(f"polynomial involves x_i with i > {k}")
    flipped = substitute(f, {f"x{i}": 1 - x(i) for i in range(1, k + 1)})
    out = {}
    for exps, coeff in flipped.split("x").items():
        out[exps + (0,) * (k - len(exps))] = coeff
    return out


def shifted_reconstruct(coeffs: Mapping[Exps, Polynomial]) -> Polynomial:
    total = Polynomial()
    for a, c in coeffs.items():
        term = Polynomial.coerce(c)
        for i, e in enumerate(a, start=1):
            if e:
                term = term * (1 - x(i)) ** e
        total = total + term
    return total


# ---------------------------------------------------------------------------
# text rendering and parsing

def _mono_str(m: Monomial) -> str:
    parts = []
    for fam, exps in zip(FAMILIES, m):
        for i, e in enumerate(exps, start=1):
            if e == 1:
                parts.append(f"{fam}{i}")
            elif e:
                parts.append(f"{fam}{i}^{e}")
    # x before q before y reads badly for coefficients; put q first
    q_parts = [p for p in parts if p[0] == "q"]
    other = [p for p in parts if p[0] != "q"]
    return "*".join(q_parts + other)


def _flat_str(f: Polynomial) -> str:
    """Render as a plain signed sum in canonical (ascending) order."""
    out = []
    terms = sorted(f.items(), key=lambda t: (mono_degree(t[0]),) + tuple(
        tuple(-e for e in part) for part in t[0]))
    for m, c in terms:
        body = _mono_str(m)
        mag = abs(c)
        if not body:
            piece = str(mag)
        elif mag == 1:
            piece = body
        else:
            piece = f"{mag}*{body}"
        if not out:
            out.append(piece if c > 0 else "-" + piece)
        else:
            out.append(("+" if c > 0 else "-") + piece)
    return "".join(out) if out else "0"


def render(f: Polynomial) -> str:
    """Human-readable form grouped by (x, y)-monomials with q-coefficients.

    Groups appear in decreasing graded degree of their (x, y)-part; each
    coefficient is a polynomial in q, parenthesized when it has several terms.
    """
    if not f:
        return "0"
    groups: Dict[Tuple[Exps, Exps], Dict[Monomial, int]] = {}
    for m, c in f.items():
        groups.setdefault((m[0], m[2]), {})[((), m[1], ())] = c
    width = max(max(len(k[0]), len(k[1])) for k in groups)

    def neg(exps):
        # pad so that x1 sorts ahead of a monomial without x
        return tuple(-e for e in exps) + (0,) * (width - len(exps))

    keys = sorted(groups, key=lambda k: (-(sum(k[0]) + sum(k[1])), neg(k[0]), neg(k[1])))
    pieces = []
    for key in keys:
        coeff = Polynomial._raw(groups[key])
        body = _mono_str((key[0], (), key[1]))
        terms = coeff.sorted_terms()
        negative = terms[0][1] < 0 and (bool(body) or len(terms) == 1)
        if negative:
            coeff = -coeff
        if len(coeff) == 1:
            (cm, cc), = coeff.items()
            cbody = _mono_str(cm)
            if not body:
                piece = _flat_str(coeff)
            elif not cbody:
                piece = body if cc == 1 else f"{cc}*{body}"
            else:
                piece = (f"{cc}*" if cc != 1 else "") + f"{cbody}*{body}"
        else:
            flat = _flat_str(coeff)
            if body:
                piece = f"({flat})*{body}"
            else:
                piece = flat if not pieces else f"({flat})"
        sign = "-" if negative else "+"
        if not pieces:
            pieces.append(("-" if negative else "") + piece)
        else:
            pieces.append(f" {sign} {piece}")
    return "".join(pieces)


_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Pow)


def parse(text: str) -> Polynomial:
    """Parse expressions such as ``"(1-q1)*x1 + q1"`` or ``"x1^2*x2"``."""
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}: {exc.msg}") from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Polynomial.constant(node.value)
        if isinstance(node, ast.Name):
            return var(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = ev(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
            left = ev(node.left)
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                    raise ValueError("exponents must be integer literals")
                return left ** node.right.value
            right = ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            return left * right
        raise ValueError(f"unsupported syntax in polynomial: {ast.dump(node)}")

    return ev(tree)
