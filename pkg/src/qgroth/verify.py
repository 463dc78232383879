"""
Named identity suites over a range of permutations.

Each suite returns a :class:`Report` listing every instance it checked.
Conjecture suites set ``conjectural`` and are informational: callers should
not treat a failure there as a broken build.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from .perm import all_perms


@dataclass
class Instance:
    params: dict
    passed: bool
    detail: str = ""


@dataclass
class Report:
    identity: str
    n: int
    instances: List[Instance] = field(default_factory=list)
    conjectural: bool = False
    note: str = ""

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.instances)

    @property
    def failures(self) -> List[Instance]:
        return [i for i in self.instances if not i.passed]

    def add(self, params: dict, passed: bool, detail: str = "") -> None:
        self.instances.append(Instance(params, bool(passed), detail))

    def to_json(self) -> dict:
        out = {"identity": self.identity, "n": self.n, "passed": self.passed,
               "checked": len(self.instances),
               "failures": [{"params": f.params, "detail": f.detail} for f in self.failures]}
        if self.conjectural:
            out["conjectural"] = True
            out["note"] = self.note
        return out


def _want(params: dict, key: str, value) -> bool:
    return params.get(key) is None or params[key] == value


def _monk_x(rep: Report, n: int, params: dict):
    from .chains import monk_x_expansion, monk_x_lhs
    from .expand import expand_qgrothendieck
    for k in range(1, n + 1):
        if not _want(params, "k", k):
            continue
        for w in all_perms(n):
            lhs = expand_qgrothendieck(monk_x_lhs(w, k)).to_dict()
            rep.add({"w": str(w), "k": k}, lhs == monk_x_expansion(w, k).to_dict())


def _monk_sk(rep: Report, n: int, params: dict):
    from .chains import monk_no_cancellation, monk_oracle, monk_product
    for k in range(1, n + 1):
        if not _want(params, "k", k):
            continue
        for w in all_perms(n):
            same = monk_product(w, k).to_dict() == monk_oracle(w, k).to_dict()
            clean = monk_no_cancellation(w, k)
            rep.add({"w": str(w), "k": k}, same and clean,
                    "" if clean else "cancellation among paths")


def _pieri_pairs(n: int, params: dict):
    for k in range(1, n + 1):
        for p in range(1, k + 1):
            if _want(params, "k", k) and _want(params, "p", p):
                yield p, k


def _pieri(rep: Report, n: int, params: dict):
    from .chains import no_cancellation, pieri_oracle, pieri_product
    for p, k in _pieri_pairs(n, params):
        for w in all_perms(n):
            same = pieri_product(w, p, k).to_dict() == pieri_oracle(w, p, k).to_dict()
            clean = no_cancellation(w, k, p)
            rep.add({"w": str(w), "p": p, "k": k}, same and clean,
                    "" if clean else "cancellation among chains")


def _quantum_pieri(rep: Report, n: int, params: dict):
    from .chains import quantum_pieri_product
    reading = params.get("reading") or "distinct"
    rep.conjectural = True
    rep.note = f"conjecture; chains read as {reading!r}"
    for p, k in _pieri_pairs(n, params):
        for w in all_perms(n):
            v = quantum_pieri_product(w, p, k, reading)
            detail = f"literal reading {'passes' if v.literal_verified else 'fails'}"
            rep.add({"w": str(w), "p": p, "k": k}, v.verified and v.no_cancellation, detail)


def _cauchy(rep: Report, n: int, params: dict):
    from .double import cauchy_check
    for kind in ("grothendieck_classical", "qschubert", "qgrothendieck"):
        if _want(params, "kind", kind):
            rep.add({"kind": kind}, cauchy_check(n, kind))


def _recovery(rep: Report, n: int, params: dict):
    from .double import recover_qpoly
    from .quantum import quantum_grothendieck, quantum_schubert
    direct = {"grothendieck": quantum_grothendieck, "schubert": quantum_schubert}
    for kind, fn in direct.items():
        if not _want(params, "kind", kind):
            continue
        for w in all_perms(n):
            rep.add({"w": str(w), "kind": kind}, recover_qpoly(w, n, kind) == fn(w))


def _main5(rep: Report, n: int, params: dict):
    from .dunkl import verify_section5
    sub = {key: params[key] for key in ("p", "k") if params.get(key) is not None}
    for which in ("main", "gp_action", "product_action", "quantmap"):
        if not _want(params, "which", which):
            continue
        extra = sub if which == "main" else {}
        for c in verify_section5(which, n=n, **extra):
            rep.add(dict(c.params, which=which), c.passed,
                    "" if c.passed else f"lhs={c.lhs} rhs={c.rhs}")


def _dunkl_commute(rep: Report, n: int, params: dict):
    from .dunkl import dunkl_commute
    rep.add({"N": n}, dunkl_commute(n))


def _relations(rep: Report, n: int, params: dict):
    from .dunkl import relation_checks
    for name, ok in relation_checks(n).items():
        rep.add({"relation": name}, ok)


def _quantize_consistency(rep: Report, n: int, params: dict):
    from . import quantum as Q
    for w in all_perms(n):
        e = Q.quantum_grothendieck(w, "e")
        rep.add({"w": str(w), "routes": "e=f=g"},
                e == Q.quantum_grothendieck(w, "f") == Q.quantum_grothendieck(w, "g"))
    checks: Dict[str, Callable] = {
        "E determinant": lambda p, k: Q.quantum_e(p, k) == Q.quantum_e_minors(p, k),
        "F recurrence": lambda p, k: Q.f_quantum(p, k) == Q.f_recurrence(p, k),
        "Fbar recurrence": lambda p, k: Q.f_quantum(p, k, "bar") == Q.f_bar_recurrence(p, k),
        "Ftilde recurrence": lambda p, k: Q.f_quantum(p, k, "tilde") == Q.f_tilde_recurrence(p, k),
        "Fbar from Ftilde": lambda p, k: Q.f_quantum(p, k, "bar") == Q.f_bar_from_tilde(p, k),
        "F from Ehat": lambda p, k: Q.f_quantum(p, k) == Q.f_from_hat_e(p, k),
        "Ebar recurrence": lambda p, k: Q.hat_e(p, k, "bar") == Q.e_bar_recurrence(p, k),
        "Ehat recurrence": lambda p, k: Q.hat_e(p, k) == Q.hat_e_recurrence(p, k),
        "G recurrence": lambda p, k: Q.g_quantum(p, k) == Q.g_recurrence_from_bar(p, k),
        "Gbar recurrence": lambda p, k: Q.g_quantum(p, k, "bar") == Q.g_bar_recurrence(p, k),
        "G difference": lambda p, k: p == 0 or _eq(Q.g_difference_identity(p, k)),
    }
    for k in range(1, n + 1):
        for p in range(0, k + 1):
            for name, fn in checks.items():
                rep.add({"family": name, "p": p, "k": k}, fn(p, k))
        rep.add({"family": "G1 closed form", "k": k}, Q.g_quantum(1, k) == Q.g_one_closed_form(k))


def _eq(pair) -> bool:
    return pair[0] == pair[1]


SUITES: Dict[str, Callable] = {
    "monk-x": _monk_x,
    "monk-sk": _monk_sk,
    "pieri": _pieri,
    "quantum-pieri-conjecture": _quantum_pieri,
    "cauchy": _cauchy,
    "recovery": _recovery,
    "main5": _main5,
    "dunkl-commute": _dunkl_commute,
    "quantize-consistency": _quantize_consistency,
    "relations": _relations,
}


def run_identity(identity: str, n: int, **params) -> Report:
    """Run a named suite on ``S_n``; optional ``p``, ``k``, ``kind`` narrow it."""
    try:
        suite = SUITES[identity]
    except KeyError:
        raise ValueError(f"unknown identity {identity!r}; choose from {sorted(SUITES)}") from None
    rep = Report(identity, n)
    suite(rep, n, params)
    return rep


__all__ = ["Report", "Instance", "SUITES", "run_identity"]
