"""Quantum Schubert and quantum Grothendieck polynomials with exact arithmetic."""

from .classical import (Expansion, dual_grothendieck, expand_grothendieck,
                        expand_schubert, grothendieck, schubert)
from .double import (cauchy_check, double_grothendieck, pi_indicator,
                     qd_grothendieck, qd_schubert, recover_qpoly)
from .exceptions import (HypothesisViolation, IterationGuard, NotDivisible,
                         NotInLn, QGrothError)
from .expand import (expand_qgrothendieck, expand_qschubert, gw_invariants,
                     sign_alternation)
from .perm import Permutation, all_perms, bruhat_leq, longest
from .poly import Polynomial, parse, q, x, y
from .quantum import quantum_grothendieck, quantum_schubert
from .verify import run_identity

__version__ = "0.1.0"

__all__ = [
    "Polynomial", "parse", "x", "q", "y",
    "Permutation", "all_perms", "bruhat_leq", "longest",
    "schubert", "grothendieck", "dual_grothendieck", "Expansion",
    "expand_schubert", "expand_grothendieck",
    "quantum_schubert", "quantum_grothendieck",
    "expand_qschubert", "expand_qgrothendieck", "gw_invariants", "sign_alternation",
    "double_grothendieck", "qd_schubert", "qd_grothendieck", "cauchy_check",
    "recover_qpoly", "pi_indicator", "run_identity",
    "QGrothError", "NotDivisible", "NotInLn", "IterationGuard", "HypothesisViolation",
]
