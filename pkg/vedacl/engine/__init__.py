from .builder import build_engine
from .derivation import (Derivation, ProofError, extract_proof, parse_trace,
                         refutation_of, replay)
from .rules import (RULES, RuleNotApplicable, applicable, cres1, cres2, cres3,
                    cres4, gres1, ires1, resolvents, rw1, rw2, sigma_lift,
                    unary_consequences)
from .saturate import GivenClauseEngine, saturate
from .subsumption import ClauseIndex, subsumes
from .verdict import (SAT_EXIT, TIMEOUT_EXIT, UNSAT_EXIT, Satisfiable,
                      Timeout, Unsatisfiable, Verdict)

__all__ = [
    'build_engine', 'Derivation', 'ProofError', 'extract_proof',
    'parse_trace', 'refutation_of', 'replay', 'RULES', 'RuleNotApplicable',
    'applicable', 'cres1', 'cres2', 'cres3', 'cres4', 'gres1', 'ires1',
    'resolvents', 'rw1', 'rw2', 'sigma_lift', 'unary_consequences',
    'GivenClauseEngine', 'saturate', 'ClauseIndex', 'subsumes', 'SAT_EXIT',
    'TIMEOUT_EXIT', 'UNSAT_EXIT', 'Satisfiable', 'Timeout', 'Unsatisfiable',
    'Verdict'
]
