from dataclasses import dataclass, field
from typing import Dict

from vedacl.snf import CoalitionProblem
from .derivation import Derivation, refutation_of

SAT_EXIT, UNSAT_EXIT, TIMEOUT_EXIT = 10, 20, 30


@dataclass(frozen=True)
class Verdict:
    derivation: Derivation
    stats: Dict = field(default_factory=dict, compare=False)

    tag = None
    exit_code = None

    @property
    def elapsed(self):
        return self.stats.get('elapsed', 0.0)


@dataclass(frozen=True)
class Unsatisfiable(Verdict):
    """A false clause reached I or U."""
    tag = 'UNSAT'
    exit_code = UNSAT_EXIT

    @property
    def proof(self):
        return refutation_of(self.derivation)


@dataclass(frozen=True)
class Satisfiable(Verdict):
    """No unprocessed clause is left."""
    saturated: CoalitionProblem = None
    tag = 'SAT'
    exit_code = SAT_EXIT


@dataclass(frozen=True)
class Timeout(Verdict):
    """The run hit ``timeout`` (reason ``time``) or ``max_clauses``."""
    reason: str = 'time'
    tag = 'TIMEOUT'
    exit_code = TIMEOUT_EXIT

    @property
    def partial(self):
        return self.derivation
