from dataclasses import dataclass

import numpy as np

from vedacl.formula import Coop, Not, Or, Prop, conjoin

FORMAT_VERSION = 1
CLAUSE_WIDTH = 3


@dataclass(frozen=True)
class BenchParams:
    """Shape of a random coalition CNF.

    Attributes:
        n_props (int): propositions ``p1 .. pN``.
        n_agents (int): agents ``1 .. A``.
        n_conjuncts (int): clauses per formula.
        modal_degree (int): nesting depth of coalition modalities.
        probability (float): chance that an atom of positive degree is a
            coalition modality rather than a proposition.
        seed (int): base seed of the suite.
    """
    n_props: int
    n_agents: int
    n_conjuncts: int
    modal_degree: int
    probability: float
    seed: int = 0

    def __post_init__(self):
        if self.n_props < 1:
            raise ValueError(f'N must be at least 1, got {self.n_props}')
        if self.n_agents < 1:
            raise ValueError(f'A must be at least 1, got {self.n_agents}')
        if self.n_conjuncts < 1:
            raise ValueError(
                f'L must be at least 1, got {self.n_conjuncts}')
        if self.modal_degree < 0:
            raise ValueError(
                f'D must not be negative, got {self.modal_degree}')
        if not 0.0 <= self.probability <= 1.0:
            raise ValueError(
                f'P must lie in [0, 1], got {self.probability}')
        if self.seed < 0:
            raise ValueError(f'seed must not be negative, got {self.seed}')

    @property
    def set_name(self):
        """E.g. ``5-2-009-1``."""
        return f'{self.n_props}-{self.n_agents}-' \
               f'{self.n_conjuncts:03d}-{self.modal_degree}'

    def rng(self, index):
        """Generator of problem ``index``; depends on nothing else."""
        entropy = [
            self.seed, self.n_props, self.n_agents, self.n_conjuncts,
            self.modal_degree,
            int(round(self.probability * 10**6)), index
        ]
        return np.random.Generator(np.random.PCG64(
            np.random.SeedSequence(entropy)))


def _coalition(rng, n_agents):
    bits = int(rng.integers(0, 2**n_agents))
    return frozenset(a + 1 for a in range(n_agents) if bits >> a & 1)


def _atom(params, rng, degree):
    if degree > 0 and rng.random() < params.probability:
        return Coop(_coalition(rng, params.n_agents),
                    _clause(params, rng, degree - 1))
    return Prop(f'p{int(rng.integers(params.n_props)) + 1}')


def _literal(params, rng, degree):
    atom = _atom(params, rng, degree)
    return Not(atom) if rng.random() < 0.5 else atom


def _clause(params, rng, degree):
    clause = _literal(params, rng, degree)
    for _ in range(CLAUSE_WIDTH - 1):
        clause = Or(clause, _literal(params, rng, degree))
    return clause


def gen_formula(params, rng):
    """A conjunction of ``L`` clauses of three coalition literals each."""
    return conjoin(
        _clause(params, rng, params.modal_degree)
        for _ in range(params.n_conjuncts))
