from dataclasses import dataclass, field
from typing import FrozenSet, Mapping, Optional, Tuple

from vedacl.formula import conjoin
from .clause import GLOBAL, INITIAL, Clause


@dataclass(frozen=True)
class CoalitionProblem:
    """The triple of initial, global and coalition clauses.

    ``sigma`` is the agent universe; it defaults to the union of the
    coalitions in the coalition clauses. ``definitions`` maps symbols
    introduced by :func:`normalize` to the formula they name.
    """
    initial: Tuple[Clause, ...] = ()
    universal: Tuple[Clause, ...] = ()
    coalition: Tuple[Clause, ...] = ()
    sigma: Optional[FrozenSet[int]] = None
    definitions: Mapping = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for name in ('initial', 'universal', 'coalition'):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if any(c.kind != INITIAL for c in self.initial):
            raise ValueError('I holds initial clauses only')
        if any(c.kind != GLOBAL for c in self.universal):
            raise ValueError('U holds global clauses only')
        if any(not c.is_coalition for c in self.coalition):
            raise ValueError('N holds coalition clauses only')
        occurring = frozenset().union(*(c.coalition for c in self.coalition))
        sigma = occurring if self.sigma is None else frozenset(self.sigma)
        if not occurring <= sigma:
            raise ValueError(f'agents {sorted(occurring - sigma)} are missing '
                             'from sigma')
        object.__setattr__(self, 'sigma', sigma)
        ids = [c.id for c in self.clauses if c.id is not None]
        if len(ids) != len(set(ids)):
            raise ValueError('clause ids must be unique')

    @property
    def clauses(self):
        return self.initial + self.universal + self.coalition

    def __len__(self):
        return len(self.initial) + len(self.universal) + len(self.coalition)

    @property
    def props(self):
        names = set()
        for c in self.clauses:
            names.update(lit.name for lit in c.antecedent | c.consequent)
        return frozenset(names)

    def numbered(self):
        """Copy whose clauses without an id get fresh ones, in I, U, N
        order."""
        next_id = max((c.id for c in self.clauses if c.id is not None),
                      default=0) + 1
        sections = []
        for section in (self.initial, self.universal, self.coalition):
            numbered = []
            for c in section:
                if c.id is None:
                    c = c.with_id(next_id)
                    next_id += 1
                numbered.append(c)
            sections.append(numbered)
        return CoalitionProblem(*sections, sigma=self.sigma,
                                definitions=self.definitions)

    @classmethod
    def from_clauses(cls, clauses, sigma=None, definitions=None):
        initial, universal, coalition = [], [], []
        for c in clauses:
            {
                'I': initial,
                'U': universal
            }.get(c.kind, coalition).append(c)
        return cls(initial, universal, coalition, sigma, definitions or {})

    def initial_formula(self):
        return conjoin(c.to_formula() for c in self.initial)

    def global_formula(self):
        return conjoin(c.to_formula()
                       for c in self.universal + self.coalition)
