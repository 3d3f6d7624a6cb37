from dataclasses import dataclass
from itertools import product
from typing import FrozenSet, Mapping, Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class Cgm:
    """An explicit concurrent game model.

    Attributes:
        agents (tuple[int]): agent ids in ascending order; move vectors list
            one move per agent in this order.
        moves (np.ndarray): ``(n_states, n_agents)`` move counts, all >= 1.
        delta (tuple[np.ndarray]): per state, an integer array of shape
            ``moves[s]`` holding the successor of every move vector.
        valuation (tuple[frozenset]): per state, the true propositions.
        init (int): the initial state.
    """
    agents: Tuple[int, ...]
    moves: np.ndarray
    delta: Tuple[np.ndarray, ...]
    valuation: Tuple[FrozenSet[str], ...]
    init: int = 0

    def __post_init__(self):
        agents = tuple(sorted(self.agents))
        if not agents:
            raise ValueError('a model needs at least one agent')
        if len(set(agents)) != len(agents) or agents[0] < 1:
            raise ValueError(f'bad agent ids {agents}')
        moves = np.asarray(self.moves, dtype=np.int64)
        n_states = len(self.valuation)
        if n_states < 1:
            raise ValueError('a model needs at least one state')
        if moves.shape != (n_states, len(agents)):
            raise ValueError(f'moves must have shape '
                             f'{(n_states, len(agents))}, got {moves.shape}')
        if (moves < 1).any():
            raise ValueError('every agent needs at least one move')
        if len(self.delta) != n_states:
            raise ValueError('delta needs one table per state')
        delta = []
        for s, table in enumerate(self.delta):
            table = np.asarray(table, dtype=np.int64)
            if table.shape != tuple(moves[s]):
                raise ValueError(f'delta of state {s} must have shape '
                                 f'{tuple(moves[s])}, got {table.shape}')
            if table.size and (table.min() < 0 or table.max() >= n_states):
                raise ValueError(f'delta of state {s} leaves the model')
            table.setflags(write=False)
            delta.append(table)
        if not 0 <= self.init < n_states:
            raise ValueError(f'initial state {self.init} out of range')
        moves.setflags(write=False)
        object.__setattr__(self, 'agents', agents)
        object.__setattr__(self, 'moves', moves)
        object.__setattr__(self, 'delta', tuple(delta))
        object.__setattr__(self, 'valuation',
                           tuple(frozenset(v) for v in self.valuation))

    @property
    def n_states(self):
        return len(self.valuation)

    @property
    def states(self):
        return range(self.n_states)

    def check_state(self, s):
        if not 0 <= s < self.n_states:
            raise ValueError(f'state {s} out of range 0..{self.n_states - 1}')

    def axes(self, coalition):
        """Move vector positions of the members and of the others."""
        members = tuple(i for i, a in enumerate(self.agents)
                        if a in coalition)
        others = tuple(i for i, a in enumerate(self.agents)
                       if a not in coalition)
        return members, others

    def profiles(self, s):
        """All move vectors available at ``s``."""
        return product(*(range(k) for k in self.moves[s]))

    def successors(self, s):
        self.check_state(s)
        return frozenset(np.unique(self.delta[s]).tolist())

    def __eq__(self, other):
        if not isinstance(other, Cgm):
            return NotImplemented
        return (self.agents == other.agents and self.init == other.init
                and self.valuation == other.valuation
                and np.array_equal(self.moves, other.moves) and all(
                    np.array_equal(a, b)
                    for a, b in zip(self.delta, other.delta)))

    def __hash__(self):
        return hash((self.agents, self.valuation, self.init))

    def __repr__(self):
        return f'Cgm(agents={self.agents}, states={self.n_states}, ' \
               f'moves={self.moves.tolist()}, ' \
               f'valuation={[sorted(v) for v in self.valuation]})'


@dataclass(frozen=True)
class AMove:
    """A move of every member of ``coalition``; others are unconstrained."""
    coalition: FrozenSet[int]
    choice: Mapping[int, int]

    def __post_init__(self):
        object.__setattr__(self, 'coalition', frozenset(self.coalition))
        if set(self.choice) != set(self.coalition):
            raise ValueError('an A-move chooses for exactly the members of A')

    def __hash__(self):
        return hash((self.coalition, tuple(sorted(self.choice.items()))))


def a_moves(m, s, coalition):
    """Every A-move at ``s``."""
    members = [a for a in m.agents if a in coalition]
    ranges = [range(m.moves[s][m.agents.index(a)]) for a in members]
    for choice in product(*ranges):
        yield AMove(frozenset(members), dict(zip(members, choice)))


def outcomes(m, s, mv):
    """States reached from ``s`` by move vectors extending ``mv``."""
    m.check_state(s)
    if not mv.coalition <= set(m.agents):
        raise ValueError(f'agents {sorted(mv.coalition - set(m.agents))} '
                         'are not in the model')
    index = []
    for i, a in enumerate(m.agents):
        if a in mv.coalition:
            k = mv.choice[a]
            if not 0 <= k < m.moves[s][i]:
                raise ValueError(f'agent {a} has no move {k} at state {s}')
            index.append(k)
        else:
            index.append(slice(None))
    return frozenset(np.unique(m.delta[s][tuple(index)]).tolist())
